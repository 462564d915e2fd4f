#include "hpgrowth/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "hpgrowth/kernels.hpp"
#include "hpgrowth/quadrature.hpp"

namespace hpgrowth {

namespace {

constexpr double kMaxTruncation = 1e250;
constexpr double kAtomExclusion = 1e-12;

// Panel seeds: the Poisson peak at x with geometric spacing in units of y,
// the kernel branch switch at |xi| = 1, and the density's own kinks.
std::vector<double> poisson_breakpoints(const BoundaryDensity& f, const HalfPlanePoint& z, double T) {
  std::vector<double> cuts = f.breakpoints();
  cuts.push_back(-1.0);
  cuts.push_back(1.0);
  cuts.push_back(z.x());
  for (double off = z.y(); off < 2.0 * T; off *= 2.0) {
    cuts.push_back(z.x() - off);
    cuts.push_back(z.x() + off);
  }
  return cuts;
}

std::vector<double> norm_breakpoints(const BoundaryDensity& f, double T) {
  std::vector<double> cuts = f.breakpoints();
  cuts.push_back(0.0);
  for (double off = 1.0; off < 2.0 * T; off *= 2.0) {
    cuts.push_back(-off);
    cuts.push_back(off);
  }
  return cuts;
}

// Grows T until bound(T) <= limit; returns the bound reached.
template <class Bound>
double grow_truncation(double& T, double limit, Bound bound) {
  double b = bound(T);
  while (b > limit && T < kMaxTruncation) {
    T *= 2.0;
    b = bound(T);
  }
  return b;
}

}  // namespace

double modified_poisson_tail_sup(const HalfPlanePoint& z, KernelOrder m, double T) {
  const double r = z.modulus();
  const int mm = m.value();
  // |P_m| <= |z|^{m+1} / (pi |xi|^{m+1} (|xi| - |z|)); times (1 + |xi|^{2+m})
  // this is decreasing in |xi| once |xi| >= 2|z|.
  return std::pow(r, mm + 1) * (std::pow(T, -(mm + 1)) + T) / (kPi * (T - r));
}

IntegralValue poisson_integral(const BoundaryDensity& f, const HalfPlanePoint& z, KernelOrder m,
                               const QuadratureSpec& quad) {
  quad.check();
  if (!f.weighted_norm_finite(m.value())) {
    throw Error(ErrorKind::parameter, "density " + f.describe() + " has divergent weighted norm for m = " +
                                          std::to_string(m.value()));
  }
  const auto integrand = [&](double xi) {
    const double fv = f(xi);
    if (fv == 0.0) return 0.0;
    return modified_poisson(z, BoundaryPoint(xi), m) * fv;
  };
  const auto tail = [&](double T) {
    const double w = f.weighted_tail_bound(T, m.value());
    if (w == 0.0) return 0.0;
    return modified_poisson_tail_sup(z, m, T) * w;
  };

  double T = std::max({quad.initial_truncation, 2.0 * z.modulus() + 1.0, 2.0});
  auto integrate = [&](double window) {
    const std::vector<double> cuts = poisson_breakpoints(f, z, window);
    return integrate_adaptive(integrand, -window, window, cuts, 0.5 * quad.abs_tol, 0.5 * quad.rel_tol,
                              quad.max_depth);
  };

  QuadratureResult q = integrate(T);
  for (int pass = 0; pass < 4; ++pass) {
    const double tol = std::max(quad.abs_tol, quad.rel_tol * std::abs(q.value));
    const double t0 = tail(T);
    if (t0 <= 0.5 * tol) return {q.value, q.error + t0, t0, T};
    const double t1 = grow_truncation(T, 0.5 * tol, tail);
    if (t1 > 0.5 * tol) {
      std::ostringstream os;
      os << "tail certificate unattainable: bound " << t1 << " at T = " << T << " exceeds " << 0.5 * tol;
      throw NumericalFailure(os.str(), q.value, q.error + t1);
    }
    q = integrate(T);
  }
  const double t_final = tail(T);
  throw NumericalFailure("tail certificate did not settle", q.value, q.error + t_final);
}

double green_potential(const DiscreteMeasure& mu, const HalfPlanePoint& z, KernelOrder m) {
  const double guard = kAtomExclusion * (1.0 + z.modulus());
  double h = 0.0;
  const auto& atoms = mu.atoms();
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    const Atom& a = atoms[j];
    if (std::abs(z.complex() - a.position.complex()) <= guard) {
      std::ostringstream os;
      os.precision(17);
      os << "z = " << z.x() << "+" << z.y() << "i coincides with atom " << j << " at " << a.position.xi() << "+"
         << a.position.eta() << "i";
      throw Error(ErrorKind::singularity, os.str());
    }
    h += a.weight * modified_green(z, a.position, m, EvalMode::automatic);
  }
  return h;
}

PotentialValue subharmonic_eval(const BoundaryDensity& f, const DiscreteMeasure& mu, const HalfPlanePoint& z,
                                KernelOrder m, const QuadratureSpec& quad) {
  const IntegralValue v = poisson_integral(f, z, m, quad);
  const double h = green_potential(mu, z, m);
  return {v.value, h, v.value + h, v.error_estimate, v.tail_bound};
}

double density_norm(const BoundaryDensity& f, KernelOrder m, const QuadratureSpec& quad) {
  quad.check();
  if (!f.weighted_norm_finite(m.value())) return std::numeric_limits<double>::infinity();
  const int mm = m.value();
  const auto integrand = [&](double xi) {
    const double fv = f(xi);
    if (fv == 0.0) return 0.0;
    return std::abs(fv) / (1.0 + std::pow(std::abs(xi), 2.0 + mm));
  };
  const auto tail = [&](double T) { return f.weighted_tail_bound(T, mm); };

  double T = std::max(quad.initial_truncation, 2.0);
  auto integrate = [&](double window) {
    const std::vector<double> cuts = norm_breakpoints(f, window);
    return integrate_adaptive(integrand, -window, window, cuts, 0.5 * quad.abs_tol, 0.5 * quad.rel_tol,
                              quad.max_depth);
  };
  QuadratureResult q = integrate(T);
  for (int pass = 0; pass < 4; ++pass) {
    const double tol = std::max(quad.abs_tol, quad.rel_tol * std::abs(q.value));
    if (tail(T) <= 0.5 * tol) return q.value;
    const double t1 = grow_truncation(T, 0.5 * tol, tail);
    if (t1 > 0.5 * tol) {
      throw NumericalFailure("density norm tail did not converge below tolerance", q.value, q.error + t1);
    }
    q = integrate(T);
  }
  throw NumericalFailure("density norm tail did not settle", q.value, q.error + tail(T));
}

double measure_norm(const DiscreteMeasure& mu, KernelOrder m) { return mu.mass_functional(m.value()); }

}  // namespace hpgrowth

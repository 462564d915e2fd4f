#include "hpgrowth/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hpgrowth {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::parameter: return "parameter error";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::numerical_failure: return "numerical failure";
    case ErrorKind::property_violation: return "property violation";
  }
  return "unknown";
}

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::invalid_input, std::string(what) + " must be finite");
  }
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double x, double y) : x_(x), y_(y) {
  require_finite(x, "x");
  require_finite(y, "y");
  if (!(y > 0.0)) {
    throw Error(ErrorKind::invalid_input, "half-plane point needs y > 0, got y = " + std::to_string(y));
  }
}

double HalfPlanePoint::modulus() const noexcept { return std::hypot(x_, y_); }

BoundaryPoint::BoundaryPoint(double xi) : xi_(xi) { require_finite(xi, "xi"); }

UpperPoint::UpperPoint(double xi, double eta) : xi_(xi), eta_(eta) {
  require_finite(xi, "xi");
  require_finite(eta, "eta");
  if (eta < 0.0) {
    throw Error(ErrorKind::invalid_input, "upper point needs eta >= 0, got eta = " + std::to_string(eta));
  }
}

double UpperPoint::modulus() const noexcept { return std::hypot(xi_, eta_); }

KernelOrder::KernelOrder(int m) : m_(m) {
  if (m < 0 || m > kMax) {
    throw Error(ErrorKind::invalid_input,
                "kernel order m must lie in [0, " + std::to_string(kMax) + "], got " + std::to_string(m));
  }
}

GrowthExponent::GrowthExponent(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw Error(ErrorKind::invalid_input, "growth exponent alpha must lie in (0, 2], got " + std::to_string(alpha));
  }
}

void QuadratureSpec::check() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorKind::invalid_input, "quadrature tolerances must be positive");
  }
  if (max_depth < 8) {
    throw Error(ErrorKind::invalid_input, "quadrature max_depth must be >= 8");
  }
  if (!(initial_truncation > 0.0) || !std::isfinite(initial_truncation)) {
    throw Error(ErrorKind::invalid_input, "quadrature initial_truncation must be positive");
  }
}

// ---------------------------------------------------------------------------
// BoundaryDensity
// ---------------------------------------------------------------------------

BoundaryDensity BoundaryDensity::power(double s, double scale) {
  require_finite(s, "power exponent s");
  require_finite(scale, "power scale");
  return BoundaryDensity(PowerFamily{s, scale});
}

BoundaryDensity BoundaryDensity::indicator(double a, double b, double height) {
  require_finite(a, "indicator a");
  require_finite(b, "indicator b");
  require_finite(height, "indicator height");
  return BoundaryDensity(IndicatorFamily{a, b, height});
}

BoundaryDensity BoundaryDensity::tabulated(std::vector<std::pair<double, double>> knots) {
  for (std::size_t i = 0; i < knots.size(); ++i) {
    require_finite(knots[i].first, "knot abscissa");
    require_finite(knots[i].second, "knot value");
    if (i > 0 && !(knots[i].first > knots[i - 1].first)) {
      throw Error(ErrorKind::invalid_input, "tabulated knots must be strictly increasing in xi");
    }
  }
  return BoundaryDensity(TabulatedFamily{std::move(knots)});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Length of [a, b] lying outside [-T, T].
double length_outside(double a, double b, double T) {
  if (!(a < b)) return 0.0;
  double out = 0.0;
  if (a < -T) out += std::min(b, -T) - a;
  if (b > T) out += b - std::max(a, T);
  return out;
}

}  // namespace

double BoundaryDensity::operator()(double xi) const {
  return std::visit(
      overloaded{
          [xi](const PowerFamily& p) { return p.scale == 0.0 ? 0.0 : p.scale * std::pow(std::abs(xi), p.s); },
          [xi](const IndicatorFamily& f) { return (f.a < f.b && xi >= f.a && xi <= f.b) ? f.height : 0.0; },
          [xi](const TabulatedFamily& t) {
            const auto& k = t.knots;
            if (k.empty() || xi < k.front().first || xi > k.back().first) return 0.0;
            if (k.size() == 1) return k.front().second;
            auto it = std::upper_bound(k.begin(), k.end(), xi,
                                       [](double v, const std::pair<double, double>& p) { return v < p.first; });
            if (it == k.end()) return k.back().second;
            auto lo = std::prev(it);
            double w = (xi - lo->first) / (it->first - lo->first);
            return lo->second + w * (it->second - lo->second);
          }},
      family_);
}

std::vector<double> BoundaryDensity::breakpoints() const {
  return std::visit(overloaded{[](const PowerFamily&) { return std::vector<double>{0.0}; },
                               [](const IndicatorFamily& f) {
                                 return f.a < f.b ? std::vector<double>{f.a, f.b} : std::vector<double>{};
                               },
                               [](const TabulatedFamily& t) {
                                 std::vector<double> out;
                                 out.reserve(t.knots.size());
                                 for (const auto& k : t.knots) out.push_back(k.first);
                                 return out;
                               }},
                    family_);
}

bool BoundaryDensity::weighted_norm_finite(int m) const {
  return std::visit(overloaded{[m](const PowerFamily& p) {
                                 if (p.scale == 0.0) return true;
                                 return p.s > -1.0 && p.s < m + 1.0;
                               },
                               [](const IndicatorFamily&) { return true; },
                               [](const TabulatedFamily&) { return true; }},
                    family_);
}

double BoundaryDensity::weighted_tail_bound(double T, int m) const {
  const double inf = std::numeric_limits<double>::infinity();
  const double denom = 1.0 + std::pow(T, 2.0 + m);
  return std::visit(overloaded{[&](const PowerFamily& p) {
                                 if (p.scale == 0.0) return 0.0;
                                 if (!(p.s < m + 1.0)) return inf;
                                 // 1 + |xi|^{2+m} > |xi|^{2+m}; integrate |xi|^{s-2-m} on both sides.
                                 const double q = m + 1.0 - p.s;
                                 return 2.0 * std::abs(p.scale) * std::pow(T, -q) / q;
                               },
                               [&](const IndicatorFamily& f) {
                                 return std::abs(f.height) * length_outside(f.a, f.b, T) / denom;
                               },
                               [&](const TabulatedFamily& t) {
                                 if (t.knots.empty()) return 0.0;
                                 double peak = 0.0;
                                 for (const auto& k : t.knots) peak = std::max(peak, std::abs(k.second));
                                 return peak * length_outside(t.knots.front().first, t.knots.back().first, T) / denom;
                               }},
                    family_);
}

BoundaryDensity BoundaryDensity::scaled(double c) const {
  return std::visit(overloaded{[c](const PowerFamily& p) { return power(p.s, c * p.scale); },
                               [c](const IndicatorFamily& f) { return indicator(f.a, f.b, c * f.height); },
                               [c](const TabulatedFamily& t) {
                                 auto knots = t.knots;
                                 for (auto& k : knots) k.second *= c;
                                 return tabulated(std::move(knots));
                               }},
                    family_);
}

std::string BoundaryDensity::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{[&](const PowerFamily& p) { os << "power(s=" << p.s << ", scale=" << p.scale << ")"; },
                        [&](const IndicatorFamily& f) {
                          os << "indicator(a=" << f.a << ", b=" << f.b << ", height=" << f.height << ")";
                        },
                        [&](const TabulatedFamily& t) { os << "tabulated(" << t.knots.size() << " knots)"; }},
             family_);
  return os.str();
}

// ---------------------------------------------------------------------------
// DiscreteMeasure
// ---------------------------------------------------------------------------

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    const Atom& a = atoms_[j];
    if (!(a.position.eta() > 0.0)) {
      throw Error(ErrorKind::invalid_input, "atom " + std::to_string(j) + " must lie in the open upper half plane");
    }
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw Error(ErrorKind::invalid_input, "atom " + std::to_string(j) + " needs a finite weight >= 0");
    }
  }
}

double DiscreteMeasure::total_mass() const noexcept {
  double sum = 0.0;
  for (const Atom& a : atoms_) sum += a.weight;
  return sum;
}

double DiscreteMeasure::mass_functional(int m) const noexcept {
  double sum = 0.0;
  for (const Atom& a : atoms_) {
    sum += a.weight * a.position.eta() / (1.0 + std::pow(a.position.modulus(), 2.0 + m));
  }
  return sum;
}

DiscreteMeasure DiscreteMeasure::scaled(double c) const {
  std::vector<Atom> out = atoms_;
  for (Atom& a : out) a.weight *= c;
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<Atom> out = a.atoms_;
  out.insert(out.end(), b.atoms_.begin(), b.atoms_.end());
  return DiscreteMeasure(std::move(out));
}

double CoverParams::minimum_lambda(double beta, double mass) { return std::pow(5.0, beta) * mass; }

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

Validation validate_scenario(const BoundaryDensity& density, const DiscreteMeasure& measure, KernelOrder m,
                             GrowthExponent alpha) {
  Validation out;
  if (!density.weighted_norm_finite(m.value())) {
    out.accepted = false;
    double s = 0.0;
    if (const auto* p = std::get_if<PowerFamily>(&density.family())) s = p->s;
    out.hypothesis = "density norm divergent: int |f|/(1+|xi|^{2+m}) is infinite for " + density.describe() +
                     " with m = " + std::to_string(m.value()) + " (power family needs -1 < s < m+1)";
    out.offending_value = s;
    return out;
  }
  const double functional = measure.mass_functional(m.value());
  if (!std::isfinite(functional)) {
    out.accepted = false;
    out.hypothesis = "measure functional sum w*eta/(1+|zeta|^{2+m}) is not finite";
    out.offending_value = functional;
    return out;
  }
  if (!measure.empty() && !(alpha.value() < 2.0)) {
    out.accepted = false;
    out.hypothesis = "alpha must be < 2 when a measure is present";
    out.offending_value = alpha.value();
    return out;
  }
  return out;
}

}  // namespace hpgrowth

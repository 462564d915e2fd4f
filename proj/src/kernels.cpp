#include "hpgrowth/kernels.hpp"

#include <cmath>
#include <sstream>

namespace hpgrowth {

namespace {

constexpr double kTailRatio = 0.5;
constexpr double kTailRelTol = 1e-17;

// Angle of a point in the closed upper half plane, kept together with its
// reflection pi - theta so that sin(k theta) stays accurate near theta = pi.
struct Angle {
  double theta;
  double reflected;

  static Angle of(double x, double y) { return {std::atan2(y, x), std::atan2(y, -x)}; }

  double sin_k(int k) const {
    if (theta <= 0.5 * kPi) return std::sin(k * theta);
    const double s = std::sin(k * reflected);
    return (k % 2 == 1) ? s : -s;
  }
  double cos_k(int k) const {
    if (theta <= 0.5 * kPi) return std::cos(k * theta);
    const double c = std::cos(k * reflected);
    return (k % 2 == 0) ? c : -c;
  }
};

[[noreturn]] void singular(const std::string& what) { throw Error(ErrorKind::singularity, what); }

std::string fmt_point(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// -(1/pi) sum_{k>m} t^k sin(k a) sin(k b) / k, truncated once the geometric
// remainder t^{K+1} / ((K+1)(1-t)) drops below kTailRelTol of the partial sum.
double green_tail_sum(double t, const Angle& a, const Angle& b, int m) {
  double acc = 0.0;
  double tk = std::pow(t, m + 1);
  for (int k = m + 1;; ++k) {
    acc += tk * a.sin_k(k) * b.sin_k(k) / k;
    tk *= t;
    const double remainder = tk / ((k + 1) * (1.0 - t));
    if (remainder <= kTailRelTol * std::abs(acc) || remainder == 0.0) break;
  }
  return -acc / kPi;
}

}  // namespace

double fundamental_solution(Complex z) {
  if (z == Complex(0.0, 0.0)) singular("fundamental solution evaluated at z = 0");
  return std::log(std::abs(z)) / (2.0 * kPi);
}

double modified_fundamental(Complex z, Complex zeta, int order) {
  if (z == zeta) singular("modified fundamental solution evaluated at z = zeta = " + fmt_point(z));
  const double base = fundamental_solution(z - zeta);
  const double r = std::abs(zeta);
  if (r <= 1.0) return base;
  const Complex w = z / zeta;
  Complex wk(1.0, 0.0);
  double poly = 0.0;
  for (int k = 1; k <= order - 1; ++k) {
    wk *= w;
    poly += wk.real() / k;
  }
  return base - (std::log(r) - poly) / (2.0 * kPi);
}

double green(const HalfPlanePoint& z, const UpperPoint& zeta) {
  const double dx = z.x() - zeta.xi();
  const double dy = z.y() - zeta.eta();
  const double d2 = dx * dx + dy * dy;
  if (d2 == 0.0) singular("Green function evaluated at z = zeta = " + fmt_point(z.complex()));
  if (zeta.eta() == 0.0) return 0.0;
  // |z - conj(zeta)|^2 = |z - zeta|^2 + 4 y eta
  return -std::log1p(4.0 * z.y() * zeta.eta() / d2) / (4.0 * kPi);
}

double modified_green(const HalfPlanePoint& z, const UpperPoint& zeta, KernelOrder m, EvalMode mode) {
  const double rz = zeta.modulus();
  const double t = z.modulus() / rz;
  const bool tail_region = rz > 1.0 && t <= kTailRatio;
  if (mode == EvalMode::tail && !tail_region) {
    throw Error(ErrorKind::domain, "tail form of G_m needs |zeta| > 1 and |z|/|zeta| <= 1/2");
  }
  if (zeta.eta() == 0.0) {
    if (z.complex() == zeta.complex()) singular("G_m evaluated at z = zeta");
    return 0.0;
  }
  const Angle az = Angle::of(z.x(), z.y());
  const Angle ab = Angle::of(zeta.xi(), zeta.eta());
  if (mode == EvalMode::tail || (mode == EvalMode::automatic && tail_region)) {
    return green_tail_sum(t, az, ab, m.value());
  }
  double g = green(z, zeta);
  if (rz <= 1.0) return g;
  // E_{m+1} corrections: -(1/pi) sum_{k=1}^m Im(z^k) Im(zeta^{-k}) / k.
  double corr = 0.0;
  double tk = 1.0;
  for (int k = 1; k <= m.value(); ++k) {
    tk *= t;
    corr += tk * az.sin_k(k) * ab.sin_k(k) / k;
  }
  return g + corr / kPi;
}

double poisson(const HalfPlanePoint& z, BoundaryPoint xi) {
  const double dx = z.x() - xi.xi();
  return z.y() / (kPi * (dx * dx + z.y() * z.y()));
}

double modified_poisson(const HalfPlanePoint& z, BoundaryPoint xi, KernelOrder m, EvalMode mode) {
  const double ax = std::abs(xi.xi());
  const double rz = z.modulus();
  const bool tail_region = ax > 1.0 && rz <= kTailRatio * ax;
  if (mode == EvalMode::tail && !tail_region) {
    throw Error(ErrorKind::domain, "tail form of P_m needs |xi| > 1 and |xi| >= 2|z|");
  }
  const Angle az = Angle::of(z.x(), z.y());
  const double sgn = xi.xi() < 0.0 ? -1.0 : 1.0;
  const double t = rz / ax;
  const int mm = m.value();
  if (mode == EvalMode::tail || (mode == EvalMode::automatic && tail_region)) {
    // (1/pi) Im( z^{m+1} / (xi^{m+1} (xi - z)) )
    const double dx = xi.xi() - z.x();
    const double d2 = dx * dx + z.y() * z.y();
    const double lead = std::pow(t, mm + 1) * ((mm + 1) % 2 == 1 ? sgn : 1.0);
    return lead * (az.sin_k(mm + 1) * dx + az.cos_k(mm + 1) * z.y()) / (kPi * d2);
  }
  const double p = poisson(z, xi);
  if (ax <= 1.0) return p;
  // Im(z^k / xi^{k+1}) = t^k sin(k theta) sgn^{k+1} / |xi|; the k = 0 term is zero.
  double corr = 0.0;
  double tk = 1.0;
  for (int k = 1; k <= mm; ++k) {
    tk *= t;
    corr += tk * az.sin_k(k) * ((k + 1) % 2 == 1 ? sgn : 1.0);
  }
  return p - corr / (kPi * ax);
}

// ---------------------------------------------------------------------------
// Inequalities
// ---------------------------------------------------------------------------

bool lemma2_in_region(Lemma2Case which, const HalfPlanePoint& z, Complex arg) {
  const double rz = z.modulus();
  switch (which) {
    case Lemma2Case::one:
      return arg.imag() == 0.0 && arg.real() != 0.0;
    case Lemma2Case::two:
      return arg.imag() == 0.0 && std::abs(arg - z.complex()) >= 3.0 * rz;
    case Lemma2Case::three:
      return arg.imag() >= 0.0 && std::abs(arg) > 1.0;
    case Lemma2Case::four:
      return arg.imag() >= 0.0 && std::abs(arg) > std::max(1.0, 2.0 * rz);
  }
  return false;
}

BoundCheck lemma2_bound(Lemma2Case which, const HalfPlanePoint& z, Complex arg, KernelOrder m) {
  if (!lemma2_in_region(which, z, arg)) {
    throw Error(ErrorKind::domain, "point (z = " + fmt_point(z.complex()) + ", arg = " + fmt_point(arg) +
                                       ") outside the region of inequality case " +
                                       std::to_string(static_cast<int>(which)));
  }
  const int mm = m.value();
  const double y = z.y();
  const double rz = z.modulus();
  const Angle az = Angle::of(z.x(), z.y());
  BoundCheck out;

  switch (which) {
    case Lemma2Case::one: {
      const double xi = arg.real();
      const double ax = std::abs(xi);
      const double sgn = xi < 0.0 ? -1.0 : 1.0;
      const double t = rz / ax;
      double lhs = 0.0;
      double tk = 1.0;
      for (int k = 1; k <= mm; ++k) {
        tk *= t;
        lhs += tk * az.sin_k(k) * ((k + 1) % 2 == 1 ? sgn : 1.0);
      }
      out.lhs = std::abs(lhs) / ax;
      double rhs = 0.0;
      double two_t = 1.0;
      for (int k = 0; k <= mm - 1; ++k) {
        rhs += two_t;
        two_t *= 2.0 * t;
      }
      out.rhs = y * rhs / (ax * ax);
      break;
    }
    case Lemma2Case::two: {
      // sum_{k>=0} z^{k+m+1} / xi^k = z^{m+1} xi / (xi - z)
      const double xi = arg.real();
      const double dx = xi - z.x();
      const double d2 = dx * dx + y * y;
      const double re_w = xi * dx / d2;
      const double im_w = xi * y / d2;
      const double r = std::pow(rz, mm + 1);
      out.lhs = std::abs(r * (az.sin_k(mm + 1) * re_w + az.cos_k(mm + 1) * im_w));
      out.rhs = std::pow(2.0, mm + 1) * y * std::pow(rz, mm);
      break;
    }
    case Lemma2Case::three: {
      const UpperPoint zeta(arg);
      const Angle ab = Angle::of(zeta.xi(), zeta.eta());
      const double rzeta = zeta.modulus();
      const double t = rz / rzeta;
      double diff = 0.0;
      double weighted = 0.0;
      double tk = 1.0;
      for (int k = 1; k <= mm; ++k) {
        tk *= t;
        diff += tk * az.sin_k(k) * ab.sin_k(k) / k;
        weighted += k * tk;
      }
      out.lhs = std::abs(diff) / kPi;
      out.rhs = y * zeta.eta() * weighted / (kPi * rz * rzeta);
      break;
    }
    case Lemma2Case::four: {
      const UpperPoint zeta(arg);
      const double rzeta = zeta.modulus();
      const double t = rz / rzeta;
      out.lhs = std::abs(modified_green(z, zeta, m, EvalMode::tail));
      // sum_{k>m} k t^k = t^{m+1} ((m+1) - m t) / (1-t)^2
      const double series = std::pow(t, mm + 1) * ((mm + 1) - mm * t) / ((1.0 - t) * (1.0 - t));
      out.rhs = y * zeta.eta() * series / (kPi * rz * rzeta);
      break;
    }
  }
  return out;
}

}  // namespace hpgrowth

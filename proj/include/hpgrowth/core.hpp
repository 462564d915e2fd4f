// Domain types for half-plane potential theory: points, kernel order,
// growth exponent, boundary densities and discrete measures.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hpgrowth {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors. Every failure the library reports is an Error with a kind; the CLI
// maps kinds onto exit codes.
// ---------------------------------------------------------------------------

enum class ErrorKind {
  invalid_input,      // malformed value, violated type invariant, bad config
  parameter,          // violated operation precondition on parameters
  singularity,        // kernel evaluated at its pole
  domain,             // evaluation form used outside its region
  numerical_failure,  // tolerance not reached
  property_violation  // an asserted mathematical property failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when adaptive integration cannot certify the requested tolerance.
/// Carries the best value seen and its error estimate.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double best_value, double estimate)
      : Error(ErrorKind::numerical_failure, what),
        best_value_(best_value),
        estimate_(estimate) {}
  double best_value() const noexcept { return best_value_; }
  double estimate() const noexcept { return estimate_; }

 private:
  double best_value_;
  double estimate_;
};

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// Interior point z = x + iy of the upper half plane (y > 0).
class HalfPlanePoint {
 public:
  HalfPlanePoint(double x, double y);
  explicit HalfPlanePoint(Complex z) : HalfPlanePoint(z.real(), z.imag()) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  Complex complex() const noexcept { return {x_, y_}; }
  double modulus() const noexcept;

 private:
  double x_;
  double y_;
};

/// Boundary abscissa xi on the real line.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double xi);
  double xi() const noexcept { return xi_; }

 private:
  double xi_;
};

/// zeta = xi + i eta with eta >= 0. eta == 0 is allowed so kernels can be
/// probed at the boundary.
class UpperPoint {
 public:
  UpperPoint(double xi, double eta);
  explicit UpperPoint(Complex zeta) : UpperPoint(zeta.real(), zeta.imag()) {}

  double xi() const noexcept { return xi_; }
  double eta() const noexcept { return eta_; }
  Complex complex() const noexcept { return {xi_, eta_}; }
  Complex conj() const noexcept { return {xi_, -eta_}; }
  double modulus() const noexcept;

 private:
  double xi_;
  double eta_;
};

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// Order m of the modified kernels, 0 <= m <= kMax.
class KernelOrder {
 public:
  static constexpr int kMax = 32;
  explicit KernelOrder(int m);
  int value() const noexcept { return m_; }

 private:
  int m_;
};

/// Growth exponent alpha in (0, 2].
class GrowthExponent {
 public:
  explicit GrowthExponent(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 48;
  double initial_truncation = 16.0;

  /// Throws Error(invalid_input) unless tolerances are positive and
  /// max_depth >= 8.
  void check() const;
};

// ---------------------------------------------------------------------------
// Boundary densities
// ---------------------------------------------------------------------------

/// f(xi) = scale * |xi|^s.
struct PowerFamily {
  double s = 0.0;
  double scale = 1.0;
};

/// f = height on [a, b], zero elsewhere. a >= b is the zero density.
struct IndicatorFamily {
  double a = 0.0;
  double b = 0.0;
  double height = 0.0;
};

/// Piecewise-linear interpolation through knots, zero outside the knot range.
struct TabulatedFamily {
  std::vector<std::pair<double, double>> knots;  // (xi, value), xi increasing
};

class BoundaryDensity {
 public:
  using Family = std::variant<PowerFamily, IndicatorFamily, TabulatedFamily>;

  static BoundaryDensity power(double s, double scale = 1.0);
  static BoundaryDensity indicator(double a, double b, double height);
  static BoundaryDensity tabulated(std::vector<std::pair<double, double>> knots);
  static BoundaryDensity zero() { return indicator(0.0, 0.0, 0.0); }

  double operator()(double xi) const;

  /// Abscissae where f is not smooth. Quadrature panels start at these.
  std::vector<double> breakpoints() const;

  /// Upper bound on the tail of the weighted norm,
  /// int_{|xi| > T} |f(xi)| / (1 + |xi|^{2+m}) dxi. +inf when divergent.
  double weighted_tail_bound(double T, int m) const;

  /// True when int |f| / (1 + |xi|^{2+m}) is finite (decided analytically).
  bool weighted_norm_finite(int m) const;

  /// Same density with every value multiplied by c.
  BoundaryDensity scaled(double c) const;

  const Family& family() const noexcept { return family_; }
  std::string describe() const;

 private:
  explicit BoundaryDensity(Family f) : family_(std::move(f)) {}
  Family family_;
};

// ---------------------------------------------------------------------------
// Discrete measures
// ---------------------------------------------------------------------------

struct Atom {
  UpperPoint position;
  double weight;
};

/// Finite positive atomic measure in the open upper half plane.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// mu(C) = sum of weights.
  double total_mass() const noexcept;

  /// Sum w_j eta_j / (1 + |zeta_j|^{2+m}).
  double mass_functional(int m) const noexcept;

  DiscreteMeasure scaled(double c) const;

  /// Concatenation of atom lists.
  friend DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b);

 private:
  std::vector<Atom> atoms_;
};

// ---------------------------------------------------------------------------
// Balls and cover parameters
// ---------------------------------------------------------------------------

/// Open disc B(center, radius) in the whole plane.
struct Ball {
  Complex center;
  double radius;

  bool contains(Complex z) const noexcept { return std::abs(z - center) < radius; }
};

/// Order beta >= 0 of the maximal function and level lambda > 0.
struct CoverParams {
  double beta = 1.0;
  double lambda = 1.0;

  /// Smallest admissible lambda for a measure of total mass `mass`:
  /// 5^beta * mass.
  static double minimum_lambda(double beta, double mass);
};

// ---------------------------------------------------------------------------
// Scenario validation
// ---------------------------------------------------------------------------

struct Validation {
  bool accepted = true;
  std::string hypothesis;  // which hypothesis failed
  double offending_value = 0.0;

  explicit operator bool() const noexcept { return accepted; }
};

/// Checks the hypotheses of the growth theorems for (f, mu, m, alpha):
/// finite weighted density norm, finite measure functional, alpha < 2 when
/// the measure is nonempty.
Validation validate_scenario(const BoundaryDensity& density, const DiscreteMeasure& measure,
                             KernelOrder m, GrowthExponent alpha);

}  // namespace hpgrowth

// Fundamental solution, Green functions and Poisson kernels of the upper
// half plane, with their modified (order-m) variants and the four kernel
// inequalities used by the growth estimates.
#pragma once

#include "hpgrowth/core.hpp"

namespace hpgrowth {

/// How a modified kernel is evaluated.
///   direct     - the defining formula (finite correction sum).
///   tail       - the convergent series of the remaining terms; requires
///                |z|/|zeta| <= 1/2 and |zeta| > 1.
///   automatic  - tail inside that region, direct elsewhere.
enum class EvalMode { direct, tail, automatic };

/// E(z) = log|z| / (2 pi). Throws singularity for z == 0.
double fundamental_solution(Complex z);

/// E_n(z - zeta) as a function of both arguments:
///   E(z - zeta)                                               if |zeta| <= 1
///   E(z - zeta) - (log|zeta| - Re sum_{k=1}^{n-1} z^k/(k zeta^k)) / (2 pi)  otherwise.
double modified_fundamental(Complex z, Complex zeta, int order);

/// G(z, zeta) = E(z - zeta) - E(z - conj(zeta)); nonpositive on the half plane.
double green(const HalfPlanePoint& z, const UpperPoint& zeta);

/// G_m(z, zeta) = E_{m+1}(z - zeta) - E_{m+1}(z - conj(zeta)).
double modified_green(const HalfPlanePoint& z, const UpperPoint& zeta, KernelOrder m,
                      EvalMode mode = EvalMode::automatic);

/// P(z, xi) = y / (pi |z - xi|^2).
double poisson(const HalfPlanePoint& z, BoundaryPoint xi);

/// P_m(z, xi) = P(z, xi) - Im sum_{k=0}^m z^k / xi^{k+1} / pi   for |xi| > 1,
///              P(z, xi)                                       otherwise.
double modified_poisson(const HalfPlanePoint& z, BoundaryPoint xi, KernelOrder m,
                        EvalMode mode = EvalMode::automatic);

// ---------------------------------------------------------------------------
// Kernel inequalities
// ---------------------------------------------------------------------------

enum class Lemma2Case : int { one = 1, two = 2, three = 3, four = 4 };

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;

  static constexpr double kSlack = 1e-12;
  bool holds() const noexcept { return lhs <= rhs * (1.0 + kSlack); }
};

/// Evaluates both sides of one of the four inequalities.
///   case 1: |Im sum_{k=0}^m z^k/xi^{1+k}|   <= sum_{k=0}^{m-1} 2^k y|z|^k/|xi|^{2+k}
///           (xi real, xi != 0)
///   case 2: |Im sum_{k>=0} z^{k+m+1}/xi^k| <= 2^{m+1} y |z|^m
///           (xi real, |xi - z| >= 3|z|)
///   case 3: |G_m - G|  <= sum_{k=1}^m k y eta |z|^{k-1} / (pi |zeta|^{1+k})
///           (|zeta| > 1)
///   case 4: |G_m|      <= sum_{k>m} k y eta |z|^{k-1} / (pi |zeta|^{1+k})
///           (|zeta| > max(1, 2|z|))
/// `arg` is xi (imaginary part zero) for cases 1-2 and zeta for cases 3-4.
/// Throws Error(domain) when the point lies outside the case's region.
BoundCheck lemma2_bound(Lemma2Case which, const HalfPlanePoint& z, Complex arg, KernelOrder m);

/// True when (z, arg) lies in the region where `which` is asserted.
bool lemma2_in_region(Lemma2Case which, const HalfPlanePoint& z, Complex arg);

}  // namespace hpgrowth

// Poisson integrals of boundary densities against P_m, Green potentials of
// discrete measures against G_m, and the hypothesis norms.
#pragma once

#include "hpgrowth/core.hpp"

namespace hpgrowth {

struct IntegralValue {
  double value = 0.0;
  double error_estimate = 0.0;  // quadrature estimate + tail bound
  double tail_bound = 0.0;
  double truncation = 0.0;      // final T of the window [-T, T]
};

struct PotentialValue {
  double v = 0.0;
  double h = 0.0;
  double u = 0.0;
  double quad_error_estimate = 0.0;
  double tail_bound = 0.0;
};

/// v(z) = int P_m(z, xi) f(xi) dxi.
///
/// Adaptive quadrature over [-T, T] plus a certified bound on the discarded
/// tails. T starts at max(initial_truncation, 2|z| + 1, 2) and doubles until
///   sup_{|xi|>T} |P_m(z,xi)| (1 + |xi|^{2+m}) * int_{|xi|>T} |f| / (1 + |xi|^{2+m})
/// is below half the tolerance max(abs_tol, rel_tol |v|). The quadrature gets
/// the other half. Throws NumericalFailure when either half cannot be met.
IntegralValue poisson_integral(const BoundaryDensity& f, const HalfPlanePoint& z, KernelOrder m,
                               const QuadratureSpec& quad);

/// h(z) = sum_j w_j G_m(z, zeta_j). Throws singularity if z lies within
/// 1e-12 (1 + |z|) of an atom.
double green_potential(const DiscreteMeasure& mu, const HalfPlanePoint& z, KernelOrder m);

/// u = v + h at z.
PotentialValue subharmonic_eval(const BoundaryDensity& f, const DiscreteMeasure& mu, const HalfPlanePoint& z,
                                KernelOrder m, const QuadratureSpec& quad);

/// int |f(xi)| / (1 + |xi|^{2+m}) dxi; +infinity when the power family is
/// divergent for this m.
double density_norm(const BoundaryDensity& f, KernelOrder m, const QuadratureSpec& quad);

/// sum_j w_j eta_j / (1 + |zeta_j|^{2+m}).
double measure_norm(const DiscreteMeasure& mu, KernelOrder m);

/// sup_{|xi| >= T} |P_m(z, xi)| (1 + |xi|^{2+m}) for T >= max(2|z|, 1).
double modified_poisson_tail_sup(const HalfPlanePoint& z, KernelOrder m, double T);

}  // namespace hpgrowth

// Globally adaptive Gauss-Kronrod (7, 15) quadrature on a finite interval
// seeded with user breakpoints.
#pragma once

#include <functional>
#include <span>

#include "hpgrowth/core.hpp"

namespace hpgrowth {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // sum of |K15 - G7| over the final panels
  int panels = 0;
};

/// Integrates f over [lo, hi]. Breakpoints inside (lo, hi) split the initial
/// panels. The panel with the largest error estimate is bisected until the
/// total estimate is below max(abs_tol, rel_tol * |value|). A panel that has
/// been bisected max_depth times is frozen; if the target is still missed
/// once nothing can be split, NumericalFailure is thrown.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    std::span<const double> breakpoints, double abs_tol, double rel_tol,
                                    int max_depth);

}  // namespace hpgrowth

// Desk-scale checks of the growth estimate u(z) = o(y^{1-alpha} |z|^{m+alpha})
// outside an exceptional cover, and randomized sweeps of the kernel
// inequalities.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hpgrowth/core.hpp"
#include "hpgrowth/covering.hpp"
#include "hpgrowth/kernels.hpp"
#include "hpgrowth/parallel.hpp"

namespace hpgrowth {

struct GrowthScenario {
  BoundaryDensity density = BoundaryDensity::zero();
  DiscreteMeasure measure;
  KernelOrder m{0};
  GrowthExponent alpha{1.0};
  QuadratureSpec quad;
};

/// Sample points: for every ray angle and every radius r0 * factor^i, a fan
/// of `annulus_samples` angles centred on the ray and spaced by
/// `annulus_spread` radians.
struct SamplingPlan {
  static constexpr double kMinAngle = 1e-3;

  std::vector<double> rays;
  double r0 = 100.0;
  double factor = 3.1622776601683795;  // sqrt(10)
  int count = 5;
  int annulus_samples = 1;
  double annulus_spread = 0.02;

  void check() const;
  std::vector<double> radii() const;
  double angle(int ray, int annulus_index) const;
};

struct GrowthSample {
  int ray = 0;
  int radius_index = 0;
  int annulus_index = 0;
  double x = 0.0;
  double y = 0.0;
  double v = 0.0;
  double h = 0.0;
  double u = 0.0;
  double normalizer = 0.0;  // y^{1-alpha} |z|^{m+alpha}
  double ratio = 0.0;       // |u| / normalizer
  double quad_error = 0.0;
  double tail_bound = 0.0;
  bool in_cover = false;
  std::string error;        // evaluation failure, empty on success

  bool ok() const noexcept { return error.empty(); }
  double abs_z() const;
};

/// Evaluates u = v + h at every plan point, ordered by (ray, radius,
/// annulus index). Points inside the cover are flagged, not dropped.
/// Evaluation errors are recorded on the sample.
std::vector<GrowthSample> growth_report(const GrowthScenario& scenario, const SamplingPlan& plan,
                                        const ExceptionalCover& cover, ExecPolicy policy = ExecPolicy::parallel);

enum class DecayStatus { pass, fail, inconclusive };

const char* to_string(DecayStatus s);

struct RayDecay {
  int ray = 0;
  int pairs = 0;              // decade pairs with out-of-cover samples at both ends
  double worst_factor = 0.0;  // max of ratio(10 r) / ratio(r)
};

struct DecayResult {
  DecayStatus status = DecayStatus::inconclusive;
  double worst_factor = 0.0;
  std::vector<RayDecay> rays;
  std::string diagnostics;
};

/// Per ray, compares the largest out-of-cover ratio at r with the one at
/// 10 r for every pair of plan radii a decade apart; passes when every
/// factor is <= min_factor_per_decade. A ray without any usable pair makes
/// the result inconclusive unless another ray already failed.
DecayResult decay_assertion(const std::vector<GrowthSample>& report, double min_factor_per_decade);

struct SweepReport {
  Lemma2Case which = Lemma2Case::one;
  int m = 0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max lhs / rhs (0/0 counts as 0)
  std::vector<std::pair<Complex, Complex>> offenders;  // (z, arg)
};

/// Draws `samples` points inside the region of `which` (moduli log-uniform
/// in [1e-2, 1e3], angles uniform) and evaluates both sides at each.
SweepReport lemma2_sweep(Lemma2Case which, KernelOrder m, std::size_t samples, std::uint64_t seed,
                         ExecPolicy policy = ExecPolicy::parallel);

}  // namespace hpgrowth

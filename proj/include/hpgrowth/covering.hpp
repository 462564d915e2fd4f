// Order-beta maximal function of a discrete measure and the dyadic Vitali
// construction of an exceptional cover for the level set
//   E(lambda) = { z : |z| >= 2, M(dmu)(z) > lambda / |z|^beta }.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hpgrowth/core.hpp"
#include "hpgrowth/parallel.hpp"

namespace hpgrowth {

struct ExceptionalCover {
  std::vector<Ball> balls;
  double beta = 0.0;
  double lambda = 1.0;
  double budget = 0.0;           // sum_j (rho_j / |z_j|)^beta
  double guarantee_radius = 0.0; // the dyadic sweep reached 2 <= |z| < guarantee_radius

  bool empty() const noexcept { return balls.empty(); }
};

/// M(dmu)(z) = sup_{r > 0} mu(B(z, r)) / r^beta, with B open.
/// For a finite atomic measure the supremum is the largest
/// (mass within distance <= d_j) / d_j^beta over atom distances d_j.
/// Returns +inf at an atom of positive weight when beta > 0 and the total
/// mass when beta == 0.
double maximal_function(const DiscreteMeasure& mu, Complex z, double beta);

/// Builds the cover annulus by annulus (2^k <= |z| < 2^{k+1}, k >= 1,
/// 2^k <= search_radius). Candidates are the atoms in the annulus plus a
/// hexagonal grid of pitch 2^{k-4}; each candidate in E(lambda) gets the
/// largest radius r with mu(B(z, r)) > lambda (r/|z|)^beta. A greedy pass
/// keeps pairwise disjoint candidate balls, largest radius first, and the
/// kept balls are enlarged five times.
///
/// Throws Error(parameter) when lambda < 5^beta mu(C), beta < 0 or
/// search_radius < 4. Throws Error(property_violation) if the budget
/// exceeds 3 * 5^beta * mu(C) / lambda.
ExceptionalCover build_exceptional_cover(const DiscreteMeasure& mu, const CoverParams& params,
                                         double search_radius, ExecPolicy policy = ExecPolicy::parallel);

/// 3 * 5^beta * mu(C) / lambda.
double cover_budget_limit(const DiscreteMeasure& mu, const CoverParams& params);

/// True iff z lies in some open ball of the cover.
bool cover_contains(const ExceptionalCover& cover, Complex z);

struct CertificationReport {
  std::size_t tested = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;           // max of M(z) |z|^beta / lambda over tested points
  std::vector<Complex> offenders;      // first few violating points, in sample order

  bool passed() const noexcept { return violations == 0; }
  /// Throws Error(property_violation) listing offenders when any exist.
  void require() const;
};

/// Draws `samples` points with 2 <= |z| <= radius_range outside the cover
/// and checks M(dmu)(z) <= lambda / |z|^beta at each. Even-indexed samples
/// are log-uniform in |z| over the whole plane; odd-indexed samples land
/// within |zeta|/2 of a random atom, or anywhere when 1000 such draws all
/// fall inside the cover.
CertificationReport certify_complement(const DiscreteMeasure& mu, const CoverParams& params,
                                       const ExceptionalCover& cover, std::size_t samples, std::uint64_t seed,
                                       double radius_range, ExecPolicy policy = ExecPolicy::parallel);

/// {"beta", "lambda", "budget", "balls": [{"cx", "cy", "r"}]}, 17 significant digits.
std::string cover_to_json(const ExceptionalCover& cover);
ExceptionalCover cover_from_json(std::string_view text);

}  // namespace hpgrowth

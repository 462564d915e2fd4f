// Scenario files: JSON with "schema_version": 1. Unknown keys are errors.
//
//   {
//     "schema_version": 1,
//     "m": 1,
//     "alpha": 1.0,
//     "density": {"family": "power", "s": 1.5, "scale": 1.0},
//     "measure": {"atoms": [{"zeta": "3+4i", "weight": 1.0}]},
//     "cover": {"lambda": "auto", "beta": 1.0, "search_radius": 20000},
//     "plan": {"rays": [0.785], "r0": 100, "factor": 3.16, "count": 5,
//              "annulus_samples": 1, "annulus_spread": 0.02},
//     "quadrature": {"abs_tol": 1e-10, "rel_tol": 1e-10, "max_depth": 48,
//                    "initial_truncation": 16},
//     "seed": 1,
//     "verify": {"min_factor_per_decade": 0.5, "certify_samples": 10000}
//   }
//
// Density families: power {s, scale}, indicator {a, b, height},
// tabulated {knots: [[xi, f], ...]}, zero {}.
// Measure: exactly one of "atoms", "atoms_file" (CSV with header
// xi,eta,weight; relative paths resolve against the scenario file) or
// "log_uniform" {count, r_min, r_max, theta_min, theta_max, seed,
// normalize: "none" | "measure_norm"}.
// Cover beta defaults to 2 - alpha; lambda "auto" means 5^beta mu(C).
#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "hpgrowth/core.hpp"
#include "hpgrowth/growth.hpp"

namespace hpgrowth::cli {

struct Scenario {
  GrowthScenario growth;
  CoverParams cover;
  double search_radius = 0.0;  // 0: twice the largest plan radius
  SamplingPlan plan;
  std::uint64_t seed = 1;
  double min_factor_per_decade = 0.5;
  std::size_t certify_samples = 10000;
};

/// Parses and validates a scenario. Throws Error(invalid_input) on schema
/// problems and Error(parameter) when the growth hypotheses fail.
Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir);
Scenario load_scenario(const std::filesystem::path& path);

/// Atoms at |zeta| log-uniform in [r_min, r_max] with arg zeta uniform in
/// [theta_min, theta_max], unit weights; when normalize is set the weights
/// are rescaled so that sum w eta / (1 + |zeta|^{2+m}) = 1.
DiscreteMeasure log_uniform_measure(std::size_t count, double r_min, double r_max, double theta_min,
                                    double theta_max, std::uint64_t seed, bool normalize, KernelOrder m);

/// Reads a CSV with header xi,eta,weight.
DiscreteMeasure read_atoms_csv(const std::filesystem::path& path);

/// Cover radius actually used: search_radius if set, else twice the largest
/// plan radius, never below 4.
double effective_search_radius(const Scenario& s);

}  // namespace hpgrowth::cli

// CSV and text emitters. ',' separated, '.' decimals, '\n' line endings,
// header row first, 17 significant digits.
#pragma once

#include <ostream>
#include <vector>

#include "hpgrowth/covering.hpp"
#include "hpgrowth/growth.hpp"

namespace hpgrowth::cli {

/// x,y,abs_z,v,h,u,quad_err,tail_bound
void write_solve_csv(std::ostream& out, const std::vector<GrowthSample>& report);

/// x,y,abs_z,v,h,u,normalizer,ratio,in_cover
void write_verify_csv(std::ostream& out, const std::vector<GrowthSample>& report);

/// One line: "<violations> violations / <samples> samples" plus case, m and
/// worst ratio.
void write_sweep_summary(std::ostream& out, const SweepReport& report);

}  // namespace hpgrowth::cli

#include "hpgrowth/cli/output.hpp"

#include "hpgrowth/cli/complex_literal.hpp"

namespace hpgrowth::cli {

void write_solve_csv(std::ostream& out, const std::vector<GrowthSample>& report) {
  out << "x,y,abs_z,v,h,u,quad_err,tail_bound\n";
  for (const GrowthSample& s : report) {
    out << format_real(s.x) << ',' << format_real(s.y) << ',' << format_real(s.abs_z()) << ',' << format_real(s.v)
        << ',' << format_real(s.h) << ',' << format_real(s.u) << ',' << format_real(s.quad_error) << ','
        << format_real(s.tail_bound) << '\n';
  }
}

void write_verify_csv(std::ostream& out, const std::vector<GrowthSample>& report) {
  out << "x,y,abs_z,v,h,u,normalizer,ratio,in_cover\n";
  for (const GrowthSample& s : report) {
    out << format_real(s.x) << ',' << format_real(s.y) << ',' << format_real(s.abs_z()) << ',' << format_real(s.v)
        << ',' << format_real(s.h) << ',' << format_real(s.u) << ',' << format_real(s.normalizer) << ','
        << format_real(s.ratio) << ',' << (s.in_cover ? 1 : 0) << '\n';
  }
}

void write_sweep_summary(std::ostream& out, const SweepReport& report) {
  out << "case " << static_cast<int>(report.which) << " m " << report.m << ": " << report.violations
      << " violations / " << report.samples << " samples (worst lhs/rhs " << format_real(report.worst_ratio) << ")\n";
  for (const auto& [z, arg] : report.offenders) {
    out << "  offender z=" << format_complex(z) << " arg=" << format_complex(arg) << '\n';
  }
}

}  // namespace hpgrowth::cli

#include "hpgrowth/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hpgrowth/cli/complex_literal.hpp"
#include "hpgrowth/cli/output.hpp"
#include "hpgrowth/cli/scenario.hpp"
#include "hpgrowth/covering.hpp"
#include "hpgrowth/growth.hpp"
#include "hpgrowth/kernels.hpp"

namespace hpgrowth::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::parameter:
      return kExitConfig;
    case ErrorKind::singularity:
    case ErrorKind::domain:
    case ErrorKind::numerical_failure:
      return kExitNumerical;
    case ErrorKind::property_violation:
      return kExitProperty;
  }
  return kExitNumerical;
}

namespace {

struct KernelArgs {
  std::string kind;
  int m = 0;
  std::string z;
  std::string zeta;
  std::string xi;
  std::string mode = "auto";
};

struct ScenarioArgs {
  std::string config;
  std::string out;
  std::string cover;
  bool serial = false;
  long long certify_samples = -1;
};

struct BoundsArgs {
  std::string which = "all";
  std::string m = "all";
  long long samples = 10000;
  long long seed = 1;
  bool serial = false;
};

ExecPolicy policy_of(bool serial) { return serial ? ExecPolicy::serial : ExecPolicy::parallel; }

EvalMode parse_mode(const std::string& mode) {
  if (mode == "direct") return EvalMode::direct;
  if (mode == "tail") return EvalMode::tail;
  return EvalMode::automatic;
}

int cmd_kernel(const KernelArgs& a, std::ostream& out) {
  const KernelOrder m(a.m);
  const Complex z = parse_complex(a.z);
  const auto need = [&](const std::string& v, const char* flag) -> const std::string& {
    if (v.empty()) throw Error(ErrorKind::invalid_input, "--kind " + a.kind + " requires " + flag);
    return v;
  };
  double value = 0.0;
  if (a.kind == "e") {
    value = fundamental_solution(z);
  } else if (a.kind == "em") {
    value = modified_fundamental(z, parse_complex(need(a.zeta, "--zeta")), m.value());
  } else if (a.kind == "g") {
    value = green(HalfPlanePoint(z), UpperPoint(parse_complex(need(a.zeta, "--zeta"))));
  } else if (a.kind == "gm") {
    value = modified_green(HalfPlanePoint(z), UpperPoint(parse_complex(need(a.zeta, "--zeta"))), m,
                           parse_mode(a.mode));
  } else if (a.kind == "p") {
    value = poisson(HalfPlanePoint(z), BoundaryPoint(parse_real(need(a.xi, "--xi"))));
  } else {
    value = modified_poisson(HalfPlanePoint(z), BoundaryPoint(parse_real(need(a.xi, "--xi"))), m,
                             parse_mode(a.mode));
  }
  out << format_real(value) << '\n';
  return kExitOk;
}

// Writes to the named file, or to `fallback` when the name is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::invalid_input, "cannot open output file " + path);
  write(file);
  if (!file.flush()) throw Error(ErrorKind::invalid_input, "failed writing " + path);
}

int report_sample_errors(const std::vector<GrowthSample>& report, std::ostream& err) {
  int failed = 0;
  for (const GrowthSample& s : report) {
    if (s.ok()) continue;
    if (failed++ < 8) err << "evaluation failed at z=" << format_complex({s.x, s.y}) << ": " << s.error << '\n';
  }
  if (failed > 8) err << "... " << failed - 8 << " more evaluation failures\n";
  return failed;
}

int cmd_solve(const ScenarioArgs& a, std::ostream& out, std::ostream& err) {
  const Scenario s = load_scenario(a.config);
  const std::vector<GrowthSample> report = growth_report(s.growth, s.plan, ExceptionalCover{}, policy_of(a.serial));
  emit(a.out, out, [&](std::ostream& o) { write_solve_csv(o, report); });
  return report_sample_errors(report, err) > 0 ? kExitNumerical : kExitOk;
}

ExceptionalCover obtain_cover(const Scenario& s, const ScenarioArgs& a) {
  if (a.cover.empty()) {
    return build_exceptional_cover(s.growth.measure, s.cover, effective_search_radius(s), policy_of(a.serial));
  }
  std::ifstream in(a.cover, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open cover file " + a.cover);
  std::ostringstream buf;
  buf << in.rdbuf();
  return cover_from_json(buf.str());
}

std::size_t certify_count(const Scenario& s, const ScenarioArgs& a) {
  return a.certify_samples >= 0 ? static_cast<std::size_t>(a.certify_samples) : s.certify_samples;
}

int certify(const Scenario& s, const ExceptionalCover& cover, std::size_t samples, bool serial, std::ostream& out,
            std::ostream& err) {
  if (samples == 0) return kExitOk;
  const CertificationReport cert = certify_complement(s.growth.measure, s.cover, cover, samples, s.seed,
                                                      effective_search_radius(s), policy_of(serial));
  out << "certification: " << cert.violations << " violations / " << cert.tested << " samples (worst margin "
      << format_real(cert.worst_margin) << ")\n";
  if (cert.passed()) return kExitOk;
  for (Complex z : cert.offenders) err << "  offender z=" << format_complex(z) << '\n';
  return kExitProperty;
}

int cmd_cover(const ScenarioArgs& a, std::ostream& out, std::ostream& err) {
  const Scenario s = load_scenario(a.config);
  const ExceptionalCover cover =
      build_exceptional_cover(s.growth.measure, s.cover, effective_search_radius(s), policy_of(a.serial));
  emit(a.out, out, [&](std::ostream& o) { o << cover_to_json(cover); });
  std::ostream& log = a.out.empty() ? err : out;
  log << "cover: " << cover.balls.size() << " balls, budget " << format_real(cover.budget) << " <= limit "
      << format_real(cover_budget_limit(s.growth.measure, s.cover)) << '\n';
  return certify(s, cover, certify_count(s, a), a.serial, log, err);
}

int cmd_verify(const ScenarioArgs& a, std::ostream& out, std::ostream& err) {
  const Scenario s = load_scenario(a.config);
  const ExceptionalCover cover = obtain_cover(s, a);
  std::ostream& log = a.out.empty() ? err : out;
  int code = certify(s, cover, certify_count(s, a), a.serial, log, err);

  const std::vector<GrowthSample> report = growth_report(s.growth, s.plan, cover, policy_of(a.serial));
  emit(a.out, out, [&](std::ostream& o) { write_verify_csv(o, report); });
  if (report_sample_errors(report, err) > 0) return kExitNumerical;

  const DecayResult decay = decay_assertion(report, s.min_factor_per_decade);
  log << "decay: " << to_string(decay.status) << ", worst decade factor " << format_real(decay.worst_factor)
      << " (threshold " << format_real(s.min_factor_per_decade) << ")\n";
  if (!decay.diagnostics.empty()) err << decay.diagnostics;
  if (decay.status != DecayStatus::pass) code = kExitProperty;
  return code;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  std::vector<Lemma2Case> cases;
  if (a.which == "all") {
    cases = {Lemma2Case::one, Lemma2Case::two, Lemma2Case::three, Lemma2Case::four};
  } else {
    cases = {static_cast<Lemma2Case>(std::stoi(a.which))};
  }
  std::vector<int> orders;
  if (a.m == "all") {
    orders = {0, 1, 2, 4, 8};
  } else {
    const double m = parse_real(a.m);
    if (m != std::floor(m)) throw Error(ErrorKind::invalid_input, "--m must be an integer or 'all'");
    orders = {KernelOrder(static_cast<int>(m)).value()};
  }
  std::size_t violations = 0;
  for (Lemma2Case c : cases) {
    for (int m : orders) {
      const SweepReport r = lemma2_sweep(c, KernelOrder(m), static_cast<std::size_t>(a.samples),
                                         static_cast<std::uint64_t>(a.seed), policy_of(a.serial));
      write_sweep_summary(out, r);
      violations += r.violations;
    }
  }
  return violations == 0 ? kExitOk : kExitProperty;
}

void add_scenario_flags(CLI::App* sub, ScenarioArgs& a, bool with_cover) {
  sub->add_option("--config", a.config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", a.out, "Output file (default: stdout)");
  sub->add_flag("--serial", a.serial, "Use the serial reference path");
  if (with_cover) {
    sub->add_option("--cover", a.cover, "Existing cover JSON instead of building one")->check(CLI::ExistingFile);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified Poisson/Green kernels, exceptional covers and growth checks in the upper half plane",
               "hpgrowth"};
  app.require_subcommand(1);

  KernelArgs ka;
  CLI::App* kernel = app.add_subcommand("kernel", "Evaluate one kernel value");
  kernel->add_option("--kind", ka.kind, "e | em | g | gm | p | pm")
      ->required()
      ->check(CLI::IsMember({"e", "em", "g", "gm", "p", "pm"}));
  kernel->add_option("--m", ka.m, "Kernel order")->check(CLI::Range(0, KernelOrder::kMax));
  kernel->add_option("--z", ka.z, "Point a+bi")->required();
  kernel->add_option("--zeta", ka.zeta, "Source point a+bi (em, g, gm)");
  kernel->add_option("--xi", ka.xi, "Boundary point (p, pm)");
  kernel->add_option("--mode", ka.mode, "direct | tail | auto")->check(CLI::IsMember({"direct", "tail", "auto"}));

  ScenarioArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Evaluate v, h and u over the plan grid (CSV)");
  add_scenario_flags(solve, solve_args, false);

  ScenarioArgs cover_args;
  CLI::App* cover = app.add_subcommand("cover", "Build and certify the exceptional cover (JSON)");
  add_scenario_flags(cover, cover_args, false);
  cover->add_option("--certify-samples", cover_args.certify_samples, "Override verify.certify_samples")
      ->check(CLI::NonNegativeNumber);

  ScenarioArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Growth report (CSV) and decay assertion");
  add_scenario_flags(verify, verify_args, true);
  verify->add_option("--certify-samples", verify_args.certify_samples, "Override verify.certify_samples")
      ->check(CLI::NonNegativeNumber);

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "Randomized sweeps of the kernel inequalities");
  bounds->add_option("--case", ba.which, "1 | 2 | 3 | 4 | all")->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
  bounds->add_option("--m", ba.m, "Kernel order or 'all' (0, 1, 2, 4, 8)");
  bounds->add_option("--samples", ba.samples, "Samples per case and order")->check(CLI::PositiveNumber);
  bounds->add_option("--seed", ba.seed, "Seed");
  bounds->add_flag("--serial", ba.serial, "Use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(ka, out);
    if (solve->parsed()) return cmd_solve(solve_args, out, err);
    if (cover->parsed()) return cmd_cover(cover_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out, err);
    if (bounds->parsed()) return cmd_bounds(ba, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace hpgrowth::cli

#include "hpgrowth/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "hpgrowth/cli/complex_literal.hpp"
#include "hpgrowth/rng.hpp"
#include "json.hpp"

namespace hpgrowth::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::invalid_input, "scenario " + where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      schema_error(where, "unknown key '" + key + "'");
    }
  }
}

const json& need(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) schema_error(where, std::string("missing key '") + key + "'");
  return obj.at(key);
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where, "expected a number");
  return v.get<double>();
}

long long as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<long long>();
}

double real_or(const json& obj, const std::string& where, const char* key, double fallback) {
  return obj.contains(key) ? as_real(obj.at(key), where + "." + key) : fallback;
}

long long int_or(const json& obj, const std::string& where, const char* key, long long fallback) {
  return obj.contains(key) ? as_int(obj.at(key), where + "." + key) : fallback;
}

BoundaryDensity parse_density(const json& d) {
  const std::string where = "density";
  if (!d.is_object()) schema_error(where, "expected an object");
  const json& fam = need(d, where, "family");
  if (!fam.is_string()) schema_error(where + ".family", "expected a string");
  const std::string family = fam.get<std::string>();
  if (family == "power") {
    only_keys(d, where, {"family", "s", "scale"});
    return BoundaryDensity::power(as_real(need(d, where, "s"), where + ".s"), real_or(d, where, "scale", 1.0));
  }
  if (family == "indicator") {
    only_keys(d, where, {"family", "a", "b", "height"});
    return BoundaryDensity::indicator(as_real(need(d, where, "a"), where + ".a"),
                                      as_real(need(d, where, "b"), where + ".b"), real_or(d, where, "height", 1.0));
  }
  if (family == "tabulated") {
    only_keys(d, where, {"family", "knots"});
    const json& knots = need(d, where, "knots");
    if (!knots.is_array()) schema_error(where + ".knots", "expected an array of [xi, f] pairs");
    std::vector<std::pair<double, double>> pts;
    for (const json& k : knots) {
      if (!k.is_array() || k.size() != 2) schema_error(where + ".knots", "expected [xi, f] pairs");
      pts.emplace_back(as_real(k[0], where + ".knots"), as_real(k[1], where + ".knots"));
    }
    return BoundaryDensity::tabulated(std::move(pts));
  }
  if (family == "zero") {
    only_keys(d, where, {"family"});
    return BoundaryDensity::zero();
  }
  schema_error(where + ".family", "unknown family '" + family + "'");
}

DiscreteMeasure parse_measure(const json& m, const std::filesystem::path& base_dir, KernelOrder order) {
  const std::string where = "measure";
  only_keys(m, where, {"atoms", "atoms_file", "log_uniform"});
  const int sources = static_cast<int>(m.contains("atoms")) + static_cast<int>(m.contains("atoms_file")) +
                      static_cast<int>(m.contains("log_uniform"));
  if (sources > 1) schema_error(where, "give only one of atoms, atoms_file, log_uniform");
  if (m.contains("atoms")) {
    const json& list = m.at("atoms");
    if (!list.is_array()) schema_error(where + ".atoms", "expected an array");
    std::vector<Atom> atoms;
    for (const json& a : list) {
      only_keys(a, where + ".atoms[]", {"zeta", "weight"});
      const json& z = need(a, where + ".atoms[]", "zeta");
      if (!z.is_string()) schema_error(where + ".atoms[].zeta", "expected a complex literal string");
      atoms.push_back({UpperPoint(parse_complex(z.get<std::string>())),
                       as_real(need(a, where + ".atoms[]", "weight"), where + ".atoms[].weight")});
    }
    return DiscreteMeasure(std::move(atoms));
  }
  if (m.contains("atoms_file")) {
    const json& p = m.at("atoms_file");
    if (!p.is_string()) schema_error(where + ".atoms_file", "expected a path string");
    std::filesystem::path path = p.get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    return read_atoms_csv(path);
  }
  if (m.contains("log_uniform")) {
    const json& g = m.at("log_uniform");
    const std::string gw = where + ".log_uniform";
    only_keys(g, gw, {"count", "r_min", "r_max", "theta_min", "theta_max", "seed", "normalize"});
    const long long count = as_int(need(g, gw, "count"), gw + ".count");
    if (count < 0) schema_error(gw + ".count", "must be >= 0");
    std::string normalize = "none";
    if (g.contains("normalize")) {
      if (!g.at("normalize").is_string()) schema_error(gw + ".normalize", "expected a string");
      normalize = g.at("normalize").get<std::string>();
      if (normalize != "none" && normalize != "measure_norm") {
        schema_error(gw + ".normalize", "expected \"none\" or \"measure_norm\"");
      }
    }
    return log_uniform_measure(static_cast<std::size_t>(count), as_real(need(g, gw, "r_min"), gw + ".r_min"),
                               as_real(need(g, gw, "r_max"), gw + ".r_max"), real_or(g, gw, "theta_min", 0.05),
                               real_or(g, gw, "theta_max", kPi - 0.05),
                               static_cast<std::uint64_t>(int_or(g, gw, "seed", 1)), normalize == "measure_norm",
                               order);
  }
  return DiscreteMeasure();
}

SamplingPlan parse_plan(const json& p) {
  const std::string where = "plan";
  only_keys(p, where, {"rays", "r0", "factor", "count", "annulus_samples", "annulus_spread"});
  SamplingPlan plan;
  const json& rays = need(p, where, "rays");
  if (!rays.is_array()) schema_error(where + ".rays", "expected an array of angles");
  for (const json& r : rays) plan.rays.push_back(as_real(r, where + ".rays"));
  plan.r0 = real_or(p, where, "r0", plan.r0);
  plan.factor = real_or(p, where, "factor", plan.factor);
  plan.count = static_cast<int>(int_or(p, where, "count", plan.count));
  plan.annulus_samples = static_cast<int>(int_or(p, where, "annulus_samples", plan.annulus_samples));
  plan.annulus_spread = real_or(p, where, "annulus_spread", plan.annulus_spread);
  plan.check();
  return plan;
}

QuadratureSpec parse_quadrature(const json& q) {
  const std::string where = "quadrature";
  only_keys(q, where, {"abs_tol", "rel_tol", "max_depth", "initial_truncation"});
  QuadratureSpec spec;
  spec.abs_tol = real_or(q, where, "abs_tol", spec.abs_tol);
  spec.rel_tol = real_or(q, where, "rel_tol", spec.rel_tol);
  spec.max_depth = static_cast<int>(int_or(q, where, "max_depth", spec.max_depth));
  spec.initial_truncation = real_or(q, where, "initial_truncation", spec.initial_truncation);
  spec.check();
  return spec;
}

}  // namespace

DiscreteMeasure log_uniform_measure(std::size_t count, double r_min, double r_max, double theta_min,
                                    double theta_max, std::uint64_t seed, bool normalize, KernelOrder m) {
  if (!(r_min > 0.0 && r_max >= r_min)) throw Error(ErrorKind::invalid_input, "log_uniform needs 0 < r_min <= r_max");
  if (!(theta_min > 0.0 && theta_max < kPi && theta_min <= theta_max)) {
    throw Error(ErrorKind::invalid_input, "log_uniform needs 0 < theta_min <= theta_max < pi");
  }
  std::vector<Atom> atoms;
  atoms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SampleStream rng(seed, i);
    const double r = rng.log_uniform(r_min, r_max);
    const double theta = rng.uniform(theta_min, theta_max);
    atoms.push_back({UpperPoint(r * std::cos(theta), r * std::sin(theta)), 1.0});
  }
  DiscreteMeasure mu(std::move(atoms));
  if (normalize && !mu.empty()) mu = mu.scaled(1.0 / mu.mass_functional(m.value()));
  return mu;
}

DiscreteMeasure read_atoms_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open atoms file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::invalid_input, "atoms file " + path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "xi,eta,weight") {
    throw Error(ErrorKind::invalid_input, "atoms file " + path.string() + " must start with header xi,eta,weight");
  }
  std::vector<Atom> atoms;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
      fields.push_back(rest.substr(0, pos));
    }
    fields.push_back(rest);
    if (fields.size() != 3) {
      throw Error(ErrorKind::invalid_input,
                  path.string() + ":" + std::to_string(lineno) + ": expected 3 fields xi,eta,weight");
    }
    try {
      atoms.push_back({UpperPoint(parse_real(fields[0]), parse_real(fields[1])), parse_real(fields[2])});
    } catch (const Error& e) {
      throw Error(ErrorKind::invalid_input, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return DiscreteMeasure(std::move(atoms));
}

Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("scenario is not valid JSON: ") + e.what());
  }
  only_keys(root, "root",
            {"schema_version", "m", "alpha", "density", "measure", "cover", "plan", "quadrature", "seed", "verify"});
  const long long version = as_int(need(root, "root", "schema_version"), "schema_version");
  if (version != 1) schema_error("schema_version", "only version 1 is supported, got " + std::to_string(version));

  Scenario s;
  try {
    s.growth.m = KernelOrder(static_cast<int>(as_int(need(root, "root", "m"), "m")));
    s.growth.alpha = GrowthExponent(as_real(need(root, "root", "alpha"), "alpha"));
  } catch (const Error& e) {
    throw Error(ErrorKind::invalid_input, std::string("scenario: ") + e.what());
  }
  s.growth.density = root.contains("density") ? parse_density(root.at("density")) : BoundaryDensity::zero();
  if (root.contains("measure")) s.growth.measure = parse_measure(root.at("measure"), base_dir, s.growth.m);
  if (root.contains("quadrature")) s.growth.quad = parse_quadrature(root.at("quadrature"));
  s.plan = parse_plan(need(root, "root", "plan"));
  s.seed = static_cast<std::uint64_t>(int_or(root, "root", "seed", 1));

  s.cover.beta = 2.0 - s.growth.alpha.value();
  bool lambda_auto = true;
  if (root.contains("cover")) {
    const json& c = root.at("cover");
    only_keys(c, "cover", {"lambda", "beta", "search_radius"});
    s.cover.beta = real_or(c, "cover", "beta", s.cover.beta);
    s.search_radius = real_or(c, "cover", "search_radius", 0.0);
    if (c.contains("lambda")) {
      const json& l = c.at("lambda");
      if (l.is_string()) {
        if (l.get<std::string>() != "auto") schema_error("cover.lambda", "expected a number or \"auto\"");
      } else {
        s.cover.lambda = as_real(l, "cover.lambda");
        lambda_auto = false;
      }
    }
  }
  if (lambda_auto) {
    s.cover.lambda = CoverParams::minimum_lambda(s.cover.beta, s.growth.measure.total_mass());
    if (!(s.cover.lambda > 0.0)) s.cover.lambda = 1.0;
  }

  if (root.contains("verify")) {
    const json& v = root.at("verify");
    only_keys(v, "verify", {"min_factor_per_decade", "certify_samples"});
    s.min_factor_per_decade = real_or(v, "verify", "min_factor_per_decade", s.min_factor_per_decade);
    const long long n = int_or(v, "verify", "certify_samples", static_cast<long long>(s.certify_samples));
    if (n < 0) schema_error("verify.certify_samples", "must be >= 0");
    s.certify_samples = static_cast<std::size_t>(n);
  }

  const Validation ok = validate_scenario(s.growth.density, s.growth.measure, s.growth.m, s.growth.alpha);
  if (!ok) {
    std::ostringstream os;
    os.precision(17);
    os << "scenario rejected: " << ok.hypothesis << " (value " << ok.offending_value << ")";
    throw Error(ErrorKind::parameter, os.str());
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.parent_path());
}

double effective_search_radius(const Scenario& s) {
  if (s.search_radius > 0.0) return std::max(4.0, s.search_radius);
  const std::vector<double> radii = s.plan.radii();
  return std::max(4.0, 2.0 * radii.back());
}

}  // namespace hpgrowth::cli

#include "hpgrowth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "hpgrowth/potentials.hpp"
#include "hpgrowth/rng.hpp"

#ifdef HPGROWTH_HAVE_OPENMP
#include <omp.h>
#endif

namespace hpgrowth {

int parallel_threads() {
#ifdef HPGROWTH_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// ---------------------------------------------------------------------------
// Sampling plan
// ---------------------------------------------------------------------------

void SamplingPlan::check() const {
  if (rays.empty()) throw Error(ErrorKind::invalid_input, "sampling plan needs at least one ray");
  for (double t : rays) {
    if (!(t >= kMinAngle && t <= kPi - kMinAngle)) {
      throw Error(ErrorKind::invalid_input, "ray angles must lie in [1e-3, pi - 1e-3], got " + std::to_string(t));
    }
  }
  if (!(r0 > 0.0) || !std::isfinite(r0)) throw Error(ErrorKind::invalid_input, "sampling plan r0 must be > 0");
  if (!(factor > 1.0) || !std::isfinite(factor)) {
    throw Error(ErrorKind::invalid_input, "sampling plan factor must be > 1");
  }
  if (count < 1) throw Error(ErrorKind::invalid_input, "sampling plan count must be >= 1");
  if (annulus_samples < 1) throw Error(ErrorKind::invalid_input, "annulus_samples must be >= 1");
  if (!(annulus_spread >= 0.0)) throw Error(ErrorKind::invalid_input, "annulus_spread must be >= 0");
}

std::vector<double> SamplingPlan::radii() const {
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(r0 * std::pow(factor, i));
  return out;
}

double SamplingPlan::angle(int ray, int annulus_index) const {
  const double offset = (annulus_index - 0.5 * (annulus_samples - 1)) * annulus_spread;
  return std::clamp(rays.at(ray) + offset, kMinAngle, kPi - kMinAngle);
}

double GrowthSample::abs_z() const { return std::hypot(x, y); }

// ---------------------------------------------------------------------------
// Growth report
// ---------------------------------------------------------------------------

std::vector<GrowthSample> growth_report(const GrowthScenario& scenario, const SamplingPlan& plan,
                                        const ExceptionalCover& cover, ExecPolicy policy) {
  plan.check();
  scenario.quad.check();
  const std::vector<double> radii = plan.radii();
  const int n_rays = static_cast<int>(plan.rays.size());
  const int n_radii = plan.count;
  const int n_fan = plan.annulus_samples;
  const double alpha = scenario.alpha.value();
  const int m = scenario.m.value();

  std::vector<GrowthSample> out(static_cast<std::size_t>(n_rays) * n_radii * n_fan);
  for_each_index(out.size(), policy, [&](std::size_t idx) {
    GrowthSample& s = out[idx];
    s.ray = static_cast<int>(idx / (static_cast<std::size_t>(n_radii) * n_fan));
    s.radius_index = static_cast<int>((idx / n_fan) % n_radii);
    s.annulus_index = static_cast<int>(idx % n_fan);
    const double r = radii[s.radius_index];
    const double theta = plan.angle(s.ray, s.annulus_index);
    s.x = r * std::cos(theta);
    s.y = r * std::sin(theta);
    s.normalizer = std::pow(s.y, 1.0 - alpha) * std::pow(r, m + alpha);
    s.in_cover = cover_contains(cover, Complex(s.x, s.y));
    try {
      const PotentialValue pv =
          subharmonic_eval(scenario.density, scenario.measure, HalfPlanePoint(s.x, s.y), scenario.m, scenario.quad);
      s.v = pv.v;
      s.h = pv.h;
      s.u = pv.u;
      s.quad_error = pv.quad_error_estimate;
      s.tail_bound = pv.tail_bound;
      s.ratio = std::abs(s.u) / s.normalizer;
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      s.v = s.h = s.u = s.ratio = s.quad_error = s.tail_bound = nan;
      s.error = e.what();
    }
  });
  return out;
}

const char* to_string(DecayStatus s) {
  switch (s) {
    case DecayStatus::pass: return "pass";
    case DecayStatus::fail: return "fail";
    case DecayStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

DecayResult decay_assertion(const std::vector<GrowthSample>& report, double min_factor_per_decade) {
  // (ray, radius index) -> largest usable ratio and its |z|.
  struct Cell {
    double radius = 0.0;
    std::optional<double> ratio;
  };
  std::map<int, std::map<int, Cell>> cells;
  for (const GrowthSample& s : report) {
    Cell& c = cells[s.ray][s.radius_index];
    if (s.annulus_index == 0 || c.radius == 0.0) c.radius = s.abs_z();
    if (!s.ok() || s.in_cover) continue;
    c.ratio = c.ratio ? std::max(*c.ratio, s.ratio) : s.ratio;
  }

  DecayResult result;
  bool failed = false;
  bool missing = false;
  std::ostringstream diag;
  diag.precision(6);
  for (const auto& [ray, by_radius] : cells) {
    RayDecay rd;
    rd.ray = ray;
    for (const auto& [i, lo] : by_radius) {
      for (const auto& [j, hi] : by_radius) {
        if (j <= i || std::abs(hi.radius / (10.0 * lo.radius) - 1.0) > 1e-6) continue;
        if (!lo.ratio || !hi.ratio) continue;
        double factor = 0.0;
        if (*lo.ratio > 0.0) {
          factor = *hi.ratio / *lo.ratio;
        } else if (*hi.ratio > 0.0) {
          factor = std::numeric_limits<double>::infinity();
        }
        ++rd.pairs;
        rd.worst_factor = std::max(rd.worst_factor, factor);
        if (factor > min_factor_per_decade) {
          failed = true;
          diag << "ray " << ray << ": ratio " << *lo.ratio << " at |z|=" << lo.radius << " -> " << *hi.ratio
               << " at |z|=" << hi.radius << " (factor " << factor << ")\n";
        }
      }
    }
    if (rd.pairs == 0) {
      missing = true;
      diag << "ray " << ray << ": no decade pair with out-of-cover samples\n";
    }
    result.worst_factor = std::max(result.worst_factor, rd.worst_factor);
    result.rays.push_back(rd);
  }
  if (cells.empty()) {
    missing = true;
    diag << "empty report\n";
  }
  result.status = failed ? DecayStatus::fail : (missing ? DecayStatus::inconclusive : DecayStatus::pass);
  result.diagnostics = diag.str();
  return result;
}

// ---------------------------------------------------------------------------
// Inequality sweeps
// ---------------------------------------------------------------------------

namespace {

constexpr double kModLo = 1e-2;
constexpr double kModHi = 1e3;
constexpr int kSweepAttempts = 10000;

std::optional<std::pair<Complex, Complex>> draw_case_point(Lemma2Case which, SampleStream& rng) {
  for (int attempt = 0; attempt < kSweepAttempts; ++attempt) {
    const Complex z = std::polar(rng.log_uniform(kModLo, kModHi), rng.uniform(0.0, kPi));
    if (!(z.imag() > 0.0)) continue;
    Complex arg;
    if (which == Lemma2Case::one || which == Lemma2Case::two) {
      arg = Complex(rng.sign() * rng.log_uniform(kModLo, kModHi), 0.0);
    } else {
      arg = std::polar(rng.log_uniform(kModLo, kModHi), rng.uniform(0.0, kPi));
      if (!(arg.imag() > 0.0)) continue;
    }
    if (lemma2_in_region(which, HalfPlanePoint(z), arg)) return std::make_pair(z, arg);
  }
  return std::nullopt;
}

}  // namespace

SweepReport lemma2_sweep(Lemma2Case which, KernelOrder m, std::size_t samples, std::uint64_t seed,
                         ExecPolicy policy) {
  std::vector<std::optional<std::pair<Complex, Complex>>> points(samples);
  std::vector<BoundCheck> checks(samples);
  const std::uint64_t stream_seed = seed ^ (static_cast<std::uint64_t>(which) << 56) ^
                                    (static_cast<std::uint64_t>(m.value()) << 48);
  for_each_index(samples, policy, [&](std::size_t i) {
    SampleStream rng(stream_seed, i);
    points[i] = draw_case_point(which, rng);
    if (points[i]) checks[i] = lemma2_bound(which, HalfPlanePoint(points[i]->first), points[i]->second, m);
  });

  SweepReport report;
  report.which = which;
  report.m = m.value();
  for (std::size_t i = 0; i < samples; ++i) {
    if (!points[i]) continue;
    ++report.samples;
    const BoundCheck& c = checks[i];
    double ratio = 0.0;
    if (c.rhs > 0.0) {
      ratio = c.lhs / c.rhs;
    } else if (c.lhs > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    report.worst_ratio = std::max(report.worst_ratio, ratio);
    if (!c.holds()) {
      ++report.violations;
      if (report.offenders.size() < 16) report.offenders.push_back(*points[i]);
    }
  }
  return report;
}

}  // namespace hpgrowth

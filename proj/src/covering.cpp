#include "hpgrowth/covering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "hpgrowth/rng.hpp"
#include "json.hpp"

namespace hpgrowth {

namespace {

constexpr double kWitnessShrink = 1e-9;
constexpr std::size_t kMaxOffenders = 16;

struct Reach {
  double distance;
  double weight;
};

std::vector<Reach> sorted_reach(const DiscreteMeasure& mu, Complex z) {
  std::vector<Reach> out;
  out.reserve(mu.size());
  for (const Atom& a : mu.atoms()) out.push_back({std::abs(z - a.position.complex()), a.weight});
  std::sort(out.begin(), out.end(), [](const Reach& l, const Reach& r) { return l.distance < r.distance; });
  return out;
}

// Largest r with mu(B(c, r)) > lambda (r / |c|)^beta, shrunk by a relative
// 1e-9 below the critical radius so the strict inequality survives rounding.
std::optional<double> largest_witness_radius(const DiscreteMeasure& mu, Complex c, double beta, double lambda) {
  if (!(beta > 0.0)) return std::nullopt;
  const double rc = std::abs(c);
  const std::vector<Reach> reach = sorted_reach(mu, c);
  std::optional<double> best;
  double cumulative = 0.0;
  std::size_t i = 0;
  while (i < reach.size()) {
    const double d = reach[i].distance;
    while (i < reach.size() && reach[i].distance == d) cumulative += reach[i++].weight;
    if (!(cumulative > 0.0)) continue;
    const double next = i < reach.size() ? reach[i].distance : std::numeric_limits<double>::infinity();
    const double critical = rc * std::pow(cumulative / lambda, 1.0 / beta);
    const double r = std::min(next, critical * (1.0 - kWitnessShrink));
    if (r > d && (!best || r > *best)) best = r;
  }
  return best;
}

struct Candidate {
  Complex center;
  double radius;
};

std::vector<Complex> annulus_candidates(const DiscreteMeasure& mu, int k) {
  const double inner = std::ldexp(1.0, k);
  const double outer = std::ldexp(1.0, k + 1);
  const auto in_annulus = [&](Complex z) {
    const double r = std::abs(z);
    return r >= inner && r < outer;
  };
  // A witness ball has radius below |z|/5 and must hold an atom.
  const auto near_mass = [&](Complex z) {
    const double reach = std::abs(z) / 5.0;
    for (const Atom& a : mu.atoms()) {
      if (a.weight > 0.0 && std::abs(z - a.position.complex()) < reach) return true;
    }
    return false;
  };

  std::vector<Complex> out;
  for (const Atom& a : mu.atoms()) {
    if (in_annulus(a.position.complex())) out.push_back(a.position.complex());
  }
  const double pitch = std::ldexp(1.0, k - 4);
  const double row = pitch * std::sqrt(3.0) / 2.0;
  const int rows = static_cast<int>(std::ceil(outer / row)) + 1;
  const int cols = static_cast<int>(std::ceil(outer / pitch)) + 1;
  for (int j = -rows; j <= rows; ++j) {
    const double y = j * row;
    const double shift = (j % 2 != 0) ? 0.5 * pitch : 0.0;
    for (int i = -cols; i <= cols; ++i) {
      const Complex g(i * pitch + shift, y);
      if (in_annulus(g) && near_mass(g)) out.push_back(g);
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double maximal_function(const DiscreteMeasure& mu, Complex z, double beta) {
  if (beta < 0.0) throw Error(ErrorKind::parameter, "maximal function order beta must be >= 0");
  if (mu.empty()) return 0.0;
  if (beta == 0.0) return mu.total_mass();
  const std::vector<Reach> reach = sorted_reach(mu, z);
  double best = 0.0;
  double cumulative = 0.0;
  std::size_t i = 0;
  while (i < reach.size()) {
    const double d = reach[i].distance;
    while (i < reach.size() && reach[i].distance == d) cumulative += reach[i++].weight;
    if (!(cumulative > 0.0)) continue;
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    best = std::max(best, cumulative / std::pow(d, beta));
  }
  return best;
}

double cover_budget_limit(const DiscreteMeasure& mu, const CoverParams& params) {
  return 3.0 * std::pow(5.0, params.beta) * mu.total_mass() / params.lambda;
}

ExceptionalCover build_exceptional_cover(const DiscreteMeasure& mu, const CoverParams& params, double search_radius,
                                         ExecPolicy policy) {
  if (!(params.beta >= 0.0) || !std::isfinite(params.beta)) {
    throw Error(ErrorKind::parameter, "cover order beta must be finite and >= 0");
  }
  if (!(params.lambda > 0.0)) throw Error(ErrorKind::parameter, "cover level lambda must be > 0");
  const double lambda_min = CoverParams::minimum_lambda(params.beta, mu.total_mass());
  if (params.lambda < lambda_min) {
    std::ostringstream os;
    os.precision(17);
    os << "lambda = " << params.lambda << " is below 5^beta mu(C) = " << lambda_min;
    throw Error(ErrorKind::parameter, os.str());
  }
  if (!(search_radius >= 4.0)) throw Error(ErrorKind::parameter, "search radius must be >= 4");

  ExceptionalCover cover;
  cover.beta = params.beta;
  cover.lambda = params.lambda;
  const int k_max = static_cast<int>(std::floor(std::log2(search_radius)));
  cover.guarantee_radius = std::ldexp(1.0, k_max + 1);
  if (mu.empty() || params.beta == 0.0) return cover;

  for (int k = 1; k <= k_max; ++k) {
    const std::vector<Complex> centers = annulus_candidates(mu, k);
    std::vector<std::optional<double>> radii(centers.size());
    for_each_index(centers.size(), policy, [&](std::size_t i) {
      radii[i] = largest_witness_radius(mu, centers[i], params.beta, params.lambda);
    });

    const double clamp = std::ldexp(1.0, k - 1);
    std::vector<Candidate> pool;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (radii[i]) pool.push_back({centers[i], std::min(*radii[i], clamp)});
    }
    std::sort(pool.begin(), pool.end(), [](const Candidate& l, const Candidate& r) {
      if (l.radius != r.radius) return l.radius > r.radius;
      if (l.center.real() != r.center.real()) return l.center.real() < r.center.real();
      return l.center.imag() < r.center.imag();
    });

    std::vector<Candidate> kept;
    for (const Candidate& c : pool) {
      const bool disjoint = std::all_of(kept.begin(), kept.end(), [&](const Candidate& s) {
        return std::abs(c.center - s.center) >= c.radius + s.radius;
      });
      if (disjoint) kept.push_back(c);
    }
    for (const Candidate& c : kept) {
      const Ball b{c.center, 5.0 * c.radius};
      cover.balls.push_back(b);
      cover.budget += std::pow(b.radius / std::abs(b.center), params.beta);
    }
  }

  const double limit = cover_budget_limit(mu, params);
  if (!(cover.budget <= limit)) {
    std::ostringstream os;
    os.precision(17);
    os << "cover budget " << cover.budget << " exceeds 3*5^beta*mu(C)/lambda = " << limit;
    throw Error(ErrorKind::property_violation, os.str());
  }
  return cover;
}

bool cover_contains(const ExceptionalCover& cover, Complex z) {
  return std::any_of(cover.balls.begin(), cover.balls.end(), [z](const Ball& b) { return b.contains(z); });
}

void CertificationReport::require() const {
  if (passed()) return;
  std::ostringstream os;
  os.precision(17);
  os << violations << " of " << tested << " points outside the cover have M(dmu)(z) > lambda/|z|^beta"
     << " (worst margin " << worst_margin << "):";
  for (Complex z : offenders) os << " " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  throw Error(ErrorKind::property_violation, os.str());
}

CertificationReport certify_complement(const DiscreteMeasure& mu, const CoverParams& params,
                                       const ExceptionalCover& cover, std::size_t samples, std::uint64_t seed,
                                       double radius_range, ExecPolicy policy) {
  if (!(radius_range >= 2.0)) throw Error(ErrorKind::parameter, "certification radius range must be >= 2");
  constexpr int kAttempts = 1000;
  const auto& atoms = mu.atoms();

  std::vector<std::optional<Complex>> points(samples);
  std::vector<double> margins(samples, 0.0);
  for_each_index(samples, policy, [&](std::size_t i) {
    SampleStream rng(seed, i);
    const bool near_atom = !atoms.empty() && (i % 2 == 1);
    for (int attempt = 0; attempt < 2 * kAttempts; ++attempt) {
      Complex z;
      // Fall back to plane-wide draws when the neighbourhood is fully covered.
      if (near_atom && attempt < kAttempts) {
        const std::size_t j = std::min(atoms.size() - 1, static_cast<std::size_t>(rng.uniform() * atoms.size()));
        const Complex c = atoms[j].position.complex();
        const double rad = 0.5 * std::abs(c) * std::sqrt(rng.uniform());
        z = c + std::polar(rad, rng.uniform(-kPi, kPi));
      } else {
        z = std::polar(rng.log_uniform(2.0, radius_range), rng.uniform(-kPi, kPi));
      }
      const double r = std::abs(z);
      if (r < 2.0 || r > radius_range || cover_contains(cover, z)) continue;
      points[i] = z;
      margins[i] = maximal_function(mu, z, params.beta) * std::pow(r, params.beta) / params.lambda;
      return;
    }
  });

  CertificationReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    if (!points[i]) continue;
    ++report.tested;
    report.worst_margin = std::max(report.worst_margin, margins[i]);
    if (margins[i] > 1.0) {
      ++report.violations;
      if (report.offenders.size() < kMaxOffenders) report.offenders.push_back(*points[i]);
    }
  }
  return report;
}

std::string cover_to_json(const ExceptionalCover& cover) {
  std::ostringstream os;
  os << "{\"beta\": " << format_double(cover.beta) << ", \"lambda\": " << format_double(cover.lambda)
     << ", \"budget\": " << format_double(cover.budget) << ", \"balls\": [";
  for (std::size_t i = 0; i < cover.balls.size(); ++i) {
    const Ball& b = cover.balls[i];
    os << (i ? ", " : "") << "{\"cx\": " << format_double(b.center.real())
       << ", \"cy\": " << format_double(b.center.imag()) << ", \"r\": " << format_double(b.radius) << "}";
  }
  os << "]}\n";
  return os.str();
}

ExceptionalCover cover_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("cover JSON: ") + e.what());
  }
  ExceptionalCover cover;
  try {
    cover.beta = j.at("beta").get<double>();
    cover.lambda = j.at("lambda").get<double>();
    cover.budget = j.at("budget").get<double>();
    for (const auto& b : j.at("balls")) {
      const Ball ball{{b.at("cx").get<double>(), b.at("cy").get<double>()}, b.at("r").get<double>()};
      if (!(ball.radius > 0.0)) throw Error(ErrorKind::invalid_input, "cover JSON: ball radius must be > 0");
      cover.balls.push_back(ball);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("cover JSON: ") + e.what());
  }
  return cover;
}

}  // namespace hpgrowth

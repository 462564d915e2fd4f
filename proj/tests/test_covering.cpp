#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "hpgrowth/covering.hpp"

using namespace hpgrowth;

namespace {

DiscreteMeasure random_measure(std::uint64_t seed, int atoms, double r_lo, double r_hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lr(std::log(r_lo), std::log(r_hi));
  std::uniform_real_distribution<double> th(0.05, kPi - 0.05);
  std::uniform_real_distribution<double> w(0.1, 2.0);
  std::vector<Atom> out;
  for (int j = 0; j < atoms; ++j) out.push_back({UpperPoint(std::polar(std::exp(lr(rng)), th(rng))), w(rng)});
  return DiscreteMeasure(out);
}

// sup over radii of mu(B(z, r)) / r^beta with the open ball counted
// directly; the candidates are just above every atom distance plus a grid.
double brute_force_maximal(const DiscreteMeasure& mu, Complex z, double beta) {
  std::vector<double> radii;
  double dmax = 0.0;
  for (const Atom& a : mu.atoms()) {
    const double d = std::abs(z - a.position.complex());
    radii.push_back(d * (1.0 + 1e-12));
    dmax = std::max(dmax, d);
  }
  for (int i = 1; i <= 2000; ++i) radii.push_back(2.0 * dmax * i / 2000.0);
  double best = 0.0;
  for (double r : radii) {
    double mass = 0.0;
    for (const Atom& a : mu.atoms()) {
      if (std::abs(z - a.position.complex()) < r) mass += a.weight;
    }
    best = std::max(best, mass / std::pow(r, beta));
  }
  return best;
}

}  // namespace

TEST_CASE("maximal function: hand examples") {
  const DiscreteMeasure one({{UpperPoint(0.0, 5.0), 1.0}});
  CHECK(maximal_function(one, {0.0, 2.0}, 1.5) == doctest::Approx(std::pow(3.0, -1.5)).epsilon(1e-15));
  CHECK(std::isinf(maximal_function(one, {0.0, 5.0}, 1.0)));
  CHECK(maximal_function(one, {0.0, 5.0}, 0.0) == 1.0);
  CHECK(maximal_function(DiscreteMeasure(), {1.0, 1.0}, 1.0) == 0.0);

  // Atoms at distance 1 and 2 from z = 0 with weights 1 and 8.
  const DiscreteMeasure two({{UpperPoint(0.0, 1.0), 1.0}, {UpperPoint(0.0, 2.0), 8.0}});
  CHECK(maximal_function(two, {0.0, 0.0}, 1.0) == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(brute_force_maximal(two, {0.0, 0.0}, 1.0) == doctest::Approx(4.5).epsilon(1e-9));
  CHECK_THROWS_AS(maximal_function(two, {0.0, 0.0}, -1.0), Error);
}

TEST_CASE("maximal function agrees with a brute-force supremum") {
  for (int trial = 0; trial < 20; ++trial) {
    const DiscreteMeasure mu = random_measure(100 + trial, 5, 0.5, 20.0);
    std::mt19937_64 rng(trial);
    std::uniform_real_distribution<double> u(-25.0, 25.0);
    for (double beta : {0.5, 1.0, 1.5}) {
      const Complex z(u(rng), u(rng));
      const double exact = maximal_function(mu, z, beta);
      CHECK(std::abs(exact - brute_force_maximal(mu, z, beta)) <= 1e-9 * exact);
    }
  }
}

TEST_CASE("maximal function: monotone in the measure and homogeneous in the weights") {
  const DiscreteMeasure mu = random_measure(7, 6, 1.0, 50.0);
  const DiscreteMeasure more = mu + DiscreteMeasure({{UpperPoint(3.0, 3.0), 0.5}});
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-60.0, 60.0);
  for (int n = 0; n < 200; ++n) {
    const Complex z(u(rng), u(rng));
    CHECK(maximal_function(more, z, 1.0) >= maximal_function(mu, z, 1.0));
    CHECK(maximal_function(mu.scaled(4.0), z, 0.7) == 4.0 * maximal_function(mu, z, 0.7));
  }
}

TEST_CASE("cover_contains uses open balls") {
  ExceptionalCover cover;
  CHECK_FALSE(cover_contains(cover, {3.0, 3.0}));
  cover.balls.push_back({{3.0, 3.0}, 1.0});
  CHECK(cover_contains(cover, {3.0, 3.0}));
  CHECK_FALSE(cover_contains(cover, {4.0, 3.0}));
}

TEST_CASE("empty measure gives an empty cover") {
  const ExceptionalCover c = build_exceptional_cover(DiscreteMeasure(), {1.0, 1.0}, 100.0);
  CHECK(c.balls.empty());
  CHECK(c.budget == 0.0);
  const CertificationReport r = certify_complement(DiscreteMeasure(), {1.0, 1.0}, c, 1000, 1, 100.0);
  CHECK(r.tested == 1000);
  CHECK(r.passed());
}

TEST_CASE("cover parameter checks") {
  const DiscreteMeasure mu({{UpperPoint(4.0, 4.0), 1.0}});
  auto kind = [&](CoverParams p, double R) {
    try {
      build_exceptional_cover(mu, p, R);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::numerical_failure;
  };
  CHECK(kind({1.0, 4.9}, 100.0) == ErrorKind::parameter);
  CHECK(kind({1.0, 5.0}, 3.0) == ErrorKind::parameter);
  CHECK(kind({-0.5, 5.0}, 100.0) == ErrorKind::parameter);
}

TEST_CASE("single atom at 4+4i, beta = 1, lambda = 5") {
  const Complex z0(4.0, 4.0);
  const DiscreteMeasure mu({{UpperPoint(z0), 1.0}});
  const CoverParams p{1.0, 5.0};
  const ExceptionalCover c = build_exceptional_cover(mu, p, 64.0);
  CHECK_FALSE(c.balls.empty());
  CHECK(c.budget <= 3.0);
  CHECK(c.budget <= cover_budget_limit(mu, p));
  for (const Ball& b : c.balls) CHECK(std::abs(b.center) >= 2.0);

  // The balls jointly contain B(z0, |z0|/4) minus the disc |z| < 2.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 20000; ++n) {
    const Complex z = z0 + std::polar(0.25 * std::abs(z0) * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    if (std::abs(z) < 2.0) continue;
    CHECK(cover_contains(c, z));
  }

  const CertificationReport r = certify_complement(mu, p, c, 10000, 3, 64.0);
  CHECK(r.tested == 10000);
  CHECK(r.violations == 0);
  CHECK_NOTHROW(r.require());
}

TEST_CASE("deleting the balls exposes violations near the atom") {
  const DiscreteMeasure mu({{UpperPoint(4.0, 4.0), 1.0}});
  const CoverParams p{1.0, 5.0};
  const CertificationReport r = certify_complement(mu, p, ExceptionalCover{}, 10000, 3, 64.0);
  CHECK(r.violations > 0);
  CHECK(r.worst_margin > 1.0);
  CHECK_FALSE(r.offenders.empty());
  CHECK_THROWS_AS(r.require(), Error);
}

TEST_CASE("random measures: budget holds and the complement certifies") {
  for (int trial = 0; trial < 6; ++trial) {
    const DiscreteMeasure mu = random_measure(500 + trial, 40, 2.0, 500.0);
    for (double beta : {0.5, 1.0, 1.5}) {
      for (double lambda_factor : {1.0, 3.0}) {
        const CoverParams p{beta, lambda_factor * CoverParams::minimum_lambda(beta, mu.total_mass())};
        const ExceptionalCover c = build_exceptional_cover(mu, p, 1024.0);
        CAPTURE(trial);
        CAPTURE(beta);
        CHECK(c.budget <= cover_budget_limit(mu, p));
        const CertificationReport r = certify_complement(mu, p, c, 4000, 17 + trial, 1024.0);
        CHECK(r.violations == 0);
      }
    }
  }
}

TEST_CASE("serial and parallel covers are identical") {
  const DiscreteMeasure mu = random_measure(42, 60, 2.0, 800.0);
  const CoverParams p{1.0, 5.0 * mu.total_mass()};
  const std::string a = cover_to_json(build_exceptional_cover(mu, p, 2048.0, ExecPolicy::serial));
  const std::string b = cover_to_json(build_exceptional_cover(mu, p, 2048.0, ExecPolicy::parallel));
  CHECK(a == b);
}

TEST_CASE("cover JSON round trip is exact") {
  const DiscreteMeasure mu = random_measure(43, 20, 2.0, 100.0);
  const CoverParams p{1.5, 2.0 * CoverParams::minimum_lambda(1.5, mu.total_mass())};
  const ExceptionalCover c = build_exceptional_cover(mu, p, 256.0);
  const ExceptionalCover back = cover_from_json(cover_to_json(c));
  REQUIRE(back.balls.size() == c.balls.size());
  for (std::size_t i = 0; i < c.balls.size(); ++i) {
    CHECK(back.balls[i].center == c.balls[i].center);
    CHECK(back.balls[i].radius == c.balls[i].radius);
  }
  CHECK(back.budget == c.budget);
  CHECK(back.lambda == c.lambda);
  CHECK(cover_to_json(back) == cover_to_json(c));
  CHECK_THROWS_AS(cover_from_json("{\"beta\": 1}"), Error);
  CHECK_THROWS_AS(cover_from_json("not json"), Error);
}

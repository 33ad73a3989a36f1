#include "tvb/tverberg.hpp"

#include "corpus.hpp"
#include "oracles.hpp"
#include "tvb/prng.hpp"

#include <doctest.h>

using namespace tvb;
using corpus::config;
using corpus::pt;

namespace {

PointConfiguration line(std::initializer_list<Rational> coords) {
  PointConfiguration cfg;
  cfg.dim = 1;
  for (const auto& c : coords) cfg.points.push_back(pt({c}));
  return cfg;
}

PointConfiguration random_config(int d, int count, Xorshift64Star& gen) {
  PointConfiguration cfg;
  cfg.dim = d;
  for (int i = 0; i < count; ++i) {
    RatVector p(d);
    for (int c = 0; c < d; ++c) p(c) = Rational(gen.uniform_int(-1000, 1000)) / 1000;
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

}  // namespace

TEST_CASE("Radon partition of three collinear points") {
  const auto cert = tverberg_partition(line({0, 1, 2}), 2);
  REQUIRE(cert.has_value());
  CHECK(cert->faces == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(cert->witness(0) == 1);
  CHECK(verify_tverberg_certificate(line({0, 1, 2}), *cert).ok);
}

TEST_CASE("point inside a triangle") {
  const auto cfg = config(2, {pt({0, 0}), pt({2, 0}), pt({0, 2}),
                              pt({Rational(2, 3), Rational(2, 3)})});
  const auto cert = tverberg_partition(cfg, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->faces == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
  CHECK(exact_equal(cert->witness, pt({Rational(2, 3), Rational(2, 3)})));
}

TEST_CASE("three generic points have no Radon partition") {
  const auto cfg = config(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
  CHECK(!tverberg_partition(cfg, 2).has_value());
}

TEST_CASE("skeleton partitions respect the face bound") {
  // square corners plus center
  const auto cfg = config(2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1}),
                              pt({Rational(1, 2), Rational(1, 2)})});
  const auto cert = skeleton_tverberg_partition(cfg, 2, 1);
  REQUIRE(cert.has_value());
  FaceConstraints constraints;
  constraints.max_vertices = 2;
  CHECK(verify_tverberg_certificate(cfg, *cert, constraints).ok);

  CHECK(!skeleton_tverberg_partition(cfg, 2, 0).has_value());

  const auto on_line = skeleton_tverberg_partition(line({0, 1, 2}), 2, 1);
  REQUIRE(on_line.has_value());
  CHECK(on_line->faces == std::vector<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("colored partitions forbid repeated colors") {
  // positions 0,1,2 with colors A,B,A: {0,2} is forbidden, nothing else meets
  CHECK(!colored_tverberg_partition(line({0, 1, 2}), {0, 1, 0}, 2).has_value());

  // positions 0,2,1 with colors A,A,B: exhaustive oracle agrees there is none
  const auto cfg = line({0, 2, 1});
  const std::vector<int> colors = {0, 0, 1};
  const auto cert = colored_tverberg_partition(cfg, colors, 2);
  FaceConstraints constraints;
  constraints.colors = colors;
  CHECK(cert.has_value() == oracle::brute_force_tverberg_feasible(cfg, 2, constraints));
  CHECK(!cert.has_value());

  // monochromatic vertices: faces are singletons, needs a coincidence
  const auto twin = line({0, 1, 0});
  const auto mono = colored_tverberg_partition(twin, {7, 7, 7}, 2);
  REQUIRE(mono.has_value());
  CHECK(mono->faces == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(!colored_tverberg_partition(line({0, 1, 2}), {7, 7, 7}, 2).has_value());
}

TEST_CASE("pigeonhole examples") {
  CHECK(pigeonhole_vkf_check(4, 2, 1));        // 5 < 6
  CHECK(!pigeonhole_vkf_check(5, 2, 1));       // two disjoint triangles in the 5-simplex
  CHECK(pigeonhole_vkf_check(100, 6, 15));     // 101 < 102
  CHECK_THROWS_AS(pigeonhole_vkf_check(-1, 2, 1), std::invalid_argument);
}

TEST_CASE("pigeonhole matches exhaustive enumeration") {
  for (long long N = 0; N <= 10; ++N)
    for (long long r = 1; r <= 4; ++r)
      for (long long k = 0; k <= 3; ++k)
        CHECK(pigeonhole_vkf_check(N, r, k) == oracle::exhaustive_vkf_forced(N, r, k));
}

TEST_CASE("verifier rejects broken certificates") {
  const auto cfg = line({0, 1, 2});
  const auto cert = tverberg_partition(cfg, 2);
  REQUIRE(cert.has_value());

  TverbergCertificate overlapping = *cert;
  overlapping.faces = {{0, 1}, {1}};
  const auto bad = verify_tverberg_certificate(cfg, overlapping);
  CHECK(!bad.ok);
  CHECK(bad.reason == "faces not disjoint");

  TverbergCertificate drifted = *cert;
  drifted.witness(0) += 1;
  const auto mismatch = verify_tverberg_certificate(cfg, drifted);
  CHECK(!mismatch.ok);
  CHECK(mismatch.reason == "witness mismatch");

  TverbergCertificate outside = *cert;
  outside.faces[1] = {9};
  CHECK(!verify_tverberg_certificate(cfg, outside).ok);
}

TEST_CASE("solver agrees with the rank oracle for r = 2") {
  Xorshift64Star gen(0xACE1ULL);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(gen.next() % 3);
    const int count = 2 + static_cast<int>(gen.next() % 7);  // up to 8 points
    auto cfg = random_config(d, count, gen);
    if (gen.next() % 3 == 0 && count >= 2) cfg.points[1] = cfg.points[0];  // force coincidences
    const auto cert = tverberg_partition(cfg, 2);
    CHECK(cert.has_value() == oracle::radon_feasible_by_rank(cfg));
    if (cert) CHECK(verify_tverberg_certificate(cfg, *cert).ok);
  }
}

TEST_CASE("solver agrees with unpruned brute force") {
  Xorshift64Star gen(0xBEEFULL);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 1 + static_cast<int>(gen.next() % 2);
    const int count = 3 + static_cast<int>(gen.next() % 3);  // up to 5 points
    const int r = 2 + static_cast<int>(gen.next() % 2);
    const auto cfg = random_config(d, count, gen);
    CHECK(tverberg_partition(cfg, r).has_value() ==
          oracle::brute_force_tverberg_feasible(cfg, r));
    // skeleton-constrained comparison
    FaceConstraints constraints;
    constraints.max_vertices = 2;
    CHECK(skeleton_tverberg_partition(cfg, r, 1).has_value() ==
          oracle::brute_force_tverberg_feasible(cfg, r, constraints));
  }
}

TEST_CASE("skeleton feasibility is monotone in k and below classical") {
  Xorshift64Star gen(0xF00DULL);
  for (int trial = 0; trial < 25; ++trial) {
    const auto cfg = random_config(2, 5 + static_cast<int>(gen.next() % 2), gen);
    bool prev = skeleton_tverberg_partition(cfg, 2, 0).has_value();
    for (int k = 1; k <= 2; ++k) {
      const bool now = skeleton_tverberg_partition(cfg, 2, k).has_value();
      if (prev) CHECK(now);
      prev = now;
    }
    if (prev) CHECK(tverberg_partition(cfg, 2).has_value());
  }
}

TEST_CASE("feasibility is affinely invariant") {
  Xorshift64Star gen(0xAFF1DEULL);
  RatMatrix A(2, 2);
  A << 2, 1, 1, 1;  // det 1, invertible
  const RatVector shift = pt({Rational(3, 7), -2});
  for (int trial = 0; trial < 15; ++trial) {
    const auto cfg = random_config(2, 4 + static_cast<int>(gen.next() % 3), gen);
    PointConfiguration mapped;
    mapped.dim = 2;
    for (const auto& p : cfg.points) mapped.points.push_back(A * p + shift);
    const auto before = tverberg_partition(cfg, 2);
    const auto after = tverberg_partition(mapped, 2);
    CHECK(before.has_value() == after.has_value());
    if (after) CHECK(verify_tverberg_certificate(mapped, *after).ok);
  }
}

TEST_CASE("trial suites are deterministic and hit known rates") {
  // Radon on a line with 3 points always succeeds
  const auto radon = random_trial_suite(1, 2, 2, 100, 7, {TrialMode::classical, 0});
  CHECK(radon.successes == 100);

  // 4 generic points in the plane always admit a partition, 3 never do
  const auto four = random_trial_suite(2, 2, 3, 100, 7, {TrialMode::classical, 0}, true);
  CHECK(four.successes == 100);
  const auto three = random_trial_suite(2, 2, 2, 100, 7, {TrialMode::classical, 0}, true);
  CHECK(three.successes == 0);
  CHECK(three.failing_seeds.size() == 100);

  // r = 3 prime, N = (r-1)(d+1)
  const auto prime = random_trial_suite(2, 3, 8, 20, 7, {TrialMode::classical, 0});
  CHECK(prime.successes == 20);

  const auto rerun = random_trial_suite(2, 2, 2, 100, 7, {TrialMode::classical, 0}, true);
  CHECK(rerun.failing_seeds == three.failing_seeds);
}

TEST_CASE("generalized Van Kampen-Flores parameters never fail") {
  // r <= 4 prime power, d <= 2, k = ceil((r-1)d/r), N = (r-1)(d+2)
  for (int r : {2, 3, 4}) {
    for (int d : {1, 2}) {
      const int k = (static_cast<int>((r - 1) * d) + r - 1) / r;
      const int N = (r - 1) * (d + 2);
      const auto rep = random_trial_suite(d, r, N, 10, 99, {TrialMode::skeleton, k});
      CHECK(rep.failures == 0);
    }
  }
}

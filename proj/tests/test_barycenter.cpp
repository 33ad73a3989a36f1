#include "tvb/barycenter.hpp"

#include "corpus.hpp"

#include <doctest.h>

using namespace tvb;
using corpus::pt;

namespace {

RatVector average(const std::vector<RatVector>& points) {
  RatVector s = RatVector::Zero(points[0].size());
  for (const auto& p : points) s += p;
  return s / static_cast<int>(points.size());
}

}  // namespace

TEST_CASE("square center as the average of two skeleton points") {
  const Polytope sq = corpus::square();
  const RatVector p = pt({0, 0});
  const auto cert = solve_barycenter(sq, p, 1, 2);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(sq, p, 1, 2, *cert).ok);
  CHECK(exact_equal(average(cert->points), p));
}

TEST_CASE("a vertex is its own barycenter in every skeleton") {
  const Polytope sq = corpus::square();
  const RatVector v = pt({1, 1});
  for (int k : {0, 1}) {
    for (int r : {1, 2, 3}) {
      const auto cert = solve_barycenter(sq, v, k, r);
      REQUIRE(cert.has_value());
      CHECK(verify_certificate(sq, v, k, r, *cert).ok);
      for (const auto& point : cert->points) CHECK(exact_equal(point, v));
    }
  }
}

TEST_CASE("segment midpoint from the 0-skeleton needs two points") {
  const Polytope seg = corpus::segment();
  const RatVector p = pt({Rational(1, 2)});

  const auto cert = solve_barycenter(seg, p, 0, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->faces == std::vector<std::vector<int>>{{0}, {1}});

  CHECK(!solve_barycenter(seg, p, 0, 1).has_value());  // kr = 0 < d = 1
}

TEST_CASE("input validation") {
  const Polytope sq = corpus::square();
  CHECK_THROWS_AS(solve_barycenter(sq, pt({2, 0}), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_barycenter(sq, pt({0, 0}), -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_barycenter(sq, pt({0, 0}), 1, 0), std::invalid_argument);
}

TEST_CASE("restrict_to_carrier examples") {
  const Polytope sq = corpus::square();
  {
    const auto [sub, p] = restrict_to_carrier(sq, pt({1, 0}));
    CHECK(sub.dim() == 1);
    CHECK(sub.vertices().size() == 2);
    CHECK(exact_equal(p, pt({1, 0})));
  }
  {
    const auto [sub, p] = restrict_to_carrier(sq, pt({0, 0}));
    CHECK(sub.dim() == 2);
    CHECK(sub.vertices().size() == 4);
  }
  {
    const auto [sub, p] = restrict_to_carrier(sq, pt({1, 1}));
    CHECK(sub.dim() == 0);
    CHECK(sub.vertices().size() == 1);
  }
}

TEST_CASE("verify_certificate rejects bad certificates") {
  const Polytope sq = corpus::square();
  const RatVector p = pt({0, 0});

  // two opposite edge midpoints averaging to the center
  BarycenterCertificate cert;
  cert.faces = {{0, 1}, {2, 3}};
  cert.points = {pt({-1, 0}), pt({1, 0})};
  cert.coefficients = {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
  CHECK(verify_certificate(sq, p, 1, 2, cert).ok);

  // same certificate with k lowered to 0
  const auto low = verify_certificate(sq, p, 0, 2, cert);
  CHECK(!low.ok);
  CHECK(low.reason == "face dimension exceeds k");

  // points averaging to (1/10, 0) != p
  BarycenterCertificate off;
  off.faces = {{0, 2}, {1, 3}};  // edges y = -1 and y = 1
  off.points = {pt({Rational(1, 5), -1}), pt({0, 1})};
  off.coefficients = {{Rational(2, 5), Rational(3, 5)}, {Rational(1, 2), Rational(1, 2)}};
  const auto shifted = verify_certificate(sq, p, 1, 2, off);
  CHECK(!shifted.ok);
  CHECK(shifted.reason == "barycenter mismatch");

  // not a face of the square
  BarycenterCertificate alien = cert;
  alien.faces[0] = {0, 3};
  CHECK(!verify_certificate(sq, p, 1, 2, alien).ok);

  // non-convex coefficients
  BarycenterCertificate negative = cert;
  negative.coefficients[0] = {Rational(3, 2), Rational(-1, 2)};
  negative.points[0] = pt({-1, -2});
  CHECK(!verify_certificate(sq, p, 1, 2, negative).ok);
}

TEST_CASE("recursive solver matches the direct one on primes") {
  const Polytope sq = corpus::square();
  const RatVector p = pt({Rational(1, 4), Rational(-1, 2)});
  for (int r : {2, 3, 5}) {
    const auto direct = solve_barycenter(sq, p, 1, r);
    const auto rec = solve_barycenter_recursive(sq, p, 1, r);
    REQUIRE(direct.has_value());
    REQUIRE(rec.has_value());
    CHECK(direct->faces == rec->faces);
    for (size_t i = 0; i < direct->points.size(); ++i)
      CHECK(exact_equal(direct->points[i], rec->points[i]));
  }
}

TEST_CASE("recursive solver splits composite r through carrier faces") {
  const Polytope cube = corpus::cube();
  const RatVector origin = pt({0, 0, 0});
  const auto cert = solve_barycenter_recursive(cube, origin, 1, 4);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(cube, origin, 1, 4, *cert).ok);

  const Polytope sq = corpus::square();
  const auto cert2 = solve_barycenter_recursive(sq, pt({0, 0}), 1, 4);
  REQUIRE(cert2.has_value());
  CHECK(verify_certificate(sq, pt({0, 0}), 1, 4, *cert2).ok);
}

TEST_CASE("recursive succeeds whenever direct does") {
  const Polytope sq = corpus::square();
  for (const auto& p : corpus::interior_grid(sq, Rational(1, 2))) {
    for (int k : {1, 2}) {
      for (int r : {2, 4, 6}) {
        const auto direct = solve_barycenter(sq, p, k, r);
        if (!direct) continue;
        const auto rec = solve_barycenter_recursive(sq, p, k, r);
        REQUIRE(rec.has_value());
        CHECK(verify_certificate(sq, p, k, r, *rec).ok);
      }
    }
  }
}

TEST_CASE("carrier restriction preserves feasibility") {
  const Polytope sq = corpus::square();
  for (const auto& p : {pt({1, 0}), pt({1, 1}), pt({0, 0}), pt({1, Rational(1, 2)})}) {
    const auto [sub, q] = restrict_to_carrier(sq, p);
    for (int k : {0, 1}) {
      for (int r : {1, 2, 3}) {
        const bool whole = solve_barycenter(sq, p, k, r).has_value();
        const bool reduced = solve_barycenter(sub, q, k, r).has_value();
        CHECK(whole == reduced);
      }
    }
  }
}

TEST_CASE("theorem conformance on a coarse grid") {
  // kr >= d guarantees a certificate for interior points
  for (const Polytope& P : {corpus::triangle(), corpus::square()}) {
    for (const auto& p : corpus::interior_grid(P, Rational(1, 2))) {
      for (int k = 1; k <= P.dim(); ++k) {
        for (int r = 1; r <= 4; ++r) {
          if (k * r < P.dim()) continue;
          const auto cert = solve_barycenter(P, p, k, r);
          REQUIRE(cert.has_value());
          CHECK(verify_certificate(P, p, k, r, *cert).ok);
        }
      }
    }
  }
}

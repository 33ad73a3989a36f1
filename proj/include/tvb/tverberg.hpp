#ifndef TVB_TVERBERG_HPP
#define TVB_TVERBERG_HPP

#include "tvb/check_result.hpp"
#include "tvb/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tvb {

/// Labeled points in R^d, read as the affine map sending vertex i of the
/// standard N-simplex to points[i].
struct PointConfiguration {
  int dim = 0;
  std::vector<RatVector> points;
};

/// r pairwise disjoint vertex-index sets whose hulls share the witness
/// point; coefficients are the per-face convex weights realizing it.
struct TverbergCertificate {
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<Rational>> coefficients;
  RatVector witness;
};

/// Optional side conditions on certificate faces.
struct FaceConstraints {
  std::optional<int> max_vertices;            // skeleton bound: dim <= k means size <= k+1
  std::optional<std::vector<int>> colors;     // rainbow: at most one vertex per color
};

/// First (in a fixed canonical order) family of r pairwise disjoint nonempty
/// faces whose images intersect, found by exact LP; nullopt iff no family is
/// feasible. Families are canonicalized by sorting faces by smallest element;
/// the search enumerates each slot's faces by (size, lex) and prunes with
/// hull-box intersection tests and exact LP relaxations, which never changes
/// the first feasible family. Faces are capped at d+1 vertices; by
/// Caratheodory this preserves feasibility exactly.
std::optional<TverbergCertificate> tverberg_partition(const PointConfiguration& cfg, int r);

/// As tverberg_partition, but faces live in the k-skeleton (<= k+1 vertices).
std::optional<TverbergCertificate> skeleton_tverberg_partition(const PointConfiguration& cfg,
                                                               int r, int k);

/// As tverberg_partition, but faces are rainbow: at most one vertex of each
/// color. colors[i] is the color id of vertex i.
std::optional<TverbergCertificate> colored_tverberg_partition(const PointConfiguration& cfg,
                                                              const std::vector<int>& colors,
                                                              int r);

/// True iff every family of r pairwise disjoint nonempty faces of the
/// N-simplex must contain a face of dimension <= k, i.e. iff N+1 < r(k+2).
bool pigeonhole_vkf_check(long long N, long long r, long long k);

/// Exact re-check of disjointness, convexity, the common witness, and any
/// face constraints; independent of the solvers.
CheckResult verify_tverberg_certificate(const PointConfiguration& cfg,
                                        const TverbergCertificate& cert,
                                        const FaceConstraints& constraints = {});

struct TrialMode {
  enum Kind { classical, skeleton, colored } kind = classical;
  int k = 0;  // skeleton bound, used by Kind::skeleton
};

struct TrialReport {
  int trials = 0;
  int successes = 0;
  int failures = 0;
  std::vector<std::uint64_t> failing_seeds;
};

/// Seeded trial suite: per trial, N+1 points with coordinates m/1000,
/// m an integer in [-1000, 1000], drawn from xorshift64* streams derived by
/// splitmix64(seed + trial). Runs the matching solver and verifier, and
/// tallies. Deterministic given the seed. With general_position set,
/// configurations are resampled until no d+1 points are affinely dependent.
TrialReport random_trial_suite(int d, int r, int N, int trials, std::uint64_t seed,
                               const TrialMode& mode, bool general_position = false);

/// Colors used by colored-mode trials: vertex i gets i mod (d+1).
std::vector<int> round_robin_colors(int count, int num_colors);

}  // namespace tvb

#endif

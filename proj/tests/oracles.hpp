#ifndef TVB_TESTS_ORACLES_HPP
#define TVB_TESTS_ORACLES_HPP

// Independent oracles for the test suites. These deliberately avoid the
// library's solver paths: feasibility here goes through Fourier-Motzkin
// elimination, never the simplex, and enumerations are unpruned.

#include "tvb/exact_linalg.hpp"
#include "tvb/tverberg.hpp"

#include <optional>
#include <vector>

namespace tvb::oracle {

/// Feasibility of { sum coeff_i x_i <= rhs } rows by Fourier-Motzkin
/// elimination. Each row holds nvars coefficients followed by the rhs.
bool fm_feasible_rows(std::vector<std::vector<Rational>> rows, int nvars);

/// Feasibility of a FeasibilitySystem via Fourier-Motzkin.
bool fm_feasible(const FeasibilitySystem& sys);

/// Brute force over every family of r pairwise disjoint nonempty subsets
/// (no size cap, no pruning); per-family feasibility by Fourier-Motzkin.
bool brute_force_tverberg_feasible(const PointConfiguration& cfg, int r,
                                   const FaceConstraints& constraints = {});

/// Radon-specific second route: a 2-partition exists iff the labeled points
/// are affinely dependent.
bool radon_feasible_by_rank(const PointConfiguration& cfg);

/// Exhaustive check that every family of r disjoint nonempty faces of the
/// N-simplex contains a face of dimension <= k (i.e. no r disjoint subsets
/// of size >= k+2 exist).
bool exhaustive_vkf_forced(long long N, long long r, long long k);

}  // namespace tvb::oracle

#endif

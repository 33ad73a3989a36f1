#ifndef TVB_EXACT_LINALG_HPP
#define TVB_EXACT_LINALG_HPP

#include "tvb/rational.hpp"

#include <optional>
#include <vector>

namespace tvb {

/// Linear feasibility instance: equalities * x = rhs, with x_i >= 0 for
/// every i in nonnegative_vars and the remaining variables free.
struct FeasibilitySystem {
  RatMatrix equalities;
  RatVector rhs;
  std::vector<int> nonnegative_vars;
};

/// Solves A x = b exactly. Returns the solution with free variables set to
/// zero under a fixed pivot order (columns left to right, first usable row),
/// or nullopt iff the system is inconsistent.
/// Throws std::invalid_argument on a row/length mismatch.
std::optional<RatVector> solve_linear(const Eigen::Ref<const RatMatrix>& A,
                                      const Eigen::Ref<const RatVector>& b);

/// Exact rational feasibility via phase-1 simplex with Bland's anti-cycling
/// rule and lexicographic variable order (integer-pivoting tableau).
/// Returns a witness satisfying every constraint exactly, or nullopt iff the
/// system is infeasible. Deterministic: identical inputs give identical
/// witnesses.
std::optional<RatVector> lp_feasible(const FeasibilitySystem& sys);

/// Rank of a rational matrix by Gaussian elimination.
int rank(const Eigen::Ref<const RatMatrix>& A);

/// Dimension of the affine hull of a point set (0 for a single point).
/// Throws std::invalid_argument on an empty list.
int affine_dim(const std::vector<RatVector>& points);

}  // namespace tvb

#endif

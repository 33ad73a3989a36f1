#ifndef TVB_BARYCENTER_HPP
#define TVB_BARYCENTER_HPP

#include "tvb/check_result.hpp"
#include "tvb/polytope.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tvb {

/// Witness that p is the average of r points of the k-skeleton: points[i]
/// lies on the face faces[i] (dim <= k) with the stored convex coefficients,
/// and (1/r) * sum(points) = p, all exactly.
struct BarycenterCertificate {
  std::vector<std::vector<int>> faces;  // vertex index sets into the polytope
  std::vector<RatVector> points;
  std::vector<std::vector<Rational>> coefficients;
};

/// Searches face multisets of the k-skeleton in lexicographic order and
/// returns the first one admitting an exact solution of
///   { x_i in conv(faces[i]),  sum x_i = r * p },
/// or nullopt iff none is feasible. Whenever k*r >= dim and p is inside the
/// polytope a certificate exists.
/// Throws std::invalid_argument when p is outside P or k < 0 or r < 1.
std::optional<BarycenterCertificate> solve_barycenter(const Polytope& P, const RatVector& p,
                                                      int k, int r);

/// Prime-factor decomposition route: r = q*m with q the smallest prime
/// divisor; first m points in the (q*k)-skeleton, then each split into q
/// points of the k-skeleton of its carrier face. Prime r falls back to the
/// direct search. Falls back to the direct search as well if a recursion
/// stage comes up empty, so it succeeds whenever solve_barycenter does.
std::optional<BarycenterCertificate> solve_barycenter_recursive(const Polytope& P,
                                                                const RatVector& p, int k, int r);

/// The carrier face of p as a standalone polytope (lattice interval below
/// the face), paired with p itself; p lies in its relative interior.
std::pair<Polytope, RatVector> restrict_to_carrier(const Polytope& P, const RatVector& p);

/// Re-checks every certificate invariant with exact arithmetic, independent
/// of the solver path.
CheckResult verify_certificate(const Polytope& P, const RatVector& p, int k, int r,
                               const BarycenterCertificate& cert);

}  // namespace tvb

#endif

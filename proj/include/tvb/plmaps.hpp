#ifndef TVB_PLMAPS_HPP
#define TVB_PLMAPS_HPP

#include "tvb/rational.hpp"
#include "tvb/simplicial_complex.hpp"
#include "tvb/tverberg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tvb {

/// A point of a simplicial complex in barycentric coordinates: nonnegative
/// weights over the vertices summing to 1, supported on a single face.
struct BarycentricPoint {
  std::vector<Rational> weights;
};

/// The affine map determined by vertex images.
struct AffineVertexMap {
  SimplicialComplex source;
  int target_dim = 0;
  std::vector<RatVector> images;
};

/// Exact evaluation sum(weights[v] * images[v]).
/// Throws std::invalid_argument when the support is not a face of the source.
RatVector evaluate(const AffineVertexMap& f, const BarycentricPoint& x);

/// Evaluator for g(x) = (f(x), dist(x, k-skeleton of the source simplex)),
/// the source embedded with vertices e_0..e_N in R^{N+1}. Not an affine
/// vertex map: the distance coordinate is not affine. The distance is
/// computed exactly as a rational square and rooted only at the end.
class ConstraintLift {
 public:
  ConstraintLift(AffineVertexMap f, int k);

  /// Exact first block: equals evaluate(f, x).
  RatVector affine_part(const BarycentricPoint& x) const;

  /// Exact squared Euclidean distance from x to the k-skeleton.
  Rational squared_dist(const BarycentricPoint& x) const;

  /// g(x) as floating point, target_dim + 1 coordinates.
  Eigen::VectorXd operator()(const BarycentricPoint& x) const;

  int output_dim() const { return f_.target_dim + 1; }
  int skeleton_k() const { return k_; }

 private:
  AffineVertexMap f_;
  int k_;
};

/// Builds the constraint lift of an affine map on the standard simplex.
/// Throws unless the source is a full simplex and 0 <= k <= N.
ConstraintLift constraint_lift(AffineVertexMap f, int k);

/// The k-fold join lift: vertex v of copy i (1-indexed, new index
/// (i-1)(N+1)+v) maps to (indicator of i among the first k-1 slots,
/// then k blocks of length d with f(v) in block i). This is the unique
/// affine map agreeing with the join construction on vertices; the output
/// lives in R^{k(d+1)-1}. k = 1 returns the input configuration.
PointConfiguration join_lift_config(const PointConfiguration& cfg, int k);

/// Consistency harness for the join lift: if the lifted configuration
/// admits an r-partition then the original must too; a violation is FATAL.
/// When the lift has a certificate, the join weights lambda are recovered
/// from it (they agree across faces exactly) and the partition is
/// back-projected through the smallest index j with lambda_j > 0.
struct LiftReflectionReport {
  bool cfg_feasible = false;
  bool lift_feasible = false;
  bool fatal = false;
  bool consistent = true;
  bool lambda_equal_across_faces = true;
  std::vector<Rational> lambda;
  std::optional<TverbergCertificate> cfg_certificate;
  std::optional<TverbergCertificate> lift_certificate;
  std::optional<TverbergCertificate> back_projected;
  std::string note;
};

LiftReflectionReport check_lift_reflection(const PointConfiguration& cfg, int r, int k);

}  // namespace tvb

#endif

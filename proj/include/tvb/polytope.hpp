#ifndef TVB_POLYTOPE_HPP
#define TVB_POLYTOPE_HPP

#include "tvb/exact_linalg.hpp"
#include "tvb/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tvb {

/// A face of a polytope, identified by the sorted indices of the hull
/// vertices lying on it. The empty face has dim -1.
struct Face {
  std::vector<int> vertex_set;
  int dim = -1;

  friend bool operator==(const Face& a, const Face& b) { return a.vertex_set == b.vertex_set; }
};

/// V-polytope with an explicit face lattice. Immutable after construction;
/// all queries are pure and thread-safe.
///
/// The lattice is graded by (dim, vertex_set) and always contains the empty
/// face and the polytope itself. It may describe a polytope whose intrinsic
/// dimension is lower than the ambient one (faces restricted to standalone
/// polytopes keep their ambient coordinates).
class Polytope {
 public:
  Polytope() = default;

  /// Builds the face lattice from scratch: facets are found by enumerating
  /// hyperplanes spanned by affinely independent vertex subsets and keeping
  /// the supporting ones; lower faces arise as intersections of facet vertex
  /// sets. Requires affinely spanning vertices (intrinsic dim == ambient dim)
  /// and rejects input points that are not vertices of the hull.
  static Polytope from_vertices(int ambient_dim, std::vector<RatVector> vertices);

  /// Accepts a supplied face list instead of enumerating hyperplanes. Every
  /// supplied face is re-verified to be the exact vertex set of a supporting
  /// hyperplane; the list must be intersection-closed and contain all vertex
  /// faces, the empty face and the full polytope (added here if omitted).
  static Polytope from_vertices_and_faces(int ambient_dim, std::vector<RatVector> vertices,
                                          std::vector<std::vector<int>> supplied_faces);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }

  /// All faces sorted by (dim, vertex_set), empty face first, full face last.
  const std::vector<Face>& faces() const { return faces_; }
  const Face& full_face() const { return faces_.back(); }

  /// Faces with 0 <= dim <= k, in lattice order. Throws if k is outside
  /// [0, dim()].
  std::vector<Face> skeleton(int k) const;

  /// Convex-combination test: coefficients over the face's vertices, or
  /// nullopt when x is not in the face. Exact.
  std::optional<std::vector<Rational>> face_contains(const Face& face, const RatVector& x) const;

  bool contains(const RatVector& x) const;

  /// The unique face holding x in its relative interior (the carrier),
  /// computed as the intersection of all faces containing x.
  /// Throws std::invalid_argument when x is outside the polytope.
  const Face& minimal_face(const RatVector& x) const;

  /// Euclidean distance from x to the k-skeleton. The nearest point per face
  /// is found by exact projection onto the affine hull, recursing to the
  /// face's boundary when the projection leaves it; only the final square
  /// root is floating point.
  double dist_to_skeleton(int k, const Eigen::VectorXd& x) const;

  /// Exact squared distance; the rational core of dist_to_skeleton.
  Rational squared_dist_to_skeleton(int k, const RatVector& x) const;

  /// The face as a standalone polytope: same ambient space, the lattice
  /// interval below the face.
  Polytope restrict_to_face(const Face& face) const;

  /// Counts of faces per dimension 0..dim() (empty face excluded).
  std::vector<int> f_vector() const;

  int face_index(const std::vector<int>& vertex_set) const;  // -1 if absent
  const std::vector<int>& children_of(int face_index) const;

 private:
  void finalize(std::vector<std::vector<int>> face_sets);
  Rational nearest_sq(int face_index, const RatVector& x,
                      std::vector<std::optional<Rational>>& memo) const;

  int ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<RatVector> vertices_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> children_;  // maximal proper subfaces
};

}  // namespace tvb

#endif

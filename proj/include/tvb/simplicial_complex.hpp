#ifndef TVB_SIMPLICIAL_COMPLEX_HPP
#define TVB_SIMPLICIAL_COMPLEX_HPP

#include <vector>

namespace tvb {

/// Abstract simplicial complex given by its facets (pairwise
/// inclusion-incomparable vertex sets); the faces are all nonempty subsets
/// of facets.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> facets;  // each sorted ascending

  bool is_face(const std::vector<int>& simplex) const;

  /// All nonempty faces, sorted by (size, lex).
  std::vector<std::vector<int>> all_faces() const;
};

/// The standard N-simplex (one facet {0..N}).
SimplicialComplex standard_simplex(int N);

/// The m-skeleton of the N-simplex: facets are all (m+1)-subsets.
SimplicialComplex simplex_skeleton(int N, int m);

}  // namespace tvb

#endif

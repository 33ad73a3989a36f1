#ifndef TVB_DELPROD_HPP
#define TVB_DELPROD_HPP

#include "tvb/rational.hpp"
#include "tvb/simplicial_complex.hpp"

#include <utility>
#include <vector>

namespace tvb {

/// A cell of a deleted product: an ordered r-tuple of pairwise disjoint
/// nonempty faces; dim = sum of factor dimensions.
struct ProductCell {
  std::vector<std::vector<int>> factors;
  int dim = 0;
};

/// Cell complex of the pairwise deleted r-fold product, graded by dimension,
/// with signed boundary incidences from the graded Leibniz rule (simplices
/// oriented by ascending vertex order).
struct CellComplex {
  int r = 0;
  std::vector<std::vector<ProductCell>> cells;  // cells[dim]
  // boundary[dim][cell] = list of (cell index in dimension dim-1, sign)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary;
};

/// Builds the deleted product. Throws std::invalid_argument when r < 2.
CellComplex deleted_product(const SimplicialComplex& K, int r);

int complex_dim(const CellComplex& C);
std::vector<int> f_vector(const CellComplex& C);

/// Boundary matrix from dimension dim to dim-1 (rows index (dim-1)-cells).
IntMatrix boundary_matrix(const CellComplex& C, int dim);

/// Invariant factors d_1 | d_2 | ... of an integer matrix (Smith normal
/// form over arbitrary-precision integers, no modular shortcuts).
std::vector<Integer> smith_invariant_factors(IntMatrix A);

struct HomologyGroup {
  long long betti = 0;
  std::vector<Integer> torsion;
};

/// Integer cellular homology per dimension; H_0 rank equals the number of
/// connected components.
std::vector<HomologyGroup> homology(const CellComplex& C);

struct SymActionReport {
  bool is_free = true;
  std::vector<int> orbit_counts;  // per dimension
};

/// The Sym_r action permutes tuple components; checks no nontrivial
/// permutation fixes a cell and counts orbits per dimension.
SymActionReport sym_action_check(const CellComplex& C, int r);

}  // namespace tvb

#endif

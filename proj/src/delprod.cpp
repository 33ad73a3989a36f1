#include "tvb/delprod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tvb {

namespace {

using FaceId = int;

struct FaceTable {
  std::vector<std::vector<int>> faces;    // sorted by (size, lex)
  std::vector<unsigned long long> masks;  // vertex bitmasks
};

FaceTable face_table(const SimplicialComplex& K) {
  if (K.vertex_count > 63) throw std::invalid_argument("deleted_product: too many vertices");
  FaceTable T;
  T.faces = K.all_faces();
  for (const auto& f : T.faces) {
    unsigned long long m = 0;
    for (int v : f) m |= 1ULL << v;
    T.masks.push_back(m);
  }
  return T;
}

}  // namespace

CellComplex deleted_product(const SimplicialComplex& K, int r) {
  if (r < 2) throw std::invalid_argument("deleted_product: r must be >= 2");
  const FaceTable T = face_table(K);
  const int nf = static_cast<int>(T.faces.size());

  CellComplex C;
  C.r = r;
  std::map<std::vector<FaceId>, std::pair<int, int>> index;  // tuple -> (dim, idx)

  std::vector<FaceId> tuple(static_cast<size_t>(r));
  std::vector<ProductCell> flat;
  std::vector<std::vector<FaceId>> flat_ids;
  auto emit = [&](const std::vector<FaceId>& ids) {
    ProductCell cell;
    cell.dim = 0;
    for (FaceId id : ids) {
      cell.factors.push_back(T.faces[static_cast<size_t>(id)]);
      cell.dim += static_cast<int>(T.faces[static_cast<size_t>(id)].size()) - 1;
    }
    flat.push_back(std::move(cell));
    flat_ids.push_back(ids);
  };
  // ordered tuples of pairwise disjoint nonempty faces
  auto rec = [&](auto&& self, int slot, unsigned long long used) -> void {
    if (slot == r) {
      emit(tuple);
      return;
    }
    for (FaceId id = 0; id < nf; ++id) {
      if (T.masks[static_cast<size_t>(id)] & used) continue;
      tuple[static_cast<size_t>(slot)] = id;
      self(self, slot + 1, used | T.masks[static_cast<size_t>(id)]);
    }
  };
  rec(rec, 0, 0ULL);

  int top = -1;
  for (const auto& cell : flat) top = std::max(top, cell.dim);
  C.cells.assign(static_cast<size_t>(top) + 1, {});
  for (size_t i = 0; i < flat.size(); ++i) {
    const int dim = flat[i].dim;
    index[flat_ids[i]] = {dim, static_cast<int>(C.cells[static_cast<size_t>(dim)].size())};
    C.cells[static_cast<size_t>(dim)].push_back(flat[i]);
  }

  // boundary via the graded Leibniz rule
  C.boundary.assign(C.cells.size(), {});
  std::map<std::vector<int>, FaceId> face_id_of;
  for (FaceId id = 0; id < nf; ++id) face_id_of[T.faces[static_cast<size_t>(id)]] = id;
  for (size_t i = 0; i < flat.size(); ++i) {
    const ProductCell& cell = flat[i];
    if (cell.dim == 0) continue;
    auto& rows = C.boundary[static_cast<size_t>(cell.dim)];
    const int my_idx = index[flat_ids[i]].second;
    if (static_cast<int>(rows.size()) <= my_idx) rows.resize(static_cast<size_t>(my_idx) + 1);
    auto& incidences = rows[static_cast<size_t>(my_idx)];
    int prefix_dim = 0;
    for (int factor = 0; factor < r; ++factor) {
      const auto& face = cell.factors[static_cast<size_t>(factor)];
      const int fdim = static_cast<int>(face.size()) - 1;
      if (fdim >= 1) {
        const int prefix_sign = (prefix_dim % 2 == 0) ? 1 : -1;
        for (size_t l = 0; l < face.size(); ++l) {
          std::vector<int> sub = face;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(l));
          std::vector<FaceId> ids = flat_ids[i];
          ids[static_cast<size_t>(factor)] = face_id_of.at(sub);
          const auto [tdim, tidx] = index.at(ids);
          const int sign = prefix_sign * ((l % 2 == 0) ? 1 : -1);
          incidences.emplace_back(tidx, sign);
        }
      }
      prefix_dim += fdim;
    }
  }
  for (size_t dim = 1; dim < C.cells.size(); ++dim)
    C.boundary[dim].resize(C.cells[dim].size());
  return C;
}

int complex_dim(const CellComplex& C) { return static_cast<int>(C.cells.size()) - 1; }

std::vector<int> f_vector(const CellComplex& C) {
  std::vector<int> fv;
  for (const auto& level : C.cells) fv.push_back(static_cast<int>(level.size()));
  return fv;
}

IntMatrix boundary_matrix(const CellComplex& C, int dim) {
  if (dim < 1 || dim >= static_cast<int>(C.cells.size()))
    throw std::invalid_argument("boundary_matrix: dimension out of range");
  IntMatrix D = IntMatrix::Zero(static_cast<Eigen::Index>(C.cells[static_cast<size_t>(dim) - 1].size()),
                                static_cast<Eigen::Index>(C.cells[static_cast<size_t>(dim)].size()));
  for (size_t j = 0; j < C.boundary[static_cast<size_t>(dim)].size(); ++j)
    for (const auto& [row, sign] : C.boundary[static_cast<size_t>(dim)][j])
      D(row, static_cast<Eigen::Index>(j)) += sign;
  return D;
}

std::vector<Integer> smith_invariant_factors(IntMatrix A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  std::vector<Integer> diag;
  Eigen::Index t = 0;
  while (t < m && t < n) {
    // smallest nonzero magnitude pivot in the remaining block
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        if (A(i, j) == 0) continue;
        if (pi < 0 || abs(A(i, j)) < abs(A(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    A.row(t).swap(A.row(pi));
    A.col(t).swap(A.col(pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        const Integer q = A(i, t) / A(t, t);
        if (q != 0) A.row(i) -= q * A.row(t);
        if (A(i, t) != 0) {  // remainder smaller than pivot: swap up, redo
          A.row(t).swap(A.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        const Integer q = A(t, j) / A(t, t);
        if (q != 0) A.col(j) -= q * A.col(t);
        if (A(t, j) != 0) {
          A.col(t).swap(A.col(j));
          clean = false;
        }
      }
    }
    // divisibility: pivot must divide every remaining entry
    bool restart = false;
    for (Eigen::Index i = t + 1; i < m && !restart; ++i)
      for (Eigen::Index j = t + 1; j < n && !restart; ++j)
        if (A(i, j) % A(t, t) != 0) {
          A.row(t) += A.row(i);
          restart = true;
        }
    if (restart) continue;
    if (A(t, t) < 0) A.row(t) = -A.row(t);
    diag.push_back(A(t, t));
    ++t;
  }
  return diag;
}

std::vector<HomologyGroup> homology(const CellComplex& C) {
  const int top = complex_dim(C);
  std::vector<std::vector<Integer>> factors(static_cast<size_t>(top) + 2);
  for (int dim = 1; dim <= top; ++dim)
    factors[static_cast<size_t>(dim)] = smith_invariant_factors(boundary_matrix(C, dim));
  std::vector<HomologyGroup> H(static_cast<size_t>(top) + 1);
  for (int dim = 0; dim <= top; ++dim) {
    const long long cells = static_cast<long long>(C.cells[static_cast<size_t>(dim)].size());
    const long long rank_here =
        dim >= 1 ? static_cast<long long>(factors[static_cast<size_t>(dim)].size()) : 0;
    const long long rank_above = static_cast<long long>(factors[static_cast<size_t>(dim) + 1].size());
    H[static_cast<size_t>(dim)].betti = cells - rank_here - rank_above;
    for (const Integer& f : factors[static_cast<size_t>(dim) + 1])
      if (f > 1) H[static_cast<size_t>(dim)].torsion.push_back(f);
  }
  return H;
}

SymActionReport sym_action_check(const CellComplex& C, int r) {
  SymActionReport report;
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> id_perm(static_cast<size_t>(r));
  std::iota(id_perm.begin(), id_perm.end(), 0);

  for (const auto& level : C.cells) {
    int orbits = 0;
    std::vector<char> visited(level.size(), 0);
    std::map<std::vector<std::vector<int>>, int> cell_index;
    for (size_t i = 0; i < level.size(); ++i) cell_index[level[i].factors] = static_cast<int>(i);
    for (size_t i = 0; i < level.size(); ++i) {
      if (visited[i]) continue;
      ++orbits;
      for (const auto& p : perms) {
        std::vector<std::vector<int>> permuted(static_cast<size_t>(r));
        for (int s = 0; s < r; ++s)
          permuted[static_cast<size_t>(p[static_cast<size_t>(s)])] =
              level[i].factors[static_cast<size_t>(s)];
        if (p != id_perm && permuted == level[i].factors) report.is_free = false;
        const auto it = cell_index.find(permuted);
        if (it != cell_index.end()) visited[static_cast<size_t>(it->second)] = 1;
      }
    }
    report.orbit_counts.push_back(orbits);
  }
  return report;
}

}  // namespace tvb

#include "tvb/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tvb {

namespace {

std::string point_to_string(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rational_to_string(v(i));
  }
  os << ")";
  return os.str();
}

// Nonzero kernel vector of M (assumes nullity >= 1); deterministic: the
// first free column gets weight 1.
RatVector kernel_vector(const RatMatrix& M) {
  RatMatrix R = M;
  const Eigen::Index m = R.rows(), n = R.cols();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  std::vector<bool> is_pivot_col(static_cast<size_t>(n), false);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = row; i < m; ++i)
      if (R(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    R.row(pr).swap(R.row(row));
    const Rational inv = Rational(1) / R(row, col);
    for (Eigen::Index j = col; j < n; ++j) R(row, j) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == row || R(i, col) == 0) continue;
      const Rational f = R(i, col);
      for (Eigen::Index j = col; j < n; ++j) R(i, j) -= f * R(row, j);
    }
    pivots.emplace_back(row, col);
    is_pivot_col[static_cast<size_t>(col)] = true;
    ++row;
  }
  Eigen::Index free_col = -1;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot_col[static_cast<size_t>(j)]) {
      free_col = j;
      break;
    }
  if (free_col < 0) throw std::logic_error("kernel_vector: matrix has full column rank");
  RatVector x = RatVector::Zero(n);
  x(free_col) = 1;
  for (auto [pr, pc] : pivots) x(pc) = -R(pr, free_col);
  return x;
}

// x in conv(points)? Exact LP; returns convex coefficients on success.
std::optional<std::vector<Rational>> convex_coefficients(const std::vector<RatVector>& points,
                                                         const RatVector& x) {
  const Eigen::Index d = x.size();
  const Eigen::Index k = static_cast<Eigen::Index>(points.size());
  if (k == 0) return std::nullopt;
  FeasibilitySystem sys;
  sys.equalities = RatMatrix::Zero(d + 1, k);
  sys.rhs = RatVector::Zero(d + 1);
  for (Eigen::Index j = 0; j < k; ++j) {
    sys.equalities.block(0, j, d, 1) = points[static_cast<size_t>(j)];
    sys.equalities(d, j) = 1;
  }
  sys.rhs.head(d) = x;
  sys.rhs(d) = 1;
  sys.nonnegative_vars.resize(static_cast<size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) sys.nonnegative_vars[static_cast<size_t>(j)] = static_cast<int>(j);
  auto w = lp_feasible(sys);
  if (!w) return std::nullopt;
  std::vector<Rational> coeffs(static_cast<size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) coeffs[static_cast<size_t>(j)] = (*w)(j);
  return coeffs;
}

}  // namespace

void Polytope::finalize(std::vector<std::vector<int>> face_sets) {
  std::set<std::vector<int>> dedup(face_sets.begin(), face_sets.end());
  faces_.clear();
  for (const auto& fs : dedup) {
    Face f;
    f.vertex_set = fs;
    if (fs.empty()) {
      f.dim = -1;
    } else {
      std::vector<RatVector> pts;
      pts.reserve(fs.size());
      for (int i : fs) pts.push_back(vertices_[static_cast<size_t>(i)]);
      f.dim = affine_dim(pts);
    }
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_set < b.vertex_set;
  });
  dim_ = faces_.back().dim;

  const size_t nf = faces_.size();
  children_.assign(nf, {});
  auto strict_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (size_t i = 0; i < nf; ++i) {
    for (size_t j = 0; j < nf; ++j) {
      if (!strict_subset(faces_[j].vertex_set, faces_[i].vertex_set)) continue;
      bool maximal = true;
      for (size_t l = 0; l < nf && maximal; ++l)
        if (l != i && l != j && strict_subset(faces_[j].vertex_set, faces_[l].vertex_set) &&
            strict_subset(faces_[l].vertex_set, faces_[i].vertex_set))
          maximal = false;
      if (maximal) children_[i].push_back(static_cast<int>(j));
    }
  }
}

Polytope Polytope::from_vertices(int ambient_dim, std::vector<RatVector> vertices) {
  if (ambient_dim < 1) throw std::invalid_argument("from_vertices: ambient dimension must be >= 1");
  const int n = static_cast<int>(vertices.size());
  if (n < ambient_dim + 1)
    throw std::invalid_argument("from_vertices: need at least d+1 vertices");
  for (const auto& v : vertices)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("from_vertices: vertex dimension mismatch");
  if (affine_dim(vertices) != ambient_dim)
    throw std::invalid_argument("from_vertices: vertices do not affinely span the ambient space");

  // Every input point must be a vertex of the hull.
  for (int i = 0; i < n; ++i) {
    std::vector<RatVector> others;
    others.reserve(static_cast<size_t>(n) - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(vertices[static_cast<size_t>(j)]);
    if (convex_coefficients(others, vertices[static_cast<size_t>(i)]))
      throw std::invalid_argument("from_vertices: input point " + std::to_string(i) + " " +
                                  point_to_string(vertices[static_cast<size_t>(i)]) +
                                  " is not a vertex of the hull");
  }

  const int d = ambient_dim;
  // Facets: hyperplanes through affinely independent d-subsets with all
  // vertices on one closed side.
  std::set<std::vector<int>> facet_sets;
  std::vector<int> idx(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
  auto advance = [&]() {
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - d + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<size_t>(pos)];
    for (int q = pos + 1; q < d; ++q) idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    return true;
  };
  do {
    std::vector<RatVector> pts;
    pts.reserve(static_cast<size_t>(d));
    for (int i : idx) pts.push_back(vertices[static_cast<size_t>(i)]);
    if (affine_dim(pts) != d - 1) continue;
    RatMatrix M(d, d + 1);
    for (int i = 0; i < d; ++i) {
      M.block(i, 0, 1, d) = pts[static_cast<size_t>(i)].transpose();
      M(i, d) = -1;
    }
    const RatVector ac = kernel_vector(M);  // (normal a, offset c)
    bool pos = false, neg = false;
    std::vector<int> on_plane;
    for (int i = 0; i < n; ++i) {
      Rational s = -ac(d);
      for (int c = 0; c < d; ++c) s += ac(c) * vertices[static_cast<size_t>(i)](c);
      if (s > 0) pos = true;
      else if (s < 0) neg = true;
      else on_plane.push_back(i);
    }
    if (pos && neg) continue;  // not supporting
    facet_sets.insert(on_plane);
  } while (advance());

  // Lower faces: close the facet vertex sets under intersection.
  std::set<std::vector<int>> sets(facet_sets.begin(), facet_sets.end());
  std::vector<int> full(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i;
  sets.insert(full);
  sets.insert({});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(sets.begin(), sets.end());
    for (size_t a = 0; a < current.size(); ++a)
      for (size_t b = a + 1; b < current.size(); ++b) {
        std::vector<int> inter;
        std::set_intersection(current[a].begin(), current[a].end(), current[b].begin(),
                              current[b].end(), std::back_inserter(inter));
        if (sets.insert(inter).second) grew = true;
      }
  }

  Polytope P;
  P.ambient_dim_ = ambient_dim;
  P.vertices_ = std::move(vertices);
  P.finalize({sets.begin(), sets.end()});
  return P;
}

Polytope Polytope::from_vertices_and_faces(int ambient_dim, std::vector<RatVector> vertices,
                                           std::vector<std::vector<int>> supplied_faces) {
  if (ambient_dim < 1)
    throw std::invalid_argument("from_vertices_and_faces: ambient dimension must be >= 1");
  const int n = static_cast<int>(vertices.size());
  for (const auto& v : vertices)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("from_vertices_and_faces: vertex dimension mismatch");
  if (affine_dim(vertices) != ambient_dim)
    throw std::invalid_argument(
        "from_vertices_and_faces: vertices do not affinely span the ambient space");
  for (int i = 0; i < n; ++i) {
    std::vector<RatVector> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(vertices[static_cast<size_t>(j)]);
    if (convex_coefficients(others, vertices[static_cast<size_t>(i)]))
      throw std::invalid_argument("from_vertices_and_faces: input point " + std::to_string(i) +
                                  " " + point_to_string(vertices[static_cast<size_t>(i)]) +
                                  " is not a vertex of the hull");
  }

  std::set<std::vector<int>> sets;
  std::vector<int> full(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i;
  const int d = ambient_dim;
  for (auto fs : supplied_faces) {
    std::sort(fs.begin(), fs.end());
    if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
      throw std::invalid_argument("from_vertices_and_faces: repeated vertex index in a face");
    for (int i : fs)
      if (i < 0 || i >= n)
        throw std::invalid_argument("from_vertices_and_faces: face vertex index out of range");
    if (fs.empty() || fs == full) {
      sets.insert(fs);
      continue;
    }
    // Re-verify: some hyperplane a.x = c touches exactly the face's vertices,
    // with a margin of at least 1 on the rest (scale freedom makes 1 generic).
    std::vector<int> outside;
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(fs.begin(), fs.end(), i)) outside.push_back(i);
    const Eigen::Index nvars = d + 1 + static_cast<Eigen::Index>(outside.size());
    FeasibilitySystem sys;
    sys.equalities = RatMatrix::Zero(static_cast<Eigen::Index>(fs.size() + outside.size()), nvars);
    sys.rhs = RatVector::Zero(sys.equalities.rows());
    Eigen::Index row = 0;
    for (int i : fs) {
      for (int c = 0; c < d; ++c) sys.equalities(row, c) = vertices[static_cast<size_t>(i)](c);
      sys.equalities(row, d) = -1;
      ++row;
    }
    for (size_t s = 0; s < outside.size(); ++s) {
      const int i = outside[s];
      for (int c = 0; c < d; ++c) sys.equalities(row, c) = vertices[static_cast<size_t>(i)](c);
      sys.equalities(row, d) = -1;
      sys.equalities(row, d + 1 + static_cast<Eigen::Index>(s)) = 1;
      sys.rhs(row) = -1;
      ++row;
    }
    for (size_t s = 0; s < outside.size(); ++s)
      sys.nonnegative_vars.push_back(d + 1 + static_cast<int>(s));
    if (!lp_feasible(sys)) {
      std::ostringstream os;
      os << "from_vertices_and_faces: supplied face {";
      for (size_t i = 0; i < fs.size(); ++i) os << (i ? "," : "") << fs[static_cast<size_t>(i)];
      os << "} is not the vertex set of a supporting hyperplane";
      throw std::invalid_argument(os.str());
    }
    sets.insert(fs);
  }
  sets.insert(full);
  sets.insert({});
  for (int i = 0; i < n; ++i)
    if (!sets.count({i}))
      throw std::invalid_argument("from_vertices_and_faces: supplied lattice misses vertex face " +
                                  std::to_string(i));
  std::vector<std::vector<int>> current(sets.begin(), sets.end());
  for (size_t a = 0; a < current.size(); ++a)
    for (size_t b = a + 1; b < current.size(); ++b) {
      std::vector<int> inter;
      std::set_intersection(current[a].begin(), current[a].end(), current[b].begin(),
                            current[b].end(), std::back_inserter(inter));
      if (!sets.count(inter))
        throw std::invalid_argument(
            "from_vertices_and_faces: supplied lattice is not intersection-closed");
    }

  Polytope P;
  P.ambient_dim_ = ambient_dim;
  P.vertices_ = std::move(vertices);
  P.finalize({sets.begin(), sets.end()});
  return P;
}

std::vector<Face> Polytope::skeleton(int k) const {
  if (k < 0 || k > dim_)
    throw std::invalid_argument("skeleton: k must lie in [0, dim]");
  std::vector<Face> out;
  for (const auto& f : faces_)
    if (f.dim >= 0 && f.dim <= k) out.push_back(f);
  return out;
}

std::optional<std::vector<Rational>> Polytope::face_contains(const Face& face,
                                                             const RatVector& x) const {
  if (x.size() != ambient_dim_)
    throw std::invalid_argument("face_contains: point dimension mismatch");
  if (face.vertex_set.empty()) return std::nullopt;
  std::vector<RatVector> pts;
  pts.reserve(face.vertex_set.size());
  for (int i : face.vertex_set) pts.push_back(vertices_[static_cast<size_t>(i)]);
  return convex_coefficients(pts, x);
}

bool Polytope::contains(const RatVector& x) const { return face_contains(full_face(), x).has_value(); }

const Face& Polytope::minimal_face(const RatVector& x) const {
  if (!contains(x)) throw std::invalid_argument("minimal_face: point is outside the polytope");
  std::vector<int> inter = full_face().vertex_set;
  for (const auto& f : faces_) {
    if (f.dim < 0 || f.dim == dim_) continue;
    if (!face_contains(f, x)) continue;
    std::vector<int> next;
    std::set_intersection(inter.begin(), inter.end(), f.vertex_set.begin(), f.vertex_set.end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  const int idx = face_index(inter);
  if (idx < 0) throw std::logic_error("minimal_face: lattice not intersection-closed");
  return faces_[static_cast<size_t>(idx)];
}

Rational Polytope::nearest_sq(int face_index, const RatVector& x,
                              std::vector<std::optional<Rational>>& memo) const {
  auto& slot = memo[static_cast<size_t>(face_index)];
  if (slot) return *slot;
  const Face& f = faces_[static_cast<size_t>(face_index)];
  Rational result;
  if (f.dim == 0) {
    const RatVector diff = x - vertices_[static_cast<size_t>(f.vertex_set[0])];
    result = diff.dot(diff);
  } else {
    const auto& vs = f.vertex_set;
    const RatVector& v0 = vertices_[static_cast<size_t>(vs[0])];
    RatMatrix B(ambient_dim_, static_cast<Eigen::Index>(vs.size()) - 1);
    for (size_t j = 1; j < vs.size(); ++j)
      B.col(static_cast<Eigen::Index>(j) - 1) = vertices_[static_cast<size_t>(vs[j])] - v0;
    const RatMatrix G = B.transpose() * B;
    const RatVector rhs = B.transpose() * (x - v0);
    const auto t = solve_linear(G, rhs);  // normal equations, always consistent
    if (!t) throw std::logic_error("nearest_sq: inconsistent normal equations");
    const RatVector y = v0 + B * (*t);
    if (face_contains(f, y)) {
      const RatVector diff = x - y;
      result = diff.dot(diff);
    } else {
      bool first = true;
      for (int c : children_of(face_index)) {
        if (faces_[static_cast<size_t>(c)].dim < 0) continue;
        const Rational cand = nearest_sq(c, x, memo);
        if (first || cand < result) {
          result = cand;
          first = false;
        }
      }
      if (first) throw std::logic_error("nearest_sq: face without boundary");
    }
  }
  slot = result;
  return result;
}

Rational Polytope::squared_dist_to_skeleton(int k, const RatVector& x) const {
  if (k < 0 || k > dim_)
    throw std::invalid_argument("dist_to_skeleton: k must lie in [0, dim]");
  if (x.size() != ambient_dim_)
    throw std::invalid_argument("dist_to_skeleton: point dimension mismatch");
  std::vector<std::optional<Rational>> memo(faces_.size());
  bool first = true;
  Rational best;
  for (size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    if (f.dim < 0 || f.dim > k) continue;
    // skip faces buried inside a larger skeleton face
    bool maximal = true;
    for (size_t j = 0; j < faces_.size() && maximal; ++j) {
      const Face& g = faces_[j];
      if (j == i || g.dim > k || g.dim < f.dim) continue;
      if (f.vertex_set.size() < g.vertex_set.size() &&
          std::includes(g.vertex_set.begin(), g.vertex_set.end(), f.vertex_set.begin(),
                        f.vertex_set.end()))
        maximal = false;
    }
    if (!maximal) continue;
    const Rational cand = nearest_sq(static_cast<int>(i), x, memo);
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  }
  if (first) throw std::logic_error("squared_dist_to_skeleton: empty skeleton");
  return best;
}

double Polytope::dist_to_skeleton(int k, const Eigen::VectorXd& x) const {
  RatVector xr(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) xr(i) = rational_of_double(x(i));
  return std::sqrt(to_double(squared_dist_to_skeleton(k, xr)));
}

Polytope Polytope::restrict_to_face(const Face& face) const {
  const int idx = face_index(face.vertex_set);
  if (idx < 0) throw std::invalid_argument("restrict_to_face: not a face of this polytope");
  if (face.vertex_set.empty())
    throw std::invalid_argument("restrict_to_face: cannot restrict to the empty face");
  std::vector<int> remap(vertices_.size(), -1);
  Polytope Q;
  Q.ambient_dim_ = ambient_dim_;
  for (size_t j = 0; j < face.vertex_set.size(); ++j) {
    remap[static_cast<size_t>(face.vertex_set[j])] = static_cast<int>(j);
    Q.vertices_.push_back(vertices_[static_cast<size_t>(face.vertex_set[j])]);
  }
  std::vector<std::vector<int>> sub_sets;
  for (const auto& f : faces_) {
    if (!std::includes(face.vertex_set.begin(), face.vertex_set.end(), f.vertex_set.begin(),
                       f.vertex_set.end()))
      continue;
    std::vector<int> mapped;
    mapped.reserve(f.vertex_set.size());
    for (int i : f.vertex_set) mapped.push_back(remap[static_cast<size_t>(i)]);
    sub_sets.push_back(std::move(mapped));
  }
  Q.finalize(std::move(sub_sets));
  return Q;
}

std::vector<int> Polytope::f_vector() const {
  std::vector<int> fv(static_cast<size_t>(dim_) + 1, 0);
  for (const auto& f : faces_)
    if (f.dim >= 0) ++fv[static_cast<size_t>(f.dim)];
  return fv;
}

int Polytope::face_index(const std::vector<int>& vertex_set) const {
  for (size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertex_set == vertex_set) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& Polytope::children_of(int face_index) const {
  return children_[static_cast<size_t>(face_index)];
}

}  // namespace tvb

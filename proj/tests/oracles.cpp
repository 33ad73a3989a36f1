#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tvb::oracle {

namespace {

// Normalize a row to a canonical integer form so duplicates collapse.
std::vector<Rational> normalize_row(const std::vector<Rational>& row) {
  Integer scale = 1;
  for (const auto& v : row) scale = lcm(scale, denominator(v));
  std::vector<Integer> ints;
  ints.reserve(row.size());
  Integer g = 0;
  for (const auto& v : row) {
    ints.push_back(numerator(v * Rational(scale)));
    g = gcd(g, ints.back());
  }
  std::vector<Rational> out;
  out.reserve(row.size());
  for (const auto& v : ints) out.push_back(g == 0 ? Rational(0) : Rational(v / g));
  return out;
}

}  // namespace

bool fm_feasible_rows(std::vector<std::vector<Rational>> rows, int nvars) {
  for (int var = nvars - 1; var >= 0; --var) {
    std::set<std::vector<Rational>> next;
    std::vector<std::vector<Rational>> pos, neg;
    for (auto& row : rows) {
      const Rational c = row[static_cast<size_t>(var)];
      row.erase(row.begin() + var);
      if (c > 0) {
        for (auto& v : row) v /= c;
        pos.push_back(row);
      } else if (c < 0) {
        for (auto& v : row) v /= -c;
        neg.push_back(row);
      } else {
        next.insert(normalize_row(row));
      }
    }
    // x <= p_rhs - p_coeffs . x'   and   x >= n_coeffs . x' - n_rhs
    for (const auto& p : pos)
      for (const auto& n : neg) {
        std::vector<Rational> combined(p.size());
        for (size_t i = 0; i < p.size(); ++i) combined[i] = p[i] + n[i];
        next.insert(normalize_row(combined));
      }
    rows.assign(next.begin(), next.end());
  }
  for (const auto& row : rows)
    if (row[0] < 0) return false;  // 0 <= negative
  return true;
}

bool fm_feasible(const FeasibilitySystem& sys) {
  const int m = static_cast<int>(sys.equalities.rows());
  const int n = static_cast<int>(sys.equalities.cols());
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> le(static_cast<size_t>(n) + 1), ge(static_cast<size_t>(n) + 1);
    for (int j = 0; j < n; ++j) {
      le[static_cast<size_t>(j)] = sys.equalities(i, j);
      ge[static_cast<size_t>(j)] = -sys.equalities(i, j);
    }
    le[static_cast<size_t>(n)] = sys.rhs(i);
    ge[static_cast<size_t>(n)] = -sys.rhs(i);
    rows.push_back(std::move(le));
    rows.push_back(std::move(ge));
  }
  for (int j : sys.nonnegative_vars) {
    std::vector<Rational> nn(static_cast<size_t>(n) + 1, Rational(0));
    nn[static_cast<size_t>(j)] = -1;
    rows.push_back(std::move(nn));
  }
  return fm_feasible_rows(std::move(rows), n);
}

namespace {

bool family_feasible_fm(const PointConfiguration& cfg,
                        const std::vector<std::vector<int>>& family) {
  // variables: witness (d, free) then convex coefficients per face
  const int d = cfg.dim;
  Eigen::Index nvars = d;
  for (const auto& f : family) nvars += static_cast<Eigen::Index>(f.size());
  FeasibilitySystem sys;
  sys.equalities = RatMatrix::Zero(static_cast<Eigen::Index>(family.size()) * (d + 1), nvars);
  sys.rhs = RatVector::Zero(sys.equalities.rows());
  Eigen::Index row = 0, col = d;
  for (const auto& f : family) {
    for (int v : f) {
      sys.equalities(row, col) = 1;
      for (int c = 0; c < d; ++c)
        sys.equalities(row + 1 + c, col) = cfg.points[static_cast<size_t>(v)](c);
      ++col;
    }
    for (int c = 0; c < d; ++c) sys.equalities(row + 1 + c, c) = -1;
    sys.rhs(row) = 1;
    row += d + 1;
  }
  for (Eigen::Index j = d; j < nvars; ++j) sys.nonnegative_vars.push_back(static_cast<int>(j));
  return fm_feasible(sys);
}

bool face_ok(const std::vector<int>& face, const FaceConstraints& constraints) {
  if (constraints.max_vertices && static_cast<int>(face.size()) > *constraints.max_vertices)
    return false;
  if (constraints.colors) {
    std::vector<int> seen;
    for (int v : face) {
      const int c = (*constraints.colors)[static_cast<size_t>(v)];
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
      seen.push_back(c);
    }
  }
  return true;
}

}  // namespace

bool brute_force_tverberg_feasible(const PointConfiguration& cfg, int r,
                                   const FaceConstraints& constraints) {
  const int n = static_cast<int>(cfg.points.size());
  // assign each vertex to one of {unused, face 1..r}; canonical: face labels
  // appear in order of their smallest vertex
  std::vector<int> label(static_cast<size_t>(n), 0);
  std::function<bool(int, int)> rec = [&](int v, int used_labels) -> bool {
    if (v == n) {
      if (used_labels != r) return false;
      std::vector<std::vector<int>> family(static_cast<size_t>(r));
      for (int i = 0; i < n; ++i)
        if (label[static_cast<size_t>(i)] > 0)
          family[static_cast<size_t>(label[static_cast<size_t>(i)] - 1)].push_back(i);
      for (const auto& f : family)
        if (!face_ok(f, constraints)) return false;
      return family_feasible_fm(cfg, family);
    }
    for (int l = 0; l <= std::min(used_labels + 1, r); ++l) {
      label[static_cast<size_t>(v)] = l;
      if (rec(v + 1, std::max(used_labels, l))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool radon_feasible_by_rank(const PointConfiguration& cfg) {
  const int n = static_cast<int>(cfg.points.size());
  if (n < 2) return false;
  return affine_dim(cfg.points) < n - 1;
}

bool exhaustive_vkf_forced(long long N, long long r, long long k) {
  if (r == 0) return false;  // the empty family contains no low face
  const int n = static_cast<int>(N + 1);
  const int size = static_cast<int>(k + 2);
  // exists r disjoint subsets of that size? (larger faces shrink to k+2)
  std::function<bool(int, int, std::vector<char>&)> rec =
      [&](int placed, int from, std::vector<char>& used) -> bool {
    if (placed == static_cast<int>(r)) return true;
    // choose a subset of `size` unused vertices with smallest element >= from
    std::vector<int> avail;
    for (int i = from; i < n; ++i)
      if (!used[static_cast<size_t>(i)]) avail.push_back(i);
    if (static_cast<int>(avail.size()) < size) return false;
    std::vector<int> idx(static_cast<size_t>(size));
    std::function<bool(int, int)> pick = [&](int pos, int start) -> bool {
      if (pos == size) {
        for (int i : idx) used[static_cast<size_t>(i)] = 1;
        const bool ok = rec(placed + 1, idx[0] + 1, used);
        for (int i : idx) used[static_cast<size_t>(i)] = 0;
        return ok;
      }
      for (int t = start; t < static_cast<int>(avail.size()); ++t) {
        idx[static_cast<size_t>(pos)] = avail[static_cast<size_t>(t)];
        if (pick(pos + 1, t + 1)) return true;
      }
      return false;
    };
    return pick(0, 0);
  };
  std::vector<char> used(static_cast<size_t>(n), 0);
  return !rec(0, 0, used);
}

}  // namespace tvb::oracle

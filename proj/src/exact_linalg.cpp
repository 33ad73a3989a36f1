#include "tvb/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tvb {

std::optional<RatVector> solve_linear(const Eigen::Ref<const RatMatrix>& A,
                                      const Eigen::Ref<const RatVector>& b) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m) throw std::invalid_argument("solve_linear: rhs length does not match rows");

  RatMatrix aug(m, n + 1);
  aug.leftCols(n) = A;
  aug.col(n) = b;

  // Gauss-Jordan, pivoting columns left to right on the first usable row.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = row; i < m; ++i)
      if (aug(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    aug.row(pr).swap(aug.row(row));
    const Rational inv = Rational(1) / aug(row, col);
    for (Eigen::Index j = col; j <= n; ++j) aug(row, j) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      const Rational f = aug(i, col);
      for (Eigen::Index j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  for (Eigen::Index i = row; i < m; ++i)
    if (aug(i, n) != 0) return std::nullopt;

  RatVector x = RatVector::Zero(n);
  for (auto [pr, pc] : pivots) x(pc) = aug(pr, n);
  return x;
}

int rank(const Eigen::Ref<const RatMatrix>& A) {
  RatMatrix M = A;
  const Eigen::Index m = M.rows(), n = M.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = row; i < m; ++i)
      if (M(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    M.row(pr).swap(M.row(row));
    for (Eigen::Index i = row + 1; i < m; ++i) {
      if (M(i, col) == 0) continue;
      const Rational f = M(i, col) / M(row, col);
      for (Eigen::Index j = col; j < n; ++j) M(i, j) -= f * M(row, j);
    }
    ++row;
  }
  return static_cast<int>(row);
}

int affine_dim(const std::vector<RatVector>& points) {
  if (points.empty()) throw std::invalid_argument("affine_dim: empty point list");
  const Eigen::Index d = points[0].size();
  RatMatrix diffs(d, static_cast<Eigen::Index>(points.size()) - 1);
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) throw std::invalid_argument("affine_dim: mixed dimensions");
    diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
  }
  if (diffs.cols() == 0) return 0;
  return rank(diffs);
}

namespace {

// Integer-pivoting tableau (lrs style): the rational tableau is T / det with
// det > 0, and a pivot keeps every entry an integer minor of the input.
struct IntegerTableau {
  std::vector<Integer> cells;  // (m + 1) rows by (cols + 1); last row is the
                               // phase-1 objective, last column the rhs
  Eigen::Index m = 0, width = 0;
  Integer det = 1;

  Integer& at(Eigen::Index i, Eigen::Index j) { return cells[static_cast<size_t>(i * width + j)]; }
  const Integer& at(Eigen::Index i, Eigen::Index j) const {
    return cells[static_cast<size_t>(i * width + j)];
  }

  void pivot(Eigen::Index p, Eigen::Index c) {
    const Integer piv = at(p, c);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == p) continue;
      const Integer factor = at(i, c);
      if (factor == 0) {
        if (det != 1)
          for (Eigen::Index j = 0; j < width; ++j) {
            Integer& v = at(i, j);
            v = v * piv / det;
          }
        else
          for (Eigen::Index j = 0; j < width; ++j) at(i, j) *= piv;
        continue;
      }
      for (Eigen::Index j = 0; j < width; ++j) {
        Integer& v = at(i, j);
        v = (piv * v - factor * at(p, j)) / det;  // exact (Edmonds)
      }
    }
    det = piv;
  }
};

}  // namespace

std::optional<RatVector> lp_feasible(const FeasibilitySystem& sys) {
  const Eigen::Index m = sys.equalities.rows();
  const Eigen::Index n = sys.equalities.cols();
  if (sys.rhs.size() != m) throw std::invalid_argument("lp_feasible: rhs length mismatch");
  std::vector<bool> nonneg(static_cast<size_t>(n), false);
  for (int idx : sys.nonnegative_vars) {
    if (idx < 0 || idx >= n) throw std::invalid_argument("lp_feasible: bad nonnegative index");
    nonneg[static_cast<size_t>(idx)] = true;
  }
  if (m == 0) return RatVector::Zero(n);

  // Columns in lexicographic variable order; each free variable is split into
  // a positive and a negative part.
  std::vector<std::pair<Eigen::Index, int>> col_var;  // (original var, sign)
  for (Eigen::Index j = 0; j < n; ++j) {
    col_var.emplace_back(j, +1);
    if (!nonneg[static_cast<size_t>(j)]) col_var.emplace_back(j, -1);
  }
  const Eigen::Index n2 = static_cast<Eigen::Index>(col_var.size());
  const Eigen::Index ncols = n2 + m;  // + artificials

  IntegerTableau T;
  T.m = m;
  T.width = ncols + 1;
  T.cells.assign(static_cast<size_t>((m + 1) * T.width), Integer(0));

  // Scale each row to integers and orient it so the rhs is nonnegative.
  for (Eigen::Index i = 0; i < m; ++i) {
    Integer scale = denominator(sys.rhs(i));
    for (Eigen::Index j = 0; j < n; ++j)
      scale = lcm(scale, denominator(sys.equalities(i, j)));
    if (sys.rhs(i) < 0) scale = -scale;
    for (Eigen::Index c = 0; c < n2; ++c) {
      const auto [var, sign] = col_var[static_cast<size_t>(c)];
      const Rational v = sys.equalities(i, var) * sign * Rational(scale);
      T.at(i, c) = numerator(v);
    }
    T.at(i, n2 + i) = 1;  // artificial
    T.at(i, ncols) = numerator(sys.rhs(i) * Rational(scale));
  }
  // Phase-1 objective: minimize the (scaled) artificial sum.
  for (Eigen::Index j = 0; j <= ncols; ++j) {
    Integer s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += T.at(i, j);
    if (j < n2 || j == ncols) T.at(m, j) = -s;
  }

  std::vector<Eigen::Index> basis(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n2 + i;

  for (;;) {
    // Bland: smallest real column with a negative reduced cost. Artificial
    // columns never re-enter; that is safe for pure feasibility.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n2; ++j)
      if (T.at(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T.at(i, enter) <= 0) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      // compare rhs_i / a_i vs rhs_leave / a_leave exactly
      const Integer lhs = T.at(i, ncols) * T.at(leave, enter);
      const Integer rhs = T.at(leave, ncols) * T.at(i, enter);
      if (lhs < rhs || (lhs == rhs && basis[static_cast<size_t>(i)] <
                                          basis[static_cast<size_t>(leave)]))
        leave = i;
    }
    if (leave < 0)
      throw std::logic_error("lp_feasible: unbounded phase-1 objective");
    T.pivot(leave, enter);
    basis[static_cast<size_t>(leave)] = enter;
  }

  if (T.at(m, ncols) != 0) return std::nullopt;  // artificials cannot vanish

  RatVector split = RatVector::Zero(n2);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[static_cast<size_t>(i)] < n2)
      split(basis[static_cast<size_t>(i)]) = Rational(T.at(i, ncols)) / Rational(T.det);

  RatVector x = RatVector::Zero(n);
  for (Eigen::Index c = 0; c < n2; ++c) {
    const auto [var, sign] = col_var[static_cast<size_t>(c)];
    x(var) += sign * split(c);
  }
  return x;
}

}  // namespace tvb

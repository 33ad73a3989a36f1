#include "tvb/barycenter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tvb {

namespace {

struct FaceGeometry {
  std::vector<int> vertex_set;
  std::vector<RatVector> verts;
  RatVector lo, hi;  // per-coordinate hull bounds
};

struct SearchContext {
  const Polytope* P;
  RatVector target;  // r * p
  int r;
  int d;
  std::vector<FaceGeometry> faces;
  std::vector<RatVector> suffix_lo, suffix_hi;  // bounds over faces[j..]
  std::vector<std::vector<int>> suffix_union;   // union of vertex sets over faces[j..]
  std::vector<int> chosen;
  std::optional<BarycenterCertificate> result;
};

// Exact LP for the fully chosen multiset; fills the certificate on success.
bool try_multiset(SearchContext& ctx) {
  Eigen::Index nvars = 0;
  for (int f : ctx.chosen) nvars += static_cast<Eigen::Index>(ctx.faces[static_cast<size_t>(f)].verts.size());
  const Eigen::Index rows = static_cast<Eigen::Index>(ctx.chosen.size()) + ctx.d;
  FeasibilitySystem sys;
  sys.equalities = RatMatrix::Zero(rows, nvars);
  sys.rhs = RatVector::Zero(rows);
  Eigen::Index col = 0;
  for (size_t i = 0; i < ctx.chosen.size(); ++i) {
    const auto& fg = ctx.faces[static_cast<size_t>(ctx.chosen[i])];
    for (const auto& v : fg.verts) {
      sys.equalities(static_cast<Eigen::Index>(i), col) = 1;  // convexity row
      for (int c = 0; c < ctx.d; ++c)
        sys.equalities(static_cast<Eigen::Index>(ctx.chosen.size()) + c, col) = v(c);
      ++col;
    }
    sys.rhs(static_cast<Eigen::Index>(i)) = 1;
  }
  for (int c = 0; c < ctx.d; ++c)
    sys.rhs(static_cast<Eigen::Index>(ctx.chosen.size()) + c) = ctx.target(c);
  sys.nonnegative_vars.resize(static_cast<size_t>(nvars));
  for (Eigen::Index j = 0; j < nvars; ++j) sys.nonnegative_vars[static_cast<size_t>(j)] = static_cast<int>(j);

  const auto w = lp_feasible(sys);
  if (!w) return false;

  BarycenterCertificate cert;
  col = 0;
  for (int f : ctx.chosen) {
    const auto& fg = ctx.faces[static_cast<size_t>(f)];
    std::vector<Rational> coeffs;
    RatVector point = RatVector::Zero(ctx.d);
    for (const auto& v : fg.verts) {
      coeffs.push_back((*w)(col));
      point += (*w)(col)*v;
      ++col;
    }
    cert.faces.push_back(fg.vertex_set);
    cert.points.push_back(std::move(point));
    cert.coefficients.push_back(std::move(coeffs));
  }
  ctx.result = std::move(cert);
  return true;
}

// Relaxation: chosen faces exact, every remaining point anywhere in the hull
// of the vertices still allowed. Infeasible here => no completion works.
bool relaxation_feasible(SearchContext& ctx, int next_index) {
  const int rem = ctx.r - static_cast<int>(ctx.chosen.size());
  const auto& pool = ctx.suffix_union[static_cast<size_t>(next_index)];
  if (rem > 0 && pool.empty()) return false;
  Eigen::Index nvars = 0;
  for (int f : ctx.chosen) nvars += static_cast<Eigen::Index>(ctx.faces[static_cast<size_t>(f)].verts.size());
  nvars += static_cast<Eigen::Index>(pool.size());
  const Eigen::Index rows = static_cast<Eigen::Index>(ctx.chosen.size()) + 1 + ctx.d;
  FeasibilitySystem sys;
  sys.equalities = RatMatrix::Zero(rows, nvars);
  sys.rhs = RatVector::Zero(rows);
  Eigen::Index col = 0;
  for (size_t i = 0; i < ctx.chosen.size(); ++i) {
    const auto& fg = ctx.faces[static_cast<size_t>(ctx.chosen[i])];
    for (const auto& v : fg.verts) {
      sys.equalities(static_cast<Eigen::Index>(i), col) = 1;
      for (int c = 0; c < ctx.d; ++c)
        sys.equalities(static_cast<Eigen::Index>(ctx.chosen.size()) + 1 + c, col) = v(c);
      ++col;
    }
    sys.rhs(static_cast<Eigen::Index>(i)) = 1;
  }
  const Eigen::Index mu_row = static_cast<Eigen::Index>(ctx.chosen.size());
  for (int vi : pool) {
    const RatVector& v = ctx.P->vertices()[static_cast<size_t>(vi)];
    sys.equalities(mu_row, col) = 1;
    for (int c = 0; c < ctx.d; ++c) sys.equalities(mu_row + 1 + c, col) = v(c);
    ++col;
  }
  sys.rhs(mu_row) = rem;
  for (int c = 0; c < ctx.d; ++c) sys.rhs(mu_row + 1 + c) = ctx.target(c);
  sys.nonnegative_vars.resize(static_cast<size_t>(nvars));
  for (Eigen::Index j = 0; j < nvars; ++j) sys.nonnegative_vars[static_cast<size_t>(j)] = static_cast<int>(j);
  return lp_feasible(sys).has_value();
}

bool dfs(SearchContext& ctx, int start, const RatVector& lo_sum, const RatVector& hi_sum) {
  const int t = static_cast<int>(ctx.chosen.size());
  if (t == ctx.r) return try_multiset(ctx);
  const int nf = static_cast<int>(ctx.faces.size());
  for (int idx = start; idx < nf; ++idx) {
    const auto& fg = ctx.faces[static_cast<size_t>(idx)];
    const int rem = ctx.r - t - 1;
    // interval prune: achievable coordinate range vs target
    bool ok = true;
    for (int c = 0; c < ctx.d && ok; ++c) {
      const Rational lo = lo_sum(c) + fg.lo(c) + rem * ctx.suffix_lo[static_cast<size_t>(idx)](c);
      const Rational hi = hi_sum(c) + fg.hi(c) + rem * ctx.suffix_hi[static_cast<size_t>(idx)](c);
      if (ctx.target(c) < lo || ctx.target(c) > hi) ok = false;
    }
    if (!ok) continue;
    ctx.chosen.push_back(idx);
    if (rem == 0 || relaxation_feasible(ctx, idx)) {
      if (dfs(ctx, idx, lo_sum + fg.lo, hi_sum + fg.hi)) return true;
    }
    ctx.chosen.pop_back();
  }
  return false;
}

bool is_prime(int r) {
  if (r < 2) return false;
  for (int q = 2; q * q <= r; ++q)
    if (r % q == 0) return false;
  return true;
}

int smallest_prime_divisor(int r) {
  for (int q = 2; q * q <= r; ++q)
    if (r % q == 0) return q;
  return r;
}

}  // namespace

std::optional<BarycenterCertificate> solve_barycenter(const Polytope& P, const RatVector& p,
                                                      int k, int r) {
  if (k < 0) throw std::invalid_argument("solve_barycenter: k must be >= 0");
  if (r < 1) throw std::invalid_argument("solve_barycenter: r must be >= 1");
  if (!P.contains(p)) throw std::invalid_argument("solve_barycenter: point is outside the polytope");

  SearchContext ctx;
  ctx.P = &P;
  ctx.r = r;
  ctx.d = P.ambient_dim();
  ctx.target = r * p;
  const int keff = std::min(k, P.dim());
  for (const Face& f : P.skeleton(keff)) {
    FaceGeometry fg;
    fg.vertex_set = f.vertex_set;
    for (int i : f.vertex_set) fg.verts.push_back(P.vertices()[static_cast<size_t>(i)]);
    fg.lo = fg.verts[0];
    fg.hi = fg.verts[0];
    for (const auto& v : fg.verts)
      for (int c = 0; c < ctx.d; ++c) {
        if (v(c) < fg.lo(c)) fg.lo(c) = v(c);
        if (v(c) > fg.hi(c)) fg.hi(c) = v(c);
      }
    ctx.faces.push_back(std::move(fg));
  }
  const size_t nf = ctx.faces.size();
  ctx.suffix_lo.assign(nf, RatVector());
  ctx.suffix_hi.assign(nf, RatVector());
  ctx.suffix_union.assign(nf, {});
  std::set<int> uni;
  for (size_t j = nf; j-- > 0;) {
    RatVector lo = ctx.faces[j].lo, hi = ctx.faces[j].hi;
    if (j + 1 < nf)
      for (int c = 0; c < ctx.d; ++c) {
        if (ctx.suffix_lo[j + 1](c) < lo(c)) lo(c) = ctx.suffix_lo[j + 1](c);
        if (ctx.suffix_hi[j + 1](c) > hi(c)) hi(c) = ctx.suffix_hi[j + 1](c);
      }
    ctx.suffix_lo[j] = std::move(lo);
    ctx.suffix_hi[j] = std::move(hi);
    uni.insert(ctx.faces[j].vertex_set.begin(), ctx.faces[j].vertex_set.end());
    ctx.suffix_union[j].assign(uni.begin(), uni.end());
  }

  dfs(ctx, 0, RatVector::Zero(ctx.d), RatVector::Zero(ctx.d));
  return ctx.result;
}

std::optional<BarycenterCertificate> solve_barycenter_recursive(const Polytope& P,
                                                                const RatVector& p, int k, int r) {
  if (k < 0) throw std::invalid_argument("solve_barycenter_recursive: k must be >= 0");
  if (r < 1) throw std::invalid_argument("solve_barycenter_recursive: r must be >= 1");
  if (!P.contains(p))
    throw std::invalid_argument("solve_barycenter_recursive: point is outside the polytope");
  if (r == 1 || is_prime(r)) return solve_barycenter(P, p, k, r);

  const int q = smallest_prime_divisor(r);
  const int m = r / q;
  const auto coarse = solve_barycenter_recursive(P, p, q * k, m);
  if (coarse) {
    BarycenterCertificate flat;
    bool all_split = true;
    for (int i = 0; i < m && all_split; ++i) {
      const int fidx = P.face_index(coarse->faces[static_cast<size_t>(i)]);
      const Face& carrier = P.faces()[static_cast<size_t>(fidx)];
      const Polytope sub = P.restrict_to_face(carrier);
      const auto fine =
          solve_barycenter_recursive(sub, coarse->points[static_cast<size_t>(i)], k, q);
      if (!fine) {
        all_split = false;
        break;
      }
      for (int j = 0; j < q; ++j) {
        std::vector<int> mapped;
        for (int local : fine->faces[static_cast<size_t>(j)])
          mapped.push_back(carrier.vertex_set[static_cast<size_t>(local)]);
        flat.faces.push_back(std::move(mapped));
        flat.points.push_back(fine->points[static_cast<size_t>(j)]);
        flat.coefficients.push_back(fine->coefficients[static_cast<size_t>(j)]);
      }
    }
    if (all_split) return flat;
  }
  // The factor route has no guarantee when k*r < dim; keep parity with the
  // direct search there.
  return solve_barycenter(P, p, k, r);
}

std::pair<Polytope, RatVector> restrict_to_carrier(const Polytope& P, const RatVector& p) {
  const Face& carrier = P.minimal_face(p);  // throws if p outside
  return {P.restrict_to_face(carrier), p};
}

CheckResult verify_certificate(const Polytope& P, const RatVector& p, int k, int r,
                               const BarycenterCertificate& cert) {
  if (static_cast<int>(cert.faces.size()) != r || cert.points.size() != cert.faces.size() ||
      cert.coefficients.size() != cert.faces.size())
    return CheckResult::fail("certificate size differs from r");
  const int d = P.ambient_dim();
  if (p.size() != d) return CheckResult::fail("point dimension mismatch");
  RatVector sum = RatVector::Zero(d);
  for (size_t i = 0; i < cert.faces.size(); ++i) {
    const int idx = P.face_index(cert.faces[i]);
    if (idx < 0) return CheckResult::fail("not a face of the polytope");
    const Face& f = P.faces()[static_cast<size_t>(idx)];
    if (f.dim > k) return CheckResult::fail("face dimension exceeds k");
    if (f.dim < 0) return CheckResult::fail("empty face in certificate");
    const auto& coeffs = cert.coefficients[i];
    if (coeffs.size() != f.vertex_set.size())
      return CheckResult::fail("coefficient count differs from face vertex count");
    Rational total = 0;
    RatVector combo = RatVector::Zero(d);
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] < 0) return CheckResult::fail("coefficients not convex");
      total += coeffs[j];
      combo += coeffs[j] * P.vertices()[static_cast<size_t>(f.vertex_set[j])];
    }
    if (total != 1) return CheckResult::fail("coefficients not convex");
    if (!exact_equal(combo, cert.points[i]))
      return CheckResult::fail("stated point differs from its convex combination");
    sum += cert.points[i];
  }
  if (!exact_equal(sum, RatVector(Rational(r) * p))) return CheckResult::fail("barycenter mismatch");
  return CheckResult::pass();
}

}  // namespace tvb

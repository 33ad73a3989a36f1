#include "tvb/plmaps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tvb {

bool SimplicialComplex::is_face(const std::vector<int>& simplex) const {
  if (simplex.empty()) return false;
  for (const auto& facet : facets)
    if (std::includes(facet.begin(), facet.end(), simplex.begin(), simplex.end())) return true;
  return false;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
  std::vector<std::vector<int>> out;
  for (const auto& facet : facets) {
    const size_t m = facet.size();
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
      std::vector<int> face;
      for (size_t i = 0; i < m; ++i)
        if (mask & (1UL << i)) face.push_back(facet[i]);
      out.push_back(std::move(face));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex standard_simplex(int N) {
  if (N < 0) throw std::invalid_argument("standard_simplex: N must be >= 0");
  SimplicialComplex K;
  K.vertex_count = N + 1;
  std::vector<int> all(static_cast<size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) all[static_cast<size_t>(i)] = i;
  K.facets.push_back(std::move(all));
  return K;
}

SimplicialComplex simplex_skeleton(int N, int m) {
  if (N < 0 || m < 0 || m > N) throw std::invalid_argument("simplex_skeleton: need 0 <= m <= N");
  SimplicialComplex K;
  K.vertex_count = N + 1;
  std::vector<int> idx(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    K.facets.push_back(idx);
    int pos = m;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == N - m + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int q = pos + 1; q <= m; ++q) idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
  }
  return K;
}

namespace {

void validate_barycentric(const SimplicialComplex& K, const BarycentricPoint& x) {
  if (static_cast<int>(x.weights.size()) != K.vertex_count)
    throw std::invalid_argument("barycentric point: weight count differs from vertex count");
  Rational total = 0;
  std::vector<int> support;
  for (size_t i = 0; i < x.weights.size(); ++i) {
    if (x.weights[i] < 0) throw std::invalid_argument("barycentric point: negative weight");
    if (x.weights[i] > 0) support.push_back(static_cast<int>(i));
    total += x.weights[i];
  }
  if (total != 1) throw std::invalid_argument("barycentric point: weights do not sum to 1");
  if (!K.is_face(support)) throw std::invalid_argument("barycentric point: support not a face");
}

}  // namespace

RatVector evaluate(const AffineVertexMap& f, const BarycentricPoint& x) {
  if (static_cast<int>(f.images.size()) != f.source.vertex_count)
    throw std::invalid_argument("evaluate: one image per vertex required");
  validate_barycentric(f.source, x);
  RatVector out = RatVector::Zero(f.target_dim);
  for (size_t i = 0; i < x.weights.size(); ++i)
    if (x.weights[i] != 0) out += x.weights[i] * f.images[i];
  return out;
}

ConstraintLift::ConstraintLift(AffineVertexMap f, int k) : f_(std::move(f)), k_(k) {
  const int N = f_.source.vertex_count - 1;
  if (N < 0 || f_.source.facets.size() != 1 ||
      static_cast<int>(f_.source.facets[0].size()) != N + 1)
    throw std::invalid_argument("constraint_lift: source must be a full standard simplex");
  if (static_cast<int>(f_.images.size()) != N + 1)
    throw std::invalid_argument("constraint_lift: one image per vertex required");
  if (k_ < 0 || k_ > N) throw std::invalid_argument("constraint_lift: need 0 <= k <= N");
}

ConstraintLift constraint_lift(AffineVertexMap f, int k) { return ConstraintLift(std::move(f), k); }

RatVector ConstraintLift::affine_part(const BarycentricPoint& x) const { return evaluate(f_, x); }

Rational ConstraintLift::squared_dist(const BarycentricPoint& x) const {
  validate_barycentric(f_.source, x);
  const int N = f_.source.vertex_count - 1;
  // Distance in R^{N+1} from the weight vector to the nearest (k+1)-subset
  // sub-simplex, via the exact sort-and-threshold projection.
  std::vector<int> idx(static_cast<size_t>(k_) + 1);
  for (int i = 0; i <= k_; ++i) idx[static_cast<size_t>(i)] = i;
  bool first = true;
  Rational best;
  for (;;) {
    // project onto conv{e_i : i in idx}
    std::vector<Rational> u;
    u.reserve(idx.size());
    for (int i : idx) u.push_back(x.weights[static_cast<size_t>(i)]);
    std::sort(u.begin(), u.end(), std::greater<Rational>());
    Rational prefix = 0, tau = 0;
    int rho = 0;
    Rational running = 0;
    for (size_t j = 0; j < u.size(); ++j) {
      running += u[j];
      const Rational cand = (Rational(1) - running) / static_cast<int>(j + 1);
      if (u[j] + cand > 0) {
        rho = static_cast<int>(j + 1);
        prefix = running;
      }
    }
    tau = (Rational(1) - prefix) / rho;
    Rational dist_sq = 0;
    for (int i = 0; i <= N; ++i) {
      const Rational& w = x.weights[static_cast<size_t>(i)];
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
        dist_sq += w * w;
      } else {
        const Rational y = w + tau > 0 ? Rational(w + tau) : Rational(0);
        dist_sq += (w - y) * (w - y);
      }
    }
    if (first || dist_sq < best) {
      best = dist_sq;
      first = false;
    }
    // next (k+1)-subset
    int pos = k_;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == N - k_ + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int q = pos + 1; q <= k_; ++q) idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
  }
  return best;
}

Eigen::VectorXd ConstraintLift::operator()(const BarycentricPoint& x) const {
  const RatVector fx = affine_part(x);
  Eigen::VectorXd out(f_.target_dim + 1);
  for (Eigen::Index i = 0; i < fx.size(); ++i) out(i) = to_double(fx(i));
  out(f_.target_dim) = std::sqrt(to_double(squared_dist(x)));
  return out;
}

PointConfiguration join_lift_config(const PointConfiguration& cfg, int k) {
  if (k < 1) throw std::invalid_argument("join_lift_config: k must be >= 1");
  if (k == 1) return cfg;
  const int n = static_cast<int>(cfg.points.size());
  const int d = cfg.dim;
  PointConfiguration out;
  out.dim = k * (d + 1) - 1;
  out.points.reserve(static_cast<size_t>(k * n));
  for (int copy = 1; copy <= k; ++copy) {
    for (int j = 0; j < n; ++j) {
      RatVector v = RatVector::Zero(out.dim);
      if (copy <= k - 1) v(copy - 1) = 1;
      const Eigen::Index block = (k - 1) + static_cast<Eigen::Index>(copy - 1) * d;
      v.segment(block, d) = cfg.points[static_cast<size_t>(j)];
      out.points.push_back(std::move(v));
    }
  }
  return out;
}

LiftReflectionReport check_lift_reflection(const PointConfiguration& cfg, int r, int k) {
  LiftReflectionReport report;
  const auto cfg_res = tverberg_partition(cfg, r);
  report.cfg_feasible = cfg_res.has_value();
  report.cfg_certificate = cfg_res;

  const PointConfiguration lift = join_lift_config(cfg, k);
  const auto lift_res = tverberg_partition(lift, r);
  report.lift_feasible = lift_res.has_value();
  report.lift_certificate = lift_res;

  if (report.lift_feasible && !report.cfg_feasible) {
    report.fatal = true;
    report.consistent = false;
    report.note = "lifted configuration admits a partition but the original does not";
    return report;
  }

  if (lift_res) {
    const int n = static_cast<int>(cfg.points.size());
    const int d = cfg.dim;
    // Recover the join weights per face: lambda_j = total coefficient put on
    // copy j. These agree across faces since the witness pins them.
    std::vector<std::vector<Rational>> lambdas;
    for (size_t i = 0; i < lift_res->faces.size(); ++i) {
      std::vector<Rational> lam(static_cast<size_t>(k), Rational(0));
      for (size_t t = 0; t < lift_res->faces[i].size(); ++t) {
        const int copy = lift_res->faces[i][t] / n;  // 0-based copy
        lam[static_cast<size_t>(copy)] += lift_res->coefficients[i][t];
      }
      lambdas.push_back(std::move(lam));
    }
    for (size_t i = 1; i < lambdas.size(); ++i)
      if (lambdas[i] != lambdas[0]) report.lambda_equal_across_faces = false;
    report.lambda = lambdas[0];
    if (!report.lambda_equal_across_faces) {
      report.fatal = true;
      report.consistent = false;
      report.note = "join weights differ across faces of the lift certificate";
      return report;
    }
    int j = -1;
    for (int t = 0; t < k; ++t)
      if (report.lambda[static_cast<size_t>(t)] > 0) {
        j = t;
        break;
      }
    const Rational lam = report.lambda[static_cast<size_t>(j)];
    TverbergCertificate back;
    if (k == 1) {
      back = *lift_res;
    } else {
      back.witness = RatVector::Zero(d);
      const Eigen::Index block = (k - 1) + static_cast<Eigen::Index>(j) * d;
      back.witness = lift_res->witness.segment(block, d) / lam;
      for (size_t i = 0; i < lift_res->faces.size(); ++i) {
        std::vector<int> face;
        std::vector<Rational> coeffs;
        for (size_t t = 0; t < lift_res->faces[i].size(); ++t) {
          const int v = lift_res->faces[i][t];
          if (v / n != j) continue;
          face.push_back(v % n);
          coeffs.push_back(lift_res->coefficients[i][t] / lam);
        }
        back.faces.push_back(std::move(face));
        back.coefficients.push_back(std::move(coeffs));
      }
    }
    const auto check = verify_tverberg_certificate(cfg, back);
    if (!check) {
      report.fatal = true;
      report.consistent = false;
      report.note = "back-projected partition failed verification: " + check.reason;
      return report;
    }
    report.back_projected = std::move(back);
  }
  return report;
}

}  // namespace tvb

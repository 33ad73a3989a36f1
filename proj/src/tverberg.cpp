#include "tvb/tverberg.hpp"

#include "tvb/exact_linalg.hpp"
#include "tvb/prng.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvb {

namespace {

struct Box {
  RatVector lo, hi;

  static Box of_point(const RatVector& p) { return {p, p}; }
  void grow(const RatVector& p) {
    for (Eigen::Index c = 0; c < p.size(); ++c) {
      if (p(c) < lo(c)) lo(c) = p(c);
      if (p(c) > hi(c)) hi(c) = p(c);
    }
  }
  bool intersects(const Box& other) const {
    for (Eigen::Index c = 0; c < lo.size(); ++c)
      if (hi(c) < other.lo(c) || other.hi(c) < lo(c)) return false;
    return true;
  }
  Box intersection(const Box& other) const {
    Box out = *this;
    for (Eigen::Index c = 0; c < lo.size(); ++c) {
      if (other.lo(c) > out.lo(c)) out.lo(c) = other.lo(c);
      if (other.hi(c) < out.hi(c)) out.hi(c) = other.hi(c);
    }
    return out;
  }
};

struct Search {
  const PointConfiguration* cfg = nullptr;
  int r = 0, cap = 0, n = 0, d = 0;
  const std::vector<int>* colors = nullptr;
  std::vector<char> used;
  std::vector<std::vector<int>> family;
  std::optional<TverbergCertificate> out;

  const RatVector& point(int i) const { return cfg->points[static_cast<size_t>(i)]; }

  // Feasibility of: w in conv(F_j) for every chosen face, plus (when
  // remaining > 0) w in conv(pool). Returns the witness/coefficient vector
  // so the final call doubles as certificate extraction.
  std::optional<RatVector> witness_lp(const std::vector<int>& pool, int remaining) const {
    Eigen::Index nvars = d;  // witness comes first (free)
    for (const auto& f : family) nvars += static_cast<Eigen::Index>(f.size());
    if (remaining > 0) nvars += static_cast<Eigen::Index>(pool.size());
    const Eigen::Index blocks = static_cast<Eigen::Index>(family.size()) + (remaining > 0 ? 1 : 0);
    const Eigen::Index rows = blocks * (d + 1);
    FeasibilitySystem sys;
    sys.equalities = RatMatrix::Zero(rows, nvars);
    sys.rhs = RatVector::Zero(rows);
    Eigen::Index col = d;
    Eigen::Index row = 0;
    auto add_block = [&](const std::vector<int>& verts) {
      for (int v : verts) {
        sys.equalities(row, col) = 1;  // convexity
        for (int c = 0; c < d; ++c) sys.equalities(row + 1 + c, col) = point(v)(c);
        ++col;
      }
      for (int c = 0; c < d; ++c) sys.equalities(row + 1 + c, c) = -1;  // minus witness
      sys.rhs(row) = 1;
      row += d + 1;
    };
    for (const auto& f : family) add_block(f);
    if (remaining > 0) add_block(pool);
    for (Eigen::Index j = d; j < nvars; ++j) sys.nonnegative_vars.push_back(static_cast<int>(j));
    return lp_feasible(sys);
  }

  bool color_ok_to_add(const std::vector<int>& face, int pos, int v) const {
    if (!colors) return true;
    const int c = (*colors)[static_cast<size_t>(v)];
    for (int i = 0; i < pos; ++i)
      if ((*colors)[static_cast<size_t>(face[static_cast<size_t>(i)])] == c) return false;
    return true;
  }

  // Enumerates slot faces by (size, lex) with min element > prev_min.
  bool solve_slot(int slot, int prev_min, const Box& run_box) {
    std::vector<int> face;
    for (int size = 1; size <= cap; ++size) {
      face.assign(static_cast<size_t>(size), -1);
      if (next_combination(face, 0, prev_min, slot, run_box, size)) return true;
    }
    return false;
  }

  // Fills face[pos..] with ascending unused vertices > floor_val and fires
  // the per-candidate checks at full size.
  bool next_combination(std::vector<int>& face, int pos, int floor_val, int slot,
                        const Box& run_box, int size) {
    if (pos == size) return candidate(face, slot, run_box);
    for (int v = floor_val + 1; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (!color_ok_to_add(face, pos, v)) continue;
      face[static_cast<size_t>(pos)] = v;
      if (next_combination(face, pos + 1, v, slot, run_box, size)) return true;
    }
    return false;
  }

  bool candidate(const std::vector<int>& face, int slot, const Box& run_box) {
    Box fb = Box::of_point(point(face[0]));
    for (size_t i = 1; i < face.size(); ++i) fb.grow(point(face[i]));
    if (!fb.intersects(run_box)) return false;
    const Box next_box = fb.intersection(run_box);

    for (int v : face) used[static_cast<size_t>(v)] = true;
    family.push_back(face);
    bool done = false;
    const int remaining = r - static_cast<int>(family.size());
    if (remaining == 0) {
      if (const auto w = witness_lp({}, 0)) {
        extract_certificate(*w);
        done = true;
      }
    } else {
      std::vector<int> pool;
      for (int v = face[0] + 1; v < n; ++v)
        if (!used[static_cast<size_t>(v)]) pool.push_back(v);
      if (static_cast<int>(pool.size()) >= remaining) {
        Box pb = Box::of_point(point(pool[0]));
        for (size_t i = 1; i < pool.size(); ++i) pb.grow(point(pool[i]));
        if (pb.intersects(next_box) && witness_lp(pool, remaining))
          done = solve_slot(slot + 1, face[0], next_box);
      }
    }
    if (!done) {
      family.pop_back();
      for (int v : face) used[static_cast<size_t>(v)] = false;
    }
    return done;
  }

  void extract_certificate(const RatVector& w) {
    TverbergCertificate cert;
    cert.witness = w.head(d);
    Eigen::Index col = d;
    for (const auto& f : family) {
      std::vector<Rational> coeffs;
      for (size_t i = 0; i < f.size(); ++i) coeffs.push_back(w(col++));
      cert.faces.push_back(f);
      cert.coefficients.push_back(std::move(coeffs));
    }
    out = std::move(cert);
  }
};

std::optional<TverbergCertificate> run_search(const PointConfiguration& cfg, int r, int cap,
                                              const std::vector<int>* colors) {
  if (r < 2) throw std::invalid_argument("tverberg search: r must be >= 2");
  for (const auto& p : cfg.points)
    if (p.size() != cfg.dim)
      throw std::invalid_argument("tverberg search: point dimension mismatch");
  const int n = static_cast<int>(cfg.points.size());
  if (n < r) return std::nullopt;  // not enough vertices for r disjoint faces

  Search s;
  s.cfg = &cfg;
  s.r = r;
  s.n = n;
  s.d = cfg.dim;
  s.cap = std::min(cap, std::min(cfg.dim + 1, n));
  s.colors = colors;
  s.used.assign(static_cast<size_t>(n), 0);

  Box everything = Box::of_point(cfg.points[0]);
  for (int i = 1; i < n; ++i) everything.grow(cfg.points[static_cast<size_t>(i)]);

  s.solve_slot(0, -1, everything);
  return s.out;
}

}  // namespace

std::optional<TverbergCertificate> tverberg_partition(const PointConfiguration& cfg, int r) {
  return run_search(cfg, r, cfg.dim + 1, nullptr);
}

std::optional<TverbergCertificate> skeleton_tverberg_partition(const PointConfiguration& cfg,
                                                               int r, int k) {
  if (k < 0) throw std::invalid_argument("skeleton_tverberg_partition: k must be >= 0");
  return run_search(cfg, r, k + 1, nullptr);
}

std::optional<TverbergCertificate> colored_tverberg_partition(const PointConfiguration& cfg,
                                                              const std::vector<int>& colors,
                                                              int r) {
  if (colors.size() != cfg.points.size())
    throw std::invalid_argument("colored_tverberg_partition: one color per vertex required");
  return run_search(cfg, r, cfg.dim + 1, &colors);
}

bool pigeonhole_vkf_check(long long N, long long r, long long k) {
  if (N < 0 || r < 0 || k < 0)
    throw std::invalid_argument("pigeonhole_vkf_check: arguments must be nonnegative");
  return N + 1 < r * (k + 2);
}

CheckResult verify_tverberg_certificate(const PointConfiguration& cfg,
                                        const TverbergCertificate& cert,
                                        const FaceConstraints& constraints) {
  const int n = static_cast<int>(cfg.points.size());
  const int d = cfg.dim;
  if (cert.faces.empty()) return CheckResult::fail("no faces");
  if (cert.faces.size() != cert.coefficients.size())
    return CheckResult::fail("coefficient blocks differ from faces");
  if (cert.witness.size() != d) return CheckResult::fail("witness dimension mismatch");

  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& f : cert.faces) {
    if (f.empty()) return CheckResult::fail("empty face");
    for (int v : f) {
      if (v < 0 || v >= n) return CheckResult::fail("vertex index out of range");
      if (seen[static_cast<size_t>(v)]) return CheckResult::fail("faces not disjoint");
      seen[static_cast<size_t>(v)] = 1;
    }
    if (constraints.max_vertices && static_cast<int>(f.size()) > *constraints.max_vertices)
      return CheckResult::fail("face exceeds skeleton bound");
    if (constraints.colors) {
      std::vector<int> used_colors;
      for (int v : f) {
        const int c = (*constraints.colors)[static_cast<size_t>(v)];
        if (std::find(used_colors.begin(), used_colors.end(), c) != used_colors.end())
          return CheckResult::fail("face has a repeated color");
        used_colors.push_back(c);
      }
    }
  }
  for (size_t i = 0; i < cert.faces.size(); ++i) {
    const auto& f = cert.faces[i];
    const auto& coeffs = cert.coefficients[i];
    if (coeffs.size() != f.size()) return CheckResult::fail("coefficient count mismatch");
    Rational total = 0;
    RatVector combo = RatVector::Zero(d);
    for (size_t j = 0; j < f.size(); ++j) {
      if (coeffs[j] < 0) return CheckResult::fail("coefficients not convex");
      total += coeffs[j];
      combo += coeffs[j] * cfg.points[static_cast<size_t>(f[j])];
    }
    if (total != 1) return CheckResult::fail("coefficients not convex");
    if (!exact_equal(combo, cert.witness)) return CheckResult::fail("witness mismatch");
  }
  return CheckResult::pass();
}

std::vector<int> round_robin_colors(int count, int num_colors) {
  std::vector<int> colors(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) colors[static_cast<size_t>(i)] = i % num_colors;
  return colors;
}

TrialReport random_trial_suite(int d, int r, int N, int trials, std::uint64_t seed,
                               const TrialMode& mode, bool general_position) {
  if (d < 1 || r < 2 || N < 0 || trials < 0)
    throw std::invalid_argument("random_trial_suite: bad parameters");
  TrialReport report;
  report.trials = trials;
  const std::vector<int> colors =
      mode.kind == TrialMode::colored ? round_robin_colors(N + 1, d + 1) : std::vector<int>{};

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = splitmix64(seed + static_cast<std::uint64_t>(t));
    Xorshift64Star gen(trial_seed);
    PointConfiguration cfg;
    cfg.dim = d;
    for (int attempt = 0;; ++attempt) {
      cfg.points.clear();
      for (int i = 0; i <= N; ++i) {
        RatVector p(d);
        for (int c = 0; c < d; ++c)
          p(c) = Rational(gen.uniform_int(-1000, 1000)) / 1000;
        cfg.points.push_back(std::move(p));
      }
      if (!general_position) break;
      const int s = std::min(d + 1, N + 1);
      bool generic = true;
      std::vector<int> idx(static_cast<size_t>(s));
      for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
      for (;;) {
        std::vector<RatVector> pts;
        for (int i : idx) pts.push_back(cfg.points[static_cast<size_t>(i)]);
        if (affine_dim(pts) != s - 1) {
          generic = false;
          break;
        }
        int pos = s - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == N - s + 1 + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int q2 = pos + 1; q2 < s; ++q2)
          idx[static_cast<size_t>(q2)] = idx[static_cast<size_t>(q2 - 1)] + 1;
      }
      if (generic) break;
      if (attempt > 1000)
        throw std::logic_error("random_trial_suite: cannot reach general position");
    }

    std::optional<TverbergCertificate> cert;
    FaceConstraints constraints;
    switch (mode.kind) {
      case TrialMode::classical:
        cert = tverberg_partition(cfg, r);
        break;
      case TrialMode::skeleton:
        cert = skeleton_tverberg_partition(cfg, r, mode.k);
        constraints.max_vertices = mode.k + 1;
        break;
      case TrialMode::colored:
        cert = colored_tverberg_partition(cfg, colors, r);
        constraints.colors = colors;
        break;
    }
    const bool ok = cert && verify_tverberg_certificate(cfg, *cert, constraints);
    if (ok) {
      ++report.successes;
    } else {
      ++report.failures;
      report.failing_seeds.push_back(trial_seed);
    }
  }
  return report;
}

}  // namespace tvb

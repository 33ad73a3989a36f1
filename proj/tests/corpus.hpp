#ifndef TVB_TESTS_CORPUS_HPP
#define TVB_TESTS_CORPUS_HPP

#include "tvb/polytope.hpp"
#include "tvb/tverberg.hpp"

#include <vector>

namespace tvb::corpus {

inline RatVector pt(std::initializer_list<Rational> coords) {
  RatVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

inline Polytope segment() { return Polytope::from_vertices(1, {pt({0}), pt({1})}); }

inline Polytope triangle() {
  return Polytope::from_vertices(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
}

inline Polytope square() {
  return Polytope::from_vertices(2, {pt({-1, -1}), pt({-1, 1}), pt({1, -1}), pt({1, 1})});
}

inline Polytope cube() {
  std::vector<RatVector> v;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) v.push_back(pt({x, y, z}));
  return Polytope::from_vertices(3, v);
}

inline Polytope octahedron() {
  return Polytope::from_vertices(3, {pt({1, 0, 0}), pt({-1, 0, 0}), pt({0, 1, 0}),
                                     pt({0, -1, 0}), pt({0, 0, 1}), pt({0, 0, -1})});
}

inline Polytope prism() {
  return Polytope::from_vertices(3, {pt({0, 0, -1}), pt({1, 0, -1}), pt({0, 1, -1}),
                                     pt({0, 0, 1}), pt({1, 0, 1}), pt({0, 1, 1})});
}

inline PointConfiguration config(int dim, std::initializer_list<RatVector> points) {
  PointConfiguration cfg;
  cfg.dim = dim;
  for (const auto& p : points) cfg.points.push_back(p);
  return cfg;
}

/// Interior grid points with the given step (exact, strict interior).
inline std::vector<RatVector> interior_grid(const Polytope& P, const Rational& step) {
  const int d = P.ambient_dim();
  RatVector lo = P.vertices()[0], hi = P.vertices()[0];
  for (const auto& v : P.vertices())
    for (int c = 0; c < d; ++c) {
      if (v(c) < lo(c)) lo(c) = v(c);
      if (v(c) > hi(c)) hi(c) = v(c);
    }
  std::vector<RatVector> out;
  std::vector<long long> idx(static_cast<size_t>(d), 0);
  std::vector<long long> count(static_cast<size_t>(d));
  for (int c = 0; c < d; ++c) {
    const Rational spanSteps = (hi(c) - lo(c)) / step;
    count[static_cast<size_t>(c)] = numerator(spanSteps).convert_to<long long>() /
                                    denominator(spanSteps).convert_to<long long>();
  }
  for (;;) {
    RatVector p(d);
    for (int c = 0; c < d; ++c) p(c) = lo(c) + Rational(idx[static_cast<size_t>(c)]) * step;
    if (P.contains(p) && P.minimal_face(p).dim == P.dim()) out.push_back(p);
    int c = 0;
    for (; c < d; ++c) {
      if (++idx[static_cast<size_t>(c)] <= count[static_cast<size_t>(c)]) break;
      idx[static_cast<size_t>(c)] = 0;
    }
    if (c == d) break;
  }
  return out;
}

}  // namespace tvb::corpus

#endif

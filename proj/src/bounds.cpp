#include "tvb/bounds.hpp"

#include <map>
#include <stdexcept>

namespace tvb {

namespace {

constexpr long long kDivisorSearchLimit = 1'000'000;

// Best provable deficiency beta_r(d) from counterexample seeds and join
// propagation; memoized per (r) call chain.
struct BetaSearch {
  long long r;
  std::map<long long, std::pair<long long, std::string>> memo;

  std::pair<long long, std::string> best(long long d) {
    if (d < 3 * r + 1) return {0, ""};
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    long long value = 0;
    std::string how;
    if ((d - 1) % r == 0 && (d - 1) / r >= 3) {
      value = 1;
      how = "counterexample seed k=" + std::to_string((d - 1) / r);
    }
    if (d <= kDivisorSearchLimit) {
      for (long long k = 2; k * 2 <= d + 1; ++k) {
        if ((d + 1) % k != 0) continue;
        const long long d0 = (d + 1) / k - 1;
        if (d0 < 1) continue;
        const auto [sub, sub_how] = best(d0);
        if (k * sub > value) {
          value = k * sub;
          how = "join propagation k=" + std::to_string(k) + " from d0=" + std::to_string(d0) +
                " (" + sub_how + ")";
        }
      }
    }
    memo[d] = {value, how};
    return {value, how};
  }
};

}  // namespace

bool is_prime_power(long long r) {
  if (r < 2) throw std::invalid_argument("is_prime_power: r must be >= 2");
  for (long long p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    long long m = r;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return true;  // r itself prime
}

long long next_prime_power_geq(long long r) {
  if (r < 2) return 2;
  long long q = r;
  while (!is_prime_power(q)) ++q;
  return q;
}

ValueWithProvenance upper_bound(long long r, long long d) {
  if (r < 2 || d < 1) throw std::invalid_argument("upper_bound: need r >= 2, d >= 1");
  if (is_prime_power(r))
    return {(r - 1) * (d + 1), "prime power exact (r-1)(d+1)"};
  const long long q = next_prime_power_geq(r);
  ValueWithProvenance out{(q - 1) * d + r - 1, "prime-power shift q=" + std::to_string(q)};
  if (r >= 6) {
    const long long bertrand = (2 * r - 6) * (d + 1);
    if (bertrand < out.value) out = {bertrand, "Bertrand form (2r-6)(d+1)"};
  }
  return out;
}

std::pair<long long, long long> counterexample_parameters(long long r, long long k) {
  if (r < 6 || is_prime_power(r))
    throw std::invalid_argument(
        "counterexample_parameters: r must be >= 6 and not a prime power");
  if (k < 3)
    throw std::invalid_argument(
        "counterexample_parameters: k >= 3 is required (the r-fold Whitney trick needs "
        "codimension 3)");
  return {(r - 1) * (r * k + 2), r * k + 1};
}

ValueWithProvenance lower_bound(long long r, long long d) {
  if (r < 2 || d < 1) throw std::invalid_argument("lower_bound: need r >= 2, d >= 1");
  const long long floor = (r - 1) * (d + 1);
  if (is_prime_power(r)) return {floor, "prime power exact"};
  BetaSearch search{r, {}};
  const auto [beta, how] = search.best(d);
  if (beta == 0) return {floor, "baseline (r-1)(d+1)"};
  return {floor + beta, how};
}

long long conjecture_value(long long r, long long d) {
  if (r < 2 || d < 1) throw std::invalid_argument("conjecture_value: need r >= 2, d >= 1");
  if (is_prime_power(r) || d <= r) return (r - 1) * (d + 1);
  return r * (d + 1) - 1;
}

BoundsReport bounds_report(long long r, long long d) {
  BoundsReport rep;
  rep.r = r;
  rep.d = d;
  rep.lower = lower_bound(r, d);
  rep.upper = upper_bound(r, d);
  rep.conjecture = conjecture_value(r, d);
  rep.conjecture_provenance = is_prime_power(r)
                                  ? "conjectured exact, proved for prime powers: (r-1)(d+1)"
                                  : (d <= r ? "conjectured first branch (d <= r): (r-1)(d+1)"
                                            : "conjectured second branch: r(d+1)-1");
  if (rep.lower.value > rep.upper.value || rep.lower.value > rep.conjecture ||
      rep.conjecture > rep.upper.value)
    throw std::logic_error("bounds_report: internal inconsistency, lower <= conjecture <= upper "
                           "violated at r=" +
                           std::to_string(r) + ", d=" + std::to_string(d));
  if (is_prime_power(r) || rep.lower.value == rep.upper.value) rep.exact = rep.upper.value;
  return rep;
}

}  // namespace tvb

#ifndef TVB_BOUNDS_HPP
#define TVB_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>

namespace tvb {

/// Trial-division prime-power test. Throws std::invalid_argument for r < 2.
bool is_prime_power(long long r);

/// Smallest prime power q >= r (r >= 2).
long long next_prime_power_geq(long long r);

struct ValueWithProvenance {
  long long value = 0;
  std::string provenance;
};

/// Upper bound on the Tverberg number N_r(d): the prime-power shift
/// (q-1)d + r - 1 with q the smallest prime power >= r, and for r >= 6 also
/// the Bertrand form (2r-6)(d+1); prime powers get the exact (r-1)(d+1).
ValueWithProvenance upper_bound(long long r, long long d);

/// Parameters N = (r-1)(rk+2), d = rk+1 at which the skeleton counterexample
/// construction refutes the conjectured value. Requires r >= 6 not a prime
/// power and k >= 3 (the regime where the r-fold Whitney trick applies).
std::pair<long long, long long> counterexample_parameters(long long r, long long k);

/// Lower bound: the floor (r-1)(d+1), plus for non-prime-power r the best
/// deficiency obtained from seeds beta_r(rk+1) >= 1 (k >= 3) propagated
/// through beta_r(k(d0+1)-1) >= k * beta_r(d0) over all factorizations
/// of d+1 (divisor search bounded to d <= 10^6).
ValueWithProvenance lower_bound(long long r, long long d);

/// The conjectured exact value: (r-1)(d+1) when r is a prime power or
/// d <= r, else r(d+1)-1.
long long conjecture_value(long long r, long long d);

struct BoundsReport {
  long long r = 0, d = 0;
  ValueWithProvenance lower, upper;
  std::optional<long long> exact;
  long long conjecture = 0;
  std::string conjecture_provenance;
};

/// Assembles lower/upper/exact/conjecture and self-checks
/// lower <= conjecture <= upper, throwing std::logic_error on violation
/// (such a state would be a transcription bug, never valid math).
BoundsReport bounds_report(long long r, long long d);

}  // namespace tvb

#endif

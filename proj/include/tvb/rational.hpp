#ifndef TVB_RATIONAL_HPP
#define TVB_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tvb {

/// Exact scalar types. GMP keeps rationals in canonical form (positive
/// denominator, reduced) after every operation, so structural equality
/// and hashing are sound.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p/q", an integer, or a decimal string ("-2.75" -> -11/4) into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

/// Exact rational value of a finite double (every finite double is dyadic).
Rational rational_of_double(double x);

/// Parses a comma-separated list of rationals ("1/2, -3, 0.25").
RatVector parse_rational_vector(std::string_view text);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool exact_equal(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

}  // namespace tvb

#endif

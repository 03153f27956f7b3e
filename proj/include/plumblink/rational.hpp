#ifndef PLUMBLINK_RATIONAL_HPP
#define PLUMBLINK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace plumblink {

// All core arithmetic is exact: arbitrary-precision integers and
// canonical rationals (reduced, positive denominator). No floating
// point appears anywhere in the verdict paths.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// num/den with any sign of den; throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& q);

/// lcm of the (positive) denominators; 1 for an empty vector.
BigInt denominator_lcm(const RationalVector& v);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// "(a, b, c)" with entries via to_string.
std::string to_string(const RationalVector& v);

}  // namespace plumblink

#endif

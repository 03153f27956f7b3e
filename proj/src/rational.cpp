#include "plumblink/rational.hpp"

#include <stdexcept>

namespace plumblink {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(num) / Rational(den);
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

BigInt denominator_lcm(const RationalVector& v) {
    BigInt acc = 1;
    for (const Rational& q : v) {
        acc = lcm(acc, denominator(q));
    }
    return acc;
}

std::string to_string(const BigInt& n) {
    return n.str();
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace plumblink

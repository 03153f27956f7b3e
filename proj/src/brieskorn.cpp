#include "plumblink/brieskorn.hpp"

namespace plumblink {

ExponentList::ExponentList(std::vector<long long> exponents)
    : exponents_(std::move(exponents)) {
    if (exponents_.size() < 2) {
        throw std::invalid_argument("at least two exponents are required");
    }
    for (long long a : exponents_) {
        if (a < 2) {
            throw ExponentTooSmall(a);
        }
    }
}

bool brieskorn_isolated_critical_value(const ExponentList& a) {
    Rational sum(0);
    for (long long exponent : a.values()) {
        sum += make_rational(1, exponent);
    }
    return sum != 1;
}

}  // namespace plumblink

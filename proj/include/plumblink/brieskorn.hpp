#ifndef PLUMBLINK_BRIESKORN_HPP
#define PLUMBLINK_BRIESKORN_HPP

#include <stdexcept>
#include <vector>

#include "plumblink/rational.hpp"

namespace plumblink {

class ExponentTooSmall : public std::runtime_error {
public:
    explicit ExponentTooSmall(long long value)
        : std::runtime_error("exponent " + std::to_string(value) +
                             " is smaller than 2") {}
};

/// Exponents a_1,...,a_n of z_1^{a_1} + ... + z_n^{a_n}, each >= 2,
/// n >= 2. Throws ExponentTooSmall / std::invalid_argument.
class ExponentList {
public:
    explicit ExponentList(std::vector<long long> exponents);

    const std::vector<long long>& values() const { return exponents_; }

private:
    std::vector<long long> exponents_;
};

/// true iff 1/a_1 + ... + 1/a_n != 1, evaluated exactly.
bool brieskorn_isolated_critical_value(const ExponentList& a);

}  // namespace plumblink

#endif

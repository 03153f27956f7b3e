#ifndef PLUMBLINK_LINALG_HPP
#define PLUMBLINK_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "plumblink/rational.hpp"

namespace plumblink {

class SingularError : public std::runtime_error {
public:
    SingularError() : std::runtime_error("matrix is singular") {}
};

class NotSymmetric : public std::runtime_error {
public:
    NotSymmetric() : std::runtime_error("matrix is not symmetric") {}
};

/// Dense square matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t dim() const { return dim_; }

    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    bool symmetric() const;

    /// Leading principal k x k block, 1 <= k <= dim.
    IntegerMatrix leading_block(std::size_t k) const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<BigInt> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with
/// first-nonzero pivoting and row swaps.
BigInt determinant(const IntegerMatrix& m);

/// Exact solution x of m * x = rhs. Throws SingularError when det(m) == 0,
/// std::invalid_argument on a dimension mismatch.
RationalVector solve(const IntegerMatrix& m, const RationalVector& rhs);

/// Sylvester test: sign of the k-th leading principal minor must be (-1)^k
/// for every k. Throws NotSymmetric.
bool is_negative_definite(const IntegerMatrix& m);

}  // namespace plumblink

#endif

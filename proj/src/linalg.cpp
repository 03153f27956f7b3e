#include "plumblink/linalg.hpp"

#include <utility>

namespace plumblink {

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
    IntegerMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw std::invalid_argument("matrix rows must form a square");
        }
        std::size_t j = 0;
        for (long long value : row) {
            m.at(i, j) = value;
            ++j;
        }
        ++i;
    }
    return m;
}

bool IntegerMatrix::symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if (at(i, j) != at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

IntegerMatrix IntegerMatrix::leading_block(std::size_t k) const {
    IntegerMatrix m(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            m.at(i, j) = at(i, j);
        }
    }
    return m;
}

namespace {

// Fraction-free forward elimination on an n x cols working array whose
// first n columns hold the matrix. Pivot is the first nonzero entry of
// the column; rows are swapped as needed. Returns the determinant sign
// adjustment (+1/-1), or 0 when the matrix is singular. Afterwards
// a[n-1][n-1] holds det up to that sign, and the array is upper
// triangular in its first n columns.
int bareiss_forward(std::vector<std::vector<BigInt>>& a, std::size_t n) {
    int sign = 1;
    BigInt previous_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && a[pivot_row][k] == 0) {
            ++pivot_row;
        }
        if (pivot_row == n) {
            return 0;
        }
        if (pivot_row != k) {
            std::swap(a[pivot_row], a[k]);
            sign = -sign;
        }
        const BigInt pivot = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < a[i].size(); ++j) {
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / previous_pivot;
            }
            a[i][k] = 0;
        }
        previous_pivot = pivot;
    }
    return a[n - 1][n - 1] == 0 ? 0 : sign;
}

std::vector<std::vector<BigInt>> working_copy(const IntegerMatrix& m,
                                              std::size_t extra_cols) {
    const std::size_t n = m.dim();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n + extra_cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m.at(i, j);
        }
    }
    return a;
}

}  // namespace

BigInt determinant(const IntegerMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) {
        return 1;
    }
    auto a = working_copy(m, 0);
    const int sign = bareiss_forward(a, n);
    if (sign == 0) {
        return 0;
    }
    return sign * a[n - 1][n - 1];
}

RationalVector solve(const IntegerMatrix& m, const RationalVector& rhs) {
    const std::size_t n = m.dim();
    if (rhs.size() != n) {
        throw std::invalid_argument("dimension mismatch in solve");
    }
    if (n == 0) {
        return {};
    }

    // Clear the right-hand side's denominators so the elimination stays
    // over integers; divide back out at the end.
    const BigInt scale = denominator_lcm(rhs);
    auto a = working_copy(m, 1);
    for (std::size_t i = 0; i < n; ++i) {
        a[i][n] = numerator(Rational(rhs[i] * scale));
    }

    if (bareiss_forward(a, n) == 0) {
        throw SingularError();
    }

    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(a[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= Rational(a[i][j]) * x[j];
        }
        x[i] = acc / Rational(a[i][i]);
    }
    for (Rational& q : x) {
        q /= scale;
    }
    return x;
}

bool is_negative_definite(const IntegerMatrix& m) {
    if (!m.symmetric()) {
        throw NotSymmetric();
    }
    const std::size_t n = m.dim();
    auto a = working_copy(m, 0);

    // Without row swaps, after k elimination steps a[k][k] is exactly the
    // (k+1)-th leading principal minor. A zero pivot means a zero minor,
    // so the form is not definite and elimination can stop there.
    BigInt previous_pivot = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const BigInt& minor = a[k][k];
        const bool want_negative = (k % 2 == 0);
        if (minor == 0 || (minor < 0) != want_negative) {
            return false;
        }
        if (k + 1 < n) {
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    a[i][j] = (a[i][j] * minor - a[i][k] * a[k][j]) / previous_pivot;
                }
                a[i][k] = 0;
            }
            previous_pivot = minor;
        }
    }
    return true;
}

}  // namespace plumblink

#ifndef PLUMBLINK_TEST_GENERATORS_HPP
#define PLUMBLINK_TEST_GENERATORS_HPP

// Random-instance generators and independent oracles shared by the unit
// property tests and the acceptance suite. Everything here is test-only
// and deliberately avoids the library's elimination code paths where it
// serves as a cross-check.

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumblink/fibred.hpp"
#include "plumblink/graph.hpp"
#include "plumblink/linalg.hpp"

namespace plumblink::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Connected graph on 1..12 vertices: a random spanning tree plus a few
/// extra (possibly parallel) edges. Eulers in [-6,-1], genus mostly 0,
/// 0..4 arrows with multiplicities in [-5,5].
inline PlumbingMultilink random_connected_graph(std::mt19937& rng) {
    const int r = uniform(rng, 1, 12);
    std::vector<Vertex> vertices;
    for (int i = 0; i < r; ++i) {
        const long long genus = uniform(rng, 0, 9) < 7 ? 0 : uniform(rng, 1, 2);
        vertices.push_back({"v" + std::to_string(i + 1),
                            static_cast<long long>(uniform(rng, -6, -1)), genus});
    }
    std::vector<Edge> edges;
    for (int i = 1; i < r; ++i) {
        edges.push_back({vertices[uniform(rng, 0, i - 1)].id, vertices[i].id});
    }
    const int extra = uniform(rng, 0, 3);
    for (int k = 0; k < extra && r >= 2; ++k) {
        const int i = uniform(rng, 0, r - 1);
        int j = uniform(rng, 0, r - 2);
        if (j >= i) {
            ++j;
        }
        edges.push_back({vertices[i].id, vertices[j].id});
    }
    std::vector<Arrow> arrows;
    const int n_arrows = uniform(rng, 0, 4);
    for (int k = 0; k < n_arrows; ++k) {
        arrows.push_back({vertices[uniform(rng, 0, r - 1)].id,
                          static_cast<long long>(uniform(rng, -5, 5)), std::nullopt});
    }
    return PlumbingMultilink("random", std::move(vertices), std::move(edges),
                             std::move(arrows));
}

inline PlumbingMultilink random_invertible_graph(std::mt19937& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        PlumbingMultilink g = random_connected_graph(rng);
        if (determinant(intersection_matrix(g)) != 0) {
            return g;
        }
    }
    throw std::logic_error("no invertible instance found");
}

/// Connected graph whose intersection matrix is strictly diagonally
/// dominant with negative diagonal, hence negative definite:
/// e_i = -(slack * deg_i + 1..3). No arrows.
inline PlumbingMultilink random_negative_definite_graph(std::mt19937& rng,
                                                        int slack = 1) {
    const int r = uniform(rng, 1, 10);
    std::vector<std::string> ids;
    for (int i = 0; i < r; ++i) {
        ids.push_back("v" + std::to_string(i + 1));
    }
    std::vector<Edge> edges;
    std::vector<int> degree(r, 0);
    for (int i = 1; i < r; ++i) {
        const int j = uniform(rng, 0, i - 1);
        edges.push_back({ids[j], ids[i]});
        ++degree[i];
        ++degree[j];
    }
    const int extra = uniform(rng, 0, 2);
    for (int k = 0; k < extra && r >= 2; ++k) {
        const int i = uniform(rng, 0, r - 1);
        int j = uniform(rng, 0, r - 2);
        if (j >= i) {
            ++j;
        }
        edges.push_back({ids[i], ids[j]});
        ++degree[i];
        ++degree[j];
    }
    std::vector<Vertex> vertices;
    for (int i = 0; i < r; ++i) {
        const long long genus = uniform(rng, 0, 9) < 7 ? 0 : uniform(rng, 1, 2);
        const long long euler = -(static_cast<long long>(slack) * degree[i] +
                                  uniform(rng, 1, 3));
        vertices.push_back({ids[i], euler, genus});
    }
    return PlumbingMultilink("random_negdef", std::move(vertices), std::move(edges),
                             {});
}

inline PlumbingMultilink with_arrows(const PlumbingMultilink& g,
                                     std::vector<Arrow> arrows) {
    std::vector<Arrow> all = g.arrows();
    all.insert(all.end(), arrows.begin(), arrows.end());
    return PlumbingMultilink(g.name(), g.vertices(), g.edges(), std::move(all));
}

/// Arrow family with a prescribed exact multiplicity vector: picks a
/// positive integer vector u and realizes b = -M*u as one positive arrow
/// per vertex. Requires the slack-5 negative-definite generator so that
/// every b_i stays positive for u_i in [1,5].
struct PlannedFamily {
    std::vector<Arrow> arrows;
    RationalVector expected_m;
};

inline PlannedFamily planned_family(const PlumbingMultilink& g, Family fam,
                                    std::mt19937& rng) {
    const std::size_t r = g.vertices().size();
    const IntegerMatrix m = intersection_matrix(g);
    RationalVector u(r);
    for (Rational& q : u) {
        q = uniform(rng, 1, 5);
    }
    PlannedFamily plan;
    plan.expected_m = u;
    for (std::size_t i = 0; i < r; ++i) {
        Rational b_i(0);
        for (std::size_t j = 0; j < r; ++j) {
            b_i -= Rational(m.at(i, j)) * u[j];
        }
        if (!is_integer(b_i) || b_i <= 0) {
            throw std::logic_error("family plan produced a non-positive entry");
        }
        plan.arrows.push_back({g.vertices()[i].id,
                               static_cast<long long>(numerator(b_i)), fam});
    }
    return plan;
}

// ---- independent oracles ----

/// Recursive cofactor expansion along the first row.
inline BigInt cofactor_determinant(const IntegerMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m.at(0, 0);
    }
    BigInt acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntegerMatrix sub(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) {
                    continue;
                }
                sub.at(i - 1, col) = m.at(i, j);
                ++col;
            }
        }
        const BigInt term = m.at(0, c) * cofactor_determinant(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

/// Rational Gaussian elimination: determinant as the signed product of
/// pivots. A second route, independent of the fraction-free code.
inline BigInt pivot_product_determinant(const IntegerMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m.at(i, j);
        }
    }
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
    }
    if (!is_integer(det)) {
        throw std::logic_error("pivot product of an integer matrix must be integral");
    }
    return numerator(det);
}

/// LDL^T route: m is negative definite iff -m admits a pivot-free
/// rational elimination with strictly positive pivots.
inline bool negative_definite_ldl(const IntegerMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = -Rational(m.at(i, j));
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) {
            return false;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
    }
    return true;
}

/// Searches the integer grid [-limit, limit]^r for a nonzero x with
/// x^T m x >= 0. Entries are small; long long is exact here.
inline bool grid_has_nonnegative_direction(const IntegerMatrix& m, int limit = 3) {
    const std::size_t n = m.dim();
    std::vector<long long> entry(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entry[i * n + j] = static_cast<long long>(m.at(i, j));
        }
    }
    std::vector<long long> x(n, -limit);
    while (true) {
        bool zero = true;
        for (long long v : x) {
            if (v != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) {
            long long form = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    form += x[i] * entry[i * n + j] * x[j];
                }
            }
            if (form >= 0) {
                return true;
            }
        }
        std::size_t pos = 0;
        while (pos < n && x[pos] == limit) {
            x[pos] = -limit;
            ++pos;
        }
        if (pos == n) {
            return false;
        }
        ++x[pos];
    }
}

inline RationalVector matvec(const IntegerMatrix& m, const RationalVector& x) {
    const std::size_t n = m.dim();
    RationalVector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i] += Rational(m.at(i, j)) * x[j];
        }
    }
    return out;
}

inline IntegerMatrix random_symmetric_matrix(std::mt19937& rng, int max_dim,
                                             int max_abs) {
    const int n = uniform(rng, 1, max_dim);
    IntegerMatrix m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const int value = uniform(rng, -max_abs, max_abs);
            m.at(i, j) = value;
            m.at(j, i) = value;
        }
    }
    return m;
}

inline IntegerMatrix random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
    const int n = uniform(rng, 1, max_dim);
    IntegerMatrix m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = uniform(rng, -max_abs, max_abs);
        }
    }
    return m;
}

}  // namespace plumblink::testing

#endif

#ifndef PLUMBLINK_FIBRED_HPP
#define PLUMBLINK_FIBRED_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumblink/graph.hpp"

namespace plumblink {

class EmptyFamily : public std::runtime_error {
public:
    explicit EmptyFamily(Family fam)
        : std::runtime_error(std::string("no arrows carry family tag ") +
                             (fam == Family::f ? "f" : "g")) {}
};

class NonPositiveMultiplicity : public std::runtime_error {
public:
    explicit NonPositiveMultiplicity(const std::string& vertex)
        : std::runtime_error("family arrow at " + vertex +
                             " has non-positive multiplicity") {}
};

/// Outcome of the fibredness criterion together with its evidence.
struct FibredVerdict {
    enum class Reason { fibred, non_integral, zero_at_rupture };

    bool fibred = false;
    Reason reason = Reason::fibred;
    /// non_integral: the vertices with non-integer m_i.
    /// zero_at_rupture: the rupture vertices with m_j == 0.
    /// fibred: empty.
    std::vector<std::string> reason_vertices;
    RationalVector m;
    std::set<std::string> rupture;
};

/// Multiplicities of one arrow family along the vertices, with the
/// realizability flag of an actual holomorphic germ (integral, positive).
struct GermData {
    Family family = Family::f;
    RationalVector b;
    RationalVector m;
    bool realizable = false;
};

/// Joint report for a graph carrying an f-family and a g-family.
struct FgBarReport {
    GermData germ_f;
    GermData germ_g;
    std::set<std::string> rupture;
    /// m^f_j / m^g_j per rupture vertex; absent where m^g_j == 0.
    std::map<std::string, Rational> contact_quotients;
    std::set<Rational> ratio_set;
    /// Rupture vertices whose quotient is undefined (m^g_j == 0).
    std::vector<std::string> zero_quotient_vertices;
    /// m^f_j != m^g_j at every rupture vertex.
    bool condition_iii = false;
    /// Verdict for the multilink with b-vector b_f - b_g, all arrows
    /// still counted for valence.
    FibredVerdict difference_verdict;
    bool isolated_critical_value = false;
};

/// Entry i: sum of the multiplicities of the contributing arrows at
/// vertex i. With a family filter only arrows carrying that tag
/// contribute; without one, every arrow does.
RationalVector boundary_vector(const PlumbingMultilink& g,
                               std::optional<Family> filter = std::nullopt);

/// Exact solution m of M * m = -b. Throws SingularError when det M == 0.
RationalVector multiplicity_vector(const PlumbingMultilink& g,
                                   std::optional<Family> filter = std::nullopt);

/// Fibred iff every m_i is an integer and m_j != 0 at every rupture
/// vertex; otherwise the matching failure reason with evidence.
FibredVerdict is_fibred(const PlumbingMultilink& g);

/// Same criterion for an explicit b-vector on g's graph (the rupture set
/// still counts all of g's arrows).
FibredVerdict is_fibred(const PlumbingMultilink& g, const RationalVector& b);

/// Throws EmptyFamily, NonPositiveMultiplicity, SingularError.
GermData germ_multiplicities(const PlumbingMultilink& g, Family fam);

/// Throws EmptyFamily, NonPositiveMultiplicity, SingularError. A rupture
/// vertex with m^g_j == 0 yields an undefined quotient, recorded in
/// zero_quotient_vertices; condition_iii is still evaluated from the
/// difference m^f_j - m^g_j.
FgBarReport fgbar_report(const PlumbingMultilink& g);

/// Least positive k with k*m integral, provided k*m_j != 0 at all rupture
/// vertices; nullopt when some rupture vertex has m_j == 0 (no scaling
/// fixes that). The result always divides |det M|.
std::optional<BigInt> scale_to_fibred(const PlumbingMultilink& g);

}  // namespace plumblink

#endif

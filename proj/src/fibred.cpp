#include "plumblink/fibred.hpp"

namespace plumblink {

RationalVector boundary_vector(const PlumbingMultilink& g, std::optional<Family> filter) {
    RationalVector b(g.vertices().size(), Rational(0));
    for (const Arrow& a : g.arrows()) {
        if (filter && a.family != *filter) {
            continue;
        }
        b[g.index_of(a.attached_to)] += a.multiplicity;
    }
    return b;
}

RationalVector multiplicity_vector(const PlumbingMultilink& g,
                                   std::optional<Family> filter) {
    RationalVector b = boundary_vector(g, filter);
    for (Rational& q : b) {
        q = -q;
    }
    return solve(intersection_matrix(g), b);
}

FibredVerdict is_fibred(const PlumbingMultilink& g, const RationalVector& b) {
    RationalVector negated = b;
    for (Rational& q : negated) {
        q = -q;
    }

    FibredVerdict verdict;
    verdict.m = solve(intersection_matrix(g), negated);
    verdict.rupture = rupture_vertices(g);

    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        if (!is_integer(verdict.m[i])) {
            verdict.reason_vertices.push_back(g.vertices()[i].id);
        }
    }
    if (!verdict.reason_vertices.empty()) {
        verdict.fibred = false;
        verdict.reason = FibredVerdict::Reason::non_integral;
        return verdict;
    }

    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        const std::string& id = g.vertices()[i].id;
        if (verdict.m[i] == 0 && verdict.rupture.count(id) != 0) {
            verdict.reason_vertices.push_back(id);
        }
    }
    if (!verdict.reason_vertices.empty()) {
        verdict.fibred = false;
        verdict.reason = FibredVerdict::Reason::zero_at_rupture;
        return verdict;
    }

    verdict.fibred = true;
    verdict.reason = FibredVerdict::Reason::fibred;
    return verdict;
}

FibredVerdict is_fibred(const PlumbingMultilink& g) {
    return is_fibred(g, boundary_vector(g));
}

GermData germ_multiplicities(const PlumbingMultilink& g, Family fam) {
    bool any = false;
    for (const Arrow& a : g.arrows()) {
        if (a.family != fam) {
            continue;
        }
        any = true;
        if (a.multiplicity <= 0) {
            throw NonPositiveMultiplicity(a.attached_to);
        }
    }
    if (!any) {
        throw EmptyFamily(fam);
    }

    GermData germ;
    germ.family = fam;
    germ.b = boundary_vector(g, fam);
    germ.m = multiplicity_vector(g, fam);
    germ.realizable = true;
    for (const Rational& q : germ.m) {
        if (!is_integer(q) || q <= 0) {
            germ.realizable = false;
            break;
        }
    }
    return germ;
}

FgBarReport fgbar_report(const PlumbingMultilink& g) {
    FgBarReport report;
    report.germ_f = germ_multiplicities(g, Family::f);
    report.germ_g = germ_multiplicities(g, Family::g);
    report.rupture = rupture_vertices(g);

    report.condition_iii = true;
    for (const std::string& id : report.rupture) {
        const std::size_t i = g.index_of(id);
        const Rational& mf = report.germ_f.m[i];
        const Rational& mg = report.germ_g.m[i];
        if (mf == mg) {
            report.condition_iii = false;
        }
        if (mg == 0) {
            report.zero_quotient_vertices.push_back(id);
        } else {
            const Rational quotient = mf / mg;
            report.contact_quotients.emplace(id, quotient);
            report.ratio_set.insert(quotient);
        }
    }

    RationalVector difference(g.vertices().size());
    for (std::size_t i = 0; i < difference.size(); ++i) {
        difference[i] = report.germ_f.b[i] - report.germ_g.b[i];
    }
    report.difference_verdict = is_fibred(g, difference);
    report.isolated_critical_value = report.condition_iii;
    return report;
}

std::optional<BigInt> scale_to_fibred(const PlumbingMultilink& g) {
    const RationalVector m = multiplicity_vector(g);
    const std::set<std::string> rupture = rupture_vertices(g);
    for (const std::string& id : rupture) {
        if (m[g.index_of(id)] == 0) {
            return std::nullopt;
        }
    }
    return denominator_lcm(m);
}

}  // namespace plumblink

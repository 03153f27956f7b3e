#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plumblink/brieskorn.hpp"
#include "plumblink/fibred.hpp"
#include "plumblink/moves.hpp"
#include "plumblink/parse.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace plumblink;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

PlumbingMultilink load_graph(const std::string& path) {
    return parse_multilink(read_file(path));
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += items[i];
    }
    return out;
}

std::string set_to_string(const std::set<std::string>& items) {
    std::string out = "{";
    bool first = true;
    for (const std::string& s : items) {
        if (!first) {
            out += ", ";
        }
        out += s;
        first = false;
    }
    return out + "}";
}

std::string verdict_name(const FibredVerdict& verdict) {
    switch (verdict.reason) {
        case FibredVerdict::Reason::fibred:
            return "fibred";
        case FibredVerdict::Reason::non_integral:
            return "non-integral";
        case FibredVerdict::Reason::zero_at_rupture:
            return "zero-at-rupture";
    }
    return "unknown";
}

json string_array(const RationalVector& v) {
    json arr = json::array();
    for (const Rational& q : v) {
        arr.push_back(to_string(q));
    }
    return arr;
}

json report_json(const PlumbingMultilink& g, const FibredVerdict& verdict) {
    json j;
    j["verdict"] = verdict_name(verdict);
    j["m"] = string_array(verdict.m);
    j["rupture"] = json(verdict.rupture);
    j["reason_vertices"] = json(verdict.reason_vertices);
    j["det"] = to_string(determinant(intersection_matrix(g)));
    return j;
}

void print_verdict(const FibredVerdict& verdict) {
    if (verdict.fibred) {
        std::cout << "fibred\n";
    } else if (verdict.reason == FibredVerdict::Reason::non_integral) {
        std::cout << "not fibred: non-integral at " << join(verdict.reason_vertices)
                  << "\n";
    } else {
        std::cout << "not fibred: zero at rupture " << join(verdict.reason_vertices)
                  << "\n";
    }
    std::cout << "m = " << to_string(verdict.m) << "\n";
    std::cout << "rupture = " << set_to_string(verdict.rupture) << "\n";
}

int cmd_check(const std::string& path, bool as_json) {
    const PlumbingMultilink g = load_graph(path);
    const FibredVerdict verdict = is_fibred(g);
    if (as_json) {
        std::cout << report_json(g, verdict).dump(2) << "\n";
    } else {
        print_verdict(verdict);
    }
    return verdict.fibred ? kExitYes : kExitNo;
}

int cmd_mult(const std::string& path, const std::string& family) {
    const PlumbingMultilink g = load_graph(path);
    if (family == "all") {
        std::cout << "m = " << to_string(multiplicity_vector(g)) << "\n";
    } else {
        const GermData germ =
            germ_multiplicities(g, family == "f" ? Family::f : Family::g);
        std::cout << "m = " << to_string(germ.m)
                  << "; realizable: " << (germ.realizable ? "yes" : "no") << "\n";
    }
    return kExitYes;
}

int cmd_fgbar(const std::string& path, bool as_json) {
    const PlumbingMultilink g = load_graph(path);
    const FgBarReport report = fgbar_report(g);

    if (as_json) {
        json j = report_json(g, report.difference_verdict);
        json quotients = json::object();
        for (const auto& [id, q] : report.contact_quotients) {
            quotients[id] = to_string(q);
        }
        j["fgbar"] = {{"mf", string_array(report.germ_f.m)},
                      {"mg", string_array(report.germ_g.m)},
                      {"quotients", quotients},
                      {"condition_iii", report.condition_iii}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "isolated critical value: "
                  << (report.isolated_critical_value ? "yes" : "no") << "\n";
        std::string quotients = "{";
        bool first = true;
        for (const auto& [id, q] : report.contact_quotients) {
            if (!first) {
                quotients += ", ";
            }
            quotients += id + ": " + to_string(q);
            first = false;
        }
        std::cout << "contact quotients: " << quotients << "}\n";
        if (!report.zero_quotient_vertices.empty()) {
            std::cout << "undefined quotients at: "
                      << join(report.zero_quotient_vertices) << "\n";
        }
        std::cout << "m^f = " << to_string(report.germ_f.m) << "\n";
        std::cout << "m^g = " << to_string(report.germ_g.m) << "\n";
        std::cout << "difference m = " << to_string(report.difference_verdict.m)
                  << "\n";
    }
    return report.isolated_critical_value ? kExitYes : kExitNo;
}

int cmd_negdef(const std::string& path) {
    const PlumbingMultilink g = load_graph(path);
    const bool negdef = is_negative_definite(intersection_matrix(g));
    std::cout << (negdef ? "yes" : "no") << "\n";
    return negdef ? kExitYes : kExitNo;
}

int cmd_det(const std::string& path) {
    const PlumbingMultilink g = load_graph(path);
    std::cout << to_string(determinant(intersection_matrix(g))) << "\n";
    return kExitYes;
}

int cmd_scale(const std::string& path) {
    const PlumbingMultilink g = load_graph(path);
    const std::optional<BigInt> k = scale_to_fibred(g);
    if (!k) {
        std::cout << "none (zero multiplicity at a rupture vertex)\n";
        return kExitNo;
    }
    std::cout << "k = " << to_string(*k) << "\n";
    return kExitYes;
}

int cmd_blowup(const std::string& path, const std::string& at) {
    std::cout << serialize(blow_up_leaf(load_graph(path), at));
    return kExitYes;
}

int cmd_blowdown(const std::string& path, const std::string& at) {
    std::cout << serialize(blow_down_leaf(load_graph(path), at));
    return kExitYes;
}

int cmd_brieskorn(const std::vector<long long>& exponents) {
    const bool isolated = brieskorn_isolated_critical_value(ExponentList(exponents));
    std::cout << (isolated ? "yes" : "no") << "\n";
    return isolated ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibredness of plumbing multilinks and isolated critical values "
                 "of f*conj(g) germs, from arrow-decorated plumbing graphs"};
    app.require_subcommand(1);

    std::string path;
    std::string family = "all";
    std::string at;
    std::vector<long long> exponents;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "Decide whether the multilink is fibred");
    check->add_option("file", path)->required();
    check->add_flag("--json", as_json, "Emit a JSON report");

    auto* mult = app.add_subcommand("mult", "Print the multiplicity vector");
    mult->add_option("file", path)->required();
    mult->add_option("--family", family, "f, g or all (default all)")
        ->check(CLI::IsMember({"f", "g", "all"}));

    auto* fgbar = app.add_subcommand(
        "fgbar", "Joint report for an f-family / g-family arrow pair");
    fgbar->add_option("file", path)->required();
    fgbar->add_flag("--json", as_json, "Emit a JSON report");

    auto* negdef =
        app.add_subcommand("negdef", "Is the intersection matrix negative definite?");
    negdef->add_option("file", path)->required();

    auto* det = app.add_subcommand("det", "Determinant of the intersection matrix");
    det->add_option("file", path)->required();

    auto* scale = app.add_subcommand(
        "scale", "Least k such that the k-fold multilink has integral multiplicities");
    scale->add_option("file", path)->required();

    auto* blowup = app.add_subcommand("blowup", "Blow up a leaf at a vertex");
    blowup->add_option("file", path)->required();
    blowup->add_option("--at", at, "Vertex id")->required();

    auto* blowdown = app.add_subcommand("blowdown", "Blow down a -1 leaf vertex");
    blowdown->add_option("file", path)->required();
    blowdown->add_option("--at", at, "Vertex id")->required();

    auto* brieskorn = app.add_subcommand(
        "brieskorn", "Isolated-critical-value test for exponents a1 a2 ... an");
    brieskorn->add_option("exponents", exponents)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (check->parsed()) {
            return cmd_check(path, as_json);
        }
        if (mult->parsed()) {
            return cmd_mult(path, family);
        }
        if (fgbar->parsed()) {
            return cmd_fgbar(path, as_json);
        }
        if (negdef->parsed()) {
            return cmd_negdef(path);
        }
        if (det->parsed()) {
            return cmd_det(path);
        }
        if (scale->parsed()) {
            return cmd_scale(path);
        }
        if (blowup->parsed()) {
            return cmd_blowup(path, at);
        }
        if (blowdown->parsed()) {
            return cmd_blowdown(path, at);
        }
        if (brieskorn->parsed()) {
            return cmd_brieskorn(exponents);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

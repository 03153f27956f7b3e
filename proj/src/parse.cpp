#include "plumblink/parse.hpp"

#include <charconv>
#include <optional>
#include <unordered_map>
#include <vector>

namespace plumblink {

namespace {

bool is_token_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
}

bool is_token(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!is_token_char(c)) {
            return false;
        }
    }
    return true;
}

// Optional '-' then digits, nothing else.
std::optional<long long> parse_int(std::string_view s) {
    if (s.empty() || (s.size() == 1 && s[0] == '-')) {
        return std::nullopt;
    }
    std::size_t start = s[0] == '-' ? 1 : 0;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return std::nullopt;
        }
    }
    long long value = 0;
    const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
    if (result.ec != std::errc() || result.ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

// Value of "key=value" when the token starts with "key="; nullopt otherwise.
std::optional<std::string_view> keyed(std::string_view token, std::string_view key) {
    if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
        token[key.size()] != '=') {
        return std::nullopt;
    }
    return token.substr(key.size() + 1);
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

long long parse_int_or_throw(std::string_view token, std::string_view key,
                             std::size_t line) {
    const auto value = keyed(token, key);
    if (!value) {
        throw ParseError(line, "expected " + std::string(key) + "=<int>, got '" +
                                   std::string(token) + "'");
    }
    const auto parsed = parse_int(*value);
    if (!parsed) {
        throw ParseError(line, "malformed integer '" + std::string(*value) + "'");
    }
    return *parsed;
}

}  // namespace

PlumbingMultilink parse_multilink(std::string_view text) {
    std::size_t graph_line = 0;
    std::string name;
    std::vector<Vertex> vertices;
    std::unordered_map<std::string, std::size_t> seen_vertices;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    std::vector<Arrow> arrows;
    std::vector<std::size_t> arrow_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        ++line_no;
        pos = next == std::string_view::npos ? text.size() + 1 : next + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }

        const std::string_view directive = tokens[0];
        if (graph_line == 0 && directive != "graph") {
            throw ParseError(line_no, "expected graph line first, got '" +
                                          std::string(directive) + "'");
        }

        if (directive == "graph") {
            if (graph_line != 0) {
                throw ParseError(line_no, "duplicate graph line");
            }
            if (tokens.size() != 2 || !is_token(tokens[1])) {
                throw ParseError(line_no, "expected: graph <name>");
            }
            graph_line = line_no;
            name = std::string(tokens[1]);
        } else if (directive == "vertex") {
            if (tokens.size() != 4 || !is_token(tokens[1])) {
                throw ParseError(line_no, "expected: vertex <id> e=<int> g=<uint>");
            }
            const std::string id(tokens[1]);
            if (seen_vertices.count(id) != 0) {
                throw ParseError(line_no, "duplicate vertex id '" + id + "'");
            }
            const long long euler = parse_int_or_throw(tokens[2], "e", line_no);
            const long long genus = parse_int_or_throw(tokens[3], "g", line_no);
            if (genus < 0) {
                throw ParseError(line_no, "negative genus at vertex '" + id + "'");
            }
            seen_vertices.emplace(id, vertices.size());
            vertices.push_back({id, euler, genus});
        } else if (directive == "edge") {
            if (tokens.size() != 3 || !is_token(tokens[1]) || !is_token(tokens[2])) {
                throw ParseError(line_no, "expected: edge <id> <id>");
            }
            if (tokens[1] == tokens[2]) {
                throw ParseError(line_no, "loop edge at vertex '" +
                                              std::string(tokens[1]) + "'");
            }
            edges.push_back({std::string(tokens[1]), std::string(tokens[2])});
            edge_lines.push_back(line_no);
        } else if (directive == "arrow") {
            if ((tokens.size() != 3 && tokens.size() != 4) || !is_token(tokens[1])) {
                throw ParseError(line_no, "expected: arrow <id> m=<int> [family=f|g]");
            }
            Arrow arrow;
            arrow.attached_to = std::string(tokens[1]);
            arrow.multiplicity = parse_int_or_throw(tokens[2], "m", line_no);
            if (tokens.size() == 4) {
                const auto family = keyed(tokens[3], "family");
                if (family == "f") {
                    arrow.family = Family::f;
                } else if (family == "g") {
                    arrow.family = Family::g;
                } else {
                    throw ParseError(line_no, "expected family=f or family=g");
                }
            }
            arrows.push_back(std::move(arrow));
            arrow_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
        }
    }

    if (graph_line == 0) {
        throw ParseError(1, "zero vertices");
    }
    if (vertices.empty()) {
        throw ParseError(graph_line, "zero vertices");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (const std::string* id : {&edges[i].a, &edges[i].b}) {
            if (seen_vertices.count(*id) == 0) {
                throw ParseError(edge_lines[i], "dangling reference to '" + *id + "'");
            }
        }
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (seen_vertices.count(arrows[i].attached_to) == 0) {
            throw ParseError(arrow_lines[i], "dangling reference to '" +
                                                 arrows[i].attached_to + "'");
        }
    }

    PlumbingMultilink g(std::move(name), std::move(vertices), std::move(edges),
                        std::move(arrows));
    if (!is_connected(g)) {
        throw ParseError(graph_line, "disconnected graph");
    }
    return g;
}

std::string serialize(const PlumbingMultilink& g) {
    std::string out = "graph " + g.name() + "\n";
    for (const Vertex& v : g.vertices()) {
        out += "vertex " + v.id + " e=" + std::to_string(v.euler) +
               " g=" + std::to_string(v.genus) + "\n";
    }
    for (const Edge& e : g.edges()) {
        out += "edge " + e.a + " " + e.b + "\n";
    }
    for (const Arrow& a : g.arrows()) {
        out += "arrow " + a.attached_to + " m=" + std::to_string(a.multiplicity);
        if (a.family) {
            out += std::string(" family=") + (*a.family == Family::f ? "f" : "g");
        }
        out += "\n";
    }
    return out;
}

}  // namespace plumblink

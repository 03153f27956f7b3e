#include "plumblink/graph.hpp"

#include <queue>

namespace plumblink {

PlumbingMultilink::PlumbingMultilink(std::string name, std::vector<Vertex> vertices,
                                     std::vector<Edge> edges, std::vector<Arrow> arrows)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      arrows_(std::move(arrows)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("graph has zero vertices");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (v.id.empty()) {
            throw std::invalid_argument("empty vertex id");
        }
        if (v.genus < 0) {
            throw std::invalid_argument("negative genus at vertex " + v.id);
        }
        if (!index_.emplace(v.id, i).second) {
            throw std::invalid_argument("duplicate vertex id " + v.id);
        }
    }
    for (const Edge& e : edges_) {
        if (!has_vertex(e.a) || !has_vertex(e.b)) {
            throw std::invalid_argument("edge references unknown vertex");
        }
    }
    for (const Arrow& a : arrows_) {
        if (!has_vertex(a.attached_to)) {
            throw std::invalid_argument("arrow references unknown vertex " + a.attached_to);
        }
    }
}

std::size_t PlumbingMultilink::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw UnknownVertex(id);
    }
    return it->second;
}

IntegerMatrix intersection_matrix(const PlumbingMultilink& g) {
    const std::size_t r = g.vertices().size();
    IntegerMatrix m(r);
    for (std::size_t i = 0; i < r; ++i) {
        m.at(i, i) = g.vertices()[i].euler;
    }
    for (const Edge& e : g.edges()) {
        const std::size_t i = g.index_of(e.a);
        const std::size_t j = g.index_of(e.b);
        if (i != j) {
            m.at(i, j) += 1;
            m.at(j, i) += 1;
        }
    }
    return m;
}

std::size_t valence(const PlumbingMultilink& g, const std::string& v) {
    g.index_of(v);  // throws UnknownVertex
    std::size_t count = 0;
    for (const Edge& e : g.edges()) {
        if (e.a == v) {
            ++count;
        }
        if (e.b == v) {
            ++count;
        }
    }
    for (const Arrow& a : g.arrows()) {
        if (a.attached_to == v) {
            ++count;
        }
    }
    return count;
}

std::set<std::string> rupture_vertices(const PlumbingMultilink& g) {
    std::set<std::string> out;
    for (const Vertex& v : g.vertices()) {
        if (v.genus > 0 || valence(g, v.id) >= 3) {
            out.insert(v.id);
        }
    }
    return out;
}

bool is_connected(const PlumbingMultilink& g) {
    const std::size_t r = g.vertices().size();
    std::vector<std::vector<std::size_t>> adjacency(r);
    for (const Edge& e : g.edges()) {
        const std::size_t i = g.index_of(e.a);
        const std::size_t j = g.index_of(e.b);
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
    }
    std::vector<bool> seen(r, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop();
        for (std::size_t j : adjacency[i]) {
            if (!seen[j]) {
                seen[j] = true;
                ++reached;
                frontier.push(j);
            }
        }
    }
    return reached == r;
}

std::vector<Diagnostic> validate(const PlumbingMultilink& g) {
    std::vector<Diagnostic> out;
    for (const Edge& e : g.edges()) {
        if (e.a == e.b) {
            out.push_back({Diagnostic::Severity::error, Diagnostic::Code::loop_edge,
                           "loop edge at " + e.a});
        }
    }
    if (!is_connected(g)) {
        out.push_back({Diagnostic::Severity::error, Diagnostic::Code::disconnected,
                       "graph is disconnected"});
    }
    for (const Arrow& a : g.arrows()) {
        if (a.multiplicity == 0) {
            out.push_back({Diagnostic::Severity::warning,
                           Diagnostic::Code::zero_multiplicity_arrow,
                           "arrow with multiplicity 0 at " + a.attached_to});
        }
    }
    for (const Vertex& v : g.vertices()) {
        if (v.euler >= 0) {
            out.push_back({Diagnostic::Severity::warning,
                           Diagnostic::Code::non_negative_euler,
                           "non-negative Euler number at " + v.id});
        }
    }
    return out;
}

}  // namespace plumblink

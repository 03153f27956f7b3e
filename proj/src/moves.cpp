#include "plumblink/moves.hpp"

namespace plumblink {

namespace {

std::string fresh_vertex_id(const PlumbingMultilink& g) {
    for (unsigned long long n = 1;; ++n) {
        std::string candidate = "b" + std::to_string(n);
        if (!g.has_vertex(candidate)) {
            return candidate;
        }
    }
}

}  // namespace

PlumbingMultilink blow_up_leaf(const PlumbingMultilink& g, const std::string& v) {
    const std::size_t i = g.index_of(v);  // throws UnknownVertex

    std::vector<Vertex> vertices = g.vertices();
    vertices[i].euler -= 1;
    const std::string fresh = fresh_vertex_id(g);
    vertices.push_back({fresh, -1, 0});

    std::vector<Edge> edges = g.edges();
    edges.push_back({v, fresh});

    return PlumbingMultilink(g.name(), std::move(vertices), std::move(edges),
                             g.arrows());
}

PlumbingMultilink blow_down_leaf(const PlumbingMultilink& g, const std::string& w) {
    const Vertex& vw = g.vertex(w);  // throws UnknownVertex
    if (vw.euler != -1) {
        throw NotBlowDownable(w, "euler number is not -1");
    }
    if (vw.genus != 0) {
        throw NotBlowDownable(w, "genus is not 0");
    }
    for (const Arrow& a : g.arrows()) {
        if (a.attached_to == w) {
            throw NotBlowDownable(w, "an arrow is attached");
        }
    }
    if (valence(g, w) != 1) {
        throw NotBlowDownable(w, "valence is not 1");
    }

    std::vector<Edge> edges;
    std::string neighbour;
    for (const Edge& e : g.edges()) {
        if (e.a == w) {
            neighbour = e.b;
        } else if (e.b == w) {
            neighbour = e.a;
        } else {
            edges.push_back(e);
        }
    }

    std::vector<Vertex> vertices;
    for (const Vertex& v : g.vertices()) {
        if (v.id == w) {
            continue;
        }
        vertices.push_back(v);
        if (v.id == neighbour) {
            vertices.back().euler += 1;
        }
    }

    return PlumbingMultilink(g.name(), std::move(vertices), std::move(edges),
                             g.arrows());
}

}  // namespace plumblink

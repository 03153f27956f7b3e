#ifndef PLUMBLINK_GRAPH_HPP
#define PLUMBLINK_GRAPH_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "plumblink/linalg.hpp"

namespace plumblink {

class UnknownVertex : public std::runtime_error {
public:
    explicit UnknownVertex(const std::string& id)
        : std::runtime_error("unknown vertex: " + id) {}
};

/// Arrow family tag for pairs of holomorphic germs.
enum class Family { f, g };

/// Vertex of a plumbing graph: a disc bundle over a surface of the given
/// genus, with the given Euler number.
struct Vertex {
    std::string id;
    long long euler = 0;
    long long genus = 0;

    bool operator==(const Vertex&) const = default;
};

/// Plumbing operation between two distinct vertices. The same unordered
/// pair may occur several times (multi-edges).
struct Edge {
    std::string a;
    std::string b;

    bool joins(const std::string& x, const std::string& y) const {
        return (a == x && b == y) || (a == y && b == x);
    }

    bool operator==(const Edge&) const = default;
};

/// Link component attached at a vertex. The orientation convention is
/// carried entirely by the sign of the multiplicity.
struct Arrow {
    std::string attached_to;
    long long multiplicity = 0;
    std::optional<Family> family;

    bool operator==(const Arrow&) const = default;
};

/// Arrow-decorated plumbing graph. Immutable after construction.
///
/// The constructor enforces the structural invariants (at least one
/// vertex, unique ids, resolving references, genus >= 0) and throws
/// std::invalid_argument otherwise. Connectivity and the absence of loop
/// edges are reported by validate(); parse_multilink() rejects both.
class PlumbingMultilink {
public:
    PlumbingMultilink(std::string name, std::vector<Vertex> vertices,
                      std::vector<Edge> edges, std::vector<Arrow> arrows);

    const std::string& name() const { return name_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }

    /// Position of the vertex in declaration order; throws UnknownVertex.
    std::size_t index_of(const std::string& id) const;

    const Vertex& vertex(const std::string& id) const { return vertices_[index_of(id)]; }

    bool operator==(const PlumbingMultilink& other) const {
        return name_ == other.name_ && vertices_ == other.vertices_ &&
               edges_ == other.edges_ && arrows_ == other.arrows_;
    }

private:
    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Symmetric matrix in vertex declaration order: Euler numbers on the
/// diagonal, edge counts off it.
IntegerMatrix intersection_matrix(const PlumbingMultilink& g);

/// Edge endpoints at v plus the number of arrows attached to v (each
/// arrow counts once, whatever its multiplicity).
std::size_t valence(const PlumbingMultilink& g, const std::string& v);

/// Vertices with genus > 0 or valence >= 3, arrows counted as edges.
std::set<std::string> rupture_vertices(const PlumbingMultilink& g);

bool is_connected(const PlumbingMultilink& g);

struct Diagnostic {
    enum class Severity { warning, error };
    enum class Code {
        zero_multiplicity_arrow,
        non_negative_euler,
        loop_edge,
        disconnected,
    };

    Severity severity;
    Code code;
    std::string detail;

    bool operator==(const Diagnostic&) const = default;
};

/// Warnings: zero-multiplicity arrows, non-negative Euler numbers.
/// Errors: loop edges, disconnected graph. Empty result means clean.
std::vector<Diagnostic> validate(const PlumbingMultilink& g);

}  // namespace plumblink

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gpm {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    // Canonical orientation u < v.
    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

// An original vertex of the graph that was subdivided.
struct Terminal {
    Vertex original;

    friend bool operator==(const Terminal &, const Terminal &) = default;
};

// The vertex at distance `offset` from `a` on the path that replaced edge ab.
// Always stored with a < b; see make_internal.
struct Internal {
    Vertex a;
    Vertex b;
    std::uint32_t offset;

    friend bool operator==(const Internal &, const Internal &) = default;
};

using VertexLabel = std::variant<Terminal, Internal>;

/// Builds the canonical label of the vertex at distance `offset` from `x` on
/// the length-`length` path replacing edge xy. The same vertex seen from `y`
/// has offset length - offset, so both spellings normalize to one value.
Internal make_internal(Vertex x, Vertex y, std::uint32_t offset, std::uint32_t length);

std::string to_string(const VertexLabel & label);

// Shortest-path length; std::nullopt means unreachable.
using Distance = std::optional<std::uint32_t>;

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency lists are sorted and the edge list is sorted lexicographically
/// with u < v, so iteration order is deterministic everywhere.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, out-of-range endpoints or a label
    /// vector whose size is neither 0 nor `order`. Duplicate edges (in either
    /// orientation) collapse to one.
    Graph(std::size_t order, std::vector<Edge> edges, std::vector<VertexLabel> labels = {});

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbours(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    bool has_labels() const { return ! labels_.empty(); }
    std::span<const VertexLabel> labels() const { return labels_; }
    const VertexLabel * label(Vertex v) const;

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<VertexLabel> labels_;
};

/// Breadth-first distances from `source`. Throws InputError if source is out of range.
std::vector<Distance> distances_from(const Graph & g, Vertex source);

// All-pairs table, row-major: table[u][v].
std::vector<std::vector<Distance>> all_pairs_distances(const Graph & g);

/// True iff a single BFS reaches every vertex. Throws InputError on the empty graph.
bool is_connected(const Graph & g);

/// Max distance from v. Throws DisconnectedGraph if some vertex is unreachable.
std::uint32_t eccentricity(const Graph & g, Vertex v);

/// Max eccentricity. Throws DisconnectedGraph on disconnected input and
/// InputError on the empty graph.
std::uint32_t diameter(const Graph & g);

bool is_complete(const Graph & g);

} // namespace gpm

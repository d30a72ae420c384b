#include <gpm/graph.hpp>

#include <gpm/error.hpp>

#include <algorithm>
#include <deque>

namespace gpm {

Internal make_internal(Vertex x, Vertex y, std::uint32_t offset, std::uint32_t length)
{
    if (x == y)
        throw InputError("internal vertex label needs two distinct endpoints");
    if (offset < 1 || offset >= length)
        throw InputError("internal vertex offset " + std::to_string(offset) + " outside 1.." + std::to_string(length - 1));
    if (x < y)
        return Internal{x, y, offset};
    return Internal{y, x, length - offset};
}

std::string to_string(const VertexLabel & label)
{
    if (auto t = std::get_if<Terminal>(&label))
        return "t" + std::to_string(t->original);
    const auto & i = std::get<Internal>(label);
    return "(" + std::to_string(i.a) + "," + std::to_string(i.b) + ")_" + std::to_string(i.offset);
}

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::vector<VertexLabel> labels) :
    adjacency_(order),
    labels_(std::move(labels))
{
    if (! labels_.empty() && labels_.size() != order)
        throw InputError("label count " + std::to_string(labels_.size()) + " does not match order " + std::to_string(order));

    for (auto & e : edges) {
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= order || e.v >= order)
            throw InputError("edge endpoint out of range for order " + std::to_string(order));
        e = Edge::make(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    for (const auto & e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto & row : adjacency_)
        std::sort(row.begin(), row.end());
}

std::span<const Vertex> Graph::neighbours(Vertex v) const
{
    if (v >= order())
        throw InputError("vertex " + std::to_string(v) + " out of range");
    return adjacency_[v];
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    auto row = neighbours(a);
    return std::binary_search(row.begin(), row.end(), b);
}

const VertexLabel * Graph::label(Vertex v) const
{
    if (labels_.empty() || v >= labels_.size())
        return nullptr;
    return &labels_[v];
}

std::vector<Distance> distances_from(const Graph & g, Vertex source)
{
    if (source >= g.order())
        throw InputError("vertex " + std::to_string(source) + " out of range");

    std::vector<Distance> dist(g.order());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (! queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbours(u)) {
            if (! dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<Distance>> all_pairs_distances(const Graph & g)
{
    std::vector<std::vector<Distance>> table;
    table.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        table.push_back(distances_from(g, v));
    return table;
}

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        throw InputError("connectivity is undefined for the empty graph");
    auto dist = distances_from(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const Distance & d) { return d.has_value(); });
}

std::uint32_t eccentricity(const Graph & g, Vertex v)
{
    std::uint32_t result = 0;
    for (const auto & d : distances_from(g, v)) {
        if (! d)
            throw DisconnectedGraph("eccentricity requires a connected graph");
        result = std::max(result, *d);
    }
    return result;
}

std::uint32_t diameter(const Graph & g)
{
    if (g.order() == 0)
        throw InputError("diameter is undefined for the empty graph");
    std::uint32_t result = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        result = std::max(result, eccentricity(g, v));
    return result;
}

bool is_complete(const Graph & g)
{
    auto n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

} // namespace gpm

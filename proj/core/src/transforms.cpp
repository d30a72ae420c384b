#include <gpm/transforms.hpp>

#include <gpm/error.hpp>

#include <vector>

namespace gpm {

Graph power(const Graph & g, std::uint32_t m)
{
    if (m == 0)
        throw InputError("power exponent must be >= 1");
    if (g.order() == 0)
        return g;

    auto table = all_pairs_distances(g);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const auto & d = table[u][v];
            if (! d)
                throw DisconnectedGraph("power requires a connected graph");
            if (*d <= m)
                edges.push_back({u, v});
        }
    }
    return Graph(g.order(), std::move(edges), {g.labels().begin(), g.labels().end()});
}

Graph subdivision(const Graph & g, std::uint32_t n)
{
    if (n == 0)
        throw InputError("subdivision length must be >= 1");

    std::vector<VertexLabel> labels;
    labels.reserve(subdivision_order(g.order(), g.size(), n));
    for (Vertex v = 0; v < g.order(); ++v)
        labels.emplace_back(Terminal{v});

    std::vector<Edge> edges;
    edges.reserve(std::size_t{n} * g.size());
    for (const auto & e : g.edges()) {
        Vertex previous = e.u;
        for (std::uint32_t l = 1; l < n; ++l) {
            auto next = static_cast<Vertex>(labels.size());
            labels.emplace_back(make_internal(e.u, e.v, l, n));
            edges.push_back({previous, next});
            previous = next;
        }
        edges.push_back(Edge::make(previous, e.v));
    }
    auto order = labels.size();
    return Graph(order, std::move(edges), std::move(labels));
}

Graph fractional_power(const Graph & g, std::uint32_t m, std::uint32_t n)
{
    return power(subdivision(g, n), m);
}

std::string to_string(const Transform & t)
{
    switch (t.kind) {
    case Transform::Kind::Power: return std::to_string(t.power);
    case Transform::Kind::Subdivision: return "1/" + std::to_string(t.subdivision);
    case Transform::Kind::Fractional: return std::to_string(t.power) + "/" + std::to_string(t.subdivision);
    }
    return "?";
}

Graph apply(const Graph & g, const Transform & t)
{
    switch (t.kind) {
    case Transform::Kind::Power: return power(g, t.power);
    case Transform::Kind::Subdivision: return subdivision(g, t.subdivision);
    case Transform::Kind::Fractional: return fractional_power(g, t.power, t.subdivision);
    }
    throw InputError("unknown transform");
}

std::uint64_t subdivision_order(std::uint64_t order, std::uint64_t size, std::uint32_t n)
{
    return order + (std::uint64_t{n} - 1) * size;
}

} // namespace gpm

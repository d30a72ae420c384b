#include "oracles.hpp"

#include <gpm/error.hpp>
#include <gpm/generators.hpp>
#include <gpm/transforms.hpp>

#include <doctest.h>

#include <algorithm>

using namespace gpm;

namespace {
bool same_edges(const Graph & g, const std::vector<Edge> & edges)
{
    return std::equal(g.edges().begin(), g.edges().end(), edges.begin(), edges.end());
}

// True if g is the path 0..n-1 after relabelling along its unique walk.
bool is_path_graph(const Graph & g)
{
    auto n = g.order();
    if (g.size() + 1 != n || ! is_connected(g))
        return false;
    std::size_t ends = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 2)
            return false;
        ends += g.degree(v) <= 1;
    }
    return n == 1 || ends == 2;
}

bool is_cycle_graph(const Graph & g)
{
    if (g.size() != g.order() || ! is_connected(g))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}
}

TEST_CASE("power examples")
{
    for (const auto & inst : oracle::family_graphs(9))
        CHECK(power(inst.graph, 1) == inst.graph);
    CHECK(is_complete(power(path(4), 3)));
    CHECK(is_complete(power(cycle(5), 2)));
    CHECK_FALSE(is_complete(power(path(4), 2)));
    CHECK_THROWS_AS(power(path(3), 0), InputError);
    CHECK_THROWS_AS(power(Graph(2, {}), 2), DisconnectedGraph);
}

TEST_CASE("power matches the distance definition")
{
    for (const auto & inst : oracle::corpus(20))
        for (std::uint32_t m = 1; m <= 4; ++m) {
            CAPTURE(inst.name);
            CAPTURE(m);
            CHECK(same_edges(power(inst.graph, m), oracle::power_edges(inst.graph, m)));
        }
}

TEST_CASE("subdivision examples")
{
    for (const auto & inst : oracle::family_graphs(9))
        CHECK(subdivision(inst.graph, 1) == inst.graph);
    for (std::uint32_t k = 1; k <= 7; ++k)
        for (std::uint32_t n = 1; n <= 5; ++n) {
            auto p = subdivision(path(k), n);
            CHECK(p.order() == n * (k - 1) + 1);
            CHECK(is_path_graph(p));
            if (k >= 3) {
                auto c = subdivision(cycle(k), n);
                CHECK(c.order() == n * k);
                CHECK(is_cycle_graph(c));
            }
        }
    CHECK_THROWS_AS(subdivision(path(3), 0), InputError);
}

TEST_CASE("subdivision counts, numbering and labels")
{
    for (const auto & inst : oracle::family_graphs(10))
        for (std::uint32_t n = 1; n <= 4; ++n) {
            const auto & g = inst.graph;
            auto s = subdivision(g, n);
            CHECK(s.order() == g.order() + (n - 1) * g.size());
            CHECK(s.order() == subdivision_order(g.order(), g.size(), n));
            CHECK(s.size() == n * g.size());
            REQUIRE(s.has_labels());
            for (Vertex v = 0; v < g.order(); ++v)
                CHECK(*s.label(v) == VertexLabel{Terminal{v}});

            auto next = static_cast<Vertex>(g.order());
            for (auto e : g.edges()) {
                Vertex prev = e.u;
                for (std::uint32_t l = 1; l < n; ++l, ++next) {
                    CHECK(*s.label(next) == VertexLabel{Internal{e.u, e.v, l}});
                    CHECK(s.adjacent(prev, next));
                    prev = next;
                }
                CHECK(s.adjacent(prev, e.v));
            }
        }
}

TEST_CASE("fractional powers")
{
    CHECK(fractional_power(friendship(3), 1, 1) == friendship(3));
    auto c = fractional_power(cycle(3), 2, 3);
    CHECK(c.order() == 9);
    CHECK(c.size() == 18);
    for (Vertex v = 0; v < 9; ++v)
        CHECK(c.degree(v) == 4);
    auto a = fractional_power(path(3), 2, 2);
    auto b = subdivision(power(path(3), 2), 2);
    CHECK(a.order() == 5);
    CHECK(b.order() == 6);
    CHECK(a.size() != b.size());
    CHECK(fractional_power(chain_triangular_cactus(2), 2, 2).has_labels());
    CHECK(apply(path(5), Transform::make_fractional(2, 3)) == fractional_power(path(5), 2, 3));
    CHECK(to_string(Transform::make_power(3)) == "3");
    CHECK(to_string(Transform::make_subdivision(4)) == "1/4");
    CHECK(to_string(Transform::make_fractional(2, 5)) == "2/5");
}

TEST_CASE("power composition")
{
    for (const auto & inst : oracle::corpus(30)) {
        const auto & g = inst.graph;
        auto d = diameter(g);
        for (std::uint32_t m = 1; m <= d + 2; ++m)
            for (std::uint32_t l = 1; m * l <= d + 2; ++l) {
                CAPTURE(inst.name);
                CHECK(power(power(g, m), l) == power(g, m * l));
            }
    }
}

TEST_CASE("distance contraction")
{
    for (const auto & inst : oracle::corpus(24)) {
        const auto & g = inst.graph;
        auto base = all_pairs_distances(g);
        for (std::uint32_t k = 1; k <= 4; ++k) {
            auto pd = all_pairs_distances(power(g, k));
            for (Vertex x = 0; x < g.order(); ++x)
                for (Vertex y = 0; y < g.order(); ++y)
                    CHECK(*pd[x][y] == (*base[x][y] + k - 1) / k);
        }
    }
}

TEST_CASE("powers form a spanning chain and reach completeness at the diameter")
{
    for (const auto & inst : oracle::corpus(24)) {
        const auto & g = inst.graph;
        auto d = std::max<std::uint32_t>(diameter(g), 1);
        for (std::uint32_t m = 1; m <= d; ++m) {
            auto a = power(g, m);
            auto b = power(g, m + 1);
            for (auto e : a.edges())
                CHECK(b.adjacent(e.u, e.v));
        }
        CHECK(is_complete(power(g, d)));
        CHECK(is_complete(power(g, d + 1)));
    }
}

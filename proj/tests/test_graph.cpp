#include "oracles.hpp"

#include <gpm/edge_list.hpp>
#include <gpm/error.hpp>
#include <gpm/generators.hpp>
#include <gpm/graph.hpp>

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace gpm;

TEST_CASE("distances on a path")
{
    auto d = distances_from(path(4), 0);
    REQUIRE(d.size() == 4);
    for (std::uint32_t i = 0; i < 4; ++i)
        CHECK(d[i] == i);
}

TEST_CASE("cycle distance multiset is the same from every vertex")
{
    auto g = cycle(6);
    for (Vertex v = 0; v < 6; ++v) {
        std::vector<std::uint32_t> values;
        for (auto x : distances_from(g, v))
            values.push_back(x.value());
        std::sort(values.begin(), values.end());
        CHECK(values == std::vector<std::uint32_t>{0, 1, 1, 2, 2, 3});
    }
}

TEST_CASE("unreachable vertices have no distance")
{
    Graph g(2, {});
    auto d = distances_from(g, 0);
    CHECK(d[0] == 0u);
    CHECK_FALSE(d[1].has_value());
    CHECK_THROWS_AS(distances_from(g, 2), InputError);
}

TEST_CASE("diameter")
{
    CHECK(diameter(path(4)) == 3);
    CHECK(diameter(cycle(6)) == 3);
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t n = m; n <= 5; ++n)
            if (m + n >= 3)
                CHECK(diameter(complete_bipartite(m, n)) == 2);
    CHECK(diameter(friendship(1)) == 1);
    for (std::uint32_t k = 2; k <= 6; ++k)
        CHECK(diameter(friendship(k)) == 2);
    CHECK(diameter(Graph(1, {})) == 0);
    CHECK_THROWS_AS(diameter(Graph(2, {})), DisconnectedGraph);
    CHECK_THROWS_AS(eccentricity(Graph(3, {{0, 1}}), 0), DisconnectedGraph);
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(path(5)));
    CHECK(is_connected(cycle(3)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK_THROWS_AS(is_connected(Graph()), InputError);
}

TEST_CASE("construction validates edges and collapses duplicates")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}, {Terminal{0}}), InputError);
    Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{1, 2});
    CHECK_THROWS_AS(g.neighbours(3), InputError);
}

TEST_CASE("internal labels are canonical")
{
    auto a = make_internal(2, 5, 1, 4);
    auto b = make_internal(5, 2, 3, 4);
    CHECK(a == b);
    CHECK(a.a == 2);
    CHECK(a.b == 5);
    CHECK(a.offset == 1);
    CHECK_THROWS_AS(make_internal(1, 1, 1, 3), InputError);
    CHECK_THROWS_AS(make_internal(1, 2, 0, 3), InputError);
    CHECK_THROWS_AS(make_internal(1, 2, 3, 3), InputError);
    CHECK(to_string(VertexLabel{Terminal{4}}) == "t4");
    CHECK(to_string(VertexLabel{a}) == "(2,5)_1");
}

TEST_CASE("distance properties agree with Floyd-Warshall")
{
    for (const auto & inst : oracle::corpus(30)) {
        const auto & g = inst.graph;
        if (g.order() > 50)
            continue;
        CAPTURE(inst.name);
        auto fw = oracle::floyd_warshall(g);
        auto table = all_pairs_distances(g);
        std::uint32_t max_entry = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) {
                REQUIRE(table[u][v].has_value());
                CHECK(*table[u][v] == fw[u][v]);
                CHECK(table[u][v] == table[v][u]);
                max_entry = std::max(max_entry, *table[u][v]);
            }
        CHECK(diameter(g) == max_entry);
        if (g.order() <= 14)
            for (Vertex u = 0; u < g.order(); ++u)
                for (Vertex v = 0; v < g.order(); ++v)
                    for (Vertex w = 0; w < g.order(); ++w)
                        CHECK(*table[u][w] <= *table[u][v] + *table[v][w]);
    }
}

TEST_CASE("edge list round trip")
{
    auto g = chain_triangular_cactus(3);
    auto text = format_edge_list(g);
    CHECK(text.rfind("p 7 9\n", 0) == 0);
    auto back = parse_edge_list(text);
    CHECK(back.order() == g.order());
    CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));

    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);
}

TEST_CASE("edge list parsing")
{
    auto g = parse_edge_list("# comment\np 3 2\n0 1 # trailing\n\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(parse_edge_list("p 1 0\n").order() == 1);

    CHECK_THROWS_AS(parse_edge_list(""), InputError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 1\np 3 1\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 1\n1 0\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 1\n1 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 1\n0 3\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 2\n0 1\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 1\n0 x\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("p 3 1\n0 1 2\n"), InputError);
}

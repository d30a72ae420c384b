#include "oracles.hpp"

#include <gpm/error.hpp>
#include <gpm/generators.hpp>
#include <gpm/matching.hpp>
#include <gpm/transforms.hpp>

#include <doctest.h>

#include <algorithm>

using namespace gpm;

namespace {
std::size_t exact(const Budgeted<std::size_t> & r)
{
    REQUIRE_FALSE(exceeded(r));
    return std::get<std::size_t>(r);
}

Matching exact(const Budgeted<Matching> & r)
{
    REQUIRE_FALSE(exceeded(r));
    return std::get<Matching>(r);
}

Graph complete(std::uint32_t n)
{
    return power(path(n), n);
}
}

TEST_CASE("maximum matching examples")
{
    CHECK(maximum_matching(path(5)).size() == 2);
    auto f = subdivision(friendship(4), 2);
    auto m = maximum_matching(f);
    CHECK(m.size() == 9);
    CHECK(is_matching(f, m));
    CHECK(unsaturated_vertices(f, m).size() == 3);
    CHECK(matching_number(subdivision(complete_bipartite(3, 3), 2)) == 6);
    CHECK(matching_number(complete(5)) == 2);
    CHECK(matching_number(cycle(9)) == 4);
    CHECK(matching_number(friendship(3)) == 3);
    CHECK(matching_number(Graph(4, {})) == 0);
    CHECK(matching_number(Graph(6, {{0, 1}, {2, 3}, {3, 4}, {4, 2}})) == 2);
}

TEST_CASE("friendship maximum matchings leave one vertex")
{
    for (std::uint32_t k = 1; k <= 5; ++k)
        for (std::uint32_t m = 1; m <= 3; ++m) {
            auto g = power(friendship(k), m);
            CHECK(unsaturated_vertices(g, maximum_matching(g)).size() == 1);
        }
}

TEST_CASE("minimum maximal matching examples")
{
    auto p4 = exact(minimum_maximal_matching(path(4)));
    CHECK(p4 == Matching({{1, 2}}));
    CHECK(exact(minimum_maximal_matching(cycle(6))).size() == 2);
    CHECK(exact(minimum_maximal_matching(power(path(8), 3))).size() == 3);
    CHECK(exact(saturation_number(complete(4))) == 2);
    CHECK(exact(saturation_number(power(cycle(9), 2))) == 3);
    CHECK(exact(saturation_number(subdivision(chain_triangular_cactus(2), 3))) == 6);
    CHECK(exact(saturation_number(Graph(3, {}))) == 0);
    CHECK(exact(saturation_number(Graph())) == 0);
}

TEST_CASE("minimum maximal matching ties break lexicographically")
{
    for (const auto & inst : oracle::corpus(10)) {
        CAPTURE(inst.name);
        auto m = exact(minimum_maximal_matching(inst.graph));
        auto expected = oracle::least_minimum_maximal_matching(inst.graph);
        CHECK(std::equal(m.edges().begin(), m.edges().end(), expected.begin(), expected.end()));
    }
}

TEST_CASE("budget exhaustion is reported, never guessed")
{
    auto g = fractional_power(chain_triangular_cactus(4), 3, 3);
    auto r = minimum_maximal_matching(g, 10);
    REQUIRE(exceeded(r));
    CHECK(std::get<Exceeded>(r).budget == 10);
    CHECK(exceeded(saturation_number(g, 10)));
    CHECK(exceeded(independence_number(complete_bipartite(9, 9), 3)));

    SearchStats stats;
    REQUIRE_FALSE(exceeded(minimum_maximal_matching(cycle(8), default_search_budget, &stats)));
    CHECK(stats.nodes > 0);
}

TEST_CASE("matching predicates")
{
    Graph k2(2, {{0, 1}});
    CHECK(is_matching(k2, Matching()));
    CHECK_FALSE(is_maximal_matching(k2, Matching()));

    auto p4 = path(4);
    Matching ends({{0, 1}, {2, 3}});
    CHECK(is_maximal_matching(p4, ends));
    CHECK(is_perfect_matching(p4, ends));
    Matching middle({{1, 2}});
    CHECK(is_maximal_matching(p4, middle));
    CHECK_FALSE(is_perfect_matching(p4, middle));
    CHECK(unsaturated_vertices(p4, middle) == std::vector<Vertex>{0, 3});
    CHECK(unsaturated_vertices(p4, ends).empty());

    Matching overlap({{0, 1}, {1, 2}});
    CHECK_FALSE(is_matching(p4, overlap));
    CHECK_THROWS_AS(unsaturated_vertices(p4, overlap), InputError);
    Matching foreign({{0, 2}});
    CHECK_THROWS_AS(is_matching(p4, foreign), InputError);
    CHECK_THROWS_AS(is_maximal_matching(p4, foreign), InputError);
    CHECK_THROWS_AS(is_perfect_matching(p4, foreign), InputError);
}

TEST_CASE("independence number")
{
    CHECK(exact(independence_number(complete(5))) == 1);
    CHECK(exact(independence_number(cycle(6))) == 3);
    CHECK(exact(independence_number(path(7))) == 4);
    std::vector<Vertex> set{0, 2, 4};
    CHECK(is_independent_set(path(5), set));
    std::vector<Vertex> bad{0, 1};
    CHECK_FALSE(is_independent_set(path(5), bad));
    for (const auto & inst : oracle::corpus(14)) {
        CAPTURE(inst.name);
        CHECK(exact(independence_number(inst.graph)) == oracle::independence_number(inst.graph));
    }
}

TEST_CASE("engines agree with enumeration on small graphs")
{
    for (const auto & inst : oracle::corpus(11)) {
        CAPTURE(inst.name);
        const auto & g = inst.graph;
        auto mm = maximum_matching(g);
        CHECK(is_matching(g, mm));
        CHECK(mm.size() == oracle::matching_number(g));
        auto mmm = exact(minimum_maximal_matching(g));
        CHECK(is_maximal_matching(g, mmm));
        CHECK(mmm.size() == oracle::saturation_number(g));
    }
}

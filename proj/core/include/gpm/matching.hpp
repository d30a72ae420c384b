#pragma once

#include <gpm/graph.hpp>

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace gpm {

/// A set of edges, kept sorted and canonically oriented. Whether it is a
/// matching of a particular graph is checked by is_matching.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge & operator[](std::size_t i) const { return edges_[i]; }

    friend bool operator==(const Matching &, const Matching &) = default;
    friend auto operator<=>(const Matching &, const Matching &) = default;

private:
    std::vector<Edge> edges_;
};

// Returned instead of a value when an exact search runs out of budget.
struct Exceeded {
    std::uint64_t budget;

    friend bool operator==(const Exceeded &, const Exceeded &) = default;
};

template <typename T>
using Budgeted = std::variant<T, Exceeded>;

template <typename T>
bool exceeded(const Budgeted<T> & r)
{
    return std::holds_alternative<Exceeded>(r);
}

inline constexpr std::uint64_t default_search_budget = 100'000'000;

// Per-call search statistics, for benchmarks and diagnostics.
struct SearchStats {
    std::uint64_t nodes = 0;
};

/// Maximum-cardinality matching of an arbitrary simple graph, by augmenting
/// paths with blossom contraction. O(V^3). Deterministic for a given graph.
Matching maximum_matching(const Graph & g);
std::size_t matching_number(const Graph & g);

/// Smallest maximal matching, by exact branch and bound over the sorted edge
/// list. Among all optimal matchings the lexicographically least (as a
/// sorted edge sequence) is returned. `budget` caps the number of search
/// nodes; running out yields Exceeded, never an unproven value.
Budgeted<Matching> minimum_maximal_matching(const Graph & g, std::uint64_t budget = default_search_budget,
    SearchStats * stats = nullptr);
Budgeted<std::size_t> saturation_number(const Graph & g, std::uint64_t budget = default_search_budget);

/// Exact maximum independent set size, by branch and bound with node budget.
Budgeted<std::size_t> independence_number(const Graph & g, std::uint64_t budget = default_search_budget);

// These throw InputError if some edge of `m` is not an edge of `g`.
bool is_matching(const Graph & g, const Matching & m);
bool is_maximal_matching(const Graph & g, const Matching & m);
bool is_perfect_matching(const Graph & g, const Matching & m);

/// Vertices incident to no edge of `m`, ascending. Throws InputError if `m`
/// is not a matching of `g`.
std::vector<Vertex> unsaturated_vertices(const Graph & g, const Matching & m);

bool is_independent_set(const Graph & g, std::span<const Vertex> vertices);

} // namespace gpm

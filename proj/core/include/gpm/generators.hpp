#pragma once

#include <gpm/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gpm {

enum class Family { Path, Cycle, Friendship, CompleteBipartite, ChainTriangularCactus };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

// A base graph: the family plus its order parameter (k), or its two part
// sizes for complete bipartite graphs (parts m <= n; k unused).
struct FamilySpec {
    Family family;
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    std::uint32_t n = 0;

    static FamilySpec path(std::uint32_t k) { return {Family::Path, k}; }
    static FamilySpec cycle(std::uint32_t k) { return {Family::Cycle, k}; }
    static FamilySpec friendship(std::uint32_t k) { return {Family::Friendship, k}; }
    static FamilySpec cactus(std::uint32_t k) { return {Family::ChainTriangularCactus, k}; }
    static FamilySpec bipartite(std::uint32_t m, std::uint32_t n) { return {Family::CompleteBipartite, 0, m, n}; }

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

/// Throws InputError if the parameters are outside the family's domain.
void validate(const FamilySpec & spec);

// P_k: vertices 0..k-1, edges {i, i+1}.
Graph path(std::uint32_t k);

// C_k: path plus the closing edge {0, k-1}. Requires k >= 3.
Graph cycle(std::uint32_t k);

// F_k: vertex 0 is the common vertex; triangle i (1-based) is {0, 2i-1, 2i}.
Graph friendship(std::uint32_t k);

// K_{m,n}: part A = 0..m-1, part B = m..m+n-1. Requires 1 <= m <= n.
Graph complete_bipartite(std::uint32_t m, std::uint32_t n);

/// T_k: triangle i (1-based) is {c_{i-1}, a_i, c_i} with cut/end vertices
/// c_j = 2j and apex a_i = 2i-1, so the chain walks 0-1-2, 2-3-4, ...
Graph chain_triangular_cactus(std::uint32_t k);

Graph generate(const FamilySpec & spec);

// Vertex count of the base graph, without constructing it.
std::uint64_t base_order(const FamilySpec & spec);
std::uint64_t base_size(const FamilySpec & spec);

} // namespace gpm

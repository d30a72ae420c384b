#include <gpm/generators.hpp>

#include <gpm/error.hpp>

#include <array>
#include <utility>
#include <vector>

namespace gpm {

namespace {
    constexpr std::array<std::pair<Family, std::string_view>, 5> family_names{{
        {Family::Path, "path"},
        {Family::Cycle, "cycle"},
        {Family::Friendship, "friendship"},
        {Family::CompleteBipartite, "bipartite"},
        {Family::ChainTriangularCactus, "cactus"},
    }};
}

std::string_view to_string(Family f)
{
    for (auto & [family, name] : family_names)
        if (family == f)
            return name;
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (auto & [family, n] : family_names)
        if (n == name)
            return family;
    return std::nullopt;
}

void validate(const FamilySpec & spec)
{
    auto need = [&](bool ok, const char * what) {
        if (! ok)
            throw InputError(std::string(to_string(spec.family)) + ": " + what);
    };
    switch (spec.family) {
    case Family::Path: need(spec.k >= 1, "requires k >= 1"); break;
    case Family::Cycle: need(spec.k >= 3, "requires k >= 3"); break;
    case Family::Friendship: need(spec.k >= 1, "requires k >= 1"); break;
    case Family::ChainTriangularCactus: need(spec.k >= 1, "requires k >= 1"); break;
    case Family::CompleteBipartite: need(spec.m >= 1 && spec.m <= spec.n, "requires 1 <= m <= n"); break;
    }
}

Graph path(std::uint32_t k)
{
    validate(FamilySpec::path(k));
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < k; ++i)
        edges.push_back({i, i + 1});
    return Graph(k, std::move(edges));
}

Graph cycle(std::uint32_t k)
{
    validate(FamilySpec::cycle(k));
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < k; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, k - 1});
    return Graph(k, std::move(edges));
}

Graph friendship(std::uint32_t k)
{
    validate(FamilySpec::friendship(k));
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i) {
        Vertex a = 2 * i - 1, b = 2 * i;
        edges.push_back({0, a});
        edges.push_back({0, b});
        edges.push_back({a, b});
    }
    return Graph(2 * std::size_t{k} + 1, std::move(edges));
}

Graph complete_bipartite(std::uint32_t m, std::uint32_t n)
{
    validate(FamilySpec::bipartite(m, n));
    std::vector<Edge> edges;
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = m; b < m + n; ++b)
            edges.push_back({a, b});
    return Graph(std::size_t{m} + n, std::move(edges));
}

Graph chain_triangular_cactus(std::uint32_t k)
{
    validate(FamilySpec::cactus(k));
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i) {
        Vertex left = 2 * (i - 1), apex = 2 * i - 1, right = 2 * i;
        edges.push_back({left, apex});
        edges.push_back({apex, right});
        edges.push_back({left, right});
    }
    return Graph(2 * std::size_t{k} + 1, std::move(edges));
}

Graph generate(const FamilySpec & spec)
{
    switch (spec.family) {
    case Family::Path: return path(spec.k);
    case Family::Cycle: return cycle(spec.k);
    case Family::Friendship: return friendship(spec.k);
    case Family::CompleteBipartite: return complete_bipartite(spec.m, spec.n);
    case Family::ChainTriangularCactus: return chain_triangular_cactus(spec.k);
    }
    throw InputError("unknown family");
}

std::uint64_t base_order(const FamilySpec & spec)
{
    validate(spec);
    switch (spec.family) {
    case Family::Path:
    case Family::Cycle: return spec.k;
    case Family::Friendship:
    case Family::ChainTriangularCactus: return 2 * std::uint64_t{spec.k} + 1;
    case Family::CompleteBipartite: return std::uint64_t{spec.m} + spec.n;
    }
    return 0;
}

std::uint64_t base_size(const FamilySpec & spec)
{
    validate(spec);
    switch (spec.family) {
    case Family::Path: return spec.k - 1;
    case Family::Cycle: return spec.k;
    case Family::Friendship:
    case Family::ChainTriangularCactus: return 3 * std::uint64_t{spec.k};
    case Family::CompleteBipartite: return std::uint64_t{spec.m} * spec.n;
    }
    return 0;
}

} // namespace gpm

#pragma once

#include <gpm/graph.hpp>

#include <cstdint>
#include <string>

namespace gpm {

// Which construction to apply to a base graph: G^m, G^{1/n} or G^{m/n}.
struct Transform {
    enum class Kind { Power, Subdivision, Fractional };

    Kind kind = Kind::Power;
    std::uint32_t power = 1;
    std::uint32_t subdivision = 1;

    static Transform make_power(std::uint32_t m) { return {Kind::Power, m, 1}; }
    static Transform make_subdivision(std::uint32_t n) { return {Kind::Subdivision, 1, n}; }
    static Transform make_fractional(std::uint32_t m, std::uint32_t n) { return {Kind::Fractional, m, n}; }

    friend bool operator==(const Transform &, const Transform &) = default;
};

// "m", "1/n" or "m/n".
std::string to_string(const Transform & t);

/// The m-th power: same vertices, u~v iff 1 <= d(u,v) <= m. Labels are kept.
/// Throws DisconnectedGraph on disconnected input and InputError for m = 0.
Graph power(const Graph & g, std::uint32_t m);

/// The n-subdivision: every edge xy becomes a path of length n.
///
/// Original vertices keep ids 0..p-1 and are labelled Terminal. Internal
/// vertices are appended edge by edge in sorted edge order, offsets 1..n-1
/// measured from the smaller endpoint. Throws InputError for n = 0.
Graph subdivision(const Graph & g, std::uint32_t n);

// power(subdivision(g, n), m), nothing fused.
Graph fractional_power(const Graph & g, std::uint32_t m, std::uint32_t n);

/// Applies `t`; throws InputError for zero exponents.
Graph apply(const Graph & g, const Transform & t);

// Order and size of subdivision(g, n) without building it.
std::uint64_t subdivision_order(std::uint64_t order, std::uint64_t size, std::uint32_t n);

} // namespace gpm

#pragma once

#include <gpm/generators.hpp>
#include <gpm/graph.hpp>
#include <gpm/transforms.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

// Closed forms for matching numbers, saturation numbers and unsaturated
// vertex counts of powers, subdivisions and fractional powers of paths,
// cycles, friendship graphs, complete bipartite graphs and chain triangular
// cacti. Everything here is integer arithmetic on the parameters; nothing
// builds a graph except alpha_frac_bounds.
//
// Naming: k is the family parameter, m the power and n the subdivision
// length. For K_{m,n} the parts are (m, n) and the transform exponents are
// k (subdivision) and t (power), matching the way those claims are stated.
//
// Parameters outside a formula's stated domain throw InputError. Outcomes
// that are part of the result (a claim not covering the point, a domain the
// formula does not support, a formula contradicting itself) are values.
namespace gpm::formulas {

struct Interval {
    std::int64_t lower;
    std::int64_t upper;

    bool contains(std::int64_t x) const { return lower <= x && x <= upper; }
    friend bool operator==(const Interval &, const Interval &) = default;
};

// No closed form exists for this point.
struct NotCovered {
    friend bool operator==(const NotCovered &, const NotCovered &) = default;
};

// The formula is not meaningful here (e.g. K_{1,n} subdivisions).
struct UnsupportedDomain {
    std::string reason;
    friend bool operator==(const UnsupportedDomain &, const UnsupportedDomain &) = default;
};

// The formula yields a non-integer or negative count; never rounded.
struct FormulaInconsistent {
    std::string reason;
    friend bool operator==(const FormulaInconsistent &, const FormulaInconsistent &) = default;
};

using Value = std::variant<std::int64_t, Interval, NotCovered, UnsupportedDomain, FormulaInconsistent>;

std::string to_string(const Value & v);

enum class Quantity { MatchingNumber, SaturationNumber, UnsaturatedCount, Bounds };

std::string_view to_string(Quantity q);

// ---- matching numbers ---------------------------------------------------

// floor(k/2) for P_k^m and C_k^m, any m >= 1.
std::int64_t alpha_path_cycle_power(std::int64_t k, std::int64_t m);

// floor((nk - n + 1)/2); also alpha'(P_k^{m/n}) for every m.
std::int64_t alpha_path_subdiv(std::int64_t k, std::int64_t n);

// floor(nk/2); also alpha'(C_k^{m/n}) for every m. Requires k >= 3.
std::int64_t alpha_cycle_subdiv(std::int64_t k, std::int64_t n);

/// Friendship graphs. Power(m): k. Subdivision(n): k(3n-1)/2 for odd n,
/// k(3n-2)/2 + 1 for even n. Fractional(m, n) with m >= 2:
/// floor((k(3n-1)+1)/2). Fractional with m = 1 is G^{1/n} and is answered by
/// the subdivision branch, which is where the closed form for general m
/// disagrees with it; alpha_friendship_fractional_general keeps the
/// general closed form for every m so the disagreement stays checkable.
std::int64_t alpha_friendship(std::int64_t k, const Transform & t);
std::int64_t alpha_friendship_fractional_general(std::int64_t k, std::int64_t m, std::int64_t n);

/// K_{m,n}^k: floor((m+n)/2) for k >= 2. k = 1 returns min(m, n), the plain
/// bipartite matching number, which is an extension and not a claim.
/// Parts are swapped if m > n.
std::int64_t alpha_Kmn_power(std::int64_t m, std::int64_t n, std::int64_t k);

/// K_{m,n}^{1/k}, the three-case formula. Unsupported for m = 1 (after
/// ordering the parts), where the even-k correction term goes negative.
Value alpha_Kmn_subdiv(std::int64_t m, std::int64_t n, std::int64_t k);

// Unsaturated vertices left by a maximum matching of K_{m,n}^{1/k}:
// |n - m| for odd k, nm - n - m for even k. Unsupported for m = 1.
Value l_Kmn(std::int64_t m, std::int64_t n, std::int64_t k);

// alpha'(K_{m,n}^{t/k}) = alpha_Kmn_subdiv + floor(l/2) for t >= 2.
Value alpha_Kmn_frac(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t t);

// ---- saturation numbers -------------------------------------------------

/// Unsaturated vertices of a smallest maximal matching of P_k^m and C_k^m.
/// With q = floor(k/(m+1)) and r = k - (m+1)q the parity pattern of (m,r,q)
/// picks q or q+1 (path), q or q-1 (cycle).
std::int64_t l_path_power(std::int64_t k, std::int64_t m);
std::int64_t l_cycle_power(std::int64_t k, std::int64_t m);

// (k - l)/2; FormulaInconsistent when k - l is odd or l is out of [0, k].
Value s_path_power(std::int64_t k, std::int64_t m);
Value s_cycle_power(std::int64_t k, std::int64_t m);

// P_k^{m/n} is the m-th power of P_{n(k-1)+1}, C_k^{m/n} that of C_{nk}.
Value s_path_frac(std::int64_t k, std::int64_t m, std::int64_t n);
Value s_cycle_frac(std::int64_t k, std::int64_t m, std::int64_t n);

// ceil(k/m), lowered by one when even.
std::int64_t l_T(std::int64_t k, std::int64_t m);

// (2k - l_T + 1)/2.
Value s_T_power(std::int64_t k, std::int64_t m);

// nk when 3 | n, otherwise nk - floor(k/3).
std::int64_t s_T_subdiv(std::int64_t k, std::int64_t n);

// [nk, nk + floor((nk - k + 1)/2)] for m, n >= 2.
Interval s_T_frac_bounds(std::int64_t k, std::int64_t m, std::int64_t n);

// s(T_k^{2/n}) = nk, the case attaining the lower bound above. n >= 2.
std::int64_t s_T_frac_square(std::int64_t k, std::int64_t n);

/// The listed special cases (m, n) in {(3,2), (3,3), (3,4), (3,5), (4,2),
/// (5,2), (5,3), (5,4)} and the m + 1 = n family
/// floor((3k(n-1)+1)/2). Anything else is NotCovered. The (5,4) entry is
/// 4k + k.
Value s_T_frac_special(std::int64_t k, std::int64_t m, std::int64_t n);

// ---- engine-assisted ----------------------------------------------------

/// [alpha'(G^{1/n}), alpha'(G^{1/n}) + floor(l/2)] with l the number of
/// vertices a maximum matching of G^{1/n} leaves exposed. The interval does
/// not depend on m, which is only validated. Throws DisconnectedGraph.
Interval alpha_frac_bounds(const Graph & g, std::int64_t m, std::int64_t n);

// ---- claims -------------------------------------------------------------

struct FormulaClaim {
    FamilySpec family;
    Transform transform;
    Quantity quantity;
    Value value;
    // Short tag naming the closed form that produced `value`.
    std::string source;
};

/// The value the closed forms assert for one (family, transform, quantity)
/// point. For friendship fractional powers this is the general closed form
/// at every m, including m = 1. Bounds on non-cactus families build the
/// graph and call alpha_frac_bounds.
FormulaClaim claim(const FamilySpec & family, const Transform & transform, Quantity quantity);

} // namespace gpm::formulas

#include <gpm/formulas.hpp>

#include <gpm/error.hpp>
#include <gpm/matching.hpp>

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace gpm::formulas {

namespace {
    void require(bool ok, const std::string & what)
    {
        if (! ok)
            throw InputError(what);
    }

    // Both operands positive, or a = 0.
    std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

    bool even(std::int64_t x) { return x % 2 == 0; }

    // True for the first case of the (m, r, q) parity split used by both
    // the path and the cycle unsaturated counts; false for the second. The two case lists are
    // complementary, so exactly one applies.
    bool first_parity_case(std::int64_t k, std::int64_t m)
    {
        auto q = k / (m + 1);
        auto r = k - (m + 1) * q;
        if (even(m))
            return even(r);
        if (! even(r))
            return ! even(q);
        return even(q);
    }

    Value half_of_saturated(std::int64_t k, std::int64_t l, const char * what)
    {
        if (l < 0 || l > k)
            return FormulaInconsistent{std::string(what) + ": unsaturated count " + std::to_string(l) + " outside [0, " + std::to_string(k) + "]"};
        if (! even(k - l))
            return FormulaInconsistent{std::string(what) + ": k - l = " + std::to_string(k - l) + " is odd"};
        return (k - l) / 2;
    }

    std::pair<std::int64_t, std::int64_t> ordered_parts(std::int64_t m, std::int64_t n)
    {
        require(m >= 1 && n >= 1, "complete bipartite parts must be >= 1");
        return {std::min(m, n), std::max(m, n)};
    }
}

std::string to_string(const Value & v)
{
    struct Visitor {
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(const Interval & i) const
        {
            return "[" + std::to_string(i.lower) + "," + std::to_string(i.upper) + "]";
        }
        std::string operator()(const NotCovered &) const { return "NotCovered"; }
        std::string operator()(const UnsupportedDomain &) const { return "UnsupportedDomain"; }
        std::string operator()(const FormulaInconsistent &) const { return "FormulaInconsistent"; }
    };
    return std::visit(Visitor{}, v);
}

std::string_view to_string(Quantity q)
{
    switch (q) {
    case Quantity::MatchingNumber: return "matching";
    case Quantity::SaturationNumber: return "saturation";
    case Quantity::UnsaturatedCount: return "unsaturated";
    case Quantity::Bounds: return "bounds";
    }
    return "unknown";
}

std::int64_t alpha_path_cycle_power(std::int64_t k, std::int64_t m)
{
    require(k >= 1 && m >= 1, "alpha_path_cycle_power requires k, m >= 1");
    return k / 2;
}

std::int64_t alpha_path_subdiv(std::int64_t k, std::int64_t n)
{
    require(k >= 1 && n >= 1, "alpha_path_subdiv requires k, n >= 1");
    return (n * k - n + 1) / 2;
}

std::int64_t alpha_cycle_subdiv(std::int64_t k, std::int64_t n)
{
    require(k >= 3 && n >= 1, "alpha_cycle_subdiv requires k >= 3, n >= 1");
    return n * k / 2;
}

std::int64_t alpha_friendship(std::int64_t k, const Transform & t)
{
    require(k >= 1, "friendship requires k >= 1");
    require(t.power >= 1 && t.subdivision >= 1, "transform exponents must be >= 1");
    std::int64_t n = t.subdivision;
    switch (t.kind) {
    case Transform::Kind::Power:
        return k;
    case Transform::Kind::Fractional:
        if (t.power >= 2)
            return alpha_friendship_fractional_general(k, t.power, n);
        [[fallthrough]];
    case Transform::Kind::Subdivision:
        if (! even(n))
            return k * (3 * n - 1) / 2;
        return k * (3 * n - 2) / 2 + 1;
    }
    throw InputError("unknown transform");
}

std::int64_t alpha_friendship_fractional_general(std::int64_t k, std::int64_t m, std::int64_t n)
{
    require(k >= 1 && m >= 1 && n >= 1, "friendship fractional requires k, m, n >= 1");
    return (k * (3 * n - 1) + 1) / 2;
}

std::int64_t alpha_Kmn_power(std::int64_t m, std::int64_t n, std::int64_t k)
{
    std::tie(m, n) = ordered_parts(m, n);
    require(k >= 1, "power exponent must be >= 1");
    if (k == 1)
        return m;
    return (m + n) / 2;
}

Value alpha_Kmn_subdiv(std::int64_t m, std::int64_t n, std::int64_t k)
{
    std::tie(m, n) = ordered_parts(m, n);
    require(k >= 1, "subdivision length must be >= 1");
    if (m == 1)
        return UnsupportedDomain{"K_{1,n} subdivision: correction term nm - n - m is negative"};
    if (even(k))
        return (n + m) * (k / 2) + (n * m - n - m) * ((k - 1) / 2);
    auto equal_parts = m * ((k + 1) / 2) + m * (m - 1) * ((k - 1) / 2);
    if (n == m)
        return equal_parts;
    return equal_parts + m * (n - m) * (k / 2);
}

Value l_Kmn(std::int64_t m, std::int64_t n, std::int64_t k)
{
    std::tie(m, n) = ordered_parts(m, n);
    require(k >= 1, "subdivision length must be >= 1");
    if (m == 1)
        return UnsupportedDomain{"K_{1,n} subdivision: unsaturated count formula not defined"};
    if (even(k))
        return n * m - n - m;
    return n - m;
}

Value alpha_Kmn_frac(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t t)
{
    require(t >= 2, "alpha_Kmn_frac requires t >= 2");
    auto base = alpha_Kmn_subdiv(m, n, k);
    auto l = l_Kmn(m, n, k);
    if (! std::holds_alternative<std::int64_t>(base))
        return base;
    if (! std::holds_alternative<std::int64_t>(l))
        return l;
    return std::get<std::int64_t>(base) + std::get<std::int64_t>(l) / 2;
}

std::int64_t l_path_power(std::int64_t k, std::int64_t m)
{
    require(k >= 1 && m >= 1, "l_path_power requires k, m >= 1");
    auto q = k / (m + 1);
    return first_parity_case(k, m) ? q : q + 1;
}

std::int64_t l_cycle_power(std::int64_t k, std::int64_t m)
{
    require(k >= 3 && m >= 1, "l_cycle_power requires k >= 3, m >= 1");
    auto q = k / (m + 1);
    return first_parity_case(k, m) ? q : q - 1;
}

Value s_path_power(std::int64_t k, std::int64_t m)
{
    return half_of_saturated(k, l_path_power(k, m), "path power");
}

Value s_cycle_power(std::int64_t k, std::int64_t m)
{
    return half_of_saturated(k, l_cycle_power(k, m), "cycle power");
}

Value s_path_frac(std::int64_t k, std::int64_t m, std::int64_t n)
{
    require(k >= 1 && n >= 1, "s_path_frac requires k, n >= 1");
    return s_path_power(n * (k - 1) + 1, m);
}

Value s_cycle_frac(std::int64_t k, std::int64_t m, std::int64_t n)
{
    require(k >= 3 && n >= 1, "s_cycle_frac requires k >= 3, n >= 1");
    return s_cycle_power(n * k, m);
}

std::int64_t l_T(std::int64_t k, std::int64_t m)
{
    require(k >= 1 && m >= 1, "l_T requires k, m >= 1");
    auto blocks = ceil_div(k, m);
    return even(blocks) ? blocks - 1 : blocks;
}

Value s_T_power(std::int64_t k, std::int64_t m)
{
    auto l = l_T(k, m);
    auto saturated = 2 * k + 1 - l;
    if (l < 0 || ! even(saturated))
        return FormulaInconsistent{"cactus power: 2k + 1 - l_T = " + std::to_string(saturated) + " is odd"};
    return saturated / 2;
}

std::int64_t s_T_subdiv(std::int64_t k, std::int64_t n)
{
    require(k >= 1 && n >= 1, "s_T_subdiv requires k, n >= 1");
    if (n % 3 == 0)
        return n * k;
    return n * k - k / 3;
}

Interval s_T_frac_bounds(std::int64_t k, std::int64_t m, std::int64_t n)
{
    require(k >= 1 && m >= 2 && n >= 2, "s_T_frac_bounds requires k >= 1, m, n >= 2");
    return {n * k, n * k + (n * k - k + 1) / 2};
}

std::int64_t s_T_frac_square(std::int64_t k, std::int64_t n)
{
    require(k >= 1 && n >= 2, "s_T_frac_square requires k >= 1, n >= 2");
    return n * k;
}

Value s_T_frac_special(std::int64_t k, std::int64_t m, std::int64_t n)
{
    require(k >= 1 && m >= 1 && n >= 1, "s_T_frac_special requires k, m, n >= 1");
    if (m == 3 && n == 2)
        return 2 * k + 1;
    if (m == 3 && n == 3)
        return 3 * k + ceil_div(k, 4);
    if (m == 3 && n == 4)
        return 4 * k + ceil_div(k, 2);
    if (m == 3 && n == 5) {
        switch (k % 4) {
        case 1: return 5 * k + 3 * (k / 4) + 1;
        case 2: return 5 * k + 3 * (k / 4) + 2;
        case 3: return 5 * k + 3 * (k / 4) + 3;
        default: return 5 * k + 3 * ((k - 1) / 4) + 3;
        }
    }
    if (m == 4 && n == 2)
        return 2 * k + ceil_div(k, 6);
    if (m == 5 && n == 2)
        return 2 * k + ceil_div(k + 1, 4);
    if (m == 5 && n == 3)
        return 3 * k + ceil_div(k + 1, 2);
    if (m == 5 && n == 4)
        return 4 * k + k;
    // Stated alongside the m, n >= 2 bounds; m = 1 is a plain subdivision.
    if (m >= 2 && m + 1 == n)
        return (3 * k * (n - 1) + 1) / 2;
    return NotCovered{};
}

Interval alpha_frac_bounds(const Graph & g, std::int64_t m, std::int64_t n)
{
    require(m >= 1 && n >= 1, "alpha_frac_bounds requires m, n >= 1");
    if (g.order() > 0 && ! is_connected(g))
        throw DisconnectedGraph("alpha_frac_bounds requires a connected graph");
    auto sub = subdivision(g, static_cast<std::uint32_t>(n));
    auto alpha = static_cast<std::int64_t>(matching_number(sub));
    auto exposed = static_cast<std::int64_t>(sub.order()) - 2 * alpha;
    return {alpha, alpha + exposed / 2};
}

namespace {
    struct Tagged {
        Value value;
        std::string source;
    };

    Tagged matching_claim(const FamilySpec & f, const Transform & t)
    {
        std::int64_t k = f.k, m = t.power, n = t.subdivision;
        using K = Transform::Kind;
        switch (f.family) {
        case Family::Path:
            if (t.kind == K::Power)
                return {alpha_path_cycle_power(k, m), "path-power-matching"};
            return {alpha_path_subdiv(k, n), "path-subdivision-matching"};
        case Family::Cycle:
            if (t.kind == K::Power)
                return {alpha_path_cycle_power(k, m), "cycle-power-matching"};
            return {alpha_cycle_subdiv(k, n), "cycle-subdivision-matching"};
        case Family::Friendship:
            if (t.kind == K::Fractional)
                return {alpha_friendship_fractional_general(k, m, n), "friendship-fractional-matching"};
            return {alpha_friendship(k, t), t.kind == K::Power ? "friendship-power-matching" : "friendship-subdivision-matching"};
        case Family::CompleteBipartite:
            switch (t.kind) {
            case K::Power:
                return {alpha_Kmn_power(f.m, f.n, m), m == 1 ? "bipartite-base-matching (extension)" : "bipartite-power-matching"};
            case K::Subdivision:
                return {alpha_Kmn_subdiv(f.m, f.n, n), "bipartite-subdivision-matching"};
            case K::Fractional:
                if (m == 1)
                    return {alpha_Kmn_subdiv(f.m, f.n, n), "bipartite-subdivision-matching"};
                return {alpha_Kmn_frac(f.m, f.n, n, m), "bipartite-fractional-matching"};
            }
            break;
        case Family::ChainTriangularCactus:
            return {NotCovered{}, "none"};
        }
        return {NotCovered{}, "none"};
    }

    Tagged saturation_claim(const FamilySpec & f, const Transform & t)
    {
        std::int64_t k = f.k, m = t.power, n = t.subdivision;
        using K = Transform::Kind;
        switch (f.family) {
        case Family::Path:
            if (t.kind == K::Power)
                return {s_path_power(k, m), "path-power-saturation"};
            return {s_path_frac(k, m, n), "path-fractional-saturation"};
        case Family::Cycle:
            if (t.kind == K::Power)
                return {s_cycle_power(k, m), "cycle-power-saturation"};
            return {s_cycle_frac(k, m, n), "cycle-fractional-saturation"};
        case Family::ChainTriangularCactus:
            if (t.kind == K::Power || (t.kind == K::Fractional && n == 1))
                return {s_T_power(k, m), "cactus-power-saturation"};
            if (t.kind == K::Subdivision || m == 1)
                return {s_T_subdiv(k, n), "cactus-subdivision-saturation"};
            if (auto special = s_T_frac_special(k, m, n); ! std::holds_alternative<NotCovered>(special))
                return {special, m + 1 == n ? "cactus-fractional-m+1=n" : "cactus-fractional-special-" + std::to_string(m) + "/" + std::to_string(n)};
            if (m == 2)
                return {s_T_frac_square(k, n), "cactus-fractional-square"};
            return {s_T_frac_bounds(k, m, n), "cactus-fractional-bounds"};
        case Family::Friendship:
        case Family::CompleteBipartite:
            return {NotCovered{}, "none"};
        }
        return {NotCovered{}, "none"};
    }

    Tagged unsaturated_claim(const FamilySpec & f, const Transform & t)
    {
        std::int64_t k = f.k, m = t.power, n = t.subdivision;
        using K = Transform::Kind;
        switch (f.family) {
        case Family::Path:
            return {l_path_power(n * (k - 1) + 1, m), "path-unsaturated"};
        case Family::Cycle:
            return {l_cycle_power(n * k, m), "cycle-unsaturated"};
        case Family::ChainTriangularCactus:
            if (t.kind == K::Power)
                return {l_T(k, m), "cactus-power-unsaturated"};
            return {NotCovered{}, "none"};
        case Family::Friendship: {
            // Order minus twice the claimed matching number.
            auto order = k * (3 * n - 1) + 1;
            auto alpha = std::get<std::int64_t>(matching_claim(f, t).value);
            return {order - 2 * alpha, "friendship-unsaturated"};
        }
        case Family::CompleteBipartite:
            if (t.kind == K::Subdivision)
                return {l_Kmn(f.m, f.n, n), "bipartite-subdivision-unsaturated"};
            return {NotCovered{}, "none"};
        }
        return {NotCovered{}, "none"};
    }

    Tagged bounds_claim(const FamilySpec & f, const Transform & t)
    {
        if (t.kind != Transform::Kind::Fractional)
            return {NotCovered{}, "none"};
        if (f.family == Family::ChainTriangularCactus)
            return {s_T_frac_bounds(f.k, t.power, t.subdivision), "cactus-fractional-saturation-bounds"};
        return {alpha_frac_bounds(generate(f), t.power, t.subdivision), "fractional-matching-bounds"};
    }
}

FormulaClaim claim(const FamilySpec & family, const Transform & transform, Quantity quantity)
{
    validate(family);
    require(transform.power >= 1 && transform.subdivision >= 1, "transform exponents must be >= 1");

    Tagged tagged{NotCovered{}, "none"};
    switch (quantity) {
    case Quantity::MatchingNumber: tagged = matching_claim(family, transform); break;
    case Quantity::SaturationNumber: tagged = saturation_claim(family, transform); break;
    case Quantity::UnsaturatedCount: tagged = unsaturated_claim(family, transform); break;
    case Quantity::Bounds: tagged = bounds_claim(family, transform); break;
    }
    return {family, transform, quantity, std::move(tagged.value), std::move(tagged.source)};
}

} // namespace gpm::formulas

#pragma once

#include <gpm/formulas.hpp>
#include <gpm/generators.hpp>
#include <gpm/matching.hpp>
#include <gpm/transforms.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gpm::verify {

enum class SweepQuantity { MatchingNumber, SaturationNumber, BoundsCheck };

std::string_view to_string(SweepQuantity q);
std::optional<SweepQuantity> parse_sweep_quantity(std::string_view name);

// Inclusive integer range.
struct Range {
    std::uint32_t low;
    std::uint32_t high;

    friend bool operator==(const Range &, const Range &) = default;
};

/// Parses "a..b" or a single "a". Throws InputError on anything else or a > b.
Range parse_range(std::string_view text);

inline constexpr std::uint64_t default_saturation_cap = 60;
inline constexpr std::uint64_t default_matching_cap = 400;

/// One parameter grid.
///
/// For path, cycle, friendship and cactus, `k` is the family parameter, `m`
/// the power and `n` the subdivision length. For complete bipartite graphs
/// `m` and `n` are the part sizes (points with m > n are not part of the
/// grid), `k` is the transform length (the power for Power, the subdivision
/// length otherwise) and `t` the power of a fractional power.
struct SweepSpec {
    Family family = Family::Path;
    Transform::Kind transform = Transform::Kind::Power;
    SweepQuantity quantity = SweepQuantity::MatchingNumber;
    Range k{1, 1};
    std::optional<Range> m, n, t;
    // 0 selects the default for the quantity.
    std::uint64_t cap = 0;
    std::uint64_t budget = default_search_budget;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Throws InputError if a range the family/transform needs is missing or empty.
void validate(const SweepSpec & spec);

enum class Status { Match, Mismatch, InBounds, OutOfBounds, Skipped, UnsupportedDomain, FormulaInconsistent };

std::string_view to_string(Status s);

// Not computed (beyond cap or invalid point), a number, or out of budget.
using EngineValue = std::variant<std::monostate, std::int64_t, Exceeded>;

std::string to_string(const EngineValue & v);

/// Derived from the formula and engine values alone.
Status classify(const formulas::Value & formula, const EngineValue & engine);

struct Row {
    Family family;
    // Grid point as (name, value) pairs in sort-key order.
    std::vector<std::pair<std::string, std::uint32_t>> parameters;
    SweepQuantity quantity;
    formulas::Value formula;
    std::string source;
    EngineValue engine;
    Status status;
    std::uint64_t order = 0;
    std::uint64_t size = 0;
    double elapsed_ms = 0;
    // Engine matching, kept for Mismatch and OutOfBounds rows.
    std::optional<Matching> certificate;
    std::string note;
};

// "k=3 m=2 n=2".
std::string parameter_string(const Row & row);

struct VerificationReport {
    std::vector<Row> rows;

    void append(const VerificationReport & other);
};

/// Evaluates every grid point; one row per point, in lexicographic parameter
/// order regardless of how many threads ran.
VerificationReport run_sweep(const SweepSpec & spec);

enum class Format { Csv, Markdown, Json };

std::optional<Format> parse_format(std::string_view name);

struct RenderOptions {
    // Wall-clock times make output non-reproducible, so they are opt-in.
    bool timing = false;
};

std::string render_report(const VerificationReport & report, Format format, RenderOptions options = {});

// Same, accepting "csv", "md"/"markdown" or "json"; throws InputError otherwise.
std::string render_report(const VerificationReport & report, std::string_view format, RenderOptions options = {});

} // namespace gpm::verify

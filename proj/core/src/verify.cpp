#include <gpm/verify.hpp>

#include <gpm/error.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace gpm::verify {

std::string_view to_string(SweepQuantity q)
{
    switch (q) {
    case SweepQuantity::MatchingNumber: return "matching";
    case SweepQuantity::SaturationNumber: return "saturation";
    case SweepQuantity::BoundsCheck: return "bounds";
    }
    return "unknown";
}

std::optional<SweepQuantity> parse_sweep_quantity(std::string_view name)
{
    if (name == "matching")
        return SweepQuantity::MatchingNumber;
    if (name == "saturation")
        return SweepQuantity::SaturationNumber;
    if (name == "bounds")
        return SweepQuantity::BoundsCheck;
    return std::nullopt;
}

Range parse_range(std::string_view text)
{
    auto number = [&](std::string_view part) {
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw InputError("bad range '" + std::string(text) + "'");
        return value;
    };
    Range r{};
    if (auto dots = text.find(".."); dots != std::string_view::npos)
        r = {number(text.substr(0, dots)), number(text.substr(dots + 2))};
    else
        r = {number(text), number(text)};
    if (r.low > r.high)
        throw InputError("empty range '" + std::string(text) + "'");
    return r;
}

void validate(const SweepSpec & spec)
{
    auto need = [](const std::optional<Range> & r, const char * name) {
        if (! r)
            throw InputError(std::string("sweep needs a range for --") + name);
    };
    auto check = [](const std::optional<Range> & r) {
        if (r && r->low > r->high)
            throw InputError("empty parameter range");
    };
    check(spec.k);
    check(spec.m);
    check(spec.n);
    check(spec.t);

    using K = Transform::Kind;
    if (spec.family == Family::CompleteBipartite) {
        need(spec.m, "m");
        need(spec.n, "n");
        if (spec.transform == K::Fractional)
            need(spec.t, "t");
        return;
    }
    if (spec.transform != K::Subdivision)
        need(spec.m, "m");
    if (spec.transform != K::Power)
        need(spec.n, "n");
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Match: return "Match";
    case Status::Mismatch: return "Mismatch";
    case Status::InBounds: return "InBounds";
    case Status::OutOfBounds: return "OutOfBounds";
    case Status::Skipped: return "Skipped";
    case Status::UnsupportedDomain: return "UnsupportedDomain";
    case Status::FormulaInconsistent: return "FormulaInconsistent";
    }
    return "unknown";
}

std::string to_string(const EngineValue & v)
{
    if (auto x = std::get_if<std::int64_t>(&v))
        return std::to_string(*x);
    if (std::holds_alternative<Exceeded>(v))
        return "Exceeded";
    return "-";
}

Status classify(const formulas::Value & formula, const EngineValue & engine)
{
    if (std::holds_alternative<formulas::UnsupportedDomain>(formula))
        return Status::UnsupportedDomain;
    if (std::holds_alternative<formulas::FormulaInconsistent>(formula))
        return Status::FormulaInconsistent;
    auto value = std::get_if<std::int64_t>(&engine);
    if (! value || std::holds_alternative<formulas::NotCovered>(formula))
        return Status::Skipped;
    if (auto x = std::get_if<std::int64_t>(&formula))
        return *x == *value ? Status::Match : Status::Mismatch;
    return std::get<formulas::Interval>(formula).contains(*value) ? Status::InBounds : Status::OutOfBounds;
}

std::string parameter_string(const Row & row)
{
    std::string out;
    for (const auto & [name, value] : row.parameters) {
        if (! out.empty())
            out += ' ';
        out += name + "=" + std::to_string(value);
    }
    return out;
}

void VerificationReport::append(const VerificationReport & other)
{
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

namespace {
    struct GridPoint {
        FamilySpec family;
        Transform transform;
        std::vector<std::pair<std::string, std::uint32_t>> parameters;
    };

    std::vector<std::uint32_t> values(const std::optional<Range> & r)
    {
        std::vector<std::uint32_t> out;
        if (r)
            for (auto v = r->low;; ++v) {
                out.push_back(v);
                if (v == r->high)
                    break;
            }
        else
            out.push_back(1);
        return out;
    }

    Transform make_transform(Transform::Kind kind, std::uint32_t power, std::uint32_t subdivision)
    {
        switch (kind) {
        case Transform::Kind::Power: return Transform::make_power(power);
        case Transform::Kind::Subdivision: return Transform::make_subdivision(subdivision);
        case Transform::Kind::Fractional: return Transform::make_fractional(power, subdivision);
        }
        return {};
    }

    std::vector<GridPoint> enumerate(const SweepSpec & spec)
    {
        using K = Transform::Kind;
        std::vector<GridPoint> points;
        if (spec.family == Family::CompleteBipartite) {
            for (auto m : values(spec.m))
                for (auto n : values(spec.n)) {
                    if (m > n)
                        continue;
                    for (auto k : values(spec.k))
                        for (auto t : values(spec.transform == K::Fractional ? spec.t : std::nullopt)) {
                            GridPoint p{FamilySpec::bipartite(m, n), {}, {{"m", m}, {"n", n}, {"k", k}}};
                            if (spec.transform == K::Power)
                                p.transform = Transform::make_power(k);
                            else
                                p.transform = make_transform(spec.transform, t, k);
                            if (spec.transform == K::Fractional)
                                p.parameters.emplace_back("t", t);
                            points.push_back(std::move(p));
                        }
                }
            return points;
        }

        auto ms = values(spec.transform == K::Subdivision ? std::nullopt : spec.m);
        auto ns = values(spec.transform == K::Power ? std::nullopt : spec.n);
        for (auto k : values(spec.k))
            for (auto m : ms)
                for (auto n : ns) {
                    GridPoint p{FamilySpec{spec.family, k}, make_transform(spec.transform, m, n), {{"k", k}}};
                    if (spec.transform != K::Subdivision)
                        p.parameters.emplace_back("m", m);
                    if (spec.transform != K::Power)
                        p.parameters.emplace_back("n", n);
                    points.push_back(std::move(p));
                }
        return points;
    }

    // Which engine quantity a row compares against.
    enum class EngineQuantity { Matching, Saturation };

    struct Plan {
        EngineQuantity engine;
        std::uint64_t cap;
    };

    bool uses_cactus_fractional_bounds(const GridPoint & p)
    {
        return p.family.family == Family::ChainTriangularCactus && p.transform.kind == Transform::Kind::Fractional
            && p.transform.power >= 2 && p.transform.subdivision >= 2;
    }

    Plan plan(const SweepSpec & spec, const GridPoint & p)
    {
        EngineQuantity engine = EngineQuantity::Saturation;
        switch (spec.quantity) {
        case SweepQuantity::MatchingNumber: engine = EngineQuantity::Matching; break;
        case SweepQuantity::SaturationNumber: engine = EngineQuantity::Saturation; break;
        case SweepQuantity::BoundsCheck:
            if (p.transform.kind == Transform::Kind::Fractional && ! uses_cactus_fractional_bounds(p))
                engine = EngineQuantity::Matching;
            break;
        }
        auto cap = spec.cap;
        if (cap == 0)
            cap = engine == EngineQuantity::Matching ? default_matching_cap : default_saturation_cap;
        return {engine, cap};
    }

    Row evaluate(const SweepSpec & spec, const GridPoint & p)
    {
        auto start = std::chrono::steady_clock::now();
        Row row;
        row.family = p.family.family;
        row.parameters = p.parameters;
        row.quantity = spec.quantity;
        row.formula = formulas::NotCovered{};
        row.source = "none";
        row.engine = std::monostate{};
        row.status = Status::Skipped;

        auto finish = [&]() {
            row.status = classify(row.formula, row.engine);
            if (row.status != Status::Mismatch && row.status != Status::OutOfBounds)
                row.certificate.reset();
            row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return row;
        };

        Plan how{};
        try {
            validate(p.family);
            how = plan(spec, p);
            row.order = subdivision_order(base_order(p.family), base_size(p.family), p.transform.subdivision);
        }
        catch (const InputError & e) {
            row.note = e.what();
            return finish();
        }
        bool within_cap = row.order <= how.cap;
        if (! within_cap)
            row.note = "order " + std::to_string(row.order) + " exceeds cap " + std::to_string(how.cap);

        // Closed-form side.
        try {
            switch (spec.quantity) {
            case SweepQuantity::MatchingNumber:
            case SweepQuantity::SaturationNumber: {
                auto q = spec.quantity == SweepQuantity::MatchingNumber ? formulas::Quantity::MatchingNumber
                                                                        : formulas::Quantity::SaturationNumber;
                auto c = formulas::claim(p.family, p.transform, q);
                row.formula = c.value;
                row.source = c.source;
                break;
            }
            case SweepQuantity::BoundsCheck:
                if (uses_cactus_fractional_bounds(p)) {
                    row.formula = formulas::s_T_frac_bounds(p.family.k, p.transform.power, p.transform.subdivision);
                    row.source = "cactus-fractional-saturation-bounds";
                }
                else if (p.transform.kind == Transform::Kind::Fractional && within_cap) {
                    row.formula = formulas::alpha_frac_bounds(generate(p.family), p.transform.power, p.transform.subdivision);
                    row.source = "fractional-matching-bounds";
                }
                // Otherwise the generic saturation interval, filled in from
                // the engine's matching number below.
                break;
            }
        }
        catch (const InputError & e) {
            row.formula = formulas::NotCovered{};
            row.note = e.what();
        }

        if (! within_cap)
            return finish();

        // Engine side.
        auto g = apply(generate(p.family), p.transform);
        row.order = g.order();
        row.size = g.size();
        if (how.engine == EngineQuantity::Matching) {
            auto m = maximum_matching(g);
            row.engine = static_cast<std::int64_t>(m.size());
            row.certificate = std::move(m);
        }
        else {
            auto r = minimum_maximal_matching(g, spec.budget);
            if (auto m = std::get_if<Matching>(&r)) {
                row.engine = static_cast<std::int64_t>(m->size());
                row.certificate = std::move(*m);
            }
            else
                row.engine = std::get<Exceeded>(r);
        }

        if (spec.quantity == SweepQuantity::BoundsCheck && p.transform.kind != Transform::Kind::Fractional) {
            auto alpha = static_cast<std::int64_t>(matching_number(g));
            row.formula = formulas::Interval{(alpha + 1) / 2, alpha};
            row.source = "saturation-generic-bounds";
        }
        return finish();
    }
}

VerificationReport run_sweep(const SweepSpec & spec)
{
    validate(spec);
    auto points = enumerate(spec);
    VerificationReport report;
    report.rows.resize(points.size());

    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, points.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
            try {
                report.rows[i] = evaluate(spec, points[i]);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
            }
        }
    };

    if (threads <= 1)
        worker();
    else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return report;
}

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "csv")
        return Format::Csv;
    if (name == "md" || name == "markdown")
        return Format::Markdown;
    if (name == "json")
        return Format::Json;
    return std::nullopt;
}

namespace {
    std::string certificate_string(const Row & row)
    {
        std::string out;
        if (row.certificate)
            for (const auto & e : row.certificate->edges()) {
                if (! out.empty())
                    out += ' ';
                out += std::to_string(e.u) + "-" + std::to_string(e.v);
            }
        return out;
    }

    std::string elapsed_string(double ms)
    {
        std::ostringstream out;
        out.setf(std::ios::fixed);
        out.precision(3);
        out << ms;
        return out.str();
    }

    std::string csv_field(const std::string & s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    std::string render_csv(const VerificationReport & report, RenderOptions options)
    {
        std::string out = "family,parameters,quantity,formula_value,engine_value,status,order,size";
        if (options.timing)
            out += ",elapsed_ms";
        out += ",source,certificate,note\n";
        for (const auto & row : report.rows) {
            std::vector<std::string> fields{std::string(to_string(row.family)), parameter_string(row),
                std::string(to_string(row.quantity)), formulas::to_string(row.formula), to_string(row.engine),
                std::string(to_string(row.status)), std::to_string(row.order), std::to_string(row.size)};
            if (options.timing)
                fields.push_back(elapsed_string(row.elapsed_ms));
            fields.push_back(row.source);
            fields.push_back(certificate_string(row));
            fields.push_back(row.note);
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i)
                    out += ',';
                out += csv_field(fields[i]);
            }
            out += '\n';
        }
        return out;
    }

    std::string md_cell(std::string s)
    {
        std::string out;
        for (char c : s) {
            if (c == '|')
                out += '\\';
            out += c;
        }
        return out;
    }

    std::string render_markdown(const VerificationReport & report, RenderOptions options)
    {
        // One table per (family, quantity), in order of first appearance.
        std::vector<std::pair<Family, SweepQuantity>> groups;
        for (const auto & row : report.rows) {
            std::pair key{row.family, row.quantity};
            if (std::find(groups.begin(), groups.end(), key) == groups.end())
                groups.push_back(key);
        }

        std::string out;
        for (const auto & [family, quantity] : groups) {
            if (! out.empty())
                out += '\n';
            out += "### " + std::string(to_string(family)) + " / " + std::string(to_string(quantity)) + "\n\n";
            out += "| parameters | formula | engine | status | order | size |";
            out += options.timing ? " elapsed_ms |" : "";
            out += " source | certificate | note |\n";
            out += "|---|---|---|---|---|---|";
            out += options.timing ? "---|" : "";
            out += "---|---|---|\n";
            for (const auto & row : report.rows) {
                if (row.family != family || row.quantity != quantity)
                    continue;
                out += "| " + parameter_string(row) + " | " + md_cell(formulas::to_string(row.formula)) + " | "
                    + to_string(row.engine) + " | " + std::string(to_string(row.status)) + " | "
                    + std::to_string(row.order) + " | " + std::to_string(row.size) + " |";
                if (options.timing)
                    out += " " + elapsed_string(row.elapsed_ms) + " |";
                out += " " + md_cell(row.source) + " | " + certificate_string(row) + " | " + md_cell(row.note) + " |\n";
            }
        }
        return out;
    }

    std::string render_json(const VerificationReport & report, RenderOptions options)
    {
        using nlohmann::ordered_json;
        auto rows = ordered_json::array();
        for (const auto & row : report.rows) {
            ordered_json j;
            j["family"] = to_string(row.family);
            ordered_json params = ordered_json::object();
            for (const auto & [name, value] : row.parameters)
                params[name] = value;
            j["parameters"] = params;
            j["quantity"] = to_string(row.quantity);
            if (auto x = std::get_if<std::int64_t>(&row.formula))
                j["formula_value"] = *x;
            else if (auto i = std::get_if<formulas::Interval>(&row.formula))
                j["formula_value"] = ordered_json{{"lower", i->lower}, {"upper", i->upper}};
            else
                j["formula_value"] = formulas::to_string(row.formula);
            if (auto x = std::get_if<std::int64_t>(&row.engine))
                j["engine_value"] = *x;
            else if (std::holds_alternative<Exceeded>(row.engine))
                j["engine_value"] = "Exceeded";
            else
                j["engine_value"] = nullptr;
            j["status"] = to_string(row.status);
            j["order"] = row.order;
            j["size"] = row.size;
            if (options.timing)
                j["elapsed_ms"] = row.elapsed_ms;
            j["source"] = row.source;
            if (row.certificate) {
                auto edges = ordered_json::array();
                for (const auto & e : row.certificate->edges())
                    edges.push_back({e.u, e.v});
                j["certificate"] = edges;
            }
            else
                j["certificate"] = nullptr;
            j["note"] = row.note;
            rows.push_back(std::move(j));
        }
        return rows.dump(2) + "\n";
    }
}

std::string render_report(const VerificationReport & report, Format format, RenderOptions options)
{
    switch (format) {
    case Format::Csv: return render_csv(report, options);
    case Format::Markdown: return render_markdown(report, options);
    case Format::Json: return render_json(report, options);
    }
    throw InputError("unknown report format");
}

std::string render_report(const VerificationReport & report, std::string_view format, RenderOptions options)
{
    auto f = parse_format(format);
    if (! f)
        throw InputError("unknown report format '" + std::string(format) + "'");
    return render_report(report, *f, options);
}

} // namespace gpm::verify

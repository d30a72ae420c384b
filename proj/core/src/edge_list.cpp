#include <gpm/edge_list.hpp>

#include <gpm/error.hpp>

#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace gpm {

namespace {
    std::vector<std::string_view> split_fields(std::string_view line)
    {
        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            auto start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
                ++pos;
            if (pos > start)
                fields.push_back(line.substr(start, pos - start));
        }
        return fields;
    }

    std::uint64_t parse_count(std::string_view field, std::size_t line_no)
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + std::string(field) + "'");
        return value;
    }
}

Graph read_edge_list(std::istream & in)
{
    std::optional<std::uint64_t> order, declared;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        auto fields = split_fields(view);
        if (fields.empty())
            continue;

        if (fields[0] == "p") {
            if (order)
                throw InputError("line " + std::to_string(line_no) + ": repeated header");
            if (fields.size() != 3)
                throw InputError("line " + std::to_string(line_no) + ": header must be 'p <order> <edge-count>'");
            order = parse_count(fields[1], line_no);
            declared = parse_count(fields[2], line_no);
            if (*order > std::numeric_limits<Vertex>::max())
                throw InputError("order too large");
            continue;
        }

        if (! order)
            throw InputError("line " + std::to_string(line_no) + ": edge before 'p' header");
        if (fields.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
        auto u = parse_count(fields[0], line_no), v = parse_count(fields[1], line_no);
        if (u >= v)
            throw InputError("line " + std::to_string(line_no) + ": edge must satisfy u < v");
        if (v >= *order)
            throw InputError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
        edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }

    if (! order)
        throw InputError("missing 'p <order> <edge-count>' header");
    if (edges.size() != *declared)
        throw InputError("header declares " + std::to_string(*declared) + " edges, found " + std::to_string(edges.size()));

    Graph g(*order, std::move(edges));
    if (g.size() != *declared)
        throw InputError("duplicate edges in edge list");
    return g;
}

Graph parse_edge_list(const std::string & text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph & g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

} // namespace gpm

#pragma once

#include <gpm/graph.hpp>

#include <iosfwd>
#include <string>

namespace gpm {

/// Plain-text interchange format:
///
///     # optional comments anywhere, from '#' to end of line
///     p <order> <edge-count>
///     u v          (one per line, 0-based, u < v)
///
/// Throws InputError on a missing or repeated header, malformed lines,
/// out-of-range ids, u >= v, or an edge count that disagrees with the header.
Graph read_edge_list(std::istream & in);
Graph parse_edge_list(const std::string & text);

/// Writes the header and the edges in sorted order. Labels are not part of the format.
void write_edge_list(std::ostream & out, const Graph & g);
std::string format_edge_list(const Graph & g);

} // namespace gpm

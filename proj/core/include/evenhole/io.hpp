#ifndef EVENHOLE_IO_HPP
#define EVENHOLE_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "evenhole/graph.hpp"

namespace evenhole {

enum class GraphFormat { EdgeList, Graph6 };

std::string_view to_string(GraphFormat f);

/// Readers refuse anything larger; adjacency rows are quadratic in n.
inline constexpr std::int64_t kMaxParsedOrder = 1 << 15;

struct LoadedGraph {
  Graph graph;
  /// ids[v] is the id node v had in the input.
  std::vector<std::int64_t> ids;
};

/// Edge list: one "u v" pair per line, nonnegative integer ids, '#' starts a
/// comment, blank lines ignored. A line holding a single id declares an
/// isolated node. Dense ids follow order of first appearance.
LoadedGraph parse_edge_list(std::string_view text);

/// One graph6 record, optionally preceded by the ">>graph6<<" header and
/// followed by a newline. Padding bits must be zero.
LoadedGraph parse_graph6(std::string_view text);

/// Graph6 when the first non-blank line carries the header or consists of
/// printable graph6 characters only, edge list otherwise.
GraphFormat detect_format(std::string_view text);

LoadedGraph parse_graph(std::string_view text, GraphFormat format);

std::string encode_graph6(const Graph& g);

/// A declaration line per node, then the edges as "u v" lines in ascending
/// order, so node order and isolated nodes survive a round trip.
std::string encode_edge_list(const Graph& g);
std::string encode_edge_list(const Graph& g, const std::vector<std::int64_t>& ids);

}  // namespace evenhole

#endif  // EVENHOLE_IO_HPP

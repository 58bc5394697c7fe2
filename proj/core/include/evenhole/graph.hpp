#ifndef EVENHOLE_GRAPH_HPP
#define EVENHOLE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evenhole/bits.hpp"

namespace evenhole {

using Node = int;
/// Sorted ascending, no duplicates.
using NodeSet = std::vector<Node>;
/// Ordered node sequence p0..pk; consecutive nodes adjacent.
using Path = std::vector<Node>;
using EdgeList = std::vector<std::pair<Node, Node>>;

/// Label carried by nodes that do not exist in the root graph (2-join
/// marker paths).
inline constexpr int kMarkerLabel = -1;

/// Simple undirected graph over dense ids 0..n-1.
///
/// Immutable once built. Adjacency is kept twice: as sorted neighbor lists
/// for iteration and as bitset rows for O(1) membership and fast set algebra.
/// Every node carries a label naming the node of the root graph it came from,
/// so holes found deep inside nested induced subgraphs can be reported in the
/// caller's ids. A freshly built graph is its own root (label(v) == v).
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on out-of-range ids or self-loops. Parallel edges are
  /// collapsed.
  Graph(int n, std::span<const std::pair<Node, Node>> edges);
  Graph(int n, std::span<const std::pair<Node, Node>> edges,
        std::vector<int> labels);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return n_ == 0; }
  bool contains(Node v) const noexcept { return v >= 0 && v < n_; }

  bool adjacent(Node u, Node v) const { return rows_[u].test(v); }
  std::span<const Node> neighbors(Node v) const {
    return {targets_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(Node v) const { return offsets_[v + 1] - offsets_[v]; }
  const NodeBits& neighbor_bits(Node v) const { return rows_[v]; }
  NodeBits closed_neighbor_bits(Node v) const;

  int label(Node v) const { return labels_[v]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Edges (u, v) with u < v in ascending order.
  EdgeList edge_list() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ &&
           a.targets_ == b.targets_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Node> targets_;
  std::vector<NodeBits> rows_;
  std::vector<int> labels_;
};

NodeBits to_bits(int n, std::span<const Node> nodes);
NodeSet to_set(const NodeBits& bits);
NodeSet full_set(int n);

/// Subgraph induced by `nodes` (any order; duplicates ignored). New ids follow
/// ascending order of the old ids; labels are inherited.
Graph induced_subgraph(const Graph& g, std::span<const Node> nodes);
Graph induced_subgraph(const Graph& g, const NodeBits& keep);
Graph remove_nodes(const Graph& g, std::span<const Node> nodes);

/// Parts ordered by minimum node id; each part sorted.
std::vector<NodeSet> connected_components(const Graph& g);
/// Components of g[within].
std::vector<NodeSet> connected_components(const Graph& g,
                                          const NodeBits& within);
/// Component index per node of g[within], -1 outside `within`.
std::vector<int> component_labels(const Graph& g, const NodeBits& within,
                                  int* count = nullptr);

/// Maximal 2-connected blocks; a bridge is a 2-node block and an isolated
/// node a 1-node block. Every edge lies in exactly one block. Blocks are
/// sorted internally and listed in ascending lexicographic order.
std::vector<NodeSet> biconnected_components(const Graph& g);

bool is_clique(const Graph& g, std::span<const Node> nodes);

/// Minimum-edge s-t path whose interior lies in `allowed_interior`; among
/// shortest paths the lexicographically smallest node sequence.
std::optional<Path> shortest_path_restricted(const Graph& g, Node s, Node t,
                                             const NodeBits& allowed_interior);

/// Distinct nodes, consecutive ones adjacent, no other adjacencies.
bool is_induced_path(const Graph& g, std::span<const Node> path);

}  // namespace evenhole

#endif  // EVENHOLE_GRAPH_HPP

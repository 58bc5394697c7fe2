#ifndef EVENHOLE_HOLES_HPP
#define EVENHOLE_HOLES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evenhole/graph.hpp"

namespace evenhole {

/// An induced cycle on at least four nodes, stored in canonical rotation:
/// it starts at its minimum node and the second entry is the smaller of that
/// node's two cycle neighbors. Equality is therefore cycle equality.
struct Hole {
  std::vector<Node> nodes;

  std::size_t length() const noexcept { return nodes.size(); }
  bool even() const noexcept { return nodes.size() % 2 == 0; }

  /// Rotates/reflects a cyclic sequence into canonical form.
  static Hole canonical(std::vector<Node> cycle);

  friend bool operator==(const Hole&, const Hole&) = default;
  friend auto operator<=>(const Hole& a, const Hole& b) {
    return a.nodes <=> b.nodes;
  }
};

/// True iff `cycle` (cyclic order) is a hole of g.
bool is_hole(const Graph& g, std::span<const Node> cycle);
inline bool is_even_hole(const Graph& g, std::span<const Node> cycle) {
  return cycle.size() % 2 == 0 && is_hole(g, cycle);
}

/// Relabels a hole of g into g's labels (root ids). nullopt when the hole
/// touches a marker node.
std::optional<Hole> to_root_labels(const Graph& g, const Hole& hole);

inline constexpr std::uint64_t kDefaultHoleBudget = 100'000'000;

struct HoleSearchOptions {
  /// Longest hole to report; 0 means "no limit".
  int max_len = 0;
  /// Induced-path extensions allowed before BudgetExceeded is thrown.
  std::uint64_t budget = kDefaultHoleBudget;
};

/// Calls `visit` once per hole in canonical form; stop early by returning
/// false. Order: anchor (minimum node) ascending, then DFS order.
void for_each_hole(const Graph& g, const HoleSearchOptions& options,
                   const std::function<bool(const Hole&)>& visit);

std::vector<Hole> enumerate_holes(const Graph& g,
                                  const HoleSearchOptions& options = {});

/// Minimum-length even hole, lexicographically least among equal lengths.
std::optional<Hole> shortest_even_hole(
    const Graph& g, std::uint64_t budget = kDefaultHoleBudget);

inline bool has_even_hole(const Graph& g,
                          std::uint64_t budget = kDefaultHoleBudget) {
  return shortest_even_hole(g, budget).has_value();
}

/// Attachment classes of a node outside a hole. N5 only occurs for a node
/// complete to a 5-hole, the one attachment that is neither major nor
/// covered by N1..N4 / N11..N22.
enum class NeighborTag { N1, N2, N3, N4, N5, N11, N12, N22, Major };

std::string_view to_string(NeighborTag tag);

struct NeighborClass {
  NeighborTag tag;
  NodeSet attachment;
};

/// Throws InputError if x lies on the hole or has no neighbor on it.
NeighborClass classify_neighbor(const Graph& g, const Hole& hole, Node x);

/// Major nodes of the hole.
NodeSet major_nodes(const Graph& g, const Hole& hole);
/// Nodes of N^{2,2}.
NodeSet n22_nodes(const Graph& g, const Hole& hole);

/// No neighbor of the hole is major or N^{2,2}.
bool is_clean(const Graph& g, const Hole& hole);

/// True iff some clean shortest even hole of g has u1u2u3 as a 3-path.
bool is_lucky(const Graph& g, Node u1, Node u2, Node u3,
              std::uint64_t budget = kDefaultHoleBudget);

/// All even holes of minimum length.
std::vector<Hole> shortest_even_holes(const Graph& g,
                                      std::uint64_t budget = kDefaultHoleBudget);

}  // namespace evenhole

#endif  // EVENHOLE_HOLES_HPP

#ifndef EVENHOLE_TWO_JOIN_HPP
#define EVENHOLE_TWO_JOIN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "evenhole/graph.hpp"
#include "evenhole/holes.hpp"

namespace evenhole {

/// A 2-join V1|V2 with its split. All sets sorted.
struct Split {
  NodeSet v1, v2, x1, y1, x2, y2;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Partition, size, disjointness and exact cross-edge structure.
bool is_split(const Graph& h, const Split& s);

/// H[vi] is an induced path with one end in xi and the other in yi.
bool is_path_side(const Graph& h, const NodeSet& vi, const NodeSet& xi,
                  const NodeSet& yi);

bool is_non_path_2join(const Graph& h, const Split& s);

/// Statements that hold for every 2-join of a graph without star-cutsets:
/// each component of H[Vi] meets Xi and Yi, no node of Vi is isolated in
/// H[Vi], every Xi node has a non-neighbor in Yi and vice versa, |Vi| >= 4.
bool satisfies_no_star_cutset_split_properties(const Graph& h, const Split& s);

inline constexpr std::uint64_t kDefaultTwoJoinBudget = 50'000'000;

/// Exact detector. For every seed of edges a1a2, b1b2 (a1b2, b1a2
/// non-edges), every other node's side is constrained by a unary rule and
/// by pairwise implications derived from the cross-edge condition; the
/// implications are closed under propagation and the remaining freedom is
/// searched by branching in ascending node order (V1 first). The first
/// non-path 2-join met is returned.
std::optional<Split> find_non_path_2join(const Graph& h,
                                         std::uint64_t budget = kDefaultTwoJoinBudget);

/// Reference: every V1 containing node 0, cross edges checked directly.
std::optional<Split> find_non_path_2join_bruteforce(const Graph& h);

/// Shortest path of H[vi] from a node of xi to a node of yi whose interior
/// avoids xi and yi. Throws InputError when none exists.
Path side_parity_path(const Graph& h, const NodeSet& vi, const NodeSet& xi,
                      const NodeSet& yi);

struct Blocks {
  Graph h1, h2;
  NodeSet markers1, markers2;  // marker node ids inside h1 / h2
  int p1 = 0, p2 = 0;          // marker path orders
};

/// Parity-preserving blocks. H1 = H[V1] followed by a p2-node marker path
/// whose first node is joined to X1 and last node to Y1; H2 symmetric.
/// Marker nodes carry kMarkerLabel. flip_parity swaps 4 and 5, which breaks
/// parity preservation on purpose (used to test the testers).
Blocks blocks_of_decomposition(const Graph& h, const Split& split,
                               bool flip_parity = false);

struct TwoJoinStats {
  std::size_t host_edges = 0;
  std::size_t pieces = 0;
  std::size_t oracle_calls = 0;
  std::size_t ect_checks = 0;
  std::size_t decompositions = 0;
  std::size_t pushes = 0;
  std::size_t block_bound_violations = 0;   // |V(Hi)| > n or |E(Hi)| > m - 1
  std::size_t split_property_violations = 0;

  bool decomposition_bound_ok() const {
    return decompositions <= (host_edges > 11 ? host_edges - 11 : 0);
  }
  bool push_bound_ok() const { return pushes <= 2 * host_edges; }

  TwoJoinStats& operator+=(const TwoJoinStats& o);
};

struct TwoJoinOptions {
  /// Pieces with at most this many edges go to the exhaustive hole search.
  std::size_t oracle_max_edges = 11;
  /// Look for a full star-cutset in every piece and fail loudly on a hit.
  bool check_star_cutsets = true;
  bool flip_marker_parity = false;
  std::uint64_t two_join_budget = kDefaultTwoJoinBudget;
};

struct NoStarCutsetVerdict {
  enum class Route { Clean, Oracle, Ect, NoTwoJoin };

  bool contains_even_hole = false;
  /// Root labels; only when the hole was found in a marker-free piece.
  std::optional<Hole> certificate;
  Route route = Route::Clean;
  TwoJoinStats stats;
};

/// Decides whether a connected graph without star-cutsets has an even hole
/// by splitting on non-path 2-joins (LIFO worklist, smaller block first).
NoStarCutsetVerdict decide_no_star_cutset(const Graph& h,
                                          const TwoJoinOptions& options = {});

}  // namespace evenhole

#endif  // EVENHOLE_TWO_JOIN_HPP

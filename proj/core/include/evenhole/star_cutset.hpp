#ifndef EVENHOLE_STAR_CUTSET_HPP
#define EVENHOLE_STAR_CUTSET_HPP

#include <cstddef>
#include <optional>
#include <variant>

#include "evenhole/cleaning.hpp"
#include "evenhole/graph.hpp"
#include "evenhole/holes.hpp"

namespace evenhole {

/// S = N[center], whose removal raises the component count.
struct StarCutset {
  Node center = 0;
  NodeSet nodes;
};

struct DominationResult {
  Tracker tracker;
  /// The path stopped being an induced 3-path after a substitution; the
  /// input tracker cannot have been lucky.
  bool degenerate = false;
  std::size_t removed = 0;
};

/// Deletes dominated nodes one at a time (first pair (x, y) in lexicographic
/// order with N[y] inside N[x]), moving the path onto x whenever y is on it.
DominationResult remove_dominated(const Tracker& t);

/// First center, in ascending order, whose closed neighborhood is a
/// star-cutset.
std::optional<StarCutset> find_full_star_cutset(const Graph& h);

/// Non-adjacent s1, s2 in S and two distinct components of H \ S adjacent to
/// both.
struct B2Witness {
  Node s1 = 0, s2 = 0;
  NodeSet b1, b2;

  friend bool operator==(const B2Witness&, const B2Witness&) = default;
};

/// Least (s1, s2), then the two components with the smallest minimum nodes.
std::optional<B2Witness> check_condition_B2(const Graph& h, const StarCutset& s);

/// Even hole from the theta formed by the shortest s1-s2 paths through B1
/// and B2 together with s. Result in h's ids.
Hole extract_even_hole_B2(const Graph& h, Node s, const B2Witness& w);

struct Task1 {
  Hole hole;  // host labels (root ids)
};
struct Task2 {};
struct Task3 {
  Graph graph;  // induced subgraph of the host, no star-cutsets
};

struct ReductionOutcome {
  std::variant<Task1, Task2, Task3> result;
  std::size_t iterations = 0;
  std::size_t dominated_removed = 0;
};

/// Alternates dominated-node removal and full star-cutset splitting until
/// the graph has no star-cutset (Task3), an even hole shows up (Task1), or
/// the tracker is shown not to be lucky (Task2).
ReductionOutcome star_cutset_reduce(const Tracker& t);

/// Brute force over every center s and every subset of N[s] containing s.
bool has_star_cutset_exhaustive(const Graph& h);

}  // namespace evenhole

#endif  // EVENHOLE_STAR_CUTSET_HPP

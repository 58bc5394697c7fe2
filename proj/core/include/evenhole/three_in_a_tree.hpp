#ifndef EVENHOLE_THREE_IN_A_TREE_HPP
#define EVENHOLE_THREE_IN_A_TREE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "evenhole/graph.hpp"

namespace evenhole {

struct TreeQuery {
  const Graph& graph;
  std::array<Node, 3> terminals;
};

/// Node set inducing a tree that contains all three terminals.
struct InducedTreeWitness {
  NodeSet nodes;
};

/// Independent check of the witness invariants: connected, acyclic, induced,
/// terminals included.
bool is_induced_tree_witness(const Graph& g, std::span<const Node> nodes,
                             const std::array<Node, 3>& terminals);

/// Decides whether some induced tree of the graph contains all three
/// terminals. Implementations must be exact; they may differ in which
/// witness they return and in how they scale.
class TreeSolver {
 public:
  virtual ~TreeSolver() = default;

  /// Throws InputError on duplicate or out-of-range terminals and
  /// BudgetExceeded when the search gives up.
  std::optional<InducedTreeWitness> solve(const TreeQuery& query) const;

  virtual std::string_view name() const = 0;

 protected:
  virtual std::optional<InducedTreeWitness> search(
      const TreeQuery& query) const = 0;
};

/// Scans node subsets containing the terminals in increasing size, so the
/// witness is of minimum cardinality (ties: lexicographically least subset).
class ExhaustiveTreeSolver final : public TreeSolver {
 public:
  explicit ExhaustiveTreeSolver(std::uint64_t budget = 50'000'000)
      : budget_(budget) {}
  std::string_view name() const override { return "exhaustive"; }

 protected:
  std::optional<InducedTreeWitness> search(
      const TreeQuery& query) const override;

 private:
  std::uint64_t budget_;
};

/// Enumerates induced z1-z2 paths P and, for each, looks for a z3 branch:
/// a path from z3 through nodes with no neighbor on P that ends at a node
/// with exactly one neighbor on P. Every minimal induced tree on three
/// terminals has this shape, so the search is exact; the enumeration is
/// pruned by reachability of z2 and by z3 attaching to P at most once.
class PathGrowthTreeSolver final : public TreeSolver {
 public:
  explicit PathGrowthTreeSolver(std::uint64_t budget = 200'000'000)
      : budget_(budget) {}
  std::string_view name() const override { return "path-growth"; }

 protected:
  std::optional<InducedTreeWitness> search(
      const TreeQuery& query) const override;

 private:
  std::uint64_t budget_;
};

/// Convenience wrapper over a PathGrowthTreeSolver.
std::optional<InducedTreeWitness> induced_tree_spanning(const TreeQuery& query);

}  // namespace evenhole

#endif  // EVENHOLE_THREE_IN_A_TREE_HPP

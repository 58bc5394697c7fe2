#include <gtest/gtest.h>

#include "evenhole/errors.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/three_in_a_tree.hpp"
#include "test_util.hpp"

namespace evenhole {
namespace {

using testing::make_graph;

// Subsets containing the terminals, tested directly with the witness check.
bool brute_tree_exists(const Graph& g, const std::array<Node, 3>& z) {
  const int n = g.order();
  const std::uint64_t must = (std::uint64_t{1} << z[0]) | (std::uint64_t{1} << z[1]) |
                             (std::uint64_t{1} << z[2]);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & must) != must) continue;
    if (is_induced_tree_witness(g, testing::members(n, s), z)) return true;
  }
  return false;
}

TEST(InducedTreeWitness, Checker) {
  Graph p5 = path_graph(5);
  EXPECT_TRUE(is_induced_tree_witness(p5, NodeSet{0, 1, 2, 3, 4}, {0, 2, 4}));
  EXPECT_FALSE(is_induced_tree_witness(p5, NodeSet{0, 2, 4}, {0, 2, 4}));
  EXPECT_FALSE(is_induced_tree_witness(complete_graph(3), NodeSet{0, 1, 2}, {0, 1, 2}));
  EXPECT_FALSE(is_induced_tree_witness(p5, NodeSet{0, 1, 2}, {0, 2, 4}));
}

class Solvers : public ::testing::TestWithParam<int> {
 protected:
  const TreeSolver& solver() const {
    static const ExhaustiveTreeSolver exhaustive;
    static const PathGrowthTreeSolver growth;
    return GetParam() == 0 ? static_cast<const TreeSolver&>(exhaustive) : growth;
  }
};

TEST_P(Solvers, Examples) {
  Graph p5 = path_graph(5);
  auto w = solver().solve({p5, {0, 2, 4}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->nodes, (NodeSet{0, 1, 2, 3, 4}));

  Graph c4 = cycle_graph(4);
  w = solver().solve({c4, {0, 1, 2}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->nodes, (NodeSet{0, 1, 2}));

  Graph k3z = make_graph(4, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(solver().solve({k3z, {0, 1, 2}}));
}

TEST_P(Solvers, RejectsBadTerminals) {
  Graph p5 = path_graph(5);
  EXPECT_THROW(solver().solve({p5, {0, 0, 4}}), InputError);
  EXPECT_THROW(solver().solve({p5, {0, 1, 5}}), InputError);
}

TEST_P(Solvers, AgreesWithSubsetSearch) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    Graph g = testing::random_graph(n, 0.25 + 0.05 * static_cast<double>(seed % 6), seed);
    const std::array<Node, 3> z{0, n / 2, n - 1};
    auto w = solver().solve({g, z});
    EXPECT_EQ(w.has_value(), brute_tree_exists(g, z)) << "seed " << seed;
    if (w) { EXPECT_TRUE(is_induced_tree_witness(g, w->nodes, z)); }
  }
}

INSTANTIATE_TEST_SUITE_P(ThreeInATree, Solvers, ::testing::Values(0, 1),
                         [](const auto& info) {
                           return info.param == 0 ? std::string("Exhaustive")
                                                  : std::string("PathGrowth");
                         });

TEST(ThreeInATree, ExhaustiveReturnsMinimumWitness) {
  // Two routes from 0 to 3; the short one wins.
  Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 3}, {1, 5}});
  auto w = ExhaustiveTreeSolver().solve({g, {0, 1, 3}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->nodes, (NodeSet{0, 1, 2, 3}));
}

TEST(ThreeInATree, BackendsAgreeOnLargerGraphs) {
  const ExhaustiveTreeSolver exhaustive;
  const PathGrowthTreeSolver growth;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = testing::random_graph(12, 0.18, seed);
    const std::array<Node, 3> z{1, 5, 10};
    EXPECT_EQ(exhaustive.solve({g, z}).has_value(), growth.solve({g, z}).has_value())
        << "seed " << seed;
  }
}

TEST(ThreeInATree, BudgetIsEnforced) {
  Graph g = testing::random_graph(16, 0.2, 3);
  EXPECT_THROW(ExhaustiveTreeSolver(3).solve({g, {0, 7, 15}}), BudgetExceeded);
}

}  // namespace
}  // namespace evenhole

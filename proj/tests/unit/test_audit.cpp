#include <gtest/gtest.h>

#include "evenhole/audit.hpp"
#include "evenhole/generators.hpp"
#include "test_util.hpp"

namespace evenhole {
namespace {

TEST(Audit, SkipsWithoutEvenHoles) {
  for (const Graph& g : {cycle_graph(7), complete_graph(4)}) {
    auto r = audit_lemmas(g);
    ASSERT_EQ(r.entries.size(), std::size(kAllAuditChecks));
    for (const auto& e : r.entries) EXPECT_EQ(e.status, AuditStatus::Skip);
    EXPECT_FALSE(r.any_fail());
  }
}

TEST(Audit, PreconditionsGateTheChecks) {
  auto c4 = audit_lemmas(cycle_graph(4));
  EXPECT_EQ(c4.at(AuditCheck::MajorParity).status, AuditStatus::Pass);
  EXPECT_EQ(c4.at(AuditCheck::Gate).status, AuditStatus::Skip);

  auto c6 = audit_lemmas(cycle_graph(6));
  for (const auto& e : c6.entries) EXPECT_EQ(e.status, AuditStatus::Pass) << to_string(e.check);

  auto b8 = audit_lemmas(named_graph("beetle8"));
  EXPECT_EQ(b8.at(AuditCheck::CleanHoleNeighbors).status, AuditStatus::Skip);
  EXPECT_EQ(b8.at(AuditCheck::N22OnEdge).status, AuditStatus::Pass);
}

TEST(Audit, NoFailuresOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = testing::random_graph(7 + static_cast<int>(seed % 4), 0.3, seed);
    auto r = audit_lemmas(g);
    for (const auto& e : r.entries) {
      EXPECT_NE(e.status, AuditStatus::Fail) << to_string(e.check) << " " << e.witness;
    }
  }
}

TEST(IsGate, Examples) {
  const Hole h = Hole::canonical({0, 1, 2, 3, 4, 5});
  // 6 and 7 both see 0, 1, 3; u0 = 3 closes both arcs.
  Graph g = testing::cycle_plus(6, {{6, 0}, {6, 1}, {6, 3}, {7, 0}, {7, 1}, {7, 3}}, 2);
  EXPECT_TRUE(is_gate(g, h, 0, 1, 6, 7));
  EXPECT_FALSE(is_gate(g, h, 1, 2, 6, 7));  // 2 misses 6
  EXPECT_FALSE(is_gate(g, h, 0, 2, 6, 7));  // not a hole edge

  // 7 sees 4 instead of 3: no u0 bounds both arcs.
  Graph apart = testing::cycle_plus(6, {{6, 0}, {6, 1}, {6, 3}, {7, 0}, {7, 1}, {7, 4}}, 2);
  EXPECT_FALSE(is_gate(apart, h, 0, 1, 6, 7));
}

TEST(Audit, Names) {
  EXPECT_EQ(to_string(AuditStatus::Fail), "FAIL");
  EXPECT_EQ(to_string(AuditCheck::MajorParity), "major-parity");
}

}  // namespace
}  // namespace evenhole

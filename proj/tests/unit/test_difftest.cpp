#include <gtest/gtest.h>

#include "evenhole/difftest.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/io.hpp"

namespace evenhole {
namespace {

DifftestOptions single() {
  DifftestOptions o;
  o.threads = 1;
  return o;
}

TEST(Difftest, ExhaustiveSmallOrdersAgree) {
  for (int n = 1; n <= 6; ++n) {
    DifftestReport r = run_corpus(exhaustive_corpus(n, false), single());
    EXPECT_TRUE(r.ok()) << "n " << n;
    EXPECT_EQ(r.graphs, std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Difftest, ConnectedOnlySkips) {
  DifftestReport r = run_corpus(exhaustive_corpus(4, true), single());
  // 38 of the 64 labeled graphs on four nodes are connected.
  EXPECT_EQ(r.graphs, 38u);
  EXPECT_EQ(r.skipped, 26u);
}

TEST(Difftest, RandomCorporaAgree) {
  DifftestOptions o = single();
  o.check_find = true;
  DifftestReport r = run_corpus(gnp_corpus(12, 0.35, 300, 5), o);
  r += run_corpus(chordal_corpus(30, 5, 100, 6), o);
  r += run_corpus(ect_corpus(14, 200, 7), o);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.graphs, 600u);
  EXPECT_GT(r.contains, 0u);
  EXPECT_EQ(r.find_checks, r.contains);
}

TEST(Difftest, WorkerCountDoesNotChangeTheReport) {
  DifftestOptions one = single();
  DifftestOptions four = single();
  four.threads = 4;
  Corpus c = gnp_corpus(10, 0.3, 200, 11);
  DifftestReport a = run_corpus(c, one), b = run_corpus(c, four);
  EXPECT_EQ(a.graphs, b.graphs);
  EXPECT_EQ(a.contains, b.contains);
  EXPECT_EQ(a.certificates, b.certificates);
  EXPECT_EQ(a.max_trackers, b.max_trackers);
}

TEST(Difftest, FlippedMarkerParityIsReported) {
  DifftestOptions o = single();
  o.target = DifftestTarget::NoStarCutset;
  o.pipeline.two_join.flip_marker_parity = true;
  DifftestReport r = run_corpus(two_join_corpus(12, 6000, 1), o);
  EXPECT_GT(r.parity_violations, 0u);
  ASSERT_TRUE(r.first_mismatch);
  EXPECT_EQ(r.first_mismatch->kind, "block-parity");
  LoadedGraph lg = parse_graph6(r.first_mismatch->graph6);
  EXPECT_EQ(has_even_hole(lg.graph), r.first_mismatch->oracle);
  EXPECT_FALSE(r.first_mismatch->shrunk_graph6.empty());
  EXPECT_LE(r.first_mismatch->shrunk_order, lg.graph.order());

  o.pipeline.two_join.flip_marker_parity = false;
  DifftestReport clean = run_corpus(two_join_corpus(12, 6000, 1), o);
  EXPECT_TRUE(clean.ok());
  EXPECT_GT(clean.parity_checks, 20u);
}

TEST(ShrinkGraph, KeepsTheFailure) {
  // "Has a 4-hole" shrinks a C4 with pendants down to the C4.
  Graph g = Graph(7, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {2, 6}});
  Graph s = shrink_graph(g, [](const Graph& h) {
    return !enumerate_holes(h, {.max_len = 4}).empty();
  });
  EXPECT_EQ(s.order(), 4);
  EXPECT_EQ(s.size(), 4u);
}

}  // namespace
}  // namespace evenhole

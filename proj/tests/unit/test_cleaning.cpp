#include <gtest/gtest.h>

#include "evenhole/cleaning.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/holes.hpp"
#include "test_util.hpp"

namespace evenhole {
namespace {

using testing::make_graph;

const PathGrowthTreeSolver kSolver;

TEST(Find4Hole, Examples) {
  EXPECT_EQ(find_4_hole(cycle_graph(4)), Hole::canonical({0, 1, 2, 3}));
  EXPECT_FALSE(find_4_hole(complete_graph(4)));
  EXPECT_FALSE(find_4_hole(cycle_graph(6)));
}

TEST(Find4Hole, LeastOfAllFourHoles) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = testing::random_graph(9, 0.35, seed);
    auto holes = enumerate_holes(g, {.max_len = 4});
    auto got = find_4_hole(g);
    if (holes.empty()) {
      EXPECT_FALSE(got);
    } else {
      EXPECT_EQ(got, *std::min_element(holes.begin(), holes.end()));
    }
  }
}

TEST(IsBeetle, Beetle8) {
  Graph g = named_graph("beetle8");
  EXPECT_TRUE(is_beetle(g, {{0, 1, 2, 3}, {4, 5, 6}, {4, 5, 6, 7}}));
  // Wrong body, missing center.
  EXPECT_FALSE(is_beetle(g, {{0, 1, 2, 3}, {4, 5, 6}, {4, 5, 6}}));
  // b2b4 must be the chord.
  EXPECT_FALSE(is_beetle(g, {{1, 0, 3, 2}, {5, 4, 6}, {4, 5, 6, 7}}));
}

TEST(FindBeetle, Examples) {
  Graph g = named_graph("beetle8");
  auto b = find_beetle(g, kSolver);
  ASSERT_TRUE(b);
  EXPECT_TRUE(is_beetle(g, *b));
  NodeSet diamond(b->diamond.begin(), b->diamond.end());
  std::sort(diamond.begin(), diamond.end());
  EXPECT_EQ(diamond, (NodeSet{0, 1, 2, 3}));

  EXPECT_FALSE(find_beetle(cycle_graph(6), kSolver));
  EXPECT_FALSE(find_beetle(complete_graph(4), kSolver));
}

TEST(BeetleEvenHole, Beetle8) {
  Graph g = named_graph("beetle8");
  Hole h = beetle_even_hole(g, *find_beetle(g, kSolver));
  EXPECT_EQ(h, Hole::canonical({0, 3, 2, 6, 7, 4}));
}

TEST(BeetleEvenHole, EveryLegParity) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        Graph g = beetle_graph({a, b, c});
        auto beetle = find_beetle(g, kSolver);
        ASSERT_TRUE(beetle) << a << b << c;
        Hole h = beetle_even_hole(g, *beetle);
        EXPECT_TRUE(is_even_hole(g, h.nodes)) << a << b << c;
      }
    }
  }
}

// Every diamond, every choice of feet outside it and every body subset,
// checked with the definition.
bool brute_has_beetle(const Graph& g) {
  const int n = g.order();
  for (Node b1 = 0; b1 < n; ++b1)
    for (Node b2 = 0; b2 < n; ++b2)
      for (Node b3 = 0; b3 < n; ++b3)
        for (Node b4 = 0; b4 < n; ++b4) {
          if (b1 == b2 || b1 == b3 || b1 == b4 || b2 == b3 || b2 == b4 || b3 == b4) continue;
          if (!g.adjacent(b1, b2) || !g.adjacent(b2, b3) || !g.adjacent(b3, b4) ||
              !g.adjacent(b1, b4) || !g.adjacent(b2, b4) || g.adjacent(b1, b3)) {
            continue;
          }
          std::uint64_t outside = 0;
          for (Node v = 0; v < n; ++v) {
            if (v != b1 && v != b2 && v != b3 && v != b4) outside |= std::uint64_t{1} << v;
          }
          for (std::uint64_t body = outside;; body = (body - 1) & outside) {
            auto nodes = testing::members(n, body);
            for (Node f5 : nodes) {
              if (!g.adjacent(b1, f5)) continue;
              for (Node f6 : nodes) {
                if (!g.adjacent(b2, f6)) continue;
                for (Node f7 : nodes) {
                  if (!g.adjacent(b3, f7)) continue;
                  if (is_beetle(g, {{b1, b2, b3, b4}, {f5, f6, f7}, nodes})) return true;
                }
              }
            }
            if (body == 0) break;
          }
        }
  return false;
}

TEST(FindBeetle, AgreesWithDefinitionSearch) {
  int positives = 0;
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    Rng rng(derive_seed(seed, 1));
    Graph g;
    if (seed % 2 == 0) {
      g = testing::random_graph(8 + static_cast<int>(seed % 3 == 0), 0.3, seed);
    } else {
      // A beetle with random extra edges and possibly one extra node.
      Graph base = beetle_graph({1, 1, 1});
      const int n = 8 + static_cast<int>(rng() % 2);
      EdgeList e = base.edge_list();
      for (Node u = 0; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) {
          if (rng() % 100 < (v >= 8 ? 40u : 6u)) e.emplace_back(u, v);
        }
      }
      g = Graph(n, e);
    }
    const bool want = brute_has_beetle(g);
    positives += want;
    auto got = find_beetle(g, kSolver);
    EXPECT_EQ(got.has_value(), want) << "seed " << seed;
    if (got) { EXPECT_TRUE(is_beetle(g, *got)); }
  }
  EXPECT_GT(positives, 10);
}

TEST(MaximalCliques, Examples) {
  auto k4 = std::get<CliqueList>(maximal_cliques_capped(complete_graph(4), 100));
  EXPECT_EQ(k4, (CliqueList{{0, 1, 2, 3}}));
  auto c6 = std::get<CliqueList>(maximal_cliques_capped(cycle_graph(6), 100));
  EXPECT_EQ(c6.size(), 6u);
  auto capped = maximal_cliques_capped(cycle_graph(4), 1);
  ASSERT_TRUE(std::holds_alternative<CliqueCapExceeded>(capped));
  EXPECT_EQ(std::get<CliqueCapExceeded>(capped).cap, 1u);
  // Reaching the cap exactly counts as exceeding it.
  EXPECT_TRUE(std::holds_alternative<CliqueCapExceeded>(maximal_cliques_capped(cycle_graph(4), 4)));
  EXPECT_TRUE(std::holds_alternative<CliqueList>(maximal_cliques_capped(cycle_graph(4), 5)));
}

TEST(MaximalCliques, MatchBruteForce) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Graph g = testing::random_graph(11, 0.15 + 0.05 * static_cast<double>(seed % 10), seed);
    auto got = std::get<CliqueList>(maximal_cliques_capped(g, 1 << 20));
    EXPECT_EQ(got, testing::brute_maximal_cliques(g)) << "seed " << seed;
  }
}

TEST(TrackerFormulas, C6Examples) {
  Graph c6 = cycle_graph(6);
  EXPECT_TRUE(s1_deletion(c6, 0, 1, 2, 3, 4).none());
  NodeBits s2 = s2_deletion(c6, 0, 1, NodeSet{3, 4});
  EXPECT_EQ(to_set(s2), (NodeSet{3, 4}));

  auto cliques = std::get<CliqueList>(maximal_cliques_capped(c6, 100));
  TrackerSet set = generate_trackers(c6, cliques);
  auto has = [&](NodeSet keep, std::array<Node, 3> path) {
    return std::any_of(set.trackers.begin(), set.trackers.end(), [&](const TrackerSpec& t) {
      return to_set(t.keep) == keep && t.path == path;
    });
  };
  EXPECT_TRUE(has({0, 1, 2, 3, 4, 5}, {0, 1, 2}));
  EXPECT_TRUE(has({0, 1, 2, 5}, {0, 1, 2}));
}

TEST(TrackerFormulas, MatchDefinitions) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = testing::random_graph(9, 0.35, seed);
    for (Node u1 = 0; u1 < 9; ++u1)
      for (Node u2 : g.neighbors(u1))
        for (Node u3 : g.neighbors(u2)) {
          if (u3 == u1 || g.adjacent(u1, u3)) continue;
          for (auto [v1, v2] : g.edge_list()) {
            NodeSet want;
            for (Node x = 0; x < 9; ++x) {
              const bool common = g.adjacent(x, v1) && g.adjacent(x, v2);
              const bool around = g.adjacent(x, u2) && x != u1 && x != u3;
              if (common || around) want.push_back(x);
            }
            EXPECT_EQ(to_set(s1_deletion(g, u1, u2, u3, v1, v2)), want);
          }
        }
  }
}

TEST(GenerateTrackers, CompleteGraphHasNone) {
  Graph k4 = complete_graph(4);
  auto cliques = std::get<CliqueList>(maximal_cliques_capped(k4, 100));
  EXPECT_TRUE(generate_trackers(k4, cliques).trackers.empty());
}

TEST(GenerateTrackers, ValidDistinctAndBounded) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::random_graph(10, 0.2 + 0.03 * static_cast<double>(seed % 8), seed);
    auto cliques = std::get<CliqueList>(maximal_cliques_capped(g, 1 << 20));
    TrackerSet set = generate_trackers(g, cliques);
    const std::size_t m = g.size();
    EXPECT_LE(set.trackers.size(), 4 * m * m * static_cast<std::size_t>(g.order()));
    std::set<std::pair<NodeBits, std::array<Node, 3>>> seen;
    for (const TrackerSpec& spec : set.trackers) {
      EXPECT_LT(spec.path[0], spec.path[2]);
      EXPECT_TRUE(seen.insert({spec.keep, spec.path}).second);
      Tracker t = materialize(g, spec);
      EXPECT_TRUE(is_valid_tracker(t));
      EXPECT_EQ(t.host.label(t.u1), spec.path[0]);
      EXPECT_EQ(t.host.label(t.u2), spec.path[1]);
      EXPECT_EQ(t.host.label(t.u3), spec.path[2]);
    }
  }
}

// Some tracker is lucky whenever the graph is 4-hole-free, beetle-free and
// has an even hole.
void expect_some_lucky_tracker(const Graph& g, const std::string& what) {
  auto cliques = std::get<CliqueList>(maximal_cliques_capped(g, 1 << 20));
  TrackerSet set = generate_trackers(g, cliques);
  const bool lucky = std::any_of(set.trackers.begin(), set.trackers.end(), [&](const auto& s) {
    Tracker t = materialize(g, s);
    return is_lucky(t.host, t.u1, t.u2, t.u3);
  });
  EXPECT_TRUE(lucky) << what;
}

TEST(GenerateTrackers, SomeTrackerIsLuckyExhaustiveSmall) {
  int checked = 0;
  for (int n = 5; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g = testing::from_mask(n, mask);
      if (find_4_hole(g) || !has_even_hole(g) || find_beetle(g, kSolver)) continue;
      ++checked;
      expect_some_lucky_tracker(g, "n " + std::to_string(n) + " mask " + std::to_string(mask));
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(GenerateTrackers, SomeTrackerIsLuckyRandom) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 150 && seed < 20000; ++seed) {
    const int n = 7 + static_cast<int>(seed % 3);
    Graph g = testing::random_graph(n, 0.22, seed);
    if (find_4_hole(g) || !has_even_hole(g) || find_beetle(g, kSolver)) continue;
    ++checked;
    expect_some_lucky_tracker(g, "seed " + std::to_string(seed));
  }
  EXPECT_EQ(checked, 150);
}

TEST(CleanPhase, Examples) {
  auto c4 = clean_phase(cycle_graph(4), kSolver);
  ASSERT_TRUE(std::holds_alternative<EvenHoleFound>(c4));
  EXPECT_EQ(std::get<EvenHoleFound>(c4).reason, EvenHoleFound::Reason::FourHole);
  EXPECT_EQ(std::get<EvenHoleFound>(c4).certificate, Hole::canonical({0, 1, 2, 3}));

  auto b8 = clean_phase(named_graph("beetle8"), kSolver);
  ASSERT_TRUE(std::holds_alternative<EvenHoleFound>(b8));
  EXPECT_EQ(std::get<EvenHoleFound>(b8).reason, EvenHoleFound::Reason::Beetle);
  EXPECT_EQ(std::get<EvenHoleFound>(b8).certificate, Hole::canonical({0, 3, 2, 6, 7, 4}));

  auto c7 = clean_phase(cycle_graph(7), kSolver);
  ASSERT_TRUE(std::holds_alternative<TrackerSet>(c7));
  EXPECT_FALSE(std::get<TrackerSet>(c7).trackers.empty());
}

}  // namespace
}  // namespace evenhole

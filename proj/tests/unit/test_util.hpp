#ifndef EVENHOLE_TEST_UTIL_HPP
#define EVENHOLE_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "evenhole/generators.hpp"
#include "evenhole/graph.hpp"

namespace evenhole::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<Node, Node>> edges) {
  EdgeList e(edges);
  return Graph(n, e);
}

/// Cycle c1..ck as nodes 0..k-1 plus extra edges.
inline Graph cycle_plus(int k, std::initializer_list<std::pair<Node, Node>> extra, int extra_nodes = 0) {
  EdgeList e;
  for (Node i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph(k + extra_nodes, e);
}

inline Graph from_mask(int n, std::uint64_t mask) {
  EdgeList e;
  int k = 0;
  for (Node v = 1; v < n; ++v) {
    for (Node u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

inline std::vector<Node> members(int n, std::uint64_t subset) {
  std::vector<Node> out;
  for (Node v = 0; v < n; ++v) {
    if ((subset >> v) & 1) out.push_back(v);
  }
  return out;
}

/// The subset induces a cycle on at least four nodes: every member has
/// exactly two neighbors inside and the members are connected.
inline bool subset_is_hole(const Graph& g, const std::vector<Node>& s) {
  if (s.size() < 4) return false;
  std::uint64_t in = 0;
  for (Node v : s) in |= std::uint64_t{1} << v;
  for (Node v : s) {
    int d = 0;
    for (Node w : g.neighbors(v)) d += (in >> w) & 1;
    if (d != 2) return false;
  }
  std::uint64_t seen = std::uint64_t{1} << s[0];
  std::vector<Node> stack{s[0]};
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node w : g.neighbors(v)) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      if ((in & bit) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(w);
      }
    }
  }
  return seen == in;
}

/// Node sets of all holes, by subset enumeration. n <= 20.
inline std::set<std::vector<Node>> brute_holes(const Graph& g) {
  std::set<std::vector<Node>> out;
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) < 4) continue;
    auto m = members(n, s);
    if (subset_is_hole(g, m)) out.insert(m);
  }
  return out;
}

inline bool brute_has_even_hole(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int c = __builtin_popcountll(s);
    if (c < 4 || c % 2) continue;
    if (subset_is_hole(g, members(n, s))) return true;
  }
  return false;
}

inline bool brute_is_clique(const Graph& g, const std::vector<Node>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<Node>> brute_maximal_cliques(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Node>> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    auto m = members(n, s);
    if (!brute_is_clique(g, m)) continue;
    bool maximal = true;
    for (Node v = 0; v < n && maximal; ++v) {
      if ((s >> v) & 1) continue;
      auto bigger = m;
      bigger.push_back(v);
      if (brute_is_clique(g, bigger)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  return gnp(n, p, rng);
}

}  // namespace evenhole::testing

#endif  // EVENHOLE_TEST_UTIL_HPP

#include "evenhole/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "evenhole/errors.hpp"

namespace evenhole {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  const std::uint64_t base = splitmix64(state);
  state = base ^ (stream * 0xd1342543de82ef95ULL);
  return splitmix64(state);
}

namespace {

constexpr int kMaxGeneratedOrder = 1 << 15;

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_order(int n, int lo, const char* what) {
  require(n >= lo && n <= kMaxGeneratedOrder,
          std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
              std::to_string(kMaxGeneratedOrder) + "]");
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

Graph permuted(const Graph& g, Rng& rng) {
  std::vector<Node> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EdgeList edges;
  for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace

Graph gnp(int n, double p, Rng& rng) {
  require_order(n, 0, "gnp order");
  require(p >= 0 && p <= 1, "gnp probability must lie in [0, 1]");
  EdgeList edges;
  for (Node v = 1; v < n; ++v) {
    for (Node u = 0; u < v; ++u) {
      if (coin(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph cycle_graph(int k) {
  require_order(k, 3, "cycle length");
  EdgeList edges;
  for (Node i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges);
}

Graph path_graph(int k) {
  require_order(k, 1, "path order");
  EdgeList edges;
  for (Node i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

Graph complete_graph(int k) {
  require_order(k, 1, "clique order");
  EdgeList edges;
  for (Node v = 1; v < k; ++v) {
    for (Node u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return Graph(k, edges);
}

Graph random_chordal(int n, int max_clique, Rng& rng) {
  require_order(n, 1, "chordal order");
  require(max_clique >= 1, "chordal clique bound must be positive");
  // Each new node is simplicial: it joins a subset of an existing clique of
  // the clique tree, and that subset plus the node becomes a new clique.
  std::vector<NodeSet> cliques{{0}};
  EdgeList edges;
  for (Node v = 1; v < n; ++v) {
    NodeSet q = cliques[uniform_int(rng, 0, static_cast<int>(cliques.size()) - 1)];
    std::shuffle(q.begin(), q.end(), rng);
    const int cap = std::min(static_cast<int>(q.size()), max_clique - 1);
    const int take = cap == 0 ? 0 : uniform_int(rng, 1, cap);
    q.resize(take);
    for (Node u : q) edges.emplace_back(u, v);
    q.push_back(v);
    std::sort(q.begin(), q.end());
    cliques.push_back(std::move(q));
  }
  return Graph(n, edges);
}

Graph random_ect(int n, Rng& rng) {
  require_order(n, 1, "ect order");
  const int extra = uniform_int(rng, 0, std::min(2, n - 1));
  const int base = n - extra;
  EdgeList edges;
  int placed = 1;
  while (placed < base) {
    const Node cut = uniform_int(rng, 0, placed - 1);
    const int size = uniform_int(rng, 2, std::min(4, base - placed + 1));
    NodeSet block{cut};
    for (int i = 1; i < size; ++i) block.push_back(placed++);
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) edges.emplace_back(block[i], block[j]);
    }
  }
  for (Node x = base; x < n; ++x) {
    for (Node u = 0; u < x; ++u) {
      if (coin(rng, 0.5)) edges.emplace_back(u, x);
    }
  }
  return permuted(Graph(n, edges), rng);
}

Graph random_two_join(int max_n, Rng& rng) {
  require_order(max_n, 4, "twojoin order");
  // Each side: an X clique and a Y clique (one or two nodes each) joined by
  // two or three short paths, plus a few chords. Redrawn until it fits.
  while (true) {
    EdgeList edges;
    std::array<NodeSet, 2> xs, ys;
    int n = 0;
    const double chord = coin(rng, 0.5) ? 0.0 : 0.15;
    for (int side = 0; side < 2; ++side) {
      NodeSet& x = xs[side];
      NodeSet& y = ys[side];
      for (int i = uniform_int(rng, 1, 2); i > 0; --i) x.push_back(n++);
      for (int i = uniform_int(rng, 1, 2); i > 0; --i) y.push_back(n++);
      if (x.size() == 2) edges.emplace_back(x[0], x[1]);
      if (y.size() == 2) edges.emplace_back(y[0], y[1]);
      const Node first_inner = n;
      for (int paths = uniform_int(rng, 2, 3); paths > 0; --paths) {
        const Node a = x[uniform_int(rng, 0, static_cast<int>(x.size()) - 1)];
        const Node b = y[uniform_int(rng, 0, static_cast<int>(y.size()) - 1)];
        Node prev = a;
        for (int step = uniform_int(rng, 1, 3); step > 1; --step) {
          edges.emplace_back(prev, n);
          prev = n++;
        }
        edges.emplace_back(prev, b);
      }
      for (Node u = first_inner; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) {
          if (coin(rng, chord)) edges.emplace_back(u, v);
        }
      }
    }
    for (Node a : xs[0]) for (Node b : xs[1]) edges.emplace_back(a, b);
    for (Node a : ys[0]) for (Node b : ys[1]) edges.emplace_back(a, b);
    if (n <= max_n) return permuted(Graph(n, edges), rng);
  }
}

Graph beetle_graph(const std::array<int, 3>& legs) {
  for (int l : legs) require(l >= 1 && l <= kMaxGeneratedOrder / 4, "beetle legs must be >= 1");
  EdgeList edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
  const int n = 5 + legs[0] + legs[1] + legs[2];
  const Node center = n - 1;
  Node next = 4;
  for (int i = 0; i < 3; ++i) {
    Node prev = i;  // diamond corner b1, b2 or b3
    for (int step = 0; step < legs[i]; ++step) {
      const Node v = next++;
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, center);
  }
  return Graph(n, edges);
}

Graph theta_graph(const std::array<int, 3>& legs) {
  int ones = 0;
  for (int l : legs) {
    require(l >= 1 && l <= kMaxGeneratedOrder / 4, "theta legs must be >= 1");
    ones += l == 1;
  }
  require(ones <= 1, "at most one theta leg may be a single edge");
  const int n = 2 + (legs[0] - 1) + (legs[1] - 1) + (legs[2] - 1);
  EdgeList edges;
  Node next = 2;
  for (int l : legs) {
    Node prev = 0;
    for (int step = 1; step < l; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph(n, edges);
}

Graph named_graph(std::string_view id) {
  if (id == "petersen") {
    EdgeList edges;
    for (Node i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
  }
  if (id == "beetle8") return beetle_graph({1, 1, 1});
  if (id == "theta6") {
    // s, s1, s2, x, y1, y2
    const EdgeList edges{{0, 1}, {0, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 5}, {5, 2}};
    return Graph(6, edges);
  }
  if (id == "theta4") {
    // a1, c1, b1, d1, a2, c2, b2, d2
    const EdgeList edges{{0, 1}, {1, 2}, {1, 3}, {4, 5}, {5, 6}, {5, 7}, {0, 4}, {2, 6}};
    return Graph(8, edges);
  }
  throw InputError("unknown named graph '" + std::string(id) + "'");
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (end == std::string_view::npos) return out;
    pos = end + 1;
  }
}

template <class T>
T number(std::string_view s, std::string_view spec) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad number '" + std::string(s) + "' in graph spec '" +
                     std::string(spec) + "'");
  }
  return value;
}

std::array<int, 3> legs_of(std::string_view s, std::string_view spec) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw InputError("expected three leg lengths in '" + std::string(spec) + "'");
  return {number<int>(parts[0], spec), number<int>(parts[1], spec), number<int>(parts[2], spec)};
}

std::string legs_str(const std::array<int, 3>& l) {
  return std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]);
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  auto parts = split(text, ':');
  const std::string_view kind = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw InputError("graph spec '" + std::string(text) + "' expects " + std::to_string(k) +
                       " parameter(s)");
    }
  };
  GraphSpec spec;
  if (kind == "gnp") {
    arity(2);
    spec = gen::Gnp{number<int>(parts[1], text), number<double>(parts[2], text)};
  } else if (kind == "cycle") {
    arity(1);
    spec = gen::Cycle{number<int>(parts[1], text)};
  } else if (kind == "path") {
    arity(1);
    spec = gen::PathGraph{number<int>(parts[1], text)};
  } else if (kind == "complete") {
    arity(1);
    spec = gen::Complete{number<int>(parts[1], text)};
  } else if (kind == "chordal") {
    arity(2);
    spec = gen::Chordal{number<int>(parts[1], text), number<int>(parts[2], text)};
  } else if (kind == "ect") {
    arity(1);
    spec = gen::Ect{number<int>(parts[1], text)};
  } else if (kind == "beetle") {
    arity(1);
    spec = gen::Beetle{legs_of(parts[1], text)};
  } else if (kind == "theta") {
    arity(1);
    spec = gen::Theta{legs_of(parts[1], text)};
  } else if (kind == "twojoin") {
    arity(1);
    spec = gen::TwoJoin{number<int>(parts[1], text)};
  } else if (kind == "named") {
    arity(1);
    spec = gen::Named{std::string(parts[1])};
  } else {
    throw InputError("unknown graph kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string to_string(const GraphSpec& spec) {
  struct Visitor {
    std::string operator()(const gen::Gnp& s) const {
      std::ostringstream p;
      p << s.p;
      return "gnp:" + std::to_string(s.n) + ":" + p.str();
    }
    std::string operator()(const gen::Cycle& s) const { return "cycle:" + std::to_string(s.k); }
    std::string operator()(const gen::PathGraph& s) const { return "path:" + std::to_string(s.k); }
    std::string operator()(const gen::Complete& s) const {
      return "complete:" + std::to_string(s.k);
    }
    std::string operator()(const gen::Chordal& s) const {
      return "chordal:" + std::to_string(s.n) + ":" + std::to_string(s.max_clique);
    }
    std::string operator()(const gen::Ect& s) const { return "ect:" + std::to_string(s.n); }
    std::string operator()(const gen::Beetle& s) const { return "beetle:" + legs_str(s.legs); }
    std::string operator()(const gen::Theta& s) const { return "theta:" + legs_str(s.legs); }
    std::string operator()(const gen::TwoJoin& s) const {
      return "twojoin:" + std::to_string(s.n);
    }
    std::string operator()(const gen::Named& s) const { return "named:" + s.id; }
  };
  return std::visit(Visitor{}, spec);
}

Graph generate(const GraphSpec& spec, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  struct Visitor {
    Rng& rng;
    Graph operator()(const gen::Gnp& s) const { return gnp(s.n, s.p, rng); }
    Graph operator()(const gen::Cycle& s) const { return cycle_graph(s.k); }
    Graph operator()(const gen::PathGraph& s) const { return path_graph(s.k); }
    Graph operator()(const gen::Complete& s) const { return complete_graph(s.k); }
    Graph operator()(const gen::Chordal& s) const {
      return random_chordal(s.n, s.max_clique, rng);
    }
    Graph operator()(const gen::Ect& s) const { return random_ect(s.n, rng); }
    Graph operator()(const gen::Beetle& s) const { return beetle_graph(s.legs); }
    Graph operator()(const gen::Theta& s) const { return theta_graph(s.legs); }
    Graph operator()(const gen::TwoJoin& s) const { return random_two_join(s.n, rng); }
    Graph operator()(const gen::Named& s) const { return named_graph(s.id); }
  };
  return std::visit(Visitor{rng}, spec);
}

}  // namespace evenhole

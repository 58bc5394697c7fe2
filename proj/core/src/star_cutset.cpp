#include "evenhole/star_cutset.hpp"

#include <algorithm>

#include "evenhole/errors.hpp"

namespace evenhole {

namespace {

bool path_ok(const Graph& h, const NodeBits& alive, Node u1, Node u2, Node u3) {
  if (u1 == u2 || u2 == u3 || u1 == u3) return false;
  if (!alive.test(u1) || !alive.test(u2) || !alive.test(u3)) return false;
  return h.adjacent(u1, u2) && h.adjacent(u2, u3) && !h.adjacent(u1, u3);
}

// Host-id position of every kept node.
std::vector<int> rank_of(const NodeBits& keep) {
  std::vector<int> index(keep.size(), -1);
  int next = 0;
  for (auto v = keep.find_first(); v != NodeBits::npos; v = keep.find_next(v)) {
    index[v] = next++;
  }
  return index;
}

Tracker restrict_tracker(const Tracker& t, const NodeBits& keep) {
  auto index = rank_of(keep);
  return Tracker{induced_subgraph(t.host, keep), index[t.u1], index[t.u2],
                 index[t.u3]};
}

int component_count(const Graph& h, const NodeBits& within) {
  int count = 0;
  component_labels(h, within, &count);
  return count;
}

}  // namespace

DominationResult remove_dominated(const Tracker& t) {
  const Graph& h = t.host;
  const int n = h.order();
  std::vector<NodeBits> closed;
  closed.reserve(n);
  for (Node v = 0; v < n; ++v) closed.push_back(h.closed_neighbor_bits(v));

  NodeBits alive(n);
  alive.set();
  Node u[3] = {t.u1, t.u2, t.u3};
  std::size_t removed = 0;

  while (true) {
    Node x_hit = -1, y_hit = -1;
    // A dominated node is adjacent to its dominator, so only edges matter.
    for (auto xv = alive.find_first(); xv != NodeBits::npos && x_hit < 0;
         xv = alive.find_next(xv)) {
      const Node x = static_cast<Node>(xv);
      for (Node y : h.neighbors(x)) {
        if (!alive.test(y)) continue;
        if (subset_within(closed[y], alive, closed[x])) {
          x_hit = x;
          y_hit = y;
          break;
        }
      }
    }
    if (x_hit < 0) break;
    for (Node& p : u) {
      if (p == y_hit) p = x_hit;
    }
    alive.reset(y_hit);
    ++removed;
    if (!path_ok(h, alive, u[0], u[1], u[2])) {
      return {Tracker{h, t.u1, t.u2, t.u3}, true, removed};
    }
  }
  Tracker out{h, u[0], u[1], u[2]};
  if (removed > 0) out = restrict_tracker(out, alive);
  return {std::move(out), false, removed};
}

std::optional<StarCutset> find_full_star_cutset(const Graph& h) {
  const int n = h.order();
  NodeBits all(n);
  all.set();
  const int base = component_count(h, all);
  for (Node s = 0; s < n; ++s) {
    NodeBits rest = all - h.closed_neighbor_bits(s);
    if (component_count(h, rest) > base) {
      return StarCutset{s, to_set(h.closed_neighbor_bits(s))};
    }
  }
  return std::nullopt;
}

std::optional<B2Witness> check_condition_B2(const Graph& h, const StarCutset& s) {
  NodeBits in_s = to_bits(h.order(), s.nodes);
  NodeBits rest = ~in_s;
  int count = 0;
  const auto comp = component_labels(h, rest, &count);
  if (count < 2) return std::nullopt;

  // touches[v]: components adjacent to v, ascending.
  auto touches = [&](Node v) {
    std::vector<int> cs;
    for (Node w : h.neighbors(v)) {
      if (comp[w] >= 0) cs.push_back(comp[w]);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
  };
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const Node s1 = s.nodes[i];
    const auto c1 = touches(s1);
    if (c1.size() < 2) continue;
    for (std::size_t j = i + 1; j < s.nodes.size(); ++j) {
      const Node s2 = s.nodes[j];
      if (h.adjacent(s1, s2)) continue;
      const auto c2 = touches(s2);
      std::vector<int> both;
      std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                            std::back_inserter(both));
      if (both.size() < 2) continue;
      B2Witness w{s1, s2, {}, {}};
      for (Node v = 0; v < h.order(); ++v) {
        if (comp[v] == both[0]) w.b1.push_back(v);
        if (comp[v] == both[1]) w.b2.push_back(v);
      }
      return w;
    }
  }
  return std::nullopt;
}

Hole extract_even_hole_B2(const Graph& h, Node s, const B2Witness& w) {
  if (h.adjacent(w.s1, w.s2)) throw InputError("B2 witness nodes are adjacent");
  auto p1 = shortest_path_restricted(h, w.s1, w.s2, to_bits(h.order(), w.b1));
  auto p2 = shortest_path_restricted(h, w.s1, w.s2, to_bits(h.order(), w.b2));
  if (!p1 || !p2) throw InputError("B2 witness components do not join s1 and s2");

  std::vector<Node> theta(*p1);
  theta.insert(theta.end(), p2->rbegin() + 1, p2->rend() - 1);
  std::vector<Node> with_p1(*p1);
  with_p1.push_back(s);
  std::vector<Node> with_p2(*p2);
  with_p2.push_back(s);
  for (const auto* c : {&theta, &with_p1, &with_p2}) {
    if (is_even_hole(h, *c)) return Hole::canonical(*c);
  }
  throw InternalError("no even hole among the three B2 cycles");
}

ReductionOutcome star_cutset_reduce(const Tracker& input) {
  if (!is_valid_tracker(input)) throw InputError("invalid tracker");
  ReductionOutcome out{Task2{}, 0, 0};
  Tracker t = input;
  const std::size_t limit = static_cast<std::size_t>(input.host.order()) + 1;

  while (true) {
    if (++out.iterations > limit) {
      throw InternalError("star-cutset reduction failed to shrink the graph");
    }
    auto dom = remove_dominated(t);
    out.dominated_removed += dom.removed;
    if (dom.degenerate) {
      out.result = Task2{};
      return out;
    }
    t = std::move(dom.tracker);

    // Pieces away from the path cannot carry a hole through it.
    {
      NodeBits all(t.host.order());
      all.set();
      int count = 0;
      auto comp = component_labels(t.host, all, &count);
      if (count > 1) {
        NodeBits keep(t.host.order());
        for (Node v = 0; v < t.host.order(); ++v) {
          if (comp[v] == comp[t.u2]) keep.set(v);
        }
        t = restrict_tracker(t, keep);
        continue;  // removing pieces may expose new dominated nodes
      }
    }

    const Graph& h = t.host;
    auto star = find_full_star_cutset(h);
    if (!star) {
      out.result = Task3{h};
      return out;
    }
    if (auto w = check_condition_B2(h, *star)) {
      Hole hole = extract_even_hole_B2(h, star->center, *w);
      auto mapped = to_root_labels(h, hole);
      if (!mapped) throw InternalError("star-cutset host carries marker nodes");
      out.result = Task1{std::move(*mapped)};
      return out;
    }

    const NodeBits in_s = to_bits(h.order(), star->nodes);
    int count = 0;
    const auto comp = component_labels(h, ~in_s, &count);
    int chosen = -1;
    const bool u_in_s = in_s.test(t.u1) && in_s.test(t.u2) && in_s.test(t.u3);
    if (u_in_s) {
      for (int c = 0; c < count; ++c) {
        bool sees1 = false, sees3 = false;
        for (Node w : h.neighbors(t.u1)) sees1 = sees1 || comp[w] == c;
        for (Node w : h.neighbors(t.u3)) sees3 = sees3 || comp[w] == c;
        if (sees1 && sees3) {
          if (chosen >= 0) {
            throw InternalError("two components see both path ends without B2");
          }
          chosen = c;
        }
      }
    } else {
      for (Node u : {t.u1, t.u2, t.u3}) {
        if (in_s.test(u)) continue;
        if (chosen >= 0 && comp[u] != chosen) {
          chosen = -2;
          break;
        }
        chosen = comp[u];
      }
    }
    if (chosen < 0) {
      out.result = Task2{};
      return out;
    }
    NodeBits keep = in_s;
    for (Node v = 0; v < h.order(); ++v) {
      if (comp[v] == chosen) keep.set(v);
    }
    t = restrict_tracker(t, keep);
  }
}

bool has_star_cutset_exhaustive(const Graph& h) {
  const int n = h.order();
  NodeBits all(n);
  all.set();
  const int base = component_count(h, all);
  for (Node s = 0; s < n; ++s) {
    NodeSet star = to_set(h.closed_neighbor_bits(s));
    const std::size_t k = star.size();
    if (k >= 31) throw InputError("neighborhood too large for exhaustive check");
    const std::size_t self = static_cast<std::size_t>(
        std::find(star.begin(), star.end(), s) - star.begin());
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      if (!(mask & (1U << self))) continue;  // the center belongs to the cutset
      NodeBits rest = all;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1U << i)) rest.reset(star[i]);
      }
      if (component_count(h, rest) > base) return true;
    }
  }
  return false;
}

}  // namespace evenhole

#include "evenhole/two_join.hpp"

#include <algorithm>
#include <deque>
#include <vector>

#include "evenhole/ect.hpp"
#include "evenhole/errors.hpp"
#include "evenhole/star_cutset.hpp"

namespace evenhole {

namespace {

bool sorted_disjoint(const NodeSet& a, const NodeSet& b) {
  std::vector<Node> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return both.empty();
}

bool includes(const NodeSet& outer, const NodeSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool contains(const NodeSet& s, Node v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace

bool is_split(const Graph& h, const Split& s) {
  const int n = h.order();
  if (s.v1.size() < 3 || s.v2.size() < 3) return false;
  if (static_cast<int>(s.v1.size() + s.v2.size()) != n) return false;
  for (const NodeSet* set : {&s.v1, &s.v2, &s.x1, &s.y1, &s.x2, &s.y2}) {
    if (!std::is_sorted(set->begin(), set->end())) return false;
    if (std::adjacent_find(set->begin(), set->end()) != set->end()) return false;
    for (Node v : *set) {
      if (!h.contains(v)) return false;
    }
  }
  if (!sorted_disjoint(s.v1, s.v2)) return false;
  if (s.x1.empty() || s.y1.empty() || s.x2.empty() || s.y2.empty()) return false;
  if (!includes(s.v1, s.x1) || !includes(s.v1, s.y1)) return false;
  if (!includes(s.v2, s.x2) || !includes(s.v2, s.y2)) return false;
  if (!sorted_disjoint(s.x1, s.y1) || !sorted_disjoint(s.x2, s.y2)) return false;
  for (Node u : s.v1) {
    for (Node w : s.v2) {
      bool want = (contains(s.x1, u) && contains(s.x2, w)) ||
                  (contains(s.y1, u) && contains(s.y2, w));
      if (h.adjacent(u, w) != want) return false;
    }
  }
  return true;
}

bool is_path_side(const Graph& h, const NodeSet& vi, const NodeSet& xi,
                  const NodeSet& yi) {
  if (vi.size() < 2) return false;
  NodeBits in = to_bits(h.order(), vi);
  std::size_t edges = 0;
  std::vector<Node> ends;
  for (Node v : vi) {
    std::size_t d = count_and(h.neighbor_bits(v), in);
    if (d == 0 || d > 2) return false;
    if (d == 1) ends.push_back(v);
    edges += d;
  }
  if (edges / 2 + 1 != vi.size() || ends.size() != 2) return false;
  if (connected_components(h, in).size() != 1) return false;
  return (contains(xi, ends[0]) && contains(yi, ends[1])) ||
         (contains(xi, ends[1]) && contains(yi, ends[0]));
}

bool is_non_path_2join(const Graph& h, const Split& s) {
  return is_split(h, s) && !is_path_side(h, s.v1, s.x1, s.y1) &&
         !is_path_side(h, s.v2, s.x2, s.y2);
}

bool satisfies_no_star_cutset_split_properties(const Graph& h, const Split& s) {
  auto side_ok = [&](const NodeSet& vi, const NodeSet& xi, const NodeSet& yi) {
    if (vi.size() < 4) return false;
    NodeBits in = to_bits(h.order(), vi);
    for (const NodeSet& part : connected_components(h, in)) {
      bool meets_x = false, meets_y = false;
      for (Node v : part) {
        meets_x = meets_x || contains(xi, v);
        meets_y = meets_y || contains(yi, v);
      }
      if (!meets_x || !meets_y) return false;
    }
    for (Node v : vi) {
      if (!h.neighbor_bits(v).intersects(in)) return false;
    }
    auto has_non_neighbor = [&](Node v, const NodeSet& other) {
      return std::any_of(other.begin(), other.end(),
                         [&](Node w) { return !h.adjacent(v, w); });
    };
    for (Node x : xi) {
      if (!has_non_neighbor(x, yi)) return false;
    }
    for (Node y : yi) {
      if (!has_non_neighbor(y, xi)) return false;
    }
    return true;
  };
  return side_ok(s.v1, s.x1, s.y1) && side_ok(s.v2, s.x2, s.y2);
}

namespace {

class SeededSearch {
 public:
  SeededSearch(const Graph& h, std::uint64_t budget) : h_(h), budget_(budget) {}

  std::optional<Split> run() {
    const int n = h_.order();
    for (Node a1 = 0; a1 < n; ++a1) {
      for (Node a2 : h_.neighbors(a1)) {
        if (a2 < a1) continue;  // the side swap covers the other orientation
        for (Node b1 = 0; b1 < n; ++b1) {
          if (b1 == a1 || b1 == a2 || h_.adjacent(b1, a2)) continue;
          for (Node b2 : h_.neighbors(b1)) {
            if (b2 == a1 || b2 == a2 || h_.adjacent(a1, b2)) continue;
            if (auto s = seeded(a1, a2, b1, b2)) return s;
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool adj(Node u, Node v) const { return h_.adjacent(u, v); }

  std::optional<Split> seeded(Node a1, Node a2, Node b1, Node b2) {
    const int n = h_.order();
    seeds_ = {a1, a2, b1, b2};
    side_.assign(n, 0);
    side_[a1] = side_[b1] = 1;
    side_[a2] = side_[b2] = 2;
    std::vector<std::pair<Node, int>> forced;
    for (Node v = 0; v < n; ++v) {
      if (side_[v] != 0) continue;
      const bool no_v1 = adj(v, a2) && adj(v, b2);
      const bool no_v2 = adj(v, a1) && adj(v, b1);
      if (no_v1 && no_v2) return std::nullopt;
      if (no_v1) forced.emplace_back(v, 2);
      if (no_v2) forced.emplace_back(v, 1);
    }
    // up_[u]: u in V1 forces these into V1; down_[v]: v in V2 forces these
    // into V2.
    up_.assign(n, {});
    down_.assign(n, {});
    for (Node u = 0; u < n; ++u) {
      if (side_[u] != 0) continue;
      for (Node v = 0; v < n; ++v) {
        if (v == u || side_[v] != 0) continue;
        const bool cross = (adj(u, a2) && adj(v, a1)) || (adj(u, b2) && adj(v, b1));
        if (adj(u, v) != cross) {
          up_[u].push_back(v);
          down_[v].push_back(u);
        }
      }
    }
    for (auto [v, s] : forced) {
      if (!assign(side_, v, s)) return std::nullopt;
    }
    return branch(side_);
  }

  static bool assign_one(std::vector<int>& side, std::vector<Node>& queue, Node v,
                         int s) {
    if (side[v] == s) return true;
    if (side[v] != 0) return false;
    side[v] = s;
    queue.push_back(v);
    return true;
  }

  bool assign(std::vector<int>& side, Node v, int s) const {
    std::vector<Node> queue;
    if (!assign_one(side, queue, v, s)) return false;
    while (!queue.empty()) {
      Node u = queue.back();
      queue.pop_back();
      const auto& next = side[u] == 1 ? up_[u] : down_[u];
      for (Node w : next) {
        if (!assign_one(side, queue, w, side[u])) return false;
      }
    }
    return true;
  }

  std::optional<Split> branch(const std::vector<int>& side) {
    if (++used_ > budget_) throw BudgetExceeded("2-join search budget exhausted");
    const int n = h_.order();
    int c1 = 0, c2 = 0, free = 0;
    Node first_free = -1;
    for (Node v = 0; v < n; ++v) {
      if (side[v] == 1) ++c1;
      else if (side[v] == 2) ++c2;
      else if (free++ == 0) first_free = v;
    }
    if (c1 + free < 3 || c2 + free < 3) return std::nullopt;
    if (first_free < 0) return leaf(side);
    for (int s : {1, 2}) {
      std::vector<int> next = side;
      if (!assign(next, first_free, s)) continue;
      if (auto found = branch(next)) return found;
    }
    return std::nullopt;
  }

  std::optional<Split> leaf(const std::vector<int>& side) const {
    const auto [a1, a2, b1, b2] = seeds_;
    Split s;
    for (Node v = 0; v < h_.order(); ++v) {
      if (side[v] == 1) {
        s.v1.push_back(v);
        if (adj(v, a2)) s.x1.push_back(v);
        if (adj(v, b2)) s.y1.push_back(v);
      } else {
        s.v2.push_back(v);
        if (adj(v, a1)) s.x2.push_back(v);
        if (adj(v, b1)) s.y2.push_back(v);
      }
    }
    if (!is_split(h_, s)) throw InternalError("2-join propagation built an invalid split");
    if (is_path_side(h_, s.v1, s.x1, s.y1) || is_path_side(h_, s.v2, s.x2, s.y2)) {
      return std::nullopt;
    }
    return s;
  }

  const Graph& h_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::array<Node, 4> seeds_{};
  std::vector<int> side_;
  std::vector<std::vector<Node>> up_, down_;
};

}  // namespace

std::optional<Split> find_non_path_2join(const Graph& h, std::uint64_t budget) {
  if (h.order() < 6) return std::nullopt;
  return SeededSearch(h, budget).run();
}

std::optional<Split> find_non_path_2join_bruteforce(const Graph& h) {
  const int n = h.order();
  if (n < 6) return std::nullopt;
  if (n > 24) throw InputError("graph too large for brute-force 2-join search");
  const std::uint32_t rest = n - 1;
  for (std::uint32_t mask = 0; mask < (1U << rest); ++mask) {
    Split s;
    s.v1.push_back(0);
    for (int v = 1; v < n; ++v) {
      if (mask & (1U << (v - 1))) s.v1.push_back(v);
      else s.v2.push_back(v);
    }
    if (s.v1.size() < 3 || s.v2.size() < 3) continue;
    const NodeBits in2 = to_bits(n, s.v2);
    // Distinct non-empty cross neighborhoods of V1 nodes: exactly two,
    // disjoint.
    std::vector<NodeBits> classes;
    bool bad = false;
    for (Node u : s.v1) {
      NodeBits cross = h.neighbor_bits(u) & in2;
      if (cross.none()) continue;
      if (std::find(classes.begin(), classes.end(), cross) == classes.end()) {
        classes.push_back(cross);
        if (classes.size() > 2) {
          bad = true;
          break;
        }
      }
    }
    if (bad || classes.size() != 2 || classes[0].intersects(classes[1])) continue;
    for (Node u : s.v1) {
      NodeBits cross = h.neighbor_bits(u) & in2;
      if (cross == classes[0]) s.x1.push_back(u);
      if (cross == classes[1]) s.y1.push_back(u);
    }
    s.x2 = to_set(classes[0]);
    s.y2 = to_set(classes[1]);
    if (is_non_path_2join(h, s)) return s;
  }
  return std::nullopt;
}

Path side_parity_path(const Graph& h, const NodeSet& vi, const NodeSet& xi,
                      const NodeSet& yi) {
  const int n = h.order();
  const NodeBits in = to_bits(n, vi);
  const NodeBits ends = to_bits(n, xi) | to_bits(n, yi);
  std::vector<Node> parent(n, -2);
  std::deque<Node> queue;
  for (Node x : xi) {
    parent[x] = -1;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    for (Node w : h.neighbors(v)) {
      if (!in.test(w) || parent[w] != -2) continue;
      if (contains(yi, w)) {
        Path p{w};
        for (Node u = v; u != -1; u = parent[u]) p.push_back(u);
        std::reverse(p.begin(), p.end());
        return p;
      }
      if (ends.test(w)) continue;  // X nodes are sources, never interior
      parent[w] = v;
      queue.push_back(w);
    }
  }
  throw InputError("2-join side has no X-Y path with a clean interior");
}

Blocks blocks_of_decomposition(const Graph& h, const Split& split,
                               bool flip_parity) {
  if (!is_split(h, split)) throw InputError("not a split of this graph");
  auto order_for = [&](const NodeSet& vi, const NodeSet& xi, const NodeSet& yi) {
    const bool even = side_parity_path(h, vi, xi, yi).size() % 2 == 0;
    return (even != flip_parity) ? 4 : 5;
  };
  Blocks out;
  out.p1 = order_for(split.v1, split.x1, split.y1);
  out.p2 = order_for(split.v2, split.x2, split.y2);

  auto build = [&](const NodeSet& vi, const NodeSet& xi, const NodeSet& yi,
                   int p, NodeSet& markers) {
    Graph side = induced_subgraph(h, vi);
    const int k = side.order();
    EdgeList edges = side.edge_list();
    std::vector<int> labels = side.labels();
    for (int i = 0; i < p; ++i) {
      labels.push_back(kMarkerLabel);
      markers.push_back(k + i);
      if (i > 0) edges.emplace_back(k + i - 1, k + i);
    }
    // Side ids follow the ascending order of vi.
    for (int i = 0; i < k; ++i) {
      if (contains(xi, vi[i])) edges.emplace_back(i, k);
      if (contains(yi, vi[i])) edges.emplace_back(i, k + p - 1);
    }
    return Graph(k + p, edges, std::move(labels));
  };
  out.h1 = build(split.v1, split.x1, split.y1, out.p2, out.markers1);
  out.h2 = build(split.v2, split.x2, split.y2, out.p1, out.markers2);
  return out;
}

TwoJoinStats& TwoJoinStats::operator+=(const TwoJoinStats& o) {
  host_edges += o.host_edges;
  pieces += o.pieces;
  oracle_calls += o.oracle_calls;
  ect_checks += o.ect_checks;
  decompositions += o.decompositions;
  pushes += o.pushes;
  block_bound_violations += o.block_bound_violations;
  split_property_violations += o.split_property_violations;
  return *this;
}

NoStarCutsetVerdict decide_no_star_cutset(const Graph& h,
                                          const TwoJoinOptions& options) {
  NoStarCutsetVerdict out;
  TwoJoinStats& st = out.stats;
  st.host_edges = h.size();
  std::vector<Graph> work{h};

  auto found = [&](const Graph& piece, const Hole& hole,
                   NoStarCutsetVerdict::Route route) {
    if (!is_even_hole(piece, hole.nodes)) {
      throw InternalError("piece certificate is not an even hole");
    }
    out.contains_even_hole = true;
    out.certificate = to_root_labels(piece, hole);
    out.route = route;
  };

  while (!work.empty()) {
    Graph piece = std::move(work.back());
    work.pop_back();
    ++st.pieces;

    auto parts = connected_components(piece);
    if (parts.size() > 1) {
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        work.push_back(induced_subgraph(piece, *it));
      }
      continue;
    }
    if (piece.size() <= options.oracle_max_edges) {
      ++st.oracle_calls;
      if (auto hole = shortest_even_hole(piece)) {
        found(piece, *hole, NoStarCutsetVerdict::Route::Oracle);
        return out;
      }
      continue;
    }
    if (options.check_star_cutsets && find_full_star_cutset(piece)) {
      throw InternalError("decomposition piece has a full star-cutset");
    }
    ++st.ect_checks;
    if (auto w = recognize_ect(piece)) {
      if (auto hole = ect_even_hole(piece, *w)) {
        found(piece, *hole, NoStarCutsetVerdict::Route::Ect);
        return out;
      }
      continue;
    }
    auto split = find_non_path_2join(piece, options.two_join_budget);
    if (!split) {
      out.contains_even_hole = true;
      out.route = NoStarCutsetVerdict::Route::NoTwoJoin;
      return out;
    }
    if (!satisfies_no_star_cutset_split_properties(piece, *split)) {
      ++st.split_property_violations;
    }
    Blocks blocks = blocks_of_decomposition(piece, *split, options.flip_marker_parity);
    ++st.decompositions;
    for (const Graph* b : {&blocks.h1, &blocks.h2}) {
      if (b->order() > piece.order() || b->size() + 1 > piece.size()) {
        ++st.block_bound_violations;
      }
    }
    // LIFO: push the larger block first so the smaller one is handled next.
    const bool first_smaller = blocks.h1.size() <= blocks.h2.size();
    work.push_back(std::move(first_smaller ? blocks.h2 : blocks.h1));
    work.push_back(std::move(first_smaller ? blocks.h1 : blocks.h2));
    st.pushes += 2;
  }
  return out;
}

}  // namespace evenhole

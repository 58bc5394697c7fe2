#include "evenhole/cleaning.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "evenhole/errors.hpp"

namespace evenhole {

std::optional<Hole> find_4_hole(const Graph& g) {
  // (a, b, c, d) with a minimum and b < d is the canonical form; scanning in
  // lexicographic order makes the first hit the least one.
  const int n = g.order();
  for (Node a = 0; a < n; ++a) {
    for (Node b : g.neighbors(a)) {
      if (b < a) continue;
      for (Node c : g.neighbors(b)) {
        if (c <= a || g.adjacent(a, c)) continue;
        for (Node d : g.neighbors(c)) {
          if (d <= b || !g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return Hole{{a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool diamond_ok(const Graph& g, const std::array<Node, 4>& d) {
  const auto [b1, b2, b3, b4] = d;
  for (int i = 0; i < 4; ++i) {
    if (!g.contains(d[i])) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (d[i] == d[j]) return false;
    }
  }
  return g.adjacent(b1, b2) && g.adjacent(b2, b3) && g.adjacent(b3, b4) &&
         g.adjacent(b4, b1) && g.adjacent(b2, b4) && !g.adjacent(b1, b3);
}

// Edges between {b1,b2,b3} and the feet are exactly b1b5, b2b6, b3b7, and
// no foot sees b4 or lies on the diamond.
bool feet_ok(const Graph& g, const std::array<Node, 4>& d,
             const std::array<Node, 3>& feet) {
  for (Node f : feet) {
    if (!g.contains(f)) return false;
    for (Node b : d) {
      if (f == b) return false;
    }
    if (g.adjacent(f, d[3])) return false;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (g.adjacent(d[i], feet[j]) != (feet[i] == feet[j])) return false;
    }
  }
  return true;
}

NodeBits closed_union(const Graph& g, const std::array<Node, 4>& d) {
  NodeBits closed(g.order());
  for (Node b : d) {
    closed |= g.neighbor_bits(b);
    closed.set(b);
  }
  return closed;
}

// Drops non-foot leaves until every leaf is a foot.
NodeSet prune_to_feet(const Graph& g, NodeBits tree,
                      const std::array<Node, 3>& feet) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v = tree.find_first(); v != NodeBits::npos; v = tree.find_next(v)) {
      const Node x = static_cast<Node>(v);
      if (x == feet[0] || x == feet[1] || x == feet[2]) continue;
      if (count_and(g.neighbor_bits(x), tree) <= 1) {
        tree.reset(v);
        changed = true;
      }
    }
  }
  return to_set(tree);
}

Path tree_path(const Graph& g, const NodeBits& body, Node from, Node to) {
  if (from == to) return {from};
  auto p = shortest_path_restricted(g, from, to, body);
  if (!p) throw InternalError("beetle body does not connect its feet");
  return *p;
}

}  // namespace

bool is_beetle(const Graph& g, const Beetle& beetle) {
  if (!diamond_ok(g, beetle.diamond) || !feet_ok(g, beetle.diamond, beetle.feet)) {
    return false;
  }
  if (!is_induced_tree_witness(g, beetle.body, beetle.feet)) return false;
  NodeBits closed = closed_union(g, beetle.diamond);
  for (Node v : beetle.body) {
    bool foot = v == beetle.feet[0] || v == beetle.feet[1] || v == beetle.feet[2];
    if (!foot && closed.test(v)) return false;
  }
  return true;
}

std::optional<Beetle> find_beetle(const Graph& g, const TreeSolver& solver,
                                  BeetleSearchStats* stats) {
  const int n = g.order();
  BeetleSearchStats local;
  BeetleSearchStats& st = stats != nullptr ? *stats : local;

  for (Node b4 = 0; b4 < n; ++b4) {
    for (Node b2 : g.neighbors(b4)) {
      NodeBits common = g.neighbor_bits(b2) & g.neighbor_bits(b4);
      if (common.count() < 2) continue;
      NodeSet mids = to_set(common);
      for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t j = i + 1; j < mids.size(); ++j) {
          const Node b1 = mids[i];
          const Node b3 = mids[j];
          if (g.adjacent(b1, b3)) continue;
          const std::array<Node, 4> d{b1, b2, b3, b4};
          const NodeBits closed = closed_union(g, d);
          const NodeBits outside = ~closed;
          int ncomp = 0;
          const auto comp = component_labels(g, outside, &ncomp);

          auto comps_of = [&](Node f) {
            std::vector<int> cs;
            for (Node w : g.neighbors(f)) {
              if (comp[w] >= 0) cs.push_back(comp[w]);
            }
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            return cs;
          };
          auto share = [](const std::vector<int>& a, const std::vector<int>& b) {
            auto ia = a.begin();
            auto ib = b.begin();
            while (ia != a.end() && ib != b.end()) {
              if (*ia == *ib) return true;
              if (*ia < *ib) ++ia; else ++ib;
            }
            return false;
          };

          for (Node b5 : g.neighbors(b1)) {
            if (b5 == b2 || b5 == b4 || g.adjacent(b5, b4)) continue;
            for (Node b6 : g.neighbors(b2)) {
              if (b6 == b1 || b6 == b3 || b6 == b4 || g.adjacent(b6, b4)) continue;
              for (Node b7 : g.neighbors(b3)) {
                if (b7 == b2 || b7 == b4 || g.adjacent(b7, b4)) continue;
                const std::array<Node, 3> feet{b5, b6, b7};
                if (!feet_ok(g, d, feet)) continue;
                ++st.candidates;

                // Cheap connectivity test in R = outside + feet first.
                NodeSet distinct{b5, b6, b7};
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()),
                               distinct.end());
                std::vector<std::vector<int>> cs;
                for (Node f : distinct) cs.push_back(comps_of(f));
                const std::size_t k = distinct.size();
                std::vector<int> group(k);
                for (std::size_t a = 0; a < k; ++a) group[a] = static_cast<int>(a);
                bool merged = true;
                while (merged) {
                  merged = false;
                  for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = a + 1; b < k; ++b) {
                      if (group[a] == group[b]) continue;
                      if (g.adjacent(distinct[a], distinct[b]) || share(cs[a], cs[b])) {
                        int from = group[b], to = group[a];
                        for (auto& x : group) {
                          if (x == from) x = to;
                        }
                        merged = true;
                      }
                    }
                  }
                }
                if (std::any_of(group.begin(), group.end(),
                                [&](int x) { return x != group[0]; })) {
                  continue;
                }

                NodeBits r = outside;
                for (Node f : distinct) r.set(f);
                NodeSet body;
                if (k == 1) {
                  body = {b5};
                } else if (k == 2) {
                  auto p = shortest_path_restricted(g, distinct[0], distinct[1], r);
                  if (!p) throw InternalError("beetle feet connectivity mismatch");
                  body.assign(p->begin(), p->end());
                  std::sort(body.begin(), body.end());
                } else {
                  Graph sub = induced_subgraph(g, r);
                  std::vector<int> index(n, -1);
                  int next = 0;
                  for (auto v = r.find_first(); v != NodeBits::npos; v = r.find_next(v)) {
                    index[v] = next++;
                  }
                  ++st.tree_queries;
                  auto w = solver.solve(
                      TreeQuery{sub, {index[b5], index[b6], index[b7]}});
                  if (!w) continue;
                  NodeBits tree(n);
                  NodeSet back = to_set(r);
                  for (Node v : w->nodes) tree.set(back[v]);
                  body = prune_to_feet(g, std::move(tree), feet);
                }
                Beetle beetle{d, feet, std::move(body)};
                if (!is_beetle(g, beetle)) {
                  throw InternalError("beetle search produced an invalid beetle");
                }
                return beetle;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

Hole beetle_even_hole(const Graph& g, const Beetle& beetle) {
  if (!is_beetle(g, beetle)) throw InputError("not a beetle of this graph");
  const auto [b1, b2, b3, b4] = beetle.diamond;
  const auto [b5, b6, b7] = beetle.feet;
  const NodeBits body = to_bits(g.order(), beetle.body);

  auto cycle = [&](std::vector<Node> head, Node from, Node to) {
    Path p = tree_path(g, body, from, to);
    head.insert(head.end(), p.begin(), p.end());
    return head;
  };
  const std::vector<std::vector<Node>> candidates{
      cycle({b1, b4, b3}, b7, b5),  // without b2
      cycle({b2, b3}, b7, b6),      // without b1, b4
      cycle({b1, b2}, b6, b5),      // without b3, b4
  };
  for (const auto& c : candidates) {
    if (is_even_hole(g, c)) return Hole::canonical(c);
  }
  throw InternalError("no even hole among the three beetle cycles");
}

std::variant<CliqueList, CliqueCapExceeded> maximal_cliques_capped(
    const Graph& g, std::size_t cap) {
  CliqueList out;
  if (cap == 0) return CliqueCapExceeded{cap};
  const int n = g.order();
  std::vector<Node> r;
  bool exceeded = false;

  // Bron-Kerbosch with Tomita pivoting.
  std::function<void(NodeBits, NodeBits)> expand = [&](NodeBits p, NodeBits x) {
    if (exceeded) return;
    if (p.none() && x.none()) {
      NodeSet clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      if (out.size() >= cap) exceeded = true;
      return;
    }
    Node pivot = -1;
    std::size_t best = 0;
    for (const NodeBits* side : {&p, &x}) {
      for (auto u = side->find_first(); u != NodeBits::npos; u = side->find_next(u)) {
        std::size_t c = count_and(p, g.neighbor_bits(static_cast<Node>(u)));
        if (pivot < 0 || c > best) {
          pivot = static_cast<Node>(u);
          best = c;
        }
      }
    }
    NodeBits todo = p - g.neighbor_bits(pivot);
    for (auto v = todo.find_first(); v != NodeBits::npos; v = todo.find_next(v)) {
      const auto& nv = g.neighbor_bits(static_cast<Node>(v));
      r.push_back(static_cast<Node>(v));
      expand(p & nv, x & nv);
      r.pop_back();
      if (exceeded) return;
      p.reset(v);
      x.set(v);
    }
  };
  NodeBits all(n);
  all.set();
  if (n > 0) expand(all, NodeBits(n));
  if (exceeded) return CliqueCapExceeded{cap};
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_tracker(const Tracker& t) {
  const Graph& h = t.host;
  if (!h.contains(t.u1) || !h.contains(t.u2) || !h.contains(t.u3)) return false;
  if (t.u1 == t.u3 || t.u1 == t.u2 || t.u2 == t.u3) return false;
  return h.adjacent(t.u1, t.u2) && h.adjacent(t.u2, t.u3) && !h.adjacent(t.u1, t.u3);
}

Tracker materialize(const Graph& g, const TrackerSpec& spec) {
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (auto v = spec.keep.find_first(); v != NodeBits::npos;
       v = spec.keep.find_next(v)) {
    index[v] = next++;
  }
  Tracker t{induced_subgraph(g, spec.keep), index[spec.path[0]],
            index[spec.path[1]], index[spec.path[2]]};
  if (t.u1 < 0 || t.u2 < 0 || t.u3 < 0) {
    throw InputError("tracker path does not survive its deletion set");
  }
  return t;
}

NodeBits s1_deletion(const Graph& g, Node u1, Node u2, Node u3, Node v1, Node v2) {
  NodeBits s = g.neighbor_bits(v1) & g.neighbor_bits(v2);
  NodeBits tail = g.neighbor_bits(u2);
  tail.reset(u1);
  tail.reset(u3);
  s |= tail;
  return s;
}

NodeBits s2_deletion(const Graph& g, Node u1, Node u2, const NodeSet& clique) {
  NodeBits s = g.neighbor_bits(u1) & g.neighbor_bits(u2);
  for (Node v : clique) s.set(v);
  return s;
}

namespace {

struct SpecKey {
  std::vector<NodeBits::Word> words;
  std::array<Node, 3> path;
  friend bool operator==(const SpecKey&, const SpecKey&) = default;
};

struct SpecKeyHash {
  std::size_t operator()(const SpecKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto w : k.words) mix(w);
    for (Node v : k.path) mix(static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

TrackerSet generate_trackers(const Graph& g, const CliqueList& cliques) {
  TrackerSet out;
  std::unordered_set<SpecKey, SpecKeyHash> seen;
  const int n = g.order();
  const EdgeList edges = g.edge_list();

  auto offer = [&](const NodeBits& deleted, Node u1, Node u2, Node u3,
                   const TrackerOrigin& origin) {
    ++out.candidates;
    if (deleted.test(u1) || deleted.test(u2) || deleted.test(u3)) return;
    std::array<Node, 3> path{std::min(u1, u3), u2, std::max(u1, u3)};
    NodeBits keep = ~deleted;
    SpecKey key{keep.words(), path};
    if (!seen.insert(std::move(key)).second) return;
    out.trackers.push_back(TrackerSpec{std::move(keep), path, origin});
  };

  // S1 over induced 3-paths (both orientations give the same deletion set).
  for (Node u2 = 0; u2 < n; ++u2) {
    auto nb = g.neighbors(u2);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Node u1 = nb[i];
        const Node u3 = nb[j];
        if (g.adjacent(u1, u3)) continue;
        for (auto [v1, v2] : edges) {
          TrackerOrigin origin{TrackerOrigin::Kind::S1, {u1, u2, u3}, v1, v2, 0};
          offer(s1_deletion(g, u1, u2, u3, v1, v2), u1, u2, u3, origin);
        }
      }
    }
  }
  // S2 over ordered edges u1u2, cliques K, and u3 in N(u2) \ {u1}.
  for (Node u1 = 0; u1 < n; ++u1) {
    for (Node u2 : g.neighbors(u1)) {
      for (std::size_t c = 0; c < cliques.size(); ++c) {
        const NodeBits deleted = s2_deletion(g, u1, u2, cliques[c]);
        for (Node u3 : g.neighbors(u2)) {
          if (u3 == u1) continue;
          if (g.adjacent(u1, u3)) {
            ++out.candidates;  // path not induced; nothing survives as a tracker
            continue;
          }
          TrackerOrigin origin{TrackerOrigin::Kind::S2, {u1, u2, u3}, -1, -1, c};
          offer(deleted, u1, u2, u3, origin);
        }
      }
    }
  }
  return out;
}

std::variant<EvenHoleFound, TrackerSet> clean_phase(const Graph& g,
                                                    const TreeSolver& solver,
                                                    CleaningStats* stats) {
  CleaningStats local;
  CleaningStats& st = stats != nullptr ? *stats : local;

  if (auto h = find_4_hole(g)) {
    return EvenHoleFound{std::move(h), EvenHoleFound::Reason::FourHole};
  }
  if (auto b = find_beetle(g, solver, &st.beetle)) {
    return EvenHoleFound{beetle_even_hole(g, *b), EvenHoleFound::Reason::Beetle};
  }
  const std::size_t cap = static_cast<std::size_t>(g.order()) + 2 * g.size() + 1;
  auto cliques = maximal_cliques_capped(g, cap);
  if (std::holds_alternative<CliqueCapExceeded>(cliques)) {
    std::optional<Hole> cert;
    if (g.order() <= kCliqueCertificateMaxOrder) {
      cert = shortest_even_hole(g);
      if (!cert) throw InternalError("clique count exceeded but no even hole");
    }
    return EvenHoleFound{std::move(cert), EvenHoleFound::Reason::CliqueCount};
  }
  const auto& list = std::get<CliqueList>(cliques);
  st.cliques = list.size();
  return generate_trackers(g, list);
}

}  // namespace evenhole

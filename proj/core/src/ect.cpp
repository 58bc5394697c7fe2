#include "evenhole/ect.hpp"

#include <algorithm>
#include <deque>

#include "evenhole/errors.hpp"

namespace evenhole {

bool is_block_graph(const Graph& g, const NodeBits& keep) {
  Graph sub = induced_subgraph(g, keep);
  for (const NodeSet& block : biconnected_components(sub)) {
    if (!is_clique(sub, block)) return false;
  }
  return true;
}

bool is_ect_witness(const Graph& h, const EctWitness& w) {
  if (w.s.size() > 2) return false;
  if (w.s.size() == 2 && w.s[0] == w.s[1]) return false;
  for (Node v : w.s) {
    if (!h.contains(v)) return false;
  }
  NodeBits keep(h.order());
  keep.set();
  for (Node v : w.s) keep.reset(v);
  return is_block_graph(h, keep);
}

std::optional<EctWitness> recognize_ect(const Graph& h) {
  const int n = h.order();
  if (is_ect_witness(h, EctWitness{})) return EctWitness{};
  for (Node a = 0; a < n; ++a) {
    if (is_ect_witness(h, EctWitness{{a}})) return EctWitness{{a}};
  }
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      if (is_ect_witness(h, EctWitness{{a, b}})) return EctWitness{{a, b}};
    }
  }
  return std::nullopt;
}

EctPathTable::EctPathTable(const Graph& h0, Node x, Node y)
    : n_(h0.order()),
      dist_(static_cast<std::size_t>(n_) * n_, kUnreachable),
      parent_(static_cast<std::size_t>(n_) * n_, -1),
      sees_x_(static_cast<std::size_t>(n_) * n_, 0),
      sees_y_(static_cast<std::size_t>(n_) * n_, 0) {
  std::deque<Node> queue;
  for (Node u = 0; u < n_; ++u) {
    if (u == x || u == y) continue;
    dist_[index(u, u)] = 0;
    queue.assign(1, u);
    while (!queue.empty()) {
      Node v = queue.front();
      queue.pop_front();
      for (Node w : h0.neighbors(v)) {
        if (w == x || w == y || dist_[index(u, w)] != kUnreachable) continue;
        dist_[index(u, w)] = dist_[index(u, v)] + 1;
        parent_[index(u, w)] = v;
        if (v != u) {
          sees_x_[index(u, w)] = sees_x_[index(u, v)] || h0.adjacent(v, x);
          sees_y_[index(u, w)] = sees_y_[index(u, v)] || h0.adjacent(v, y);
        }
        queue.push_back(w);
      }
    }
  }
}

Path EctPathTable::path(Node u, Node v) const {
  if (length(u, v) == kUnreachable) throw InputError("no path in the block graph");
  Path p{v};
  for (Node w = v; w != u;) {
    w = parent_[index(u, w)];
    p.push_back(w);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

namespace {

class EctSearch {
 public:
  EctSearch(const Graph& h0, Node x, Node y, EctCase2Rule rule)
      : h0_(h0), x_(x), y_(y), rule_(rule), table_(h0, x, y), m2_(cells()) {
    for (Node v : h0.neighbors(x)) {
      if (v != y) nx_.push_back(v);
    }
    for (Node v : h0.neighbors(y)) {
      if (v != x) ny_.push_back(v);
    }
  }

  std::optional<std::vector<Node>> run() {
    if (auto c = through_one(y_, ny_)) return c;
    if (auto c = through_one(x_, nx_)) return c;
    return h0_.adjacent(x_, y_) ? through_both_adjacent() : through_both_apart();
  }

 private:
  std::size_t cells() const {
    return static_cast<std::size_t>(h0_.order()) * h0_.order();
  }

  bool sees(Node z, Node u, Node v) const {
    return z == x_ ? table_.interior_sees_x(u, v) : table_.interior_sees_y(u, v);
  }

  // Hole through z avoiding the other excised node.
  std::optional<std::vector<Node>> through_one(Node z, const NodeSet& nz) const {
    for (std::size_t i = 0; i < nz.size(); ++i) {
      for (std::size_t j = i + 1; j < nz.size(); ++j) {
        const Node u = nz[i], v = nz[j];
        if (h0_.adjacent(u, v)) continue;
        const int p = table_.length(u, v);
        if (p == EctPathTable::kUnreachable || p % 2 != 0 || sees(z, u, v)) continue;
        std::vector<Node> c{z};
        Path path = table_.path(u, v);
        c.insert(c.end(), path.begin(), path.end());
        return c;
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<Node>> through_both_adjacent() const {
    for (Node u : nx_) {
      if (h0_.adjacent(u, y_)) continue;
      for (Node v : ny_) {
        if (v == u || h0_.adjacent(v, x_)) continue;
        const int p = table_.length(u, v);
        if (p == EctPathTable::kUnreachable || p % 2 != 1) continue;
        if (table_.interior_sees_x(u, v) || table_.interior_sees_y(u, v)) continue;
        std::vector<Node> c{x_, y_};
        Path path = table_.path(v, u);
        c.insert(c.end(), path.begin(), path.end());
        return c;
      }
    }
    return std::nullopt;
  }

  // Components of H \ N_H[P(u, v)], computed on first use.
  const std::vector<int>& far_components(Node u, Node v) {
    auto& slot = m2_[static_cast<std::size_t>(u) * h0_.order() + v];
    if (slot.empty()) {
      NodeBits mask(h0_.order());
      mask.set();
      mask.reset(x_);
      mask.reset(y_);
      for (Node w : table_.path(u, v)) {
        mask.reset(w);
        mask -= h0_.neighbor_bits(w);
      }
      slot = component_labels(h0_, mask);
    }
    return slot;
  }

  // z's only neighbor on P(u, v) is u.
  bool only_touch(Node z, Node u, Node v) const {
    if (sees(z, u, v)) return false;
    return v == u || !h0_.adjacent(z, v);
  }

  std::optional<std::vector<Node>> through_both_apart() {
    for (std::size_t i = 0; i < nx_.size(); ++i) {
      for (std::size_t j = i + 1; j < nx_.size(); ++j) {
        const Node ux = nx_[i], vx = nx_[j];
        if (h0_.adjacent(ux, vx)) continue;
        for (Node uy : ny_) {
          for (Node vy : ny_) {
            if (uy == vy || h0_.adjacent(uy, vy)) continue;
            const int p1 = table_.length(ux, uy);
            const int p2 = table_.length(vx, vy);
            if (p1 == EctPathTable::kUnreachable || p2 == EctPathTable::kUnreachable) {
              continue;
            }
            if ((p1 + p2) % 2 != 0) continue;
            if (rule_ == EctCase2Rule::Strengthened) {
              if (!only_touch(x_, ux, uy) || !only_touch(x_, vx, vy) ||
                  !only_touch(y_, uy, ux) || !only_touch(y_, vy, vx)) {
                continue;
              }
            }
            const auto& comp = far_components(ux, uy);
            if (comp[vx] < 0 || comp[vx] != comp[vy]) continue;
            std::vector<Node> c{x_};
            Path a = table_.path(ux, uy);
            c.insert(c.end(), a.begin(), a.end());
            c.push_back(y_);
            Path b = table_.path(vy, vx);
            c.insert(c.end(), b.begin(), b.end());
            return c;
          }
        }
      }
    }
    return std::nullopt;
  }

  const Graph& h0_;
  Node x_, y_;
  EctCase2Rule rule_;
  EctPathTable table_;
  std::vector<std::vector<int>> m2_;
  NodeSet nx_, ny_;
};

std::optional<std::vector<Node>> ect_cycle(const Graph& h0, const EctWitness& w,
                                           EctCase2Rule rule) {
  if (!is_ect_witness(h0, w)) throw InputError("not an extended clique tree witness");
  if (h0.order() < 4) return std::nullopt;
  NodeSet s = w.s;
  for (Node v = 0; s.size() < 2; ++v) {
    if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return EctSearch(h0, s[0], s[1], rule).run();
}

}  // namespace

bool ect_claims_even_hole(const Graph& h0, const EctWitness& w,
                          EctCase2Rule rule) {
  return ect_cycle(h0, w, rule).has_value();
}

std::optional<Hole> ect_even_hole(const Graph& h0, const EctWitness& w,
                                  EctCase2Rule rule) {
  auto c = ect_cycle(h0, w, rule);
  if (!c) return std::nullopt;
  if (!is_even_hole(h0, *c)) {
    if (rule == EctCase2Rule::Literal) return std::nullopt;
    throw InternalError("extended clique tree search built a non-hole");
  }
  return Hole::canonical(std::move(*c));
}

}  // namespace evenhole

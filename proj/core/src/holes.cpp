#include "evenhole/holes.hpp"

#include <algorithm>

#include "evenhole/errors.hpp"

namespace evenhole {

Hole Hole::canonical(std::vector<Node> cycle) {
  const std::size_t k = cycle.size();
  if (k == 0) return Hole{};
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (k > 2 && cycle[k - 1] < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return Hole{std::move(cycle)};
}

bool is_hole(const Graph& g, std::span<const Node> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.contains(cycle[i])) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::optional<Hole> to_root_labels(const Graph& g, const Hole& hole) {
  std::vector<Node> mapped;
  mapped.reserve(hole.length());
  for (Node v : hole.nodes) {
    int label = g.label(v);
    if (label == kMarkerLabel) return std::nullopt;
    mapped.push_back(label);
  }
  return Hole::canonical(std::move(mapped));
}

namespace {

// DFS over induced paths anchored at the hole's minimum node. Path nodes
// beyond the anchor are all larger than it; `blocked` holds nodes adjacent to
// some path node other than the current endpoint (and the path itself), so a
// candidate extension is legal iff it is not blocked.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, const HoleSearchOptions& options,
             const std::function<bool(const Hole&)>& visit)
      : g_(g),
        max_len_(options.max_len > 0 ? options.max_len : g.order()),
        budget_(options.budget),
        visit_(visit) {}

  void run() {
    for (Node a = 0; a < g_.order() && !stop_; ++a) {
      anchor_ = a;
      for (Node b : g_.neighbors(a)) {
        if (b < a) continue;
        path_.assign({a, b});
        extend();
        if (stop_) break;
      }
    }
  }

 private:
  void extend() {
    const Node end = path_.back();
    const std::size_t k = path_.size();
    for (Node w : g_.neighbors(end)) {
      if (w <= anchor_) continue;
      if (++used_ > budget_) throw BudgetExceeded("hole enumeration budget exhausted");
      bool ok = true;
      bool closes = false;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        Node p = path_[i];
        if (p == w) { ok = false; break; }
        if (g_.adjacent(p, w)) {
          if (i == 0) {
            closes = true;
          } else {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      if (closes) {
        // Hole a, p1, ..., end, w; count each cycle once via p1 < w.
        if (k + 1 >= 4 && static_cast<int>(k + 1) <= max_len_ && path_[1] < w) {
          std::vector<Node> cycle(path_);
          cycle.push_back(w);
          if (!visit_(Hole{std::move(cycle)})) {
            stop_ = true;
            return;
          }
        }
        continue;
      }
      // The cycle closed later must have length >= k + 2.
      if (static_cast<int>(k + 2) > max_len_) continue;
      path_.push_back(w);
      extend();
      path_.pop_back();
      if (stop_) return;
    }
  }

  const Graph& g_;
  int max_len_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  const std::function<bool(const Hole&)>& visit_;
  Node anchor_ = 0;
  std::vector<Node> path_;
  bool stop_ = false;
};

}  // namespace

void for_each_hole(const Graph& g, const HoleSearchOptions& options,
                   const std::function<bool(const Hole&)>& visit) {
  HoleSearch(g, options, visit).run();
}

std::vector<Hole> enumerate_holes(const Graph& g,
                                  const HoleSearchOptions& options) {
  std::vector<Hole> out;
  for_each_hole(g, options, [&](const Hole& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::vector<Hole> shortest_even_holes(const Graph& g, std::uint64_t budget) {
  // Iterative deepening on the length bound keeps short-hole instances cheap.
  for (int len = 4; len <= g.order(); len += 2) {
    std::vector<Hole> found;
    for_each_hole(g, {len, budget}, [&](const Hole& h) {
      if (static_cast<int>(h.length()) == len) found.push_back(h);
      return true;
    });
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  return {};
}

std::optional<Hole> shortest_even_hole(const Graph& g, std::uint64_t budget) {
  for (int len = 4; len <= g.order(); len += 2) {
    std::optional<Hole> best;
    for_each_hole(g, {len, budget}, [&](const Hole& h) {
      if (static_cast<int>(h.length()) == len && (!best || h < *best)) best = h;
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

std::string_view to_string(NeighborTag tag) {
  switch (tag) {
    case NeighborTag::N1: return "N1";
    case NeighborTag::N2: return "N2";
    case NeighborTag::N3: return "N3";
    case NeighborTag::N4: return "N4";
    case NeighborTag::N5: return "N5";
    case NeighborTag::N11: return "N11";
    case NeighborTag::N12: return "N12";
    case NeighborTag::N22: return "N22";
    case NeighborTag::Major: return "MAJOR";
  }
  return "?";
}

NeighborClass classify_neighbor(const Graph& g, const Hole& hole, Node x) {
  const std::size_t k = hole.length();
  if (!g.contains(x)) throw InputError("node out of range");
  std::vector<bool> on(k, false);
  NodeSet attachment;
  for (std::size_t i = 0; i < k; ++i) {
    if (hole.nodes[i] == x) throw InputError("node lies on the hole");
    if (g.adjacent(x, hole.nodes[i])) {
      on[i] = true;
      attachment.push_back(hole.nodes[i]);
    }
  }
  if (attachment.empty()) throw InputError("node is not adjacent to the hole");
  std::sort(attachment.begin(), attachment.end());

  // Greedy independent set along the cycle: the maximum independent set of
  // a union of arcs is the sum of ceil(len/2) over arcs, except a full cycle.
  const std::size_t a = attachment.size();
  if (a == k) {
    std::size_t independent = k / 2;
    if (independent >= 3) return {NeighborTag::Major, std::move(attachment)};
    return {k == 4 ? NeighborTag::N4 : NeighborTag::N5, std::move(attachment)};
  }
  // Arc lengths, starting just after some non-attached position.
  std::size_t start = 0;
  while (on[start]) ++start;
  std::vector<std::size_t> arcs;
  std::size_t run = 0;
  for (std::size_t step = 1; step <= k; ++step) {
    std::size_t i = (start + step) % k;
    if (on[i]) {
      ++run;
    } else if (run > 0) {
      arcs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) arcs.push_back(run);
  std::size_t independent = 0;
  for (std::size_t len : arcs) independent += (len + 1) / 2;
  if (independent >= 3) return {NeighborTag::Major, std::move(attachment)};
  if (arcs.size() == 1) {
    switch (arcs[0]) {
      case 1: return {NeighborTag::N1, std::move(attachment)};
      case 2: return {NeighborTag::N2, std::move(attachment)};
      case 3: return {NeighborTag::N3, std::move(attachment)};
      case 4: return {NeighborTag::N4, std::move(attachment)};
      default: break;
    }
  } else if (arcs.size() == 2) {
    std::size_t lo = std::min(arcs[0], arcs[1]);
    std::size_t hi = std::max(arcs[0], arcs[1]);
    if (lo == 1 && hi == 1) return {NeighborTag::N11, std::move(attachment)};
    if (lo == 1 && hi == 2) return {NeighborTag::N12, std::move(attachment)};
    if (lo == 2 && hi == 2) return {NeighborTag::N22, std::move(attachment)};
  }
  throw InternalError("attachment outside the neighbor partition");
}

namespace {

NodeSet nodes_with_tag(const Graph& g, const Hole& hole, NeighborTag tag) {
  NodeBits on_hole = to_bits(g.order(), hole.nodes);
  NodeSet out;
  for (Node x = 0; x < g.order(); ++x) {
    if (on_hole.test(x) || !g.neighbor_bits(x).intersects(on_hole)) continue;
    if (classify_neighbor(g, hole, x).tag == tag) out.push_back(x);
  }
  return out;
}

}  // namespace

NodeSet major_nodes(const Graph& g, const Hole& hole) {
  return nodes_with_tag(g, hole, NeighborTag::Major);
}

NodeSet n22_nodes(const Graph& g, const Hole& hole) {
  return nodes_with_tag(g, hole, NeighborTag::N22);
}

bool is_clean(const Graph& g, const Hole& hole) {
  NodeBits on_hole = to_bits(g.order(), hole.nodes);
  for (Node x = 0; x < g.order(); ++x) {
    if (on_hole.test(x) || !g.neighbor_bits(x).intersects(on_hole)) continue;
    auto tag = classify_neighbor(g, hole, x).tag;
    if (tag == NeighborTag::Major || tag == NeighborTag::N22) return false;
  }
  return true;
}

bool is_lucky(const Graph& g, Node u1, Node u2, Node u3, std::uint64_t budget) {
  for (const Hole& h : shortest_even_holes(g, budget)) {
    const std::size_t k = h.length();
    bool has_path = false;
    for (std::size_t i = 0; i < k && !has_path; ++i) {
      Node prev = h.nodes[(i + k - 1) % k];
      Node next = h.nodes[(i + 1) % k];
      if (h.nodes[i] == u2 &&
          ((prev == u1 && next == u3) || (prev == u3 && next == u1))) {
        has_path = true;
      }
    }
    if (has_path && is_clean(g, h)) return true;
  }
  return false;
}

}  // namespace evenhole

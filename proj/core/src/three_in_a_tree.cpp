#include "evenhole/three_in_a_tree.hpp"

#include <algorithm>
#include <deque>

#include "evenhole/errors.hpp"

namespace evenhole {

bool is_induced_tree_witness(const Graph& g, std::span<const Node> nodes,
                             const std::array<Node, 3>& terminals) {
  if (nodes.empty()) return false;
  for (Node v : nodes) {
    if (!g.contains(v)) return false;
  }
  NodeBits in = to_bits(g.order(), nodes);
  if (in.count() != nodes.size()) return false;
  for (Node z : terminals) {
    if (!g.contains(z) || !in.test(z)) return false;
  }
  std::size_t edges = 0;
  for (Node v : nodes) edges += (g.neighbor_bits(v) & in).count();
  edges /= 2;
  if (edges + 1 != nodes.size()) return false;
  return connected_components(g, in).size() == 1;
}

std::optional<InducedTreeWitness> TreeSolver::solve(
    const TreeQuery& query) const {
  const auto& [z1, z2, z3] = query.terminals;
  for (Node z : query.terminals) {
    if (!query.graph.contains(z)) throw InputError("terminal out of range");
  }
  if (z1 == z2 || z1 == z3 || z2 == z3) {
    throw InputError("three-in-a-tree terminals must be distinct");
  }
  auto witness = search(query);
  if (witness && !is_induced_tree_witness(query.graph, witness->nodes,
                                          query.terminals)) {
    throw InternalError("three-in-a-tree backend returned an invalid witness");
  }
  return witness;
}

std::optional<InducedTreeWitness> ExhaustiveTreeSolver::search(
    const TreeQuery& query) const {
  const Graph& g = query.graph;
  NodeBits all(g.order());
  all.set();
  auto comp = component_labels(g, all);
  const auto& t = query.terminals;
  if (comp[t[0]] != comp[t[1]] || comp[t[0]] != comp[t[2]]) return std::nullopt;

  NodeSet pool;
  for (Node v = 0; v < g.order(); ++v) {
    if (comp[v] == comp[t[0]] && v != t[0] && v != t[1] && v != t[2]) {
      pool.push_back(v);
    }
  }
  std::uint64_t used = 0;
  const std::size_t p = pool.size();
  std::vector<std::size_t> pick;
  for (std::size_t extra = 0; extra <= p; ++extra) {
    pick.resize(extra);
    for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
    while (true) {
      if (++used > budget_) {
        throw BudgetExceeded("exhaustive three-in-a-tree budget exhausted");
      }
      NodeSet nodes(t.begin(), t.end());
      for (std::size_t i : pick) nodes.push_back(pool[i]);
      std::sort(nodes.begin(), nodes.end());
      if (is_induced_tree_witness(g, nodes, t)) {
        return InducedTreeWitness{std::move(nodes)};
      }
      // Next combination in lexicographic order.
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == p - extra + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

class PathGrowth {
 public:
  PathGrowth(const Graph& g, const std::array<Node, 3>& t, std::uint64_t budget)
      : g_(g),
        z1_(t[0]),
        z2_(t[1]),
        z3_(t[2]),
        budget_(budget),
        on_path_(g.order()),
        touch_(g.order(), 0) {}

  std::optional<InducedTreeWitness> run() {
    push(z1_);
    search();
    return std::move(found_);
  }

 private:
  void push(Node v) {
    path_.push_back(v);
    on_path_.set(v);
    for (Node w : g_.neighbors(v)) ++touch_[w];
  }
  void pop() {
    Node v = path_.back();
    path_.pop_back();
    on_path_.reset(v);
    for (Node w : g_.neighbors(v)) --touch_[w];
  }

  // z2 must stay reachable from the endpoint through nodes that see no path
  // node other than the endpoint.
  bool target_reachable() const {
    const Node end = path_.back();
    std::vector<char> seen(g_.order(), 0);
    std::vector<Node> stack{end};
    seen[end] = 1;
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node w : g_.neighbors(v)) {
        if (seen[w] || on_path_.test(w)) continue;
        int limit = g_.adjacent(w, end) ? 1 : 0;
        if (touch_[w] > limit) continue;
        if (w == z2_) return true;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  void search() {
    if (found_) return;
    const Node end = path_.back();
    if (end == z2_) {
      attach_third();
      return;
    }
    if (!target_reachable()) return;
    for (Node w : g_.neighbors(end)) {
      if (on_path_.test(w) || touch_[w] != 1) continue;
      if (++used_ > budget_) {
        throw BudgetExceeded("three-in-a-tree path search budget exhausted");
      }
      push(w);
      // z3 seeing two path nodes can never join the tree.
      bool viable = on_path_.test(z3_) || touch_[z3_] <= 1;
      if (viable) search();
      pop();
      if (found_) return;
    }
  }

  void attach_third() {
    NodeSet nodes(path_.begin(), path_.end());
    if (on_path_.test(z3_) || touch_[z3_] == 1) {
      if (!on_path_.test(z3_)) nodes.push_back(z3_);
      std::sort(nodes.begin(), nodes.end());
      found_ = InducedTreeWitness{std::move(nodes)};
      return;
    }
    if (touch_[z3_] > 1) return;
    // BFS from z3 through nodes with no path neighbor; stop at the first node
    // with exactly one path neighbor.
    std::vector<int> parent(g_.order(), -2);
    std::deque<Node> queue{z3_};
    parent[z3_] = -1;
    while (!queue.empty()) {
      Node v = queue.front();
      queue.pop_front();
      for (Node w : g_.neighbors(v)) {
        if (parent[w] != -2 || on_path_.test(w)) continue;
        if (touch_[w] == 0) {
          parent[w] = v;
          queue.push_back(w);
        } else if (touch_[w] == 1) {
          parent[w] = v;
          for (Node x = w; x != -1; x = parent[x]) nodes.push_back(x);
          std::sort(nodes.begin(), nodes.end());
          found_ = InducedTreeWitness{std::move(nodes)};
          return;
        }
      }
    }
  }

  const Graph& g_;
  Node z1_, z2_, z3_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::vector<Node> path_;
  NodeBits on_path_;
  std::vector<int> touch_;  // number of path nodes adjacent to each node
  std::optional<InducedTreeWitness> found_;
};

}  // namespace

std::optional<InducedTreeWitness> PathGrowthTreeSolver::search(
    const TreeQuery& query) const {
  return PathGrowth(query.graph, query.terminals, budget_).run();
}

std::optional<InducedTreeWitness> induced_tree_spanning(const TreeQuery& query) {
  return PathGrowthTreeSolver().solve(query);
}

}  // namespace evenhole

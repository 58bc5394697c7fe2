#include "evenhole/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "evenhole/errors.hpp"

namespace evenhole {

Graph::Graph(int n, std::span<const std::pair<Node, Node>> edges)
    : Graph(n, edges, {}) {}

Graph::Graph(int n, std::span<const std::pair<Node, Node>> edges,
             std::vector<int> labels)
    : n_(n) {
  if (n < 0) throw InputError("negative node count");
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 0);
  } else if (static_cast<int>(labels.size()) != n) {
    throw InputError("label count does not match node count");
  }
  labels_ = std::move(labels);

  rows_.assign(n, NodeBits(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range for n = " +
                       std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at node " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }

  offsets_.assign(n + 1, 0);
  for (Node v = 0; v < n; ++v) {
    offsets_[v + 1] = offsets_[v] + static_cast<int>(rows_[v].count());
  }
  targets_.resize(offsets_[n]);
  for (Node v = 0; v < n; ++v) {
    int at = offsets_[v];
    for (auto w = rows_[v].find_first(); w != NodeBits::npos;
         w = rows_[v].find_next(w)) {
      targets_[at++] = static_cast<Node>(w);
    }
  }
}

NodeBits Graph::closed_neighbor_bits(Node v) const {
  NodeBits b = rows_[v];
  b.set(v);
  return b;
}

EdgeList Graph::edge_list() const {
  EdgeList out;
  out.reserve(size());
  for (Node u = 0; u < n_; ++u) {
    for (Node v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

NodeBits to_bits(int n, std::span<const Node> nodes) {
  NodeBits b(n);
  for (Node v : nodes) {
    if (v < 0 || v >= n) {
      throw InputError("node " + std::to_string(v) + " out of range");
    }
    b.set(v);
  }
  return b;
}

NodeSet to_set(const NodeBits& bits) {
  NodeSet out;
  out.reserve(bits.count());
  for (auto v = bits.find_first(); v != NodeBits::npos; v = bits.find_next(v)) {
    out.push_back(static_cast<Node>(v));
  }
  return out;
}

NodeSet full_set(int n) {
  NodeSet out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Graph induced_subgraph(const Graph& g, const NodeBits& keep) {
  if (static_cast<int>(keep.size()) != g.order()) {
    throw InputError("node mask size does not match graph order");
  }
  std::vector<int> remap(g.order(), -1);
  std::vector<int> labels;
  labels.reserve(keep.count());
  int next = 0;
  for (auto v = keep.find_first(); v != NodeBits::npos; v = keep.find_next(v)) {
    remap[v] = next++;
    labels.push_back(g.label(static_cast<Node>(v)));
  }
  EdgeList edges;
  for (auto v = keep.find_first(); v != NodeBits::npos; v = keep.find_next(v)) {
    for (Node w : g.neighbors(static_cast<Node>(v))) {
      if (static_cast<Node>(v) < w && remap[w] >= 0) {
        edges.emplace_back(remap[v], remap[w]);
      }
    }
  }
  return Graph(next, edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  return induced_subgraph(g, to_bits(g.order(), nodes));
}

Graph remove_nodes(const Graph& g, std::span<const Node> nodes) {
  NodeBits keep = ~to_bits(g.order(), nodes);
  return induced_subgraph(g, keep);
}

std::vector<int> component_labels(const Graph& g, const NodeBits& within,
                                  int* count) {
  std::vector<int> comp(g.order(), -1);
  int c = 0;
  std::vector<Node> stack;
  for (auto s = within.find_first(); s != NodeBits::npos;
       s = within.find_next(s)) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.assign(1, static_cast<Node>(s));
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node w : g.neighbors(v)) {
        if (comp[w] < 0 && within.test(w)) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count != nullptr) *count = c;
  return comp;
}

std::vector<NodeSet> connected_components(const Graph& g,
                                          const NodeBits& within) {
  int count = 0;
  auto comp = component_labels(g, within, &count);
  std::vector<NodeSet> parts(count);
  for (Node v = 0; v < g.order(); ++v) {
    if (comp[v] >= 0) parts[comp[v]].push_back(v);
  }
  return parts;
}

std::vector<NodeSet> connected_components(const Graph& g) {
  NodeBits all(g.order());
  all.set();
  return connected_components(g, all);
}

std::vector<NodeSet> biconnected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Node, Node>> edge_stack;
  std::vector<NodeSet> blocks;
  int timer = 0;

  struct Frame {
    Node v;
    Node parent;
    int next;  // index into neighbors(v)
  };
  std::vector<Frame> frames;

  auto pop_block = [&](Node u, Node v) {
    NodeSet block;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e.first == u && e.second == v) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    blocks.push_back(std::move(block));
  };

  for (Node root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      blocks.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < static_cast<int>(nbrs.size())) {
        Node w = nbrs[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Node v = f.v;
        Node parent = f.parent;
        frames.pop_back();
        if (parent >= 0) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) pop_block(parent, v);
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_clique(const Graph& g, std::span<const Node> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) continue;
      if (!g.adjacent(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

std::optional<Path> shortest_path_restricted(const Graph& g, Node s, Node t,
                                             const NodeBits& allowed_interior) {
  if (!g.contains(s) || !g.contains(t)) throw InputError("node out of range");
  if (s == t) throw InputError("shortest_path_restricted needs s != t");
  // Distances to t, then a greedy walk from s that always takes the smallest
  // neighbor one step closer: this yields the lexicographically least among
  // all shortest paths.
  const int n = g.order();
  std::vector<int> dist(n, -1);
  std::deque<Node> queue{t};
  dist[t] = 0;
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    for (Node w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      if (w == s) {
        dist[w] = dist[v] + 1;
        continue;  // s is an endpoint, never expanded
      }
      if (!allowed_interior.test(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  if (dist[s] < 0) return std::nullopt;
  Path path{s};
  Node cur = s;
  while (cur != t) {
    for (Node w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1 && (w == t || allowed_interior.test(w))) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

bool is_induced_path(const Graph& g, std::span<const Node> path) {
  const std::size_t k = path.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.contains(path[i])) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (path[i] == path[j]) return false;
      bool adj = g.adjacent(path[i], path[j]);
      if (adj != (j == i + 1)) return false;
    }
  }
  return true;
}

}  // namespace evenhole

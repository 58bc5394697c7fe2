#include "evenhole/io.hpp"

#include <charconv>
#include <unordered_map>

#include "evenhole/errors.hpp"

namespace evenhole {

std::string_view to_string(GraphFormat f) {
  return f == GraphFormat::Graph6 ? "graph6" : "edge-list";
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class EdgeListReader {
 public:
  explicit EdgeListReader(std::string_view text) : text_(text) {}

  LoadedGraph run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      read_line(text_.substr(pos, end - pos), line_no, pos);
      pos = end + 1;
    }
    LoadedGraph out;
    out.graph = Graph(static_cast<int>(ids_.size()), edges_);
    out.ids = std::move(ids_);
    return out;
  }

 private:
  void read_line(std::string_view line, std::size_t line_no, std::size_t base) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Node> nodes;
    std::size_t i = 0;
    while (true) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      std::int64_t id = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), id);
      const std::size_t offset = base + i;
      if (ec == std::errc::result_out_of_range) {
        throw ParseError("node id overflow", line_no, offset);
      }
      if (ec != std::errc() || id < 0) {
        throw ParseError("expected a nonnegative integer id", line_no, offset);
      }
      i = static_cast<std::size_t>(ptr - line.data());
      if (i < line.size() && !is_space(line[i])) {
        throw ParseError("expected a nonnegative integer id", line_no, offset);
      }
      if (nodes.size() == 2) {
        throw ParseError("more than two ids on a line", line_no, offset);
      }
      nodes.push_back(intern(id, line_no, offset));
    }
    if (nodes.size() == 2) {
      if (nodes[0] == nodes[1]) throw ParseError("self-loop", line_no, base);
      edges_.emplace_back(nodes[0], nodes[1]);
    }
  }

  Node intern(std::int64_t id, std::size_t line_no, std::size_t offset) {
    auto [it, fresh] = dense_.try_emplace(id, static_cast<Node>(ids_.size()));
    if (fresh) {
      if (static_cast<std::int64_t>(ids_.size()) >= kMaxParsedOrder) {
        throw ParseError("too many nodes", line_no, offset);
      }
      ids_.push_back(id);
    }
    return it->second;
  }

  std::string_view text_;
  std::unordered_map<std::int64_t, Node> dense_;
  std::vector<std::int64_t> ids_;
  EdgeList edges_;
};

}  // namespace

LoadedGraph parse_edge_list(std::string_view text) { return EdgeListReader(text).run(); }

LoadedGraph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  std::string_view body = text.substr(pos);
  if (body.ends_with('\n')) body.remove_suffix(1);
  if (body.ends_with('\r')) body.remove_suffix(1);

  auto byte = [&](std::size_t i) -> int {
    if (i >= body.size()) throw ParseError("truncated graph6 record", 1, pos + i);
    const int c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1, pos + i);
    return c - 63;
  };

  std::int64_t n = 0;
  std::size_t i = 0;
  if (byte(0) < 63) {
    n = byte(0);
    i = 1;
  } else if (byte(1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | byte(k);
    i = 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | byte(k);
    i = 8;
  }
  if (n > kMaxParsedOrder) throw ParseError("too many nodes", 1, pos);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t want = i + static_cast<std::size_t>((bits + 5) / 6);
  if (body.size() != want) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(want) +
                         " bytes, got " + std::to_string(body.size()),
                     1, pos + std::min(body.size(), want));
  }

  EdgeList edges;
  std::int64_t k = 0;
  for (Node v = 1; v < n; ++v) {
    for (Node u = 0; u < v; ++u, ++k) {
      const int chunk = byte(i + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  for (; k % 6 != 0; ++k) {
    const std::size_t at = i + static_cast<std::size_t>(k / 6);
    if ((byte(at) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", 1, pos + at);
  }

  LoadedGraph out;
  out.graph = Graph(static_cast<int>(n), edges);
  out.ids.resize(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v) out.ids[static_cast<std::size_t>(v)] = v;
  return out;
}

GraphFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) continue;
    if (line.starts_with(kGraph6Header)) return GraphFormat::Graph6;
    for (char c : line) {
      if (c < 63 || c > 126) return GraphFormat::EdgeList;
    }
    return GraphFormat::Graph6;
  }
  return GraphFormat::EdgeList;
}

LoadedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string encode_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int chunk = 0, filled = 0;
  for (Node v = 1; v < n; ++v) {
    for (Node u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

std::string encode_edge_list(const Graph& g, const std::vector<std::int64_t>& ids) {
  if (ids.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("id table does not match the graph order");
  }
  // Declarations in dense order keep first-appearance order stable on reload.
  std::string out;
  for (Node v = 0; v < g.order(); ++v) out += std::to_string(ids[v]) + "\n";
  for (auto [u, v] : g.edge_list()) {
    out += std::to_string(ids[u]) + " " + std::to_string(ids[v]) + "\n";
  }
  return out;
}

std::string encode_edge_list(const Graph& g) {
  std::vector<std::int64_t> ids(static_cast<std::size_t>(g.order()));
  for (Node v = 0; v < g.order(); ++v) ids[v] = v;
  return encode_edge_list(g, ids);
}

}  // namespace evenhole

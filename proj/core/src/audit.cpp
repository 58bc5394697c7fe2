#include "evenhole/audit.hpp"

#include <algorithm>
#include <sstream>

#include "evenhole/cleaning.hpp"
#include "evenhole/errors.hpp"

namespace evenhole {

std::string_view to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Pass: return "PASS";
    case AuditStatus::Fail: return "FAIL";
    case AuditStatus::Skip: return "SKIP";
  }
  return "?";
}

std::string_view to_string(AuditCheck c) {
  switch (c) {
    case AuditCheck::MajorParity: return "major-parity";
    case AuditCheck::CleanHoleNeighbors: return "clean-hole-neighbors";
    case AuditCheck::N22OnEdge: return "n22-on-edge";
    case AuditCheck::MajorCommonNeighbor: return "major-common-neighbor";
    case AuditCheck::Gate: return "gate";
    case AuditCheck::MajorTriple: return "major-triple";
  }
  return "?";
}

bool LemmaAuditReport::any_fail() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const AuditEntry& e) { return e.status == AuditStatus::Fail; });
}

const AuditEntry& LemmaAuditReport::at(AuditCheck c) const {
  for (const auto& e : entries) {
    if (e.check == c) return e;
  }
  throw InputError("audit check missing from report");
}

namespace {

std::string show(const Hole& h) {
  std::ostringstream out;
  out << "hole [";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) out << (i ? " " : "") << h.nodes[i];
  out << "]";
  return out.str();
}

std::string show(const Hole& h, std::initializer_list<Node> nodes) {
  std::ostringstream out;
  out << show(h) << " nodes";
  for (Node v : nodes) out << ' ' << v;
  return out.str();
}

}  // namespace

bool is_gate(const Graph& g, const Hole& hole, Node u1, Node u2, Node x1, Node x2) {
  const auto& c = hole.nodes;
  const int k = static_cast<int>(c.size());
  auto pos = [&](Node v) {
    auto it = std::find(c.begin(), c.end(), v);
    return it == c.end() ? -1 : static_cast<int>(it - c.begin());
  };
  const int i1 = pos(u1), i2 = pos(u2);
  if (i1 < 0 || i2 < 0) return false;
  int d;  // step from u2 towards u1
  if ((i2 + 1) % k == i1) d = 1;
  else if ((i1 + 1) % k == i2) d = -1;
  else return false;

  // Condition G1.
  if (!g.adjacent(u1, x2) || !g.adjacent(u2, x1)) return false;
  if (!g.adjacent(u1, x1) && !g.adjacent(u2, x2)) return false;

  // Condition G2: some u0 outside {u1, u2} such that x1 only sees the arc
  // u2, u1, ..., u0 and x2 only sees the arc u1, u2, ..., u0.
  auto sees_outside = [&](Node x, int start, int step, int stop) {
    std::vector<char> on(k, 0);
    for (int i = start;; i = ((i + step) % k + k) % k) {
      on[i] = 1;
      if (i == stop) break;
    }
    for (int i = 0; i < k; ++i) {
      if (!on[i] && g.adjacent(x, c[i])) return true;
    }
    return false;
  };
  for (int i0 = 0; i0 < k; ++i0) {
    if (i0 == i1 || i0 == i2) continue;
    if (sees_outside(x1, i2, d, i0)) continue;
    if (sees_outside(x2, i1, -d, i0)) continue;
    return true;
  }
  return false;
}

LemmaAuditReport audit_lemmas(const Graph& g, const TreeSolver* solver) {
  LemmaAuditReport report;
  for (AuditCheck c : kAllAuditChecks) report.entries.push_back({c, AuditStatus::Skip, {}});
  auto entry = [&](AuditCheck c) -> AuditEntry& {
    return report.entries[static_cast<std::size_t>(c)];
  };

  const auto holes = shortest_even_holes(g);
  if (holes.empty()) return report;

  static const PathGrowthTreeSolver kDefaultSolver;
  const TreeSolver& ts = solver != nullptr ? *solver : kDefaultSolver;
  const bool four_hole_free = !find_4_hole(g).has_value();
  const bool beetle_free = !find_beetle(g, ts).has_value();

  auto pass_if_unset = [&](AuditCheck c, bool applicable) {
    if (applicable) entry(c).status = AuditStatus::Pass;
  };
  pass_if_unset(AuditCheck::MajorParity, true);
  pass_if_unset(AuditCheck::CleanHoleNeighbors, beetle_free);
  for (AuditCheck c : {AuditCheck::N22OnEdge, AuditCheck::MajorCommonNeighbor,
                       AuditCheck::Gate, AuditCheck::MajorTriple}) {
    pass_if_unset(c, four_hole_free);
  }
  auto fail = [&](AuditCheck c, std::string witness) {
    AuditEntry& e = entry(c);
    if (e.status == AuditStatus::Pass) {
      e.status = AuditStatus::Fail;
      e.witness = std::move(witness);
    }
  };

  for (const Hole& hole : holes) {
    const auto& c = hole.nodes;
    const std::size_t k = c.size();
    const NodeSet majors = major_nodes(g, hole);

    for (Node x : majors) {
      if (classify_neighbor(g, hole, x).attachment.size() % 2 != 0) {
        fail(AuditCheck::MajorParity, show(hole, {x}));
      }
    }

    if (beetle_free && is_clean(g, hole)) {
      const NodeBits on = to_bits(g.order(), c);
      for (Node x = 0; x < g.order(); ++x) {
        if (on.test(x) || !g.neighbor_bits(x).intersects(on)) continue;
        auto tag = classify_neighbor(g, hole, x).tag;
        if (tag != NeighborTag::N11 && tag != NeighborTag::N1 &&
            tag != NeighborTag::N2 && tag != NeighborTag::N3) {
          fail(AuditCheck::CleanHoleNeighbors, show(hole, {x}));
        }
      }
    }

    if (!four_hole_free) continue;

    const NodeSet n22 = n22_nodes(g, hole);
    bool edge_found = false;
    for (std::size_t i = 0; i < k && !edge_found; ++i) {
      const Node v1 = c[i], v2 = c[(i + 1) % k];
      edge_found = std::all_of(n22.begin(), n22.end(), [&](Node x) {
        return g.adjacent(x, v1) && g.adjacent(x, v2);
      });
    }
    if (!edge_found) fail(AuditCheck::N22OnEdge, show(hole));

    auto common_hole_neighbor = [&](const NodeSet& xs) {
      return std::any_of(c.begin(), c.end(), [&](Node u) {
        return std::all_of(xs.begin(), xs.end(), [&](Node x) { return g.adjacent(u, x); });
      });
    };
    if (!is_clique(g, majors) && !common_hole_neighbor(majors)) {
      fail(AuditCheck::MajorCommonNeighbor, show(hole));
    }

    for (Node x1 : majors) {
      for (Node x2 : majors) {
        if (x1 == x2 || g.adjacent(x1, x2)) continue;
        bool gate = false;
        for (std::size_t i = 0; i < k && !gate; ++i) {
          const Node a = c[i], b = c[(i + 1) % k];
          gate = is_gate(g, hole, a, b, x1, x2) || is_gate(g, hole, b, a, x1, x2);
        }
        if (!gate) fail(AuditCheck::Gate, show(hole, {x1, x2}));
      }
    }

    for (std::size_t i = 0; i < majors.size(); ++i) {
      for (std::size_t j = i + 1; j < majors.size(); ++j) {
        for (std::size_t l = j + 1; l < majors.size(); ++l) {
          const NodeSet triple{majors[i], majors[j], majors[l]};
          int edges = g.adjacent(triple[0], triple[1]) + g.adjacent(triple[0], triple[2]) +
                      g.adjacent(triple[1], triple[2]);
          if (edges <= 1 && !common_hole_neighbor(triple)) {
            fail(AuditCheck::MajorTriple, show(hole, {triple[0], triple[1], triple[2]}));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace evenhole

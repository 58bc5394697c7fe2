#ifndef EVENHOLE_CLEANING_HPP
#define EVENHOLE_CLEANING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/three_in_a_tree.hpp"

namespace evenhole {

/// Diamond b1b2b3b4 (chord b2b4) plus an induced tree through the feet
/// b5, b6, b7, which hang off b1, b2, b3 respectively. Feet need not be
/// distinct. `body` is the minimal induced tree spanning the feet.
struct Beetle {
  std::array<Node, 4> diamond;  // b1, b2, b3, b4
  std::array<Node, 3> feet;     // b5, b6, b7
  NodeSet body;

  friend bool operator==(const Beetle&, const Beetle&) = default;
};

/// Full definition check, independent of how the beetle was found.
bool is_beetle(const Graph& g, const Beetle& beetle);

/// Lexicographically least 4-hole, if any.
std::optional<Hole> find_4_hole(const Graph& g);

struct BeetleSearchStats {
  std::uint64_t candidates = 0;  // choices passing the first three conditions
  std::uint64_t tree_queries = 0;
};

std::optional<Beetle> find_beetle(const Graph& g, const TreeSolver& solver,
                                  BeetleSearchStats* stats = nullptr);

/// One of the three cycles through the beetle that is an even hole.
Hole beetle_even_hole(const Graph& g, const Beetle& beetle);

struct CliqueCapExceeded {
  std::size_t cap;
};
using CliqueList = std::vector<NodeSet>;

/// Maximal cliques (each sorted, list sorted). Returns CliqueCapExceeded as
/// soon as `cap` cliques have been produced.
std::variant<CliqueList, CliqueCapExceeded> maximal_cliques_capped(
    const Graph& g, std::size_t cap);

/// A tracker: an induced subgraph `host` of the root graph with an induced
/// 3-path u1u2u3 of the host (host ids). Host labels are root ids.
struct Tracker {
  Graph host;
  Node u1 = 0, u2 = 0, u3 = 0;
};

bool is_valid_tracker(const Tracker& t);

/// Which deletion family produced a tracker; ids of the graph passed to
/// generate_trackers.
struct TrackerOrigin {
  enum class Kind { S1, S2 } kind = Kind::S1;
  std::array<Node, 3> path{};  // u1, u2, u3 as enumerated
  Node v1 = -1, v2 = -1;       // S1: the edge v1v2
  std::size_t clique = 0;      // S2: index into the clique list
};

/// Compact tracker: the kept node set of G and the path in G's ids, oriented
/// so that path[0] < path[2].
struct TrackerSpec {
  NodeBits keep;
  std::array<Node, 3> path{};
  TrackerOrigin origin;  // first parameter tuple that produced it
};

struct TrackerSet {
  std::vector<TrackerSpec> trackers;
  std::uint64_t candidates = 0;  // parameter tuples examined
};

/// Builds the host graph of a tracker spec over g.
Tracker materialize(const Graph& g, const TrackerSpec& spec);

/// The deletion sets of the two families, over g's ids.
NodeBits s1_deletion(const Graph& g, Node u1, Node u2, Node u3, Node v1, Node v2);
NodeBits s2_deletion(const Graph& g, Node u1, Node u2, const NodeSet& clique);

/// Trackers (G \ S1, u1u2u3) for every induced 3-path and edge v1v2, and
/// (G \ S2, u1u2u3) for every edge u1u2, maximal clique K and
/// u3 in N(u2) \ {u1}. Only trackers whose path survives as an induced 3-path
/// are kept; duplicates (same node set, same path up to reversal) collapse.
TrackerSet generate_trackers(const Graph& g, const CliqueList& cliques);

struct EvenHoleFound {
  std::optional<Hole> certificate;  // ids of the input graph
  enum class Reason { FourHole, Beetle, CliqueCount } reason;
};

struct CleaningStats {
  BeetleSearchStats beetle;
  std::size_t cliques = 0;
};

/// Above this order a clique-cap verdict carries no certificate.
inline constexpr int kCliqueCertificateMaxOrder = 12;

/// 4-hole test, beetle search, then the clique-count test; otherwise the
/// tracker set. Certificates are in g's ids.
std::variant<EvenHoleFound, TrackerSet> clean_phase(
    const Graph& g, const TreeSolver& solver, CleaningStats* stats = nullptr);

}  // namespace evenhole

#endif  // EVENHOLE_CLEANING_HPP

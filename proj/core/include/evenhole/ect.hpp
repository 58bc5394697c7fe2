#ifndef EVENHOLE_ECT_HPP
#define EVENHOLE_ECT_HPP

#include <limits>
#include <optional>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/holes.hpp"

namespace evenhole {

/// At most two nodes whose removal leaves a block graph.
struct EctWitness {
  NodeSet s;

  friend bool operator==(const EctWitness&, const EctWitness&) = default;
};

/// Every biconnected component of g[keep] is a clique.
bool is_block_graph(const Graph& g, const NodeBits& keep);

bool is_ect_witness(const Graph& h, const EctWitness& w);

/// Tries the empty set, then single nodes, then pairs, each in
/// lexicographic order.
std::optional<EctWitness> recognize_ect(const Graph& h);

/// Induced paths of the block graph H = H0 \ {x, y}. In a block graph the
/// induced path between two nodes is unique and equals the shortest path.
class EctPathTable {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  /// H0 \ {x, y} must be a block graph; x == y is allowed.
  EctPathTable(const Graph& h0, Node x, Node y);

  /// Edge count of P(u, v), kUnreachable when u, v lie in different
  /// components. u, v are H0 ids outside {x, y}.
  int length(Node u, Node v) const { return dist_[index(u, v)]; }
  /// Interior of P(u, v) has a neighbor of x (resp. y).
  bool interior_sees_x(Node u, Node v) const { return sees_x_[index(u, v)]; }
  bool interior_sees_y(Node u, Node v) const { return sees_y_[index(u, v)]; }
  /// P(u, v) from u to v in H0 ids.
  Path path(Node u, Node v) const;

 private:
  std::size_t index(Node u, Node v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<int> dist_;
  std::vector<Node> parent_;  // parent_[index(u, v)]: predecessor of v from u
  std::vector<char> sees_x_, sees_y_;
};

/// How the case of a hole through two non-adjacent excised nodes is tested.
/// Literal applies the three textbook conditions only; Strengthened also
/// requires x (resp. y) to have no neighbor on either path other than
/// u_x, v_x (resp. u_y, v_y).
enum class EctCase2Rule { Strengthened, Literal };

/// Decides whether h0 has an even hole given an ECT witness (padded to two
/// nodes with the smallest nodes outside it). Returns a certificate in h0's
/// ids. Throws InputError for an invalid witness.
std::optional<Hole> ect_even_hole(const Graph& h0, const EctWitness& w,
                                  EctCase2Rule rule = EctCase2Rule::Strengthened);

/// Raw verdict of the case analysis, before the certificate is validated.
/// Under the Literal rule this can claim a hole that is not one.
bool ect_claims_even_hole(const Graph& h0, const EctWitness& w, EctCase2Rule rule);

}  // namespace evenhole

#endif  // EVENHOLE_ECT_HPP

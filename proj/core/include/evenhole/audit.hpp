#ifndef EVENHOLE_AUDIT_HPP
#define EVENHOLE_AUDIT_HPP

#include <string>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/three_in_a_tree.hpp"

namespace evenhole {

enum class AuditStatus { Pass, Fail, Skip };

std::string_view to_string(AuditStatus s);

/// Structural facts about shortest even holes checked by exhaustive
/// enumeration. Each check names its precondition; it is skipped when the
/// graph has no even hole or the precondition fails.
enum class AuditCheck {
  MajorParity,          // every major node has an even attachment
  CleanHoleNeighbors,   // beetle-free: clean holes only see N11, N1, N2, N3
  N22OnEdge,            // 4-hole-free: N22 nodes all see both ends of one edge
  MajorCommonNeighbor,  // 4-hole-free: non-clique majors share a hole neighbor
  Gate,                 // 4-hole-free: non-adjacent majors admit a gate
  MajorTriple,          // 4-hole-free: sparse major triples share a hole neighbor
};

inline constexpr AuditCheck kAllAuditChecks[] = {
    AuditCheck::MajorParity, AuditCheck::CleanHoleNeighbors, AuditCheck::N22OnEdge,
    AuditCheck::MajorCommonNeighbor, AuditCheck::Gate, AuditCheck::MajorTriple};

std::string_view to_string(AuditCheck c);

struct AuditEntry {
  AuditCheck check;
  AuditStatus status = AuditStatus::Skip;
  /// On failure: the hole and the offending nodes, replayable against the
  /// audited graph.
  std::string witness;
};

struct LemmaAuditReport {
  std::vector<AuditEntry> entries;  // one per AuditCheck, in declaration order

  bool any_fail() const;
  const AuditEntry& at(AuditCheck c) const;
};

/// Edge u1u2 of the hole is a gate for majors x1, x2 (in this order).
bool is_gate(const Graph& g, const Hole& hole, Node u1, Node u2, Node x1, Node x2);

LemmaAuditReport audit_lemmas(const Graph& g, const TreeSolver* solver = nullptr);

}  // namespace evenhole

#endif  // EVENHOLE_AUDIT_HPP

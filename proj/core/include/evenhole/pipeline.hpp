#ifndef EVENHOLE_PIPELINE_HPP
#define EVENHOLE_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evenhole/cleaning.hpp"
#include "evenhole/graph.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/star_cutset.hpp"
#include "evenhole/three_in_a_tree.hpp"
#include "evenhole/two_join.hpp"

namespace evenhole {

enum class Status { EvenHoleFree, ContainsEvenHole };

std::string_view to_string(Status s);

struct TraceEvent {
  std::string stage;
  std::string detail;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Counters {
  std::size_t components = 0;
  std::size_t beetle_candidates = 0;
  std::size_t tree_queries = 0;
  std::size_t cliques = 0;
  std::size_t tracker_candidates = 0;
  std::size_t trackers = 0;
  std::size_t trackers_pruned = 0;  // no hole through the path at all
  std::size_t trackers_decided = 0;
  std::size_t task1 = 0, task2 = 0, task3 = 0;
  std::size_t reduction_iterations = 0;
  std::size_t dominated_removed = 0;
  std::size_t tracker_bound_violations = 0;  // |T| > 4 m^2 n
  std::size_t decomposition_bound_violations = 0;
  std::size_t push_bound_violations = 0;
  TwoJoinStats two_join;

  Counters& operator+=(const Counters& o);
  friend bool operator==(const Counters&, const Counters&) = default;
};

struct Verdict {
  Status status = Status::EvenHoleFree;
  std::optional<Hole> certificate;  // labels of the input graph
  std::vector<TraceEvent> trace;    // most recent events only
  std::size_t trace_dropped = 0;
  Counters counters;
};

struct PipelineOptions {
  /// Workers for tracker decisions; 0 reads EVENHOLE_THREADS, falling back
  /// to the hardware concurrency.
  unsigned threads = 0;
  /// Skip trackers whose host has no hole through u1u2u3 (such a tracker is
  /// never lucky) before running the reduction.
  bool prune_trackers = true;
  std::size_t trace_limit = 10'000;
  TwoJoinOptions two_join;
  /// Three-in-a-tree backend for the beetle search; nullptr selects
  /// PathGrowthTreeSolver.
  const TreeSolver* solver = nullptr;
};

unsigned resolve_threads(unsigned requested);

struct TrackerDecision {
  bool contains_even_hole = false;
  std::optional<Hole> certificate;  // host labels
  ReductionOutcome reduction;
  std::optional<NoStarCutsetVerdict> decomposition;
};

/// Reduction by star-cutsets, then the 2-join decomposition on what is left.
TrackerDecision decide_tracker(const Tracker& t, const TwoJoinOptions& options = {});

/// g[keep] has a hole through the 3-path u1u2u3.
bool has_hole_through(const Graph& g, const NodeBits& keep, Node u1, Node u2,
                      Node u3);

/// Even-hole recognition, per connected component.
Verdict recognize(const Graph& g, const PipelineOptions& options = {});

/// Some even hole of g, or nullopt iff recognize reports g even-hole-free.
/// Falls back to node deletion when the recognizer has no certificate.
std::optional<Hole> find_even_hole(const Graph& g, const PipelineOptions& options = {});

/// Orders a node set inducing a cycle into a canonical hole; nullopt when
/// the set does not induce a hole.
std::optional<Hole> hole_from_node_set(const Graph& g, const NodeSet& nodes);

}  // namespace evenhole

#endif  // EVENHOLE_PIPELINE_HPP

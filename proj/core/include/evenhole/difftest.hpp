#ifndef EVENHOLE_DIFFTEST_HPP
#define EVENHOLE_DIFFTEST_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/pipeline.hpp"

namespace evenhole {

/// An indexed family of graphs; make(i) may return nullopt to skip i.
struct Corpus {
  std::string name;
  std::uint64_t count = 0;
  std::function<std::optional<Graph>(std::uint64_t)> make;
};

/// Every labeled graph on n nodes, edge bits in graph6 order.
Corpus exhaustive_corpus(int n, bool connected_only);
/// `count` G(n, p) samples; sample i uses derive_seed(seed, i).
Corpus gnp_corpus(int n, double p, std::uint64_t count, std::uint64_t seed);
Corpus chordal_corpus(int max_n, int max_clique, std::uint64_t count, std::uint64_t seed);
Corpus ect_corpus(int max_n, std::uint64_t count, std::uint64_t seed);
Corpus two_join_corpus(int max_n, std::uint64_t count, std::uint64_t seed);

struct Mismatch {
  std::string corpus;
  std::uint64_t index = 0;
  std::string graph6;
  bool recognized = false;  // recognizer said "contains"
  bool oracle = false;
  std::string error;        // exception text when the recognizer threw
  /// "verdict" or "block-parity".
  std::string kind = "verdict";
  std::string shrunk_graph6;
  int shrunk_order = 0;
};

struct DifftestReport {
  std::uint64_t graphs = 0;
  std::uint64_t skipped = 0;
  std::uint64_t contains = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t errors = 0;
  std::uint64_t certificates = 0;
  std::uint64_t certificate_failures = 0;
  std::uint64_t find_checks = 0;
  std::uint64_t find_failures = 0;
  std::uint64_t tracker_bound_violations = 0;
  std::uint64_t decomposition_bound_violations = 0;
  std::uint64_t block_bound_violations = 0;
  std::uint64_t max_trackers = 0;
  std::uint64_t decompositions = 0;
  std::uint64_t parity_checks = 0;
  std::uint64_t parity_violations = 0;
  std::optional<Mismatch> first_mismatch;  // lowest (corpus, index)

  bool ok() const {
    return mismatches == 0 && errors == 0 && certificate_failures == 0 &&
           find_failures == 0 && tracker_bound_violations == 0 &&
           decomposition_bound_violations == 0 && block_bound_violations == 0 &&
           parity_violations == 0;
  }
  DifftestReport& operator+=(const DifftestReport& o);
};

enum class DifftestTarget {
  Recognize,
  /// decide_no_star_cutset on connected graphs without star-cutsets; other
  /// graphs are skipped. When a non-path 2-join exists, the oracle verdict on
  /// the host must also equal the verdict on its two blocks.
  NoStarCutset,
};

struct DifftestOptions {
  DifftestTarget target = DifftestTarget::Recognize;
  PipelineOptions pipeline;  // its thread count is forced to 1
  /// Also run find_even_hole on every graph the oracle says contains one.
  bool check_find = false;
  bool shrink = true;
  /// Graph-level workers; 0 reads EVENHOLE_THREADS.
  unsigned threads = 0;
};

DifftestReport run_corpus(const Corpus& corpus, const DifftestOptions& options = {});

/// Greedy node deletion while `fails` keeps holding.
Graph shrink_graph(const Graph& g, const std::function<bool(const Graph&)>& fails);

}  // namespace evenhole

#endif  // EVENHOLE_DIFFTEST_HPP

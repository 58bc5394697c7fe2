// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "evenhole/audit.hpp"
#include "evenhole/cleaning.hpp"
#include "evenhole/difftest.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/pipeline.hpp"
#include "evenhole/star_cutset.hpp"
#include "evenhole/two_join.hpp"
#include "report.hpp"

namespace {

using namespace evenhole;

// Pinned sizes and thresholds.
constexpr int kExhaustiveMaxN = 7;
constexpr std::uint64_t kSamplesPerCell = 10'000;
constexpr std::array<int, 4> kOrders{8, 10, 12, 14};
constexpr std::array<double, 3> kDensities{0.2, 0.35, 0.5};
constexpr int kAuditMaxN = 8;
constexpr std::size_t kParityHosts = 1'000;
constexpr int kParityHostMaxN = 12;
constexpr std::uint64_t kParitySampleCap = 2'000'000;
constexpr int kCycleMaxK = 8;
constexpr int kChordalGraphs = 1'000;
constexpr int kChordalMaxN = 60;
constexpr int kDeterminismGraphs = 300;
constexpr unsigned kManyThreads = 4;
constexpr std::uint64_t kSeed = 20240601;
// Minutes, per the targets for criteria 1 and 2.
constexpr double kExhaustiveMinutes = 30;
constexpr double kRandomMinutes = 60;

struct Result {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Result& r) {
  std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": "
            << r.detail << std::endl;
  failures += !r.pass;
}

double minutes_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 60.0;
}

std::string fmt_minutes(double m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f min", m);
  return buf;
}

std::string mismatch_text(const DifftestReport& r) {
  if (!r.first_mismatch) return "";
  const Mismatch& m = *r.first_mismatch;
  return "; first mismatch " + m.corpus + " #" + std::to_string(m.index) + " " + m.graph6 +
         " (" + m.kind + "), shrunk " + m.shrunk_graph6;
}

// Reports from criteria 1, 2 and 6 feed criteria 3 and 5.
DifftestReport exhaustive_report, random_report, host_report;

Result criterion_exhaustive() {
  DifftestOptions o;
  o.check_find = true;
  const auto t0 = std::chrono::steady_clock::now();
  DifftestReport total;
  for (int n = 1; n <= kExhaustiveMaxN; ++n) total += run_corpus(exhaustive_corpus(n, true), o);
  const double mins = minutes_since(t0);
  exhaustive_report = total;
  const bool pass = total.mismatches == 0 && total.errors == 0 && mins <= kExhaustiveMinutes;
  return {pass, std::to_string(total.graphs) + " connected graphs n<=" +
                    std::to_string(kExhaustiveMaxN) + ", " + std::to_string(total.mismatches) +
                    " mismatches, " + std::to_string(total.errors) + " errors, " +
                    fmt_minutes(mins) + mismatch_text(total)};
}

Result criterion_random() {
  DifftestOptions o;
  o.check_find = true;
  const auto t0 = std::chrono::steady_clock::now();
  DifftestReport total;
  std::uint64_t stream = 0;
  for (int n : kOrders) {
    for (double p : kDensities) {
      total += run_corpus(gnp_corpus(n, p, kSamplesPerCell, derive_seed(kSeed, stream++)), o);
    }
  }
  const double mins = minutes_since(t0);
  random_report = total;
  const bool pass = total.graphs == kSamplesPerCell * kOrders.size() * kDensities.size() &&
                    total.mismatches == 0 && total.errors == 0 && mins <= kRandomMinutes;
  return {pass, std::to_string(total.graphs) + " G(n,p) samples, " +
                    std::to_string(total.mismatches) + " mismatches, " +
                    std::to_string(total.errors) + " errors, " + fmt_minutes(mins) +
                    mismatch_text(total)};
}

Result criterion_certificates() {
  DifftestReport all = exhaustive_report;
  all += random_report;
  const bool pass = all.certificate_failures == 0 && all.find_failures == 0 &&
                    all.certificates > 0 && all.find_checks == all.contains;
  return {pass, std::to_string(all.certificates) + " certificates (" +
                    std::to_string(all.certificate_failures) + " invalid), " +
                    std::to_string(all.find_checks) + " find checks (" +
                    std::to_string(all.find_failures) + " invalid)"};
}

// Adjacency of an n-node graph as a bit mask in graph6 pair order.
std::uint64_t pair_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return std::uint64_t{1} << (v * (v - 1) / 2 + u);
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask & pair_bit(u, v)) edges.emplace_back(u, v);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (auto [u, v] : edges) m |= pair_bit(perm[u], perm[v]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

// One representative per isomorphism class for n <= 7; for n = 8, every
// class representative on 7 nodes extended by a node with every possible
// neighborhood, which meets every class on 8 nodes.
std::vector<std::vector<std::uint64_t>> graph_classes(int max_n) {
  std::vector<std::vector<std::uint64_t>> by_n(static_cast<std::size_t>(max_n) + 1);
  by_n[1] = {0};
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t>& out = by_n[static_cast<std::size_t>(n)];
    for (std::uint64_t base : by_n[static_cast<std::size_t>(n) - 1]) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
        std::uint64_t m = base;
        for (int u = 0; u < n - 1; ++u)
          if ((nb >> u) & 1) m |= pair_bit(u, n - 1);
        if (n <= 7) {
          if (seen.insert(canonical_mask(n, m)).second) out.push_back(m);
        } else {
          out.push_back(m);
        }
      }
    }
  }
  return by_n;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  EdgeList e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask & pair_bit(u, v)) e.emplace_back(u, v);
  return Graph(n, e);
}

Result criterion_audit() {
  // Numbers of graphs on 1..7 nodes up to isomorphism.
  constexpr std::array<std::size_t, 8> kClassCounts{0, 1, 2, 4, 11, 34, 156, 1044};
  const auto classes = graph_classes(kAuditMaxN);
  for (int n = 1; n <= std::min(kAuditMaxN, 7); ++n) {
    if (classes[static_cast<std::size_t>(n)].size() != kClassCounts[static_cast<std::size_t>(n)]) {
      return {false, "class enumeration on " + std::to_string(n) + " nodes found " +
                         std::to_string(classes[static_cast<std::size_t>(n)].size())};
    }
  }
  const PathGrowthTreeSolver solver;
  std::size_t audited = 0, graphs = 0;
  std::array<std::size_t, std::size(kAllAuditChecks)> pass{}, fail{};
  std::string witness;
  for (int n = 1; n <= kAuditMaxN; ++n) {
    for (std::uint64_t mask : classes[static_cast<std::size_t>(n)]) {
      ++graphs;
      Graph g = graph_from_mask(n, mask);
      if (find_4_hole(g) || find_beetle(g, solver) || !has_even_hole(g)) continue;
      ++audited;
      const LemmaAuditReport r = audit_lemmas(g, &solver);
      for (std::size_t i = 0; i < r.entries.size(); ++i) {
        pass[i] += r.entries[i].status == AuditStatus::Pass;
        if (r.entries[i].status == AuditStatus::Fail) {
          ++fail[i];
          if (witness.empty()) {
            witness = "; " + std::string(to_string(r.entries[i].check)) + " fails on n=" +
                      std::to_string(n) + " mask " + std::to_string(mask) + ": " +
                      r.entries[i].witness;
          }
        }
      }
    }
  }
  bool ok = audited > 0;
  std::string counts;
  for (std::size_t i = 0; i < pass.size(); ++i) {
    ok = ok && fail[i] == 0 && pass[i] > 0;
    counts += std::string(i ? ", " : "") + std::string(to_string(kAllAuditChecks[i])) + " " +
              std::to_string(pass[i]) + "/" + std::to_string(fail[i]);
  }
  return {ok, std::to_string(graphs) + " graphs n<=" + std::to_string(kAuditMaxN) +
                  " (all isomorphism classes), " + std::to_string(audited) +
                  " 4-hole-free beetle-free with an even hole; pass/fail: " + counts + witness};
}

struct HostRun {
  std::size_t hosts = 0;
  std::uint64_t samples = 0;
  std::size_t parity_violations = 0;
  std::size_t block_violations = 0;
  std::size_t decide_mismatches = 0;
  std::size_t with_even_hole = 0;
  std::string witness;
};
HostRun host_run;

void collect_hosts() {
  HostRun& r = host_run;
  for (std::uint64_t i = 0; r.hosts < kParityHosts && i < kParitySampleCap; ++i) {
    ++r.samples;
    Graph g = generate(gen::TwoJoin{kParityHostMaxN}, derive_seed(kSeed, 7'000'000 + i));
    if (connected_components(g).size() != 1) continue;
    auto split = find_non_path_2join(g);
    if (!split || has_star_cutset_exhaustive(g)) continue;
    ++r.hosts;
    const bool want = has_even_hole(g);
    r.with_even_hole += want;
    const Blocks b = blocks_of_decomposition(g, *split);
    const bool blocks = has_even_hole(b.h1) || has_even_hole(b.h2);
    if (blocks != want) {
      ++r.parity_violations;
      if (r.witness.empty()) r.witness = "; parity fails on sample " + std::to_string(i);
    }
    const int n = g.order();
    const std::size_t m = g.size();
    if (b.h1.order() > n || b.h2.order() > n || b.h1.size() > m - 1 || b.h2.size() > m - 1 ||
        !satisfies_no_star_cutset_split_properties(g, *split)) {
      ++r.block_violations;
    }
    const NoStarCutsetVerdict v = decide_no_star_cutset(g);
    r.decide_mismatches += v.contains_even_hole != want;
    host_report.decomposition_bound_violations +=
        !v.stats.decomposition_bound_ok() + !v.stats.push_bound_ok();
    host_report.block_bound_violations +=
        v.stats.block_bound_violations + v.stats.split_property_violations;
    host_report.decompositions += v.stats.decompositions;
  }
}

Result criterion_bounds() {
  DifftestReport all = exhaustive_report;
  all += random_report;
  all += host_report;
  const bool pass = all.tracker_bound_violations == 0 && all.decomposition_bound_violations == 0 &&
                    all.block_bound_violations == 0 && host_run.block_violations == 0 &&
                    host_run.hosts > 0;
  return {pass, "tracker bound violations " + std::to_string(all.tracker_bound_violations) +
                    " (max trackers " + std::to_string(all.max_trackers) +
                    "), decomposition-count violations " +
                    std::to_string(all.decomposition_bound_violations) +
                    ", block size violations " +
                    std::to_string(all.block_bound_violations + host_run.block_violations) +
                    " over " + std::to_string(host_run.hosts) + " 2-join hosts and " +
                    std::to_string(all.decompositions) + " loop decompositions"};
}

Result criterion_parity() {
  const HostRun& r = host_run;
  const bool pass = r.hosts >= kParityHosts && r.parity_violations == 0 &&
                    r.decide_mismatches == 0;
  return {pass, std::to_string(r.hosts) + " hosts without star-cutsets (n<=" +
                    std::to_string(kParityHostMaxN) + ", " + std::to_string(r.samples) +
                    " samples, " + std::to_string(r.with_even_hole) + " with even holes), " +
                    std::to_string(r.parity_violations) + " parity violations, " +
                    std::to_string(r.decide_mismatches) + " decision mismatches" + r.witness};
}

Result criterion_families() {
  std::string bad;
  PipelineOptions o;
  for (int k = 2; k <= kCycleMaxK; ++k) {
    const Graph even = cycle_graph(2 * k);
    const Verdict v = recognize(even, o);
    std::vector<Node> all(static_cast<std::size_t>(2 * k));
    std::iota(all.begin(), all.end(), 0);
    if (v.status != Status::ContainsEvenHole || v.certificate != Hole::canonical(all)) {
      bad += " C" + std::to_string(2 * k);
    }
    if (recognize(cycle_graph(2 * k + 1), o).status != Status::EvenHoleFree) {
      bad += " C" + std::to_string(2 * k + 1);
    }
  }
  int chordal_bad = 0;
  for (int i = 0; i < kChordalGraphs; ++i) {
    Rng rng(derive_seed(kSeed, 9'000'000 + static_cast<std::uint64_t>(i)));
    const int n = 4 + static_cast<int>(rng() % (kChordalMaxN - 3));
    const int clique = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_chordal(n, clique, rng);
    chordal_bad += recognize(g, o).status != Status::EvenHoleFree;
  }
  if (chordal_bad) bad += " chordal x" + std::to_string(chordal_bad);
  const Graph petersen = named_graph("petersen");
  const Verdict pv = recognize(petersen, o);
  const bool petersen_ok = pv.status == Status::ContainsEvenHole && pv.certificate &&
                           pv.certificate->length() == 6 &&
                           is_even_hole(petersen, pv.certificate->nodes);
  if (!petersen_ok) bad += " petersen";
  return {bad.empty(), "C4..C" + std::to_string(2 * kCycleMaxK + 1) + ", " +
                           std::to_string(kChordalGraphs) + " chordal graphs n<=" +
                           std::to_string(kChordalMaxN) + ", Petersen" +
                           (bad.empty() ? "" : "; wrong:" + bad)};
}

std::string verdict_text(const Graph& g, unsigned threads) {
  PipelineOptions o;
  o.threads = threads;
  std::vector<std::int64_t> ids(static_cast<std::size_t>(g.order()));
  std::iota(ids.begin(), ids.end(), 0);
  return tools::verdict_json(recognize(g, o), ids, true).dump();
}

Result criterion_determinism() {
  int differ = 0, graphs = 0;
  for (int i = 0; i < kDeterminismGraphs; ++i) {
    const std::uint64_t seed = derive_seed(kSeed, 11'000'000 + static_cast<std::uint64_t>(i));
    Graph g;
    switch (i % 3) {
      case 0: g = generate(gen::Gnp{10 + i % 5, 0.25}, seed); break;
      case 1: g = generate(gen::TwoJoin{14}, seed); break;
      default: g = generate(gen::Ect{14}, seed); break;
    }
    ++graphs;
    const std::string one = verdict_text(g, 1);
    differ += one != verdict_text(g, kManyThreads) || one != verdict_text(g, 1);
  }
  DifftestOptions a, b;
  a.threads = 1;
  b.threads = kManyThreads;
  const Corpus corpus = gnp_corpus(12, 0.3, 2'000, kSeed);
  const bool same_report =
      tools::difftest_json(run_corpus(corpus, a)).dump() ==
      tools::difftest_json(run_corpus(corpus, b)).dump();
  return {differ == 0 && same_report,
          std::to_string(graphs) + " verdict reports at 1 and " + std::to_string(kManyThreads) +
              " threads, " + std::to_string(differ) + " differ; difftest report " +
              (same_report ? "identical" : "differs")};
}

}  // namespace

int main() {
  report(1, "exhaustive-equivalence", criterion_exhaustive());
  report(2, "random-equivalence", criterion_random());
  report(3, "certificate-soundness", criterion_certificates());
  report(4, "structural-audit", criterion_audit());
  collect_hosts();
  report(5, "decomposition-bounds", criterion_bounds());
  report(6, "block-parity", criterion_parity());
  report(7, "known-families", criterion_families());
  report(8, "determinism", criterion_determinism());
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}

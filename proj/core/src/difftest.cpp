#include "evenhole/difftest.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <tuple>

#include "evenhole/generators.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/io.hpp"
#include "evenhole/star_cutset.hpp"
#include "evenhole/two_join.hpp"

namespace evenhole {

Corpus exhaustive_corpus(int n, bool connected_only) {
  const int bits = n * (n - 1) / 2;
  Corpus c;
  c.name = "exhaustive:" + std::to_string(n) + (connected_only ? ":connected" : "");
  c.count = std::uint64_t{1} << bits;
  c.make = [n, connected_only](std::uint64_t mask) -> std::optional<Graph> {
    EdgeList edges;
    int k = 0;
    for (Node v = 1; v < n; ++v) {
      for (Node u = 0; u < v; ++u, ++k) {
        if ((mask >> k) & 1) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (connected_only && connected_components(g).size() > 1) return std::nullopt;
    return g;
  };
  return c;
}

Corpus gnp_corpus(int n, double p, std::uint64_t count, std::uint64_t seed) {
  Corpus c;
  c.name = "gnp:" + std::to_string(n) + ":" + std::to_string(p);
  c.count = count;
  c.make = [n, p, seed](std::uint64_t i) -> std::optional<Graph> {
    Rng rng(derive_seed(seed, i));
    return gnp(n, p, rng);
  };
  return c;
}

Corpus chordal_corpus(int max_n, int max_clique, std::uint64_t count, std::uint64_t seed) {
  Corpus c;
  c.name = "chordal:" + std::to_string(max_n) + ":" + std::to_string(max_clique);
  c.count = count;
  c.make = [max_n, max_clique, seed](std::uint64_t i) -> std::optional<Graph> {
    Rng rng(derive_seed(seed, i));
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    return random_chordal(n, max_clique, rng);
  };
  return c;
}

Corpus ect_corpus(int max_n, std::uint64_t count, std::uint64_t seed) {
  Corpus c;
  c.name = "ect:" + std::to_string(max_n);
  c.count = count;
  c.make = [max_n, seed](std::uint64_t i) -> std::optional<Graph> {
    Rng rng(derive_seed(seed, i));
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    return random_ect(n, rng);
  };
  return c;
}

Corpus two_join_corpus(int max_n, std::uint64_t count, std::uint64_t seed) {
  Corpus c;
  c.name = "twojoin:" + std::to_string(max_n);
  c.count = count;
  c.make = [max_n, seed](std::uint64_t i) -> std::optional<Graph> {
    Rng rng(derive_seed(seed, i));
    return random_two_join(max_n, rng);
  };
  return c;
}

DifftestReport& DifftestReport::operator+=(const DifftestReport& o) {
  graphs += o.graphs;
  skipped += o.skipped;
  contains += o.contains;
  mismatches += o.mismatches;
  errors += o.errors;
  certificates += o.certificates;
  certificate_failures += o.certificate_failures;
  find_checks += o.find_checks;
  find_failures += o.find_failures;
  tracker_bound_violations += o.tracker_bound_violations;
  decomposition_bound_violations += o.decomposition_bound_violations;
  block_bound_violations += o.block_bound_violations;
  max_trackers = std::max(max_trackers, o.max_trackers);
  decompositions += o.decompositions;
  parity_checks += o.parity_checks;
  parity_violations += o.parity_violations;
  if (o.first_mismatch) {
    auto key = [](const Mismatch& m) { return std::tie(m.corpus, m.index); };
    if (!first_mismatch || key(*o.first_mismatch) < key(*first_mismatch)) {
      first_mismatch = o.first_mismatch;
    }
  }
  return *this;
}

Graph shrink_graph(const Graph& g, const std::function<bool(const Graph&)>& fails) {
  Graph cur = g;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Node v = 0; v < cur.order(); ++v) {
      const Node drop[] = {v};
      Graph next = remove_nodes(cur, drop);
      // Relabel so the shrunk graph is self-contained.
      next = Graph(next.order(), next.edge_list());
      if (fails(next)) {
        cur = std::move(next);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

struct Outcome {
  bool recognized = false;
  std::string error;
  Counters counters;
  std::optional<Hole> certificate;
  bool parity_checked = false;
  bool parity_ok = true;
};

bool eligible(const Graph& g, DifftestTarget target) {
  if (target == DifftestTarget::Recognize) return true;
  return g.order() > 0 && connected_components(g).size() == 1 &&
         !has_star_cutset_exhaustive(g);
}

// Oracle verdict on the host against the verdict on its blocks.
bool blocks_keep_parity(const Graph& g, const Split& split, bool oracle,
                        const TwoJoinOptions& options) {
  const Blocks b = blocks_of_decomposition(g, split, options.flip_marker_parity);
  return oracle == (has_even_hole(b.h1) || has_even_hole(b.h2));
}

Outcome run_target(const Graph& g, bool oracle, const DifftestOptions& options) {
  Outcome o;
  try {
    if (options.target == DifftestTarget::Recognize) {
      Verdict v = recognize(g, options.pipeline);
      o.recognized = v.status == Status::ContainsEvenHole;
      o.counters = v.counters;
      o.certificate = std::move(v.certificate);
    } else {
      NoStarCutsetVerdict v = decide_no_star_cutset(g, options.pipeline.two_join);
      o.recognized = v.contains_even_hole;
      o.counters.two_join = v.stats;
      o.counters.decomposition_bound_violations = !v.stats.decomposition_bound_ok();
      o.counters.push_bound_violations = !v.stats.push_bound_ok();
      o.certificate = std::move(v.certificate);
      if (auto split = find_non_path_2join(g, options.pipeline.two_join.two_join_budget)) {
        o.parity_checked = true;
        o.parity_ok = blocks_keep_parity(g, *split, oracle, options.pipeline.two_join);
      }
    }
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

void check_one(const Corpus& corpus, std::uint64_t index, const Graph& g,
               const DifftestOptions& options, DifftestReport& report) {
  if (!eligible(g, options.target)) {
    ++report.skipped;
    return;
  }
  ++report.graphs;
  const bool oracle = has_even_hole(g);
  const Outcome got = run_target(g, oracle, options);
  report.contains += oracle;
  report.parity_checks += got.parity_checked;

  const bool wrong = got.recognized != oracle;
  if (!got.error.empty() || wrong || !got.parity_ok) {
    if (!got.error.empty()) {
      ++report.errors;
    } else if (wrong) {
      ++report.mismatches;
    } else {
      ++report.parity_violations;
    }
    Mismatch m{corpus.name, index, encode_graph6(g), got.recognized, oracle, got.error,
               wrong || !got.error.empty() ? "verdict" : "block-parity", {}, 0};
    if (!report.first_mismatch || index < report.first_mismatch->index) {
      Graph small = g;
      if (options.shrink) {
        small = shrink_graph(g, [&](const Graph& h) {
          if (!eligible(h, options.target)) return false;
          const bool want = has_even_hole(h);
          const Outcome o = run_target(h, want, options);
          return !o.error.empty() || o.recognized != want || !o.parity_ok;
        });
      }
      m.shrunk_graph6 = encode_graph6(small);
      m.shrunk_order = small.order();
      report.first_mismatch = std::move(m);
    }
    return;
  }

  const Counters& c = got.counters;
  if (got.certificate) {
    ++report.certificates;
    if (!is_even_hole(g, got.certificate->nodes)) ++report.certificate_failures;
  }
  report.tracker_bound_violations += c.tracker_bound_violations;
  report.decomposition_bound_violations +=
      c.decomposition_bound_violations + c.push_bound_violations;
  report.block_bound_violations +=
      c.two_join.block_bound_violations + c.two_join.split_property_violations;
  report.max_trackers = std::max<std::uint64_t>(report.max_trackers, c.trackers);
  report.decompositions += c.two_join.decompositions;

  if (options.check_find && oracle) {
    ++report.find_checks;
    try {
      auto hole = find_even_hole(g, options.pipeline);
      if (!hole || !is_even_hole(g, hole->nodes)) ++report.find_failures;
    } catch (const std::exception&) {
      ++report.find_failures;
    }
  }
}

}  // namespace

DifftestReport run_corpus(const Corpus& corpus, const DifftestOptions& options) {
  DifftestOptions opts = options;
  opts.pipeline.threads = 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads),
                                                    std::max<std::uint64_t>(corpus.count, 1)));
  std::vector<DifftestReport> partial(workers);
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 64;

  auto work = [&](unsigned w) {
    DifftestReport& r = partial[w];
    while (true) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= corpus.count) return;
      const std::uint64_t stop = std::min(corpus.count, start + kChunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        std::optional<Graph> g = corpus.make(i);
        if (!g) {
          ++r.skipped;
          continue;
        }
        check_one(corpus, i, *g, opts, r);
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  DifftestReport total;
  for (const auto& r : partial) total += r;
  return total;
}

}  // namespace evenhole

#include "evenhole/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "evenhole/errors.hpp"

namespace evenhole {

std::string_view to_string(Status s) {
  return s == Status::EvenHoleFree ? "even-hole-free" : "contains-even-hole";
}

Counters& Counters::operator+=(const Counters& o) {
  components += o.components;
  beetle_candidates += o.beetle_candidates;
  tree_queries += o.tree_queries;
  cliques += o.cliques;
  tracker_candidates += o.tracker_candidates;
  trackers += o.trackers;
  trackers_pruned += o.trackers_pruned;
  trackers_decided += o.trackers_decided;
  task1 += o.task1;
  task2 += o.task2;
  task3 += o.task3;
  reduction_iterations += o.reduction_iterations;
  dominated_removed += o.dominated_removed;
  tracker_bound_violations += o.tracker_bound_violations;
  decomposition_bound_violations += o.decomposition_bound_violations;
  push_bound_violations += o.push_bound_violations;
  two_join += o.two_join;
  return *this;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EVENHOLE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool has_hole_through(const Graph& g, const NodeBits& keep, Node u1, Node u2,
                      Node u3) {
  NodeBits allowed = keep - g.neighbor_bits(u2);
  allowed.reset(u2);
  allowed.set(u1);
  allowed.set(u3);
  std::vector<Node> stack{u1};
  NodeBits seen(g.order());
  seen.set(u1);
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node w : g.neighbors(v)) {
      if (seen.test(w) || !allowed.test(w)) continue;
      if (w == u3) return true;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return false;
}

TrackerDecision decide_tracker(const Tracker& t, const TwoJoinOptions& options) {
  TrackerDecision out;
  out.reduction = star_cutset_reduce(t);
  if (auto* t1 = std::get_if<Task1>(&out.reduction.result)) {
    out.contains_even_hole = true;
    out.certificate = t1->hole;
  } else if (auto* t3 = std::get_if<Task3>(&out.reduction.result)) {
    out.decomposition = decide_no_star_cutset(t3->graph, options);
    out.contains_even_hole = out.decomposition->contains_even_hole;
    out.certificate = out.decomposition->certificate;
  }
  return out;
}

std::optional<Hole> hole_from_node_set(const Graph& g, const NodeSet& nodes) {
  if (nodes.size() < 4) return std::nullopt;
  const NodeBits in = to_bits(g.order(), nodes);
  std::vector<Node> cycle{nodes.front()};
  Node prev = -1;
  while (cycle.size() < nodes.size()) {
    const Node cur = cycle.back();
    Node next = -1;
    for (Node w : g.neighbors(cur)) {
      if (in.test(w) && w != prev && w != cycle.front()) {
        next = w;
        break;
      }
    }
    if (next < 0 || std::find(cycle.begin(), cycle.end(), next) != cycle.end()) {
      return std::nullopt;
    }
    prev = cur;
    cycle.push_back(next);
  }
  if (!is_hole(g, cycle)) return std::nullopt;
  return Hole::canonical(std::move(cycle));
}

namespace {

class Trace {
 public:
  explicit Trace(std::size_t limit) : limit_(limit) {}
  void add(std::string stage, std::string detail) {
    if (limit_ == 0) {
      ++dropped_;
      return;
    }
    if (events_.size() == limit_) {
      events_.pop_front();
      ++dropped_;
    }
    events_.push_back({std::move(stage), std::move(detail)});
  }
  void finish(Verdict& v) {
    v.trace.assign(events_.begin(), events_.end());
    v.trace_dropped = dropped_;
  }

 private:
  std::size_t limit_;
  std::size_t dropped_ = 0;
  std::deque<TraceEvent> events_;
};

std::string describe(const TrackerSpec& spec, const Graph& g) {
  return "(" + std::to_string(g.label(spec.path[0])) + "," +
         std::to_string(g.label(spec.path[1])) + "," +
         std::to_string(g.label(spec.path[2])) + ")";
}

struct TrackerResult {
  bool done = false;
  bool contains = false;
  std::optional<Hole> certificate;  // component ids' labels
  Counters counters;
  TraceEvent event;
};

TrackerResult run_tracker(const Graph& comp, const TrackerSpec& spec,
                          const PipelineOptions& options) {
  TrackerResult r;
  r.done = true;
  const std::string who = describe(spec, comp);
  if (options.prune_trackers &&
      !has_hole_through(comp, spec.keep, spec.path[0], spec.path[1], spec.path[2])) {
    ++r.counters.trackers_pruned;
    r.event = {"tracker", who + " pruned"};
    return r;
  }
  ++r.counters.trackers_decided;
  Tracker t = materialize(comp, spec);
  TrackerDecision d = decide_tracker(t, options.two_join);
  r.counters.reduction_iterations += d.reduction.iterations;
  r.counters.dominated_removed += d.reduction.dominated_removed;
  std::string outcome;
  if (std::holds_alternative<Task1>(d.reduction.result)) {
    ++r.counters.task1;
    outcome = "task1 even hole";
  } else if (std::holds_alternative<Task2>(d.reduction.result)) {
    ++r.counters.task2;
    outcome = "task2 not lucky";
  } else {
    ++r.counters.task3;
    const auto& dec = *d.decomposition;
    r.counters.two_join += dec.stats;
    if (!dec.stats.decomposition_bound_ok()) ++r.counters.decomposition_bound_violations;
    if (!dec.stats.push_bound_ok()) ++r.counters.push_bound_violations;
    static constexpr const char* kRoute[] = {"clean", "oracle", "ect", "no-2-join"};
    outcome = std::string("task3 ") + (dec.contains_even_hole ? "even hole via " : "") +
              kRoute[static_cast<int>(dec.route)] + ", " +
              std::to_string(dec.stats.decompositions) + " 2-joins";
  }
  r.contains = d.contains_even_hole;
  // Host labels are the component's labels, i.e. ids of the caller's graph.
  r.certificate = d.certificate;
  r.event = {"tracker", who + " " + outcome};
  return r;
}

struct ComponentResult {
  bool contains = false;
  std::optional<Hole> certificate;  // labels of the input graph
};

ComponentResult run_component(const Graph& comp, const PipelineOptions& options,
                              unsigned threads, Counters& counters, Trace& trace) {
  static const PathGrowthTreeSolver kDefaultSolver;
  const TreeSolver& solver = options.solver != nullptr ? *options.solver : kDefaultSolver;
  ComponentResult out;

  CleaningStats cs;
  auto cleaned = clean_phase(comp, solver, &cs);
  counters.beetle_candidates += cs.beetle.candidates;
  counters.tree_queries += cs.beetle.tree_queries;
  counters.cliques += cs.cliques;
  if (auto* found = std::get_if<EvenHoleFound>(&cleaned)) {
    static constexpr const char* kReason[] = {"4-hole", "beetle", "clique count"};
    trace.add("clean", std::string("even hole: ") +
                           kReason[static_cast<int>(found->reason)]);
    out.contains = true;
    if (found->certificate) out.certificate = to_root_labels(comp, *found->certificate);
    return out;
  }
  const TrackerSet& set = std::get<TrackerSet>(cleaned);
  const std::size_t count = set.trackers.size();
  counters.tracker_candidates += set.candidates;
  counters.trackers += count;
  const double n = comp.order();
  const double m = static_cast<double>(comp.size());
  if (static_cast<double>(count) > 4.0 * m * m * n) ++counters.tracker_bound_violations;
  trace.add("clean", std::to_string(count) + " trackers, " + std::to_string(cs.cliques) +
                         " maximal cliques");
  if (count == 0) return out;

  // Workers take indices in increasing order and never start an index above
  // the best hit so far, so every index below the final winner is decided.
  std::vector<TrackerResult> results(count);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      try {
        results[i] = run_tracker(comp, set.trackers[i], options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
      if (results[i].contains) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  const std::size_t winner = best.load();
  const std::size_t last = winner == kNone ? count : winner + 1;
  std::size_t pruned_run = 0;
  for (std::size_t i = 0; i < last; ++i) {
    TrackerResult& r = results[i];
    if (!r.done) throw InternalError("tracker left undecided");
    counters += r.counters;
    // Pruned trackers are summarized rather than logged one by one.
    if (r.counters.trackers_pruned > 0) {
      ++pruned_run;
      continue;
    }
    if (pruned_run > 0) {
      trace.add("tracker", std::to_string(pruned_run) + " pruned");
      pruned_run = 0;
    }
    trace.add(r.event.stage, r.event.detail);
  }
  if (pruned_run > 0) trace.add("tracker", std::to_string(pruned_run) + " pruned");
  if (winner != kNone) {
    out.contains = true;
    if (results[winner].certificate) {
      // Certificates carry the component's labels, which are already ids of
      // the input graph.
      out.certificate = results[winner].certificate;
    }
  }
  return out;
}

}  // namespace

Verdict recognize(const Graph& g, const PipelineOptions& options) {
  Verdict v;
  Trace trace(options.trace_limit);
  const unsigned threads = resolve_threads(options.threads);
  const auto parts = connected_components(g);
  for (const NodeSet& part : parts) {
    ++v.counters.components;
    if (part.size() < 4) continue;
    Graph comp = induced_subgraph(g, part);
    trace.add("component", "nodes " + std::to_string(comp.order()) + ", edges " +
                               std::to_string(comp.size()));
    ComponentResult r = run_component(comp, options, threads, v.counters, trace);
    if (r.contains) {
      v.status = Status::ContainsEvenHole;
      if (r.certificate) {
        // Component labels are g's labels; translate them to g's ids.
        std::vector<Node> ids;
        for (int label : r.certificate->nodes) {
          auto it = std::find(g.labels().begin(), g.labels().end(), label);
          if (it == g.labels().end()) throw InternalError("certificate label unknown");
          ids.push_back(static_cast<Node>(it - g.labels().begin()));
        }
        if (!is_even_hole(g, ids)) {
          throw InternalError("certificate is not an even hole of the input graph");
        }
        Hole h = Hole::canonical(std::move(ids));
        v.certificate = to_root_labels(g, h);
      }
      break;
    }
  }
  trace.finish(v);
  return v;
}

std::optional<Hole> find_even_hole(const Graph& g, const PipelineOptions& options) {
  PipelineOptions quiet = options;
  quiet.trace_limit = 0;
  Verdict v = recognize(g, quiet);
  if (v.status == Status::EvenHoleFree) return std::nullopt;
  if (v.certificate) return v.certificate;

  // Node deletion: one pass in ascending order leaves a minimal graph with an
  // even hole, i.e. an even hole. A later deletion can never make an earlier
  // kept node deletable, since its removal is checked against a supergraph.
  NodeBits keep(g.order());
  keep.set();
  for (Node v0 = 0; v0 < g.order(); ++v0) {
    keep.reset(v0);
    Graph sub = induced_subgraph(g, keep);
    Verdict t = recognize(sub, quiet);
    if (t.status == Status::ContainsEvenHole) {
      if (t.certificate) return t.certificate;  // already in g's labels
      continue;
    }
    keep.set(v0);
  }
  auto hole = hole_from_node_set(g, to_set(keep));
  if (!hole || !hole->even()) throw InternalError("node deletion did not end at an even hole");
  return to_root_labels(g, *hole);
}

}  // namespace evenhole

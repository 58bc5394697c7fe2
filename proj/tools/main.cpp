#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "evenhole/audit.hpp"
#include "evenhole/difftest.hpp"
#include "evenhole/errors.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/io.hpp"
#include "evenhole/pipeline.hpp"
#include "report.hpp"

namespace {

using namespace evenhole;
using nlohmann::ordered_json;

constexpr int kExitFree = 0;
constexpr int kExitContains = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct InputArgs {
  std::string path;
  std::string format = "auto";
};

LoadedGraph load(const InputArgs& in) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + in.path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  GraphFormat f;
  if (in.format == "auto") f = detect_format(text);
  else if (in.format == "graph6") f = GraphFormat::Graph6;
  else f = GraphFormat::EdgeList;
  return parse_graph(text, f);
}

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("file", in.path, "Graph file, '-' for stdin")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
}

std::string ids_text(const std::optional<Hole>& hole, const std::vector<std::int64_t>& ids) {
  std::string out;
  for (Node v : hole->nodes) out += (out.empty() ? "" : " ") + std::to_string(ids[v]);
  return out;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_recognize(const InputArgs& in, const PipelineOptions& opts, bool json, bool trace) {
  const LoadedGraph lg = load(in);
  const auto t0 = std::chrono::steady_clock::now();
  const Verdict v = recognize(lg.graph, opts);
  const double ms = millis_since(t0);
  if (json) {
    std::cout << tools::verdict_json(v, lg.ids, trace, ms).dump(2) << '\n';
  } else {
    std::cout << to_string(v.status) << '\n';
    if (v.certificate) std::cout << "hole: " << ids_text(v.certificate, lg.ids) << '\n';
    const Counters& c = v.counters;
    std::cout << "trackers: " << c.trackers << " (pruned " << c.trackers_pruned << ", decided "
              << c.trackers_decided << ")\n"
              << "reductions: task1 " << c.task1 << ", task2 " << c.task2 << ", task3 "
              << c.task3 << "\n"
              << "2-join decompositions: " << c.two_join.decompositions << ", oracle calls "
              << c.two_join.oracle_calls << "\n"
              << "time: " << ms << " ms\n";
    if (trace) {
      for (const auto& e : v.trace) std::cout << "  [" << e.stage << "] " << e.detail << '\n';
    }
  }
  return v.status == Status::ContainsEvenHole ? kExitContains : kExitFree;
}

int cmd_find(const InputArgs& in, const PipelineOptions& opts, bool json) {
  const LoadedGraph lg = load(in);
  const auto t0 = std::chrono::steady_clock::now();
  const auto hole = find_even_hole(lg.graph, opts);
  const double ms = millis_since(t0);
  if (json) {
    ordered_json out;
    out["verdict"] = std::string(
        to_string(hole ? Status::ContainsEvenHole : Status::EvenHoleFree));
    out["hole"] = tools::hole_json(hole, lg.ids);
    out["timing"] = {{"millis", ms}};
    std::cout << out.dump(2) << '\n';
  } else if (hole) {
    std::cout << ids_text(hole, lg.ids) << '\n';
  } else {
    std::cout << "even-hole-free\n";
  }
  return hole ? kExitContains : kExitFree;
}

int cmd_oracle(const InputArgs& in, bool json) {
  const LoadedGraph lg = load(in);
  const auto hole = shortest_even_hole(lg.graph);
  if (json) {
    ordered_json out;
    out["verdict"] = std::string(
        to_string(hole ? Status::ContainsEvenHole : Status::EvenHoleFree));
    out["hole"] = tools::hole_json(hole, lg.ids);
    std::cout << out.dump(2) << '\n';
  } else if (hole) {
    std::cout << ids_text(hole, lg.ids) << '\n';
  } else {
    std::cout << "even-hole-free\n";
  }
  return hole ? kExitContains : kExitFree;
}

int cmd_audit(const InputArgs& in, bool json) {
  const LoadedGraph lg = load(in);
  const LemmaAuditReport r = audit_lemmas(lg.graph);
  if (json) {
    ordered_json out = ordered_json::array();
    for (const auto& e : r.entries) {
      out.push_back({{"check", std::string(to_string(e.check))},
                     {"status", std::string(to_string(e.status))},
                     {"witness", e.witness}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& e : r.entries) {
      std::cout << to_string(e.status) << ' ' << to_string(e.check);
      if (!e.witness.empty()) std::cout << "  " << e.witness;
      std::cout << '\n';
    }
  }
  return r.any_fail() ? kExitInternal : 0;
}

int cmd_gen(const std::string& spec_text, std::uint64_t seed, const std::string& format) {
  const Graph g = generate(parse_graph_spec(spec_text), seed);
  if (format == "graph6") std::cout << encode_graph6(g) << '\n';
  else std::cout << encode_edge_list(g);
  return 0;
}

struct DifftestArgs {
  int max_n = 6;
  bool connected_only = false;
  std::uint64_t samples = 0;
  std::vector<int> orders{8, 10, 12, 14};
  std::vector<double> densities{0.2, 0.35, 0.5};
  std::uint64_t seed = 1;
  std::uint64_t two_join_samples = 0;
  std::string target = "recognize";
  bool find = false;
  bool inject_parity_bug = false;
};

int cmd_difftest(const DifftestArgs& a, const PipelineOptions& popts, unsigned threads,
                 bool json) {
  DifftestOptions opts;
  opts.pipeline = popts;
  opts.pipeline.two_join.flip_marker_parity = a.inject_parity_bug;
  opts.check_find = a.find;
  opts.target = a.target == "no-star-cutset" ? DifftestTarget::NoStarCutset
                                             : DifftestTarget::Recognize;
  opts.threads = threads;

  std::vector<Corpus> corpora;
  for (int n = 1; n <= a.max_n; ++n) corpora.push_back(exhaustive_corpus(n, a.connected_only));
  if (a.samples > 0) {
    std::uint64_t stream = 0;
    for (int n : a.orders) {
      for (double p : a.densities) {
        corpora.push_back(gnp_corpus(n, p, a.samples, derive_seed(a.seed, stream++)));
      }
    }
  }
  if (a.two_join_samples > 0) {
    corpora.push_back(two_join_corpus(12, a.two_join_samples, derive_seed(a.seed, 1000)));
  }
  DifftestReport total;
  ordered_json per = ordered_json::array();
  const auto t0 = std::chrono::steady_clock::now();
  for (const Corpus& c : corpora) {
    const DifftestReport r = run_corpus(c, opts);
    if (!json) {
      std::cout << c.name << ": " << r.graphs << " graphs (" << r.skipped << " skipped), "
                << r.contains << " contain, " << r.mismatches << " mismatches, " << r.errors
                << " errors\n";
    }
    per.push_back({{"corpus", c.name}, {"report", tools::difftest_json(r)}});
    total += r;
  }
  const double ms = millis_since(t0);
  if (json) {
    ordered_json out = tools::difftest_json(total);
    out["corpora"] = std::move(per);
    out["timing"] = {{"millis", ms}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (total.ok() ? "OK" : "FAILED") << ": " << total.graphs << " graphs, "
              << total.mismatches << " mismatches, " << total.certificate_failures
              << " bad certificates, " << total.find_failures << " find failures, "
              << total.decompositions << " 2-join decompositions, " << total.parity_violations
              << "/" << total.parity_checks << " block parity violations\n";
    if (const auto& m = total.first_mismatch) {
      std::cout << "first mismatch: " << m->corpus << " #" << m->index << " graph6 " << m->graph6
                << " (" << m->kind << ") recognizer=" << m->recognized << " oracle=" << m->oracle;
      if (!m->error.empty()) std::cout << " error=\"" << m->error << '"';
      std::cout << "\nshrunk to " << m->shrunk_order << " nodes: " << m->shrunk_graph6 << '\n';
    }
  }
  return total.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even-hole recognition and detection"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool trace = false;
  unsigned threads = 0;
  bool no_prune = false;
  std::size_t oracle_max_edges = TwoJoinOptions{}.oracle_max_edges;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--threads", threads, "Worker threads (0: EVENHOLE_THREADS or all cores)");
  app.add_option("--oracle-max-edges", oracle_max_edges,
                 "Decomposition pieces up to this size go to the exhaustive search");

  InputArgs in;
  auto* rec = app.add_subcommand("recognize", "Decide whether the graph has an even hole");
  add_input(rec, in);
  rec->add_flag("--trace", trace, "Print the decomposition trace");
  rec->add_flag("--no-prune", no_prune, "Decide every tracker, even hopeless ones");

  auto* find = app.add_subcommand("find", "Print an even hole, if any");
  add_input(find, in);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference search");
  add_input(oracle, in);

  auto* audit = app.add_subcommand("audit", "Check structural facts about shortest even holes");
  add_input(audit, in);

  std::string spec_text;
  std::uint64_t seed = 0;
  std::string out_format = "edge-list";
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("spec", spec_text,
                  "gnp:N:P | cycle:K | path:K | complete:K | chordal:N:C | ect:N | twojoin:N | "
                  "beetle:A,B,C | theta:A,B,C | named:ID")
      ->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out-format", out_format, "Output format")
      ->check(CLI::IsMember({"edge-list", "graph6"}));

  DifftestArgs da;
  auto* diff = app.add_subcommand("difftest", "Compare the recognizer with the reference");
  diff->add_option("--max-n", da.max_n, "Exhaustive corpus up to this order")
      ->check(CLI::Range(0, 7));
  diff->add_flag("--connected-only", da.connected_only, "Skip disconnected exhaustive graphs");
  diff->add_option("--samples", da.samples, "Random graphs per (order, density)");
  diff->add_option("--orders", da.orders, "Random graph orders");
  diff->add_option("--densities", da.densities, "Random graph edge densities");
  diff->add_option("--seed", da.seed, "Random seed");
  diff->add_option("--two-join-samples", da.two_join_samples,
                   "Random 2-join compositions with at most 12 nodes");
  diff->add_option("--target", da.target, "What to compare with the reference")
      ->check(CLI::IsMember({"recognize", "no-star-cutset"}));
  diff->add_flag("--find", da.find, "Also validate find on every positive instance");
  diff->add_flag("--inject-parity-bug", da.inject_parity_bug,
                 "Build 2-join blocks with the wrong marker parity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  PipelineOptions popts;
  popts.threads = threads;
  popts.prune_trackers = !no_prune;
  popts.two_join.oracle_max_edges = oracle_max_edges;

  try {
    if (rec->parsed()) return cmd_recognize(in, popts, json, trace);
    if (find->parsed()) return cmd_find(in, popts, json);
    if (oracle->parsed()) return cmd_oracle(in, json);
    if (audit->parsed()) return cmd_audit(in, json);
    if (gen->parsed()) return cmd_gen(spec_text, seed, out_format);
    if (diff->parsed()) return cmd_difftest(da, popts, threads, json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

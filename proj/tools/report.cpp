#include "report.hpp"

namespace evenhole::tools {

using nlohmann::ordered_json;

ordered_json counters_json(const Counters& c) {
  const TwoJoinStats& t = c.two_join;
  return {
      {"components", c.components},
      {"beetle_candidates", c.beetle_candidates},
      {"tree_queries", c.tree_queries},
      {"cliques", c.cliques},
      {"tracker_candidates", c.tracker_candidates},
      {"trackers", c.trackers},
      {"trackers_pruned", c.trackers_pruned},
      {"trackers_decided", c.trackers_decided},
      {"task1", c.task1},
      {"task2", c.task2},
      {"task3", c.task3},
      {"reduction_iterations", c.reduction_iterations},
      {"dominated_removed", c.dominated_removed},
      {"tracker_bound_violations", c.tracker_bound_violations},
      {"decomposition_bound_violations", c.decomposition_bound_violations},
      {"push_bound_violations", c.push_bound_violations},
      {"two_join",
       {{"pieces", t.pieces},
        {"oracle_calls", t.oracle_calls},
        {"ect_checks", t.ect_checks},
        {"decompositions", t.decompositions},
        {"pushes", t.pushes},
        {"block_bound_violations", t.block_bound_violations},
        {"split_property_violations", t.split_property_violations}}},
  };
}

ordered_json hole_json(const std::optional<Hole>& hole, const std::vector<std::int64_t>& ids) {
  if (!hole) return nullptr;
  ordered_json out = ordered_json::array();
  for (Node v : hole->nodes) out.push_back(ids.at(static_cast<std::size_t>(v)));
  return out;
}

ordered_json verdict_json(const Verdict& v, const std::vector<std::int64_t>& ids,
                          bool with_trace, double millis) {
  ordered_json out;
  out["verdict"] = std::string(to_string(v.status));
  out["hole"] = hole_json(v.certificate, ids);
  out["counters"] = counters_json(v.counters);
  ordered_json trace = {{"events", v.trace.size()}, {"dropped", v.trace_dropped}};
  if (with_trace) {
    ordered_json events = ordered_json::array();
    for (const auto& e : v.trace) events.push_back({{"stage", e.stage}, {"detail", e.detail}});
    trace["log"] = std::move(events);
  }
  out["trace"] = std::move(trace);
  if (millis >= 0) out["timing"] = {{"millis", millis}};
  return out;
}

ordered_json difftest_json(const DifftestReport& r) {
  ordered_json out = {
      {"ok", r.ok()},
      {"graphs", r.graphs},
      {"skipped", r.skipped},
      {"contains", r.contains},
      {"mismatches", r.mismatches},
      {"errors", r.errors},
      {"certificates", r.certificates},
      {"certificate_failures", r.certificate_failures},
      {"find_checks", r.find_checks},
      {"find_failures", r.find_failures},
      {"tracker_bound_violations", r.tracker_bound_violations},
      {"decomposition_bound_violations", r.decomposition_bound_violations},
      {"block_bound_violations", r.block_bound_violations},
      {"max_trackers", r.max_trackers},
      {"decompositions", r.decompositions},
      {"parity_checks", r.parity_checks},
      {"parity_violations", r.parity_violations},
  };
  if (const auto& m = r.first_mismatch) {
    out["first_mismatch"] = {
        {"corpus", m->corpus},           {"index", m->index},
        {"graph6", m->graph6},           {"recognized", m->recognized},
        {"oracle", m->oracle},           {"error", m->error},
        {"kind", m->kind},
        {"shrunk_graph6", m->shrunk_graph6}, {"shrunk_order", m->shrunk_order},
    };
  } else {
    out["first_mismatch"] = nullptr;
  }
  return out;
}

}  // namespace evenhole::tools

#include "specsup/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include <json.hpp>

#include "specsup/enumerate.hpp"
#include "specsup/graph6.hpp"
#include "specsup/parallel.hpp"

namespace specsup {

namespace {

void insert_sorted(std::vector<std::string>& list, const std::string& item, std::size_t cap) {
  auto it = std::lower_bound(list.begin(), list.end(), item);
  if (it != list.end() && *it == item) return;
  list.insert(it, item);
  if (list.size() > cap) list.pop_back();
}

void merge_sorted(std::vector<std::string>& into, const std::vector<std::string>& from, std::size_t cap) {
  for (const auto& s : from) insert_sorted(into, s, cap);
}

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

void PredicateSummary::add(const Verdict& v, const std::string& graph6) {
  if (v.exception) ++exceptions;
  if (v.hypothesis_met) ++hypothesis_met;
  switch (v.status) {
    case Status::Holds: ++holds; break;
    case Status::WithinTolerance: ++within_tolerance; break;
    case Status::NotApplicable: ++not_applicable; break;
    case Status::Fails:
      if (v.is_finding()) {
        ++findings;
        insert_sorted(finding_witnesses, graph6, kWitnessCap);
      } else {
        ++fails;
        insert_sorted(failure_witnesses, graph6, SIZE_MAX);
      }
      break;
  }
  if (v.hypothesis_met && v.slack) {
    if (!worst_slack || *v.slack < *worst_slack || (*v.slack == *worst_slack && graph6 < worst_slack_witness)) {
      worst_slack = *v.slack;
      worst_slack_witness = graph6;
    }
  }
  if (v.metric) {
    if (!max_metric || *v.metric > *max_metric) {
      max_metric = *v.metric;
      max_metric_count = 0;
      max_metric_witnesses.clear();
    }
    if (*v.metric == *max_metric) {
      ++max_metric_count;
      insert_sorted(max_metric_witnesses, graph6, kWitnessCap);
    }
  }
}

void PredicateSummary::merge(const PredicateSummary& o) {
  holds += o.holds;
  fails += o.fails;
  within_tolerance += o.within_tolerance;
  not_applicable += o.not_applicable;
  findings += o.findings;
  exceptions += o.exceptions;
  hypothesis_met += o.hypothesis_met;
  merge_sorted(failure_witnesses, o.failure_witnesses, SIZE_MAX);
  merge_sorted(finding_witnesses, o.finding_witnesses, kWitnessCap);
  if (o.worst_slack &&
      (!worst_slack || *o.worst_slack < *worst_slack ||
       (*o.worst_slack == *worst_slack && o.worst_slack_witness < worst_slack_witness))) {
    worst_slack = o.worst_slack;
    worst_slack_witness = o.worst_slack_witness;
  }
  if (o.max_metric) {
    if (!max_metric || *o.max_metric > *max_metric) {
      max_metric = o.max_metric;
      max_metric_count = o.max_metric_count;
      max_metric_witnesses = o.max_metric_witnesses;
    } else if (*o.max_metric == *max_metric) {
      max_metric_count += o.max_metric_count;
      merge_sorted(max_metric_witnesses, o.max_metric_witnesses, kWitnessCap);
    }
  }
}

bool VerificationReport::all_hold() const {
  return std::all_of(predicates.begin(), predicates.end(), [](const auto& p) { return p.fails == 0; });
}

VerificationReport verify_graphs(const std::vector<Graph>& graphs, const std::vector<std::string>& ids, Mode mode,
                                 int workers) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.mode = mode;
  report.graphs = static_cast<std::int64_t>(graphs.size());
  if (!graphs.empty()) {
    report.n = graphs.front().n();
    for (const auto& g : graphs) {
      if (g.n() != report.n) report.n = -1;
    }
  }
  std::vector<PredicateSummary> blank;
  for (const auto& id : ids) {
    PredicateSummary s;
    s.id = id;
    s.assertive = predicate_info(id).assertive;
    blank.push_back(std::move(s));
  }
  // Fixed-size chunks; merging is order-independent so worker count cannot change the result.
  constexpr std::size_t kChunk = 512;
  const std::size_t chunks = (graphs.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<PredicateSummary>> partial(chunks, blank);
  parallel_for(chunks, workers, [&](std::size_t c) {
    auto& mine = partial[c];
    const std::size_t stop = std::min(graphs.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < stop; ++i) {
      Facts facts(graphs[i]);
      for (std::size_t p = 0; p < ids.size(); ++p) mine[p].add(check(ids[p], facts, mode), facts.graph6());
    }
  });
  report.predicates = blank;
  for (const auto& part : partial) {
    for (std::size_t p = 0; p < ids.size(); ++p) report.predicates[p].merge(part[p]);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport exhaustive_verify(const std::vector<std::string>& ids, int n, Mode mode, int workers) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = verify_graphs(generate_all(n, workers), ids, mode, workers);
  report.n = n;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

nlohmann::ordered_json number_or_null(const std::optional<double>& x) {
  return x ? nlohmann::ordered_json(round12(*x)) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string report_to_json(const VerificationReport& r, bool include_timing, int indent) {
  nlohmann::ordered_json j;
  j["toolVersion"] = std::string(kToolVersion);
  j["command"] = "check";
  auto& ids = j["predicateIds"] = nlohmann::ordered_json::array();
  for (const auto& p : r.predicates) ids.push_back(p.id);
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["graphs"] = r.graphs;
  j["allHold"] = r.all_hold();
  auto& preds = j["predicates"] = nlohmann::ordered_json::array();
  for (const auto& p : r.predicates) {
    nlohmann::ordered_json e;
    e["id"] = p.id;
    e["assertive"] = p.assertive;
    e["holds"] = p.holds;
    e["fails"] = p.fails;
    e["withinTolerance"] = p.within_tolerance;
    e["notApplicable"] = p.not_applicable;
    e["findings"] = p.findings;
    e["exceptions"] = p.exceptions;
    e["hypothesisMet"] = p.hypothesis_met;
    e["worstSlack"] = number_or_null(p.worst_slack);
    e["worstSlackWitness"] = p.worst_slack_witness;
    e["maxMetric"] = number_or_null(p.max_metric);
    e["maxMetricCount"] = p.max_metric_count;
    e["maxMetricWitnesses"] = p.max_metric_witnesses;
    e["failureWitnesses"] = p.failure_witnesses;
    e["findingWitnesses"] = p.finding_witnesses;
    preds.push_back(std::move(e));
  }
  if (include_timing) j["timing"] = {{"seconds", round12(r.seconds)}};
  return j.dump(indent);
}

std::string verdicts_to_json(const std::vector<Verdict>& verdicts, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json e;
    e["predicate"] = v.predicate;
    e["status"] = to_string(v.status);
    e["hypothesisMet"] = v.hypothesis_met;
    e["assertive"] = v.assertive;
    e["belowThreshold"] = v.below_threshold;
    e["exception"] = v.exception;
    e["borderline"] = v.borderline;
    e["slack"] = number_or_null(v.slack);
    e["witness"] = v.witness;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, x] : v.details) d[k] = round12(x);
    e["details"] = std::move(d);
    e["note"] = v.note;
    arr.push_back(std::move(e));
  }
  return arr.dump(indent);
}

}  // namespace specsup

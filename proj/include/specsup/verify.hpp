#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specsup/graph.hpp"
#include "specsup/theorems.hpp"

namespace specsup {

struct PredicateSummary {
  std::string id;
  bool assertive = true;
  std::int64_t holds = 0;
  std::int64_t fails = 0;  // assertive failures at or above threshold
  std::int64_t within_tolerance = 0;
  std::int64_t not_applicable = 0;
  std::int64_t findings = 0;  // failures below threshold or of report-only probes
  std::int64_t exceptions = 0;
  std::int64_t hypothesis_met = 0;
  /// Smallest conclusion slack among graphs meeting the hypothesis.
  std::optional<double> worst_slack;
  std::string worst_slack_witness;
  /// Largest predicate metric (e.g. m over F_2-free graphs) and its attainers.
  std::optional<double> max_metric;
  std::int64_t max_metric_count = 0;
  std::vector<std::string> max_metric_witnesses;  // sorted, capped
  std::vector<std::string> failure_witnesses;     // sorted
  std::vector<std::string> finding_witnesses;     // sorted, capped

  void add(const Verdict& v, const std::string& graph6);
  void merge(const PredicateSummary& other);
};

struct VerificationReport {
  int n = -1;          // -1 for mixed streams
  Mode mode = Mode::Strict;
  std::int64_t graphs = 0;
  std::vector<PredicateSummary> predicates;
  double seconds = 0;

  bool all_hold() const;
};

inline constexpr std::size_t kWitnessCap = 64;
inline constexpr std::string_view kToolVersion = "0.1.0";

VerificationReport verify_graphs(const std::vector<Graph>& graphs, const std::vector<std::string>& ids, Mode mode,
                                 int workers = 0);
VerificationReport exhaustive_verify(const std::vector<std::string>& ids, int n, Mode mode, int workers = 0);

/// JSON text with 12 significant digits; timing sits in its own object.
std::string report_to_json(const VerificationReport& report, bool include_timing = true, int indent = 2);
std::string verdicts_to_json(const std::vector<Verdict>& verdicts, int indent = 2);

}  // namespace specsup

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specsup/graph.hpp"

namespace specsup {

enum class Counter { Edges, Triangles, Bowties, Booksize, Friendship };
enum class Relation { AtMost, Equal };
enum class MoveKind { Flip, Swap, Mixed };

struct Constraint {
  Counter counter = Counter::Bowties;
  Relation relation = Relation::AtMost;
  std::int64_t bound = 0;
};

struct SearchConfig {
  int n = 0;
  std::vector<Constraint> constraints;
  MoveKind moves = MoveKind::Flip;
  double initial_temperature = 0.5;
  double cooling = 0.9995;
  int steps = 20000;
  std::uint64_t seed = 1;
  int restarts = 4;
  /// "empty", "random", or a graph6 string.
  std::string start = "empty";
  double lambda_tol = 1e-8;
  int workers = 0;

  void validate() const;
};

struct RestartSummary {
  std::uint64_t seed = 0;
  double best_lambda = 0;
  int best_step = 0;
  std::int64_t accepted = 0;
  std::int64_t rejected_constraint = 0;
  std::int64_t rejected_metropolis = 0;
  std::vector<double> lambda_samples;  // current λ at ten evenly spaced steps
};

struct SearchResult {
  Graph best;
  double best_lambda = 0;
  std::vector<std::pair<std::string, std::int64_t>> constraint_values;
  std::vector<RestartSummary> restarts;
  std::optional<std::string> matched_family;
};

std::string to_string(Counter c);
Counter parse_counter(const std::string& name);
std::int64_t evaluate_counter(Counter c, const Graph& g);

SearchResult anneal(const SearchConfig& cfg);

/// Name of the constructor family whose instance at g.n() is isomorphic to g.
std::optional<std::string> identify_family(const Graph& g);

/// JSON interchange for configs and results.
SearchConfig search_config_from_json(const std::string& text);
std::string search_config_to_json(const SearchConfig& cfg, int indent = 2);
std::string search_result_to_json(const SearchResult& r, const SearchConfig& cfg, int indent = 2);

}  // namespace specsup

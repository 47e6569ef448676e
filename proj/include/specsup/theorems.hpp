#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specsup/graph.hpp"
#include "specsup/poly.hpp"

namespace specsup {

enum class Status { Holds, Fails, WithinTolerance, NotApplicable };
enum class Mode { Strict, Exploratory };

std::string to_string(Status s);
std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

struct Verdict {
  std::string predicate;
  Status status = Status::NotApplicable;
  bool hypothesis_met = false;
  /// False for conjectures and open problems: evaluated and reported, never failed.
  bool assertive = true;
  /// Evaluated below the stated size threshold (exploratory mode only).
  bool below_threshold = false;
  /// Hypothesis met but the graph is the stated exception.
  bool exception = false;
  /// A spectral comparison fell inside the numeric margin.
  bool borderline = false;
  /// Conclusion left side minus right side; negative means violated.
  std::optional<double> slack;
  /// Predicate-specific quantity aggregated by maximum in reports.
  std::optional<double> metric;
  std::string witness;  // graph6, set whenever status is Fails
  std::vector<std::pair<std::string, double>> details;
  std::string note;

  /// A failure below the stated threshold or of a non-assertive probe.
  bool is_finding() const { return status == Status::Fails && (below_threshold || !assertive); }
};

struct PredicateInfo {
  std::string id;
  std::string statement;
  bool assertive = true;
  /// Smallest n for which the source states the result, if it is asymptotic.
  std::optional<double> threshold;
};

const std::vector<PredicateInfo>& predicates();
const PredicateInfo& predicate_info(const std::string& id);
/// Expands "all" and comma-separated lists; throws UnknownNameError.
std::vector<std::string> resolve_predicates(const std::string& spec);

/// Margin for λ comparisons; borderline cases are re-solved at kRetestTol.
inline constexpr double kSpectralMargin = 1e-8;
inline constexpr double kRetestTol = 1e-12;

/// Lazily computed invariants of one graph, shared by all predicates.
class Facts {
 public:
  explicit Facts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  std::int64_t m() const { return g_.m(); }
  std::int64_t triangles();
  std::int64_t bowties();
  int booksize();
  int tau3();
  std::int64_t triangular_edges();
  /// Largest k with F_k a subgraph (0 when triangle-free).
  int friendship_number();
  int matching_number();
  /// Exact bipartite distance, or nullopt beyond the exact max-cut range.
  std::optional<std::int64_t> bipartite_distance();
  double lambda();
  double lambda_fine();
  /// Characteristic polynomial of the coarsest equitable quotient; its
  /// largest root is λ(G).
  const Polynomial& lambda_poly();
  bool is_turan();
  bool is_complete_bipartite_plus_isolated();
  bool is_kplus();
  bool is_kplus2();
  const std::string& graph6();

 private:
  const Graph& g_;
  std::optional<std::int64_t> triangles_;
  std::optional<std::int64_t> bowties_;
  std::optional<int> booksize_;
  std::optional<int> tau3_;
  std::optional<std::int64_t> triangular_edges_;
  std::optional<int> friendship_;
  std::optional<int> matching_;
  std::optional<std::optional<std::int64_t>> distance_;
  std::optional<double> lambda_;
  std::optional<double> lambda_fine_;
  std::optional<Polynomial> lambda_poly_;
  std::optional<bool> turan_;
  std::optional<bool> cbi_;
  std::optional<bool> kplus_;
  std::optional<bool> kplus2_;
  std::optional<std::string> graph6_;
};

Verdict check(const std::string& id, const Graph& g, Mode mode = Mode::Strict);
Verdict check(const std::string& id, Facts& facts, Mode mode = Mode::Strict);
std::vector<Verdict> check_many(const std::vector<std::string>& ids, const Graph& g, Mode mode = Mode::Strict);

/// Builds construct_family(family, n) for each n and checks the predicate.
std::vector<Verdict> check_family(const std::string& id, const std::string& family, const std::vector<int>& ns,
                                  Mode mode = Mode::Strict);

/// True iff g is a complete bipartite graph plus isolated vertices
/// (the edgeless graph counts).
bool is_complete_bipartite_plus_isolated(const Graph& g);

}  // namespace specsup

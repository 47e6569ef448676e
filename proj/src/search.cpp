#include "specsup/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "specsup/canonical.hpp"
#include "specsup/constructors.hpp"
#include "specsup/counting.hpp"
#include "specsup/errors.hpp"
#include "specsup/graph6.hpp"
#include "specsup/parallel.hpp"
#include "specsup/spectral.hpp"

namespace specsup {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool satisfies(const std::vector<Constraint>& cs, const Graph& g) {
  for (const auto& c : cs) {
    const std::int64_t v = evaluate_counter(c.counter, g);
    if (c.relation == Relation::AtMost ? v > c.bound : v != c.bound) return false;
  }
  return true;
}

std::optional<std::int64_t> fixed_edges(const SearchConfig& cfg) {
  for (const auto& c : cfg.constraints) {
    if (c.counter == Counter::Edges && c.relation == Relation::Equal) return c.bound;
  }
  return std::nullopt;
}

Graph random_graph_with_edges(int n, std::int64_t m, std::mt19937_64& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(static_cast<std::size_t>(m));
  return Graph::from_edges(n, pairs);
}

Graph starting_graph(const SearchConfig& cfg, std::mt19937_64& rng) {
  const auto m = fixed_edges(cfg);
  const std::int64_t pairs = static_cast<std::int64_t>(cfg.n) * (cfg.n - 1) / 2;
  if (m && (*m < 0 || *m > pairs)) throw InfeasibleError("fixed edge count is out of range");
  if (cfg.start != "empty" && cfg.start != "random") {
    Graph g = graph6_decode(cfg.start);
    if (g.n() != cfg.n) throw DomainError("start graph has the wrong number of vertices");
    if (!satisfies(cfg.constraints, g)) throw InfeasibleError("start graph violates the constraints");
    return g;
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph g;
    if (m) {
      g = random_graph_with_edges(cfg.n, *m, rng);
    } else if (cfg.start == "random") {
      std::bernoulli_distribution coin(0.5);
      GraphBuilder b(cfg.n);
      for (int u = 0; u < cfg.n; ++u) {
        for (int v = u + 1; v < cfg.n; ++v) {
          if (coin(rng)) b.add_edge(u, v);
        }
      }
      g = std::move(b).build();
    } else {
      g = GraphBuilder(cfg.n).build();
    }
    if (satisfies(cfg.constraints, g)) return g;
    if (!m && cfg.start == "empty") break;
  }
  throw InfeasibleError("no starting graph satisfies the constraints");
}

struct RestartOutcome {
  Graph best;
  double best_lambda = -1;
  RestartSummary summary;
};

RestartOutcome run_restart(const SearchConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RestartOutcome out;
  out.summary.seed = seed;
  Graph cur = starting_graph(cfg, rng);
  SpectralResult cur_spec = spectral_radius(cur, cfg.lambda_tol);
  out.best = cur;
  out.best_lambda = cur_spec.lambda;
  const int n = cfg.n;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double temperature = cfg.initial_temperature;
  const int sample_every = std::max(1, cfg.steps / 10);

  auto random_pair = [&](bool want_edge) -> std::optional<Edge> {
    if (want_edge && cur.m() == 0) return std::nullopt;
    if (!want_edge && cur.m() == static_cast<std::int64_t>(n) * (n - 1) / 2) return std::nullopt;
    while (true) {
      int u = pick(rng);
      int v = pick(rng);
      if (u == v || cur.has_edge(u, v) != want_edge) continue;
      return Edge{std::min(u, v), std::max(u, v)};
    }
  };

  for (int step = 1; step <= cfg.steps; ++step) {
    GraphBuilder b(cur);
    bool swap = cfg.moves == MoveKind::Swap || (cfg.moves == MoveKind::Mixed && unit(rng) < 0.5);
    if (swap) {
      auto gone = random_pair(true);
      auto added = random_pair(false);
      if (!gone || !added) continue;
      b.remove_edge(gone->first, gone->second);
      b.add_edge(added->first, added->second);
    } else {
      int u = pick(rng);
      int v = pick(rng);
      while (v == u) v = pick(rng);
      b.toggle_edge(u, v);
    }
    Graph cand = std::move(b).build();
    if (!satisfies(cfg.constraints, cand)) {
      ++out.summary.rejected_constraint;
    } else {
      SpectralResult spec = spectral_radius_from(cand, cur_spec.perron, cfg.lambda_tol);
      const double delta = spec.lambda - cur_spec.lambda;
      if (delta >= 0 || unit(rng) < std::exp(delta / std::max(temperature, 1e-300))) {
        cur = std::move(cand);
        cur_spec = std::move(spec);
        ++out.summary.accepted;
        if (cur_spec.lambda > out.best_lambda) {
          out.best_lambda = cur_spec.lambda;
          out.best = cur;
          out.summary.best_step = step;
        }
      } else {
        ++out.summary.rejected_metropolis;
      }
    }
    temperature *= cfg.cooling;
    if (step % sample_every == 0) out.summary.lambda_samples.push_back(cur_spec.lambda);
  }
  out.summary.best_lambda = out.best_lambda;
  return out;
}

}  // namespace

std::string to_string(Counter c) {
  switch (c) {
    case Counter::Edges: return "edges";
    case Counter::Triangles: return "triangles";
    case Counter::Bowties: return "bowties";
    case Counter::Booksize: return "booksize";
    case Counter::Friendship: return "friendship";
  }
  return "?";
}

Counter parse_counter(const std::string& name) {
  for (Counter c : {Counter::Edges, Counter::Triangles, Counter::Bowties, Counter::Booksize, Counter::Friendship}) {
    if (to_string(c) == name) return c;
  }
  throw UnknownNameError("unknown counter '" + name + "'");
}

std::int64_t evaluate_counter(Counter c, const Graph& g) {
  switch (c) {
    case Counter::Edges: return g.m();
    case Counter::Triangles: return triangle_count(g);
    case Counter::Bowties: return count_bowties(g);
    case Counter::Booksize: return booksize(g);
    case Counter::Friendship: return max_friendship(g);
  }
  return 0;
}

void SearchConfig::validate() const {
  if (n < 2) throw DomainError("search needs n >= 2");
  if (steps < 1) throw DomainError("steps must be >= 1");
  if (!(cooling > 0 && cooling < 1)) throw DomainError("cooling factor must lie in (0, 1)");
  if (restarts < 1) throw DomainError("restarts must be >= 1");
  if (!(initial_temperature >= 0)) throw DomainError("initial temperature must be non-negative");
  if (!(lambda_tol > 0)) throw DomainError("lambda tolerance must be positive");
}

SearchResult anneal(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  parallel_for(outcomes.size(), cfg.workers, [&](std::size_t r) {
    outcomes[r] = run_restart(cfg, splitmix64(splitmix64(cfg.seed) + r));
  });
  std::size_t best = 0;
  std::optional<CanonicalForm> best_form;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    if (r == 0) continue;
    const double a = outcomes[r].best_lambda;
    const double b = outcomes[best].best_lambda;
    if (a > b + 1e-12) {
      best = r;
      best_form.reset();
    } else if (std::abs(a - b) <= 1e-12) {
      if (!best_form) best_form = canonical_form(outcomes[best].best);
      CanonicalForm f = canonical_form(outcomes[r].best);
      if (f < *best_form) {
        best = r;
        best_form = std::move(f);
      }
    }
  }
  SearchResult result;
  result.best = canonical_graph(outcomes[best].best);
  result.best_lambda = outcomes[best].best_lambda;
  // Re-verify feasibility with the brute-force counters.
  for (const auto& c : cfg.constraints) {
    std::int64_t v = evaluate_counter(c.counter, result.best);
    if (c.counter == Counter::Bowties && v != count_bowties_bruteforce(result.best)) {
      throw InternalError("internal inconsistency: bowtie counters disagree");
    }
    if (c.counter == Counter::Triangles && v != static_cast<std::int64_t>(list_triangles(result.best).size())) {
      throw InternalError("internal inconsistency: triangle counters disagree");
    }
    if (c.relation == Relation::AtMost ? v > c.bound : v != c.bound) {
      throw InternalError("internal inconsistency: best graph violates a constraint");
    }
    result.constraint_values.emplace_back(to_string(c.counter), v);
  }
  for (auto& o : outcomes) result.restarts.push_back(o.summary);
  result.matched_family = identify_family(result.best);
  return result;
}

std::optional<std::string> identify_family(const Graph& g) {
  const int n = g.n();
  std::vector<std::pair<std::string, std::function<Graph()>>> candidates = {
      {"kplus2", [n] { return k_plus2(n); }},
      {"kplus", [n] { return k_plus(n); }},
      {"turan", [n] { return turan_bipartite(n); }},
      {"kpp", [n] { return build_embedded(kst_plusplus((n + 1) / 2, n / 2)); }},
      {"complete", [n] { return complete_graph(n); }},
  };
  for (int q = 3; 2 * q <= (n + 1) / 2; ++q) {
    candidates.emplace_back("y(q=" + std::to_string(q) + ")", [n, q] { return y_family(n, q); });
  }
  for (auto& [name, build] : candidates) {
    try {
      if (isomorphic(g, build())) return name;
    } catch (const Error&) {
      // Family undefined at this n.
    }
  }
  return std::nullopt;
}

namespace {

std::string move_name(MoveKind m) {
  switch (m) {
    case MoveKind::Flip: return "flip";
    case MoveKind::Swap: return "swap";
    case MoveKind::Mixed: return "mixed";
  }
  return "?";
}

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

SearchConfig search_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("search config: ") + e.what(), e.byte);
  }
  SearchConfig cfg;
  try {
    cfg.n = j.at("n").get<int>();
    if (j.contains("objective") && j["objective"] != "maximize-lambda") {
      throw DomainError("only the maximize-lambda objective is supported");
    }
    for (const auto& c : j.value("constraints", nlohmann::json::array())) {
      Constraint con;
      con.counter = parse_counter(c.at("counter").get<std::string>());
      const std::string rel = c.value("relation", "<=");
      if (rel == "<=") {
        con.relation = Relation::AtMost;
      } else if (rel == "==") {
        con.relation = Relation::Equal;
      } else {
        throw DomainError("relation must be <= or ==");
      }
      con.bound = c.at("bound").get<std::int64_t>();
      cfg.constraints.push_back(con);
    }
    const std::string moves = j.value("moves", "flip");
    if (moves == "flip") {
      cfg.moves = MoveKind::Flip;
    } else if (moves == "swap") {
      cfg.moves = MoveKind::Swap;
    } else if (moves == "mixed") {
      cfg.moves = MoveKind::Mixed;
    } else {
      throw DomainError("moves must be flip, swap or mixed");
    }
    if (j.contains("schedule")) {
      const auto& s = j["schedule"];
      cfg.initial_temperature = s.value("initialTemperature", cfg.initial_temperature);
      cfg.cooling = s.value("cooling", cfg.cooling);
      cfg.steps = s.value("steps", cfg.steps);
    }
    cfg.seed = j.value("seed", cfg.seed);
    cfg.restarts = j.value("restarts", cfg.restarts);
    cfg.start = j.value("start", cfg.start);
    cfg.lambda_tol = j.value("lambdaTol", cfg.lambda_tol);
    cfg.workers = j.value("workers", cfg.workers);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("search config: ") + e.what(), 0);
  }
  cfg.validate();
  return cfg;
}

std::string search_config_to_json(const SearchConfig& cfg, int indent) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["objective"] = "maximize-lambda";
  auto& cs = j["constraints"] = nlohmann::ordered_json::array();
  for (const auto& c : cfg.constraints) {
    cs.push_back({{"counter", to_string(c.counter)},
                  {"relation", c.relation == Relation::AtMost ? "<=" : "=="},
                  {"bound", c.bound}});
  }
  j["moves"] = move_name(cfg.moves);
  j["schedule"] = {{"initialTemperature", round12(cfg.initial_temperature)},
                   {"cooling", round12(cfg.cooling)},
                   {"steps", cfg.steps}};
  j["seed"] = cfg.seed;
  j["restarts"] = cfg.restarts;
  j["start"] = cfg.start;
  j["lambdaTol"] = round12(cfg.lambda_tol);
  return j.dump(indent);
}

std::string search_result_to_json(const SearchResult& r, const SearchConfig& cfg, int indent) {
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::parse(search_config_to_json(cfg));
  j["best"] = graph6_encode(r.best);
  j["bestLambda"] = round12(r.best_lambda);
  j["edges"] = r.best.m();
  nlohmann::ordered_json cv = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.constraint_values) cv[k] = v;
  j["constraintValues"] = std::move(cv);
  j["matchedFamily"] = r.matched_family ? nlohmann::ordered_json(*r.matched_family) : nlohmann::ordered_json(nullptr);
  auto& rs = j["restarts"] = nlohmann::ordered_json::array();
  for (const auto& s : r.restarts) {
    std::vector<double> samples;
    for (double x : s.lambda_samples) samples.push_back(round12(x));
    rs.push_back({{"seed", s.seed},
                  {"bestLambda", round12(s.best_lambda)},
                  {"bestStep", s.best_step},
                  {"accepted", s.accepted},
                  {"rejectedConstraint", s.rejected_constraint},
                  {"rejectedMetropolis", s.rejected_metropolis},
                  {"lambdaSamples", samples}});
  }
  return j.dump(indent);
}

}  // namespace specsup

#include "specsup/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "specsup/canonical.hpp"
#include "specsup/counting.hpp"
#include "specsup/errors.hpp"

namespace specsup {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

void validate(const EmbeddedBipartiteSpec& spec) {
  require(spec.s >= 0 && spec.t >= 0, "side sizes must be non-negative");
  auto check_list = [](const std::vector<Edge>& list, int a, int b, bool inside, const char* name) {
    std::set<Edge> seen;
    for (auto [u, v] : list) {
      require(u >= 0 && v >= 0 && u < a && v < b, std::string(name) + ": label out of range");
      if (inside) require(u != v, std::string(name) + ": loop");
      Edge key = inside ? Edge{std::min(u, v), std::max(u, v)} : Edge{u, v};
      require(seen.insert(key).second, std::string(name) + ": duplicate pair");
    }
  };
  check_list(spec.inside_s, spec.s, spec.s, true, "insideS");
  check_list(spec.inside_t, spec.t, spec.t, true, "insideT");
  check_list(spec.missing_cross, spec.s, spec.t, false, "missingCross");
}

}  // namespace

Graph turan_bipartite(int n) {
  if (n < 1) throw SizeError("T_{n,2} needs n >= 1");
  return complete_bipartite((n + 1) / 2, n / 2);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw SizeError("part sizes must be non-negative");
  GraphBuilder g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return std::move(g).build();
}

Graph complete_graph(int n) {
  GraphBuilder g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return std::move(g).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw SizeError("a cycle needs n >= 3");
  GraphBuilder g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return std::move(g).build();
}

Graph build_embedded(const EmbeddedBipartiteSpec& spec) {
  validate(spec);
  const int s = spec.s;
  GraphBuilder g(spec.s + spec.t);
  std::set<Edge> missing(spec.missing_cross.begin(), spec.missing_cross.end());
  for (int u = 0; u < s; ++u) {
    for (int v = 0; v < spec.t; ++v) {
      if (!missing.count({u, v})) g.add_edge(u, s + v);
    }
  }
  for (auto [u, v] : spec.inside_s) g.add_edge(u, v);
  for (auto [u, v] : spec.inside_t) g.add_edge(s + u, s + v);
  return std::move(g).build();
}

Graph friendship(int k) {
  if (k < 1) throw SizeError("F_k needs k >= 1");
  GraphBuilder g(2 * k + 1);
  for (int j = 0; j < k; ++j) {
    g.add_edge(0, 2 * j + 1);
    g.add_edge(0, 2 * j + 2);
    g.add_edge(2 * j + 1, 2 * j + 2);
  }
  return std::move(g).build();
}

EmbeddedBipartiteSpec kst_plus(int s, int t) {
  require(s >= 2, "K^+_{s,t} needs s >= 2");
  return {s, t, {{0, 1}}, {}, {}};
}

EmbeddedBipartiteSpec kst_plus_q(int s, int t, int q) {
  require(q >= 0 && 2 * q <= s, "q disjoint edges need 2q <= s");
  EmbeddedBipartiteSpec spec{s, t, {}, {}, {}};
  for (int j = 0; j < q; ++j) spec.inside_s.emplace_back(2 * j, 2 * j + 1);
  return spec;
}

EmbeddedBipartiteSpec kst_plus2(int s, int t) { return kst_plus_q(s, t, 2); }

EmbeddedBipartiteSpec kst_plusplus(int s, int t) {
  require(s >= 2 && t >= 2, "K^{++}_{s,t} needs s, t >= 2");
  return {s, t, {{0, 1}}, {{0, 1}}, {}};
}

// S holds u1u2 (labels 0,1) and u3u4 (2,3); T holds v1v2 (0,1).
// v1 ~ u1, u3 only; v2 ~ u2, u4 only.
EmbeddedBipartiteSpec g1_spec(int s, int t) {
  require(s >= 4 && t >= 2, "G_1 needs s >= 4, t >= 2");
  return {s, t, {{0, 1}, {2, 3}}, {{0, 1}}, {{1, 0}, {3, 0}, {0, 1}, {2, 1}}};
}

// u1u2 in S, v1v2 in T; v1 ~ u1, u2; v2 misses both.
EmbeddedBipartiteSpec h1_spec(int s, int t) {
  require(s >= 2 && t >= 2, "H_1 needs s, t >= 2");
  return {s, t, {{0, 1}}, {{0, 1}}, {{0, 1}, {1, 1}}};
}

// u1u2 in S, v1v2 in T; v1 ~ u1 only, v2 ~ u2 only.
EmbeddedBipartiteSpec h2_spec(int s, int t) {
  require(s >= 2 && t >= 2, "H_2 needs s, t >= 2");
  return {s, t, {{0, 1}}, {{0, 1}}, {{1, 0}, {0, 1}}};
}

Graph k_plus(int n) { return build_embedded(kst_plus(n / 2, n - n / 2)); }

Graph k_plus2(int n) { return build_embedded(kst_plus2((n + 1) / 2, n / 2)); }

Graph k_ab_plus2(int b) {
  require(b >= 1, "K_{a,b}^{+2} needs b >= 1");
  return build_embedded(kst_plus2(4 * b + 3, b));
}

Graph y_family(int n, int q) { return build_embedded(kst_plus_q((n + 1) / 2, n / 2, q)); }

std::vector<EmbeddedBipartiteSpec> figure_deletion_specs(const EmbeddedBipartiteSpec& base, int k) {
  validate(base);
  require(k >= 0, "deletion count must be non-negative");
  const std::int64_t cross = static_cast<std::int64_t>(base.s) * base.t -
                             static_cast<std::int64_t>(base.missing_cross.size());
  if (k > cross) throw ConstructionError("deletion count exceeds the number of cross edges");
  if (k == 0) return {base};

  // Touched labels, plus k interchangeable untouched labels per side.
  std::set<int> touched_s;
  std::set<int> touched_t;
  for (auto [u, v] : base.inside_s) touched_s.insert({u, v});
  for (auto [u, v] : base.inside_t) touched_t.insert({u, v});
  for (auto [u, v] : base.missing_cross) {
    touched_s.insert(u);
    touched_t.insert(v);
  }
  auto pick = [k](const std::set<int>& touched, int size) {
    std::vector<int> labels(touched.begin(), touched.end());
    int extra = 0;
    for (int l = 0; l < size && extra < k; ++l) {
      if (!touched.count(l)) {
        labels.push_back(l);
        ++extra;
      }
    }
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  const std::vector<int> rep_s = pick(touched_s, base.s);
  const std::vector<int> rep_t = pick(touched_t, base.t);
  const int rs = static_cast<int>(rep_s.size());
  const int rt = static_cast<int>(rep_t.size());

  std::set<Edge> missing(base.missing_cross.begin(), base.missing_cross.end());
  std::vector<Edge> candidates;  // (index into rep_s, index into rep_t)
  for (int i = 0; i < rs; ++i) {
    for (int j = 0; j < rt; ++j) {
      if (!missing.count({rep_s[i], rep_t[j]})) candidates.emplace_back(i, j);
    }
  }
  auto index_of = [](const std::vector<int>& rep, int label) {
    return static_cast<int>(std::lower_bound(rep.begin(), rep.end(), label) - rep.begin());
  };
  GraphBuilder small(rs + rt);
  for (auto [i, j] : candidates) small.add_edge(i, rs + j);
  for (auto [u, v] : base.inside_s) small.add_edge(index_of(rep_s, u), index_of(rep_s, v));
  for (auto [u, v] : base.inside_t) small.add_edge(rs + index_of(rep_t, u), rs + index_of(rep_t, v));
  const Graph small_base = std::move(small).build();
  std::vector<int> colours(rs + rt, 0);
  std::fill(colours.begin() + rs, colours.end(), 1);

  if (static_cast<std::int64_t>(candidates.size()) < k) {
    throw ConstructionError("deletion count exceeds the number of cross edges");
  }
  std::map<CanonicalForm, std::vector<Edge>> classes;
  std::vector<int> pickidx(k);
  for (int i = 0; i < k; ++i) pickidx[i] = i;
  const int total = static_cast<int>(candidates.size());
  while (true) {
    GraphBuilder b(small_base);
    for (int i : pickidx) b.remove_edge(candidates[i].first, rs + candidates[i].second);
    CanonicalForm form = canonical_form(std::move(b).build(), colours);
    if (!classes.count(form)) {
      std::vector<Edge> deleted;
      for (int i : pickidx) deleted.emplace_back(rep_s[candidates[i].first], rep_t[candidates[i].second]);
      classes.emplace(std::move(form), std::move(deleted));
    }
    int pos = k - 1;
    while (pos >= 0 && pickidx[pos] == total - k + pos) --pos;
    if (pos < 0) break;
    ++pickidx[pos];
    for (int i = pos + 1; i < k; ++i) pickidx[i] = pickidx[i - 1] + 1;
  }

  std::vector<EmbeddedBipartiteSpec> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (const auto& [form, deleted] : classes) {
    EmbeddedBipartiteSpec spec = base;
    spec.missing_cross.insert(spec.missing_cross.end(), deleted.begin(), deleted.end());
    // Side-swapping automorphisms of the full graph can merge two coloured classes.
    if (seen.insert(canonical_form(build_embedded(spec))).second) out.push_back(std::move(spec));
  }
  return out;
}

std::vector<Graph> figure_deletion_family(const EmbeddedBipartiteSpec& base, int k,
                                          const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  for (const auto& spec : figure_deletion_specs(base, k)) {
    Graph g = build_embedded(spec);
    if (!keep || keep(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> n_minus_3_family(int n) {
  if (n < 7) throw SizeError("the n-3 triangle family needs n >= 7");
  auto exact_count = [n](const Graph& g) { return triangle_count(g) == n - 3; };
  if (n % 2 == 0) {
    return figure_deletion_family(kst_plus2(n / 2 + 1, n / 2 - 1), 1, exact_count);
  }
  std::vector<Graph> out{build_embedded(kst_plus2((n + 3) / 2, (n - 3) / 2))};
  auto rest = figure_deletion_family(kst_plus2((n + 1) / 2, (n - 1) / 2), 2, exact_count);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Graph> deletion_case_classes(int n, int which) {
  if (n % 2 != 0) throw DomainError("deletion cases are defined for even n");
  if (n < 16) throw SizeError("deletion cases need n >= 16");
  const int h = n / 2;
  auto with_triangles = [](std::int64_t count) {
    return [count](const Graph& g) { return triangle_count(g) == count; };
  };
  switch (which) {
    case 1: return figure_deletion_family(kst_plus2(h - 2, h + 2), 1);
    case 2: return figure_deletion_family(kst_plus2(h - 1, h + 1), 2);
    case 3: return figure_deletion_family(kst_plus2(h, h), 3, with_triangles(n - 3));
    case 4: return figure_deletion_family(kst_plus2(h + 1, h - 1), 2, with_triangles(n - 4));
    case 5: return {build_embedded(kst_plus2(h + 2, h - 2))};
    default: throw DomainError("deletion case must be 1..5");
  }
}

namespace {

int need(int value, const char* flag, const std::string& family) {
  if (value < 0) throw ConstructionError("family '" + family + "' requires --" + flag);
  return value;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"turan", "kplus",  "kplus2", "kst",   "kst-plus", "kst-plus2", "kpp",   "kab2",
          "y",     "friendship", "g1", "h1",    "h2",       "complete",  "cycle", "empty",
          "fig2"};
}

Graph construct_family(const std::string& name, const FamilyParams& p) {
  auto st = [&](int default_s) {
    int s = p.s >= 0 ? p.s : default_s;
    int t = p.t >= 0 ? p.t : p.n - s;
    return std::pair{s, t};
  };
  if (name == "turan") return turan_bipartite(need(p.n, "n", name));
  if (name == "kplus") return k_plus(need(p.n, "n", name));
  if (name == "kplus2") return k_plus2(need(p.n, "n", name));
  if (name == "kab2") return k_ab_plus2(need(p.b, "b", name));
  if (name == "y") return y_family(need(p.n, "n", name), need(p.q, "q", name));
  if (name == "complete") return complete_graph(need(p.n, "n", name));
  if (name == "cycle") return cycle_graph(need(p.n, "n", name));
  if (name == "empty") return Graph::from_edges(need(p.n, "n", name), {});
  if (name == "fig2") throw ConstructionError("family 'fig2' has several members; use family_members");
  if (name == "friendship") {
    int k = p.q >= 0 ? p.q : (need(p.n, "n", name) - 1) / 2;
    return friendship(k);
  }
  if (p.s < 0 && p.n < 0) throw ConstructionError("family '" + name + "' requires --s/--t or --n");
  auto [s, t] = st((p.n + 1) / 2);
  if (name == "kst") return complete_bipartite(s, t);
  if (name == "kst-plus") return build_embedded(kst_plus(s, t));
  if (name == "kst-plus2") return build_embedded(kst_plus2(s, t));
  if (name == "kpp") return build_embedded(kst_plusplus(s, t));
  if (name == "g1") return build_embedded(g1_spec(s, t));
  if (name == "h1") return build_embedded(h1_spec(s, t));
  if (name == "h2") return build_embedded(h2_spec(s, t));
  throw UnknownNameError("unknown family '" + name + "'");
}

std::vector<Graph> family_members(const std::string& name, const FamilyParams& params) {
  if (name == "fig2") return n_minus_3_family(need(params.n, "n", name));
  return {construct_family(name, params)};
}

}  // namespace specsup

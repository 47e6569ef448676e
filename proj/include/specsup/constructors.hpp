#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specsup/graph.hpp"

namespace specsup {

/// K_{s,t} with edges embedded inside either side and some cross pairs removed.
///
/// S-labels 0..s-1 become vertices 0..s-1 and T-labels 0..t-1 become
/// vertices s..s+t-1.
struct EmbeddedBipartiteSpec {
  int s = 0;
  int t = 0;
  std::vector<Edge> inside_s;
  std::vector<Edge> inside_t;
  std::vector<Edge> missing_cross;  // (S-label, T-label)

  std::int64_t expected_edges() const {
    return static_cast<std::int64_t>(s) * t - static_cast<std::int64_t>(missing_cross.size()) +
           static_cast<std::int64_t>(inside_s.size() + inside_t.size());
  }
};

/// T_{n,2}: parts of size ceil(n/2) (vertices 0..) and floor(n/2).
Graph turan_bipartite(int n);

Graph build_embedded(const EmbeddedBipartiteSpec& spec);

/// F_k: vertex 0 joined to k disjoint edges (2j+1, 2j+2).
Graph friendship(int k);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

// Named members of the embedded family.
EmbeddedBipartiteSpec kst_plus(int s, int t);     // one edge inside the s-side
EmbeddedBipartiteSpec kst_plus2(int s, int t);    // two disjoint edges inside the s-side
EmbeddedBipartiteSpec kst_plusplus(int s, int t); // one edge inside each side
EmbeddedBipartiteSpec kst_plus_q(int s, int t, int q);  // q disjoint edges inside the s-side
EmbeddedBipartiteSpec g1_spec(int s, int t);
EmbeddedBipartiteSpec h1_spec(int s, int t);
EmbeddedBipartiteSpec h2_spec(int s, int t);

/// K^+_{floor(n/2), ceil(n/2)}: the edge sits in the part of size floor(n/2).
Graph k_plus(int n);
/// K^{+2}_{ceil(n/2), floor(n/2)}.
Graph k_plus2(int n);
/// K_{a,b}^{+2} with a = 4b + 3.
Graph k_ab_plus2(int b);
/// Y_{n,2,q}: q disjoint edges inside the part of size ceil(n/2).
Graph y_family(int n, int q);

/// One representative per isomorphism class of graphs obtained by deleting
/// k cross pairs from build_embedded(base). When `keep` is given, only
/// classes whose full graph it accepts are returned. The order is
/// deterministic and stable across (s, t) once both sides exceed the
/// vertices touched by the base plus k.
std::vector<Graph> figure_deletion_family(const EmbeddedBipartiteSpec& base, int k,
                                          const std::function<bool(const Graph&)>& keep = {});

/// Same classes returned as embedded specs (so callers can rebuild at other sizes).
std::vector<EmbeddedBipartiteSpec> figure_deletion_specs(const EmbeddedBipartiteSpec& base, int k);

/// Graphs with lambda >= lambda(T_{n,2}), tau_3 >= 2 and exactly n-3 triangles:
/// even n: K^{+2}_{n/2+1, n/2-1} minus one cross pair;
/// odd n: K^{+2}_{(n+3)/2,(n-3)/2}, and K^{+2}_{(n+1)/2,(n-1)/2} minus two cross pairs.
/// Candidate deletions are filtered by triangle count only.
std::vector<Graph> n_minus_3_family(int n);

/// Even n only. Classes of K^{+2}_{s,n-s} minus k cross pairs for the five
/// size cases around s = n/2 used to bound non-Turán neighbours of K^{+2}:
/// 1: s = n/2-2, k = 1; 2: s = n/2-1, k = 2; 3: s = n/2, k = 3, n-3 triangles;
/// 4: s = n/2+1, k = 2, n-4 triangles; 5: s = n/2+2, k = 0.
std::vector<Graph> deletion_case_classes(int n, int which);

/// Registry used by the CLI and by family checks.
struct FamilyParams {
  int n = 0;
  int s = -1;
  int t = -1;
  int q = -1;
  int b = -1;
};
Graph construct_family(const std::string& name, const FamilyParams& params);
/// All members of a family at the given parameters ("fig2" has several, others one).
std::vector<Graph> family_members(const std::string& name, const FamilyParams& params);
std::vector<std::string> family_names();

}  // namespace specsup

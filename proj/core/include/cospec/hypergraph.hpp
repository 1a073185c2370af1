#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cospec {

/// k-uniform hypergraph on labeled vertices. Edges are k-subsets of the
/// vertex index range, each stored sorted; the edge list is kept in
/// lexicographic order with no duplicates.
class Hypergraph {
public:
  Hypergraph() : k_(1) {}
  /// Canonicalizes: sorts each edge, sorts and dedups the edge list.
  Hypergraph(int k, std::vector<std::string> labels,
             std::vector<std::vector<int>> edges);

  /// Builder taking edges as label tuples.
  static Hypergraph from_labels(int k, const std::vector<std::string>& labels,
                                const std::vector<std::vector<std::string>>& edges);

  /// Default labels "1".."n".
  static Hypergraph on_range(int k, int n, std::vector<std::vector<int>> edges);

  int n() const { return static_cast<int>(labels_.size()); }
  int k() const { return k_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  bool has_edge(const std::vector<int>& sorted_edge) const;
  int index_of(const std::string& label) const;

  Hypergraph with_edge_added(const std::vector<int>& e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const Hypergraph& a, const Hypergraph& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    if (a.labels_ != b.labels_) return a.labels_ < b.labels_;
    return a.edges_ < b.edges_;
  }

private:
  int k_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> edges_;
};

/// Link G[C;A]: hypergraph of rank k - |A| on C with edges
/// { f : f ∪ A ∈ E(G) }. C is ordered; the link's vertex i is C[i].
/// Requires A ∩ C = ∅ and |A| <= k. For |A| = k use rank0_link.
Hypergraph link(const Hypergraph& g, const std::vector<int>& C,
                const std::vector<int>& A);

/// Rank-0 link convention: whether A itself is an edge.
bool rank0_link(const Hypergraph& g, const std::vector<int>& A);

/// Decomposition of G over the switching set C: one link per A ⊆ D with
/// 1 <= k - |A|, plus the pass-through edges lying inside D.
struct LinkTable {
  std::vector<int> C;
  /// Keyed by sorted A (global vertex indices), |A| < k. Includes only
  /// entries with nonempty link unless keep_empty was requested.
  std::map<std::vector<int>, Hypergraph> links;
  /// Edges of G disjoint from C (the |A| = k, rank-0 part).
  std::vector<std::vector<int>> inside_d;
};

LinkTable link_decompose(const Hypergraph& g, const std::vector<int>& C,
                         bool keep_empty = false);

/// Inverse of link_decompose: E = ⋃_A E(link) ⊙ {A} ∪ inside_d.
Hypergraph reassemble(int k, const std::vector<std::string>& labels,
                      const LinkTable& table);

/// Connected components under edge-overlap reachability; isolated
/// vertices are singleton blocks. Blocks are sorted, listed by minimum.
std::vector<std::vector<int>> components(const Hypergraph& g);

/// True iff E(G) is all k-subsets of V(G).
bool is_complete(const Hypergraph& g);

/// Induced subhypergraph on the given (sorted) vertex set.
Hypergraph induced(const Hypergraph& g, const std::vector<int>& verts);

/// The three 4- and 5-vertex obstructions to completeness of components:
/// pattern 1 = two edges sharing two vertices, pattern 2 = complete on
/// four vertices minus one edge, pattern 3 = loose path of length two.
struct PatternHit {
  int id;  // 1, 2 or 3
  /// embedding[p] = vertex of G playing pattern vertex p+1.
  std::vector<int> embedding;
};

Hypergraph pattern_graph(int id);

/// Exhaustive induced-subgraph scan for the three patterns; k = 3 only.
std::optional<PatternHit> find_forbidden_pattern(const Hypergraph& g);

/// Backtracking isomorphism with degree pruning, capped at n = 12.
/// Returns the witness bijection (index of G -> index of H).
std::optional<std::vector<int>> are_isomorphic(const Hypergraph& g,
                                               const Hypergraph& h);

unsigned long long binomial(int n, int k);

/// All k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace cospec

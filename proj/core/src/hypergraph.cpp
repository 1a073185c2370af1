#include "cospec/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cospec {

Hypergraph::Hypergraph(int k, std::vector<std::string> labels,
                       std::vector<std::vector<int>> edges)
    : k_(k), labels_(std::move(labels)) {
  if (k < 1) throw std::invalid_argument("Hypergraph: k < 1");
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
      throw std::invalid_argument("Hypergraph: duplicate labels");
  }
  int n = static_cast<int>(labels_.size());
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != k ||
        std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("Hypergraph: edge is not a k-subset");
    if (e.front() < 0 || e.back() >= n)
      throw std::invalid_argument("Hypergraph: vertex index out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_labels(
    int k, const std::vector<std::string>& labels,
    const std::vector<std::vector<std::string>>& edges) {
  Hypergraph base(k, labels, {});
  std::vector<std::vector<int>> idx_edges;
  for (const auto& e : edges) {
    std::vector<int> ie;
    for (const auto& l : e) {
      int i = base.index_of(l);
      if (i < 0) throw std::invalid_argument("Hypergraph: unknown label '" + l + "'");
      ie.push_back(i);
    }
    idx_edges.push_back(std::move(ie));
  }
  return Hypergraph(k, labels, std::move(idx_edges));
}

Hypergraph Hypergraph::on_range(int k, int n, std::vector<std::vector<int>> edges) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Hypergraph(k, std::move(labels), std::move(edges));
}

bool Hypergraph::has_edge(const std::vector<int>& sorted_edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

int Hypergraph::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

Hypergraph Hypergraph::with_edge_added(const std::vector<int>& e) const {
  auto edges = edges_;
  edges.push_back(e);
  return Hypergraph(k_, labels_, std::move(edges));
}

Hypergraph link(const Hypergraph& g, const std::vector<int>& C,
                const std::vector<int>& A) {
  int r = g.k() - static_cast<int>(A.size());
  if (r < 1) throw std::invalid_argument("link: |A| >= k, use rank0_link");
  for (int a : A)
    if (std::find(C.begin(), C.end(), a) != C.end())
      throw std::invalid_argument("link: A intersects C");
  std::vector<int> sorted_a = A;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < C.size(); ++i) pos[C[i]] = static_cast<int>(i);

  std::vector<std::string> labels;
  for (int c : C) labels.push_back(g.labels()[c]);

  std::vector<std::vector<int>> link_edges;
  for (const auto& e : g.edges()) {
    std::vector<int> f;
    bool usable = true;
    size_t ai = 0;
    for (int v : e) {
      if (ai < sorted_a.size() && sorted_a[ai] == v) {
        ++ai;
      } else if (pos[v] >= 0) {
        f.push_back(pos[v]);
      } else {
        usable = false;
        break;
      }
    }
    if (usable && ai == sorted_a.size()) link_edges.push_back(std::move(f));
  }
  return Hypergraph(r, std::move(labels), std::move(link_edges));
}

bool rank0_link(const Hypergraph& g, const std::vector<int>& A) {
  std::vector<int> e = A;
  std::sort(e.begin(), e.end());
  return g.has_edge(e);
}

LinkTable link_decompose(const Hypergraph& g, const std::vector<int>& C,
                         bool keep_empty) {
  LinkTable table;
  table.C = C;
  std::vector<bool> in_c(g.n(), false);
  for (int c : C) in_c[c] = true;
  std::vector<int> D;
  for (int v = 0; v < g.n(); ++v)
    if (!in_c[v]) D.push_back(v);

  for (int a_size = 0; a_size < g.k(); ++a_size) {
    if (a_size > static_cast<int>(D.size())) break;
    for (const auto& idx : k_subsets(static_cast<int>(D.size()), a_size)) {
      std::vector<int> A;
      for (int i : idx) A.push_back(D[i]);
      Hypergraph l = link(g, C, A);
      if (keep_empty || !l.edges().empty()) table.links.emplace(A, std::move(l));
    }
  }
  for (const auto& e : g.edges()) {
    bool inside = true;
    for (int v : e)
      if (in_c[v]) { inside = false; break; }
    if (inside) table.inside_d.push_back(e);
  }
  return table;
}

Hypergraph reassemble(int k, const std::vector<std::string>& labels,
                      const LinkTable& table) {
  std::vector<std::vector<int>> edges = table.inside_d;
  for (const auto& [A, l] : table.links) {
    for (const auto& f : l.edges()) {
      std::vector<int> e = A;
      for (int p : f) e.push_back(table.C[p]);
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(k, labels, std::move(edges));
}

std::vector<std::vector<int>> components(const Hypergraph& g) {
  std::vector<int> parent(g.n());
  for (int i = 0; i < g.n(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges())
    for (size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  std::map<int, std::vector<int>> blocks;
  for (int v = 0; v < g.n(); ++v) blocks[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

bool is_complete(const Hypergraph& g) {
  return g.edges().size() == binomial(g.n(), g.k());
}

Hypergraph induced(const Hypergraph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.n(), -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < verts.size(); ++i) {
    pos[verts[i]] = static_cast<int>(i);
    labels.push_back(g.labels()[verts[i]]);
  }
  std::vector<std::vector<int>> edges;
  for (const auto& e : g.edges()) {
    std::vector<int> f;
    for (int v : e) {
      if (pos[v] < 0) break;
      f.push_back(pos[v]);
    }
    if (f.size() == e.size()) edges.push_back(std::move(f));
  }
  return Hypergraph(g.k(), std::move(labels), std::move(edges));
}

Hypergraph pattern_graph(int id) {
  switch (id) {
    case 1: return Hypergraph::on_range(3, 4, {{0, 1, 2}, {1, 2, 3}});
    case 2: return Hypergraph::on_range(3, 4, {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}});
    case 3: return Hypergraph::on_range(3, 5, {{0, 1, 2}, {2, 3, 4}});
    default: throw std::invalid_argument("pattern_graph: id must be 1, 2 or 3");
  }
}

std::optional<PatternHit> find_forbidden_pattern(const Hypergraph& g) {
  if (g.k() != 3)
    throw std::invalid_argument("find_forbidden_pattern: k must be 3");
  // 4-vertex scan: an induced 4-set with exactly two edges is pattern 1
  // (any two distinct triples in a 4-set share two vertices); with exactly
  // three edges it is pattern 2.
  for (const auto& idx : k_subsets(g.n(), 4)) {
    Hypergraph sub = induced(g, idx);
    size_t m = sub.edges().size();
    if (m == 2) {
      const auto& e1 = sub.edges()[0];
      const auto& e2 = sub.edges()[1];
      std::vector<int> shared, only1, only2;
      std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                            std::back_inserter(shared));
      std::set_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                          std::back_inserter(only1));
      std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                          std::back_inserter(only2));
      // Pattern edges {1,2,3},{2,3,4}: map 1->e1-only, {2,3}->shared, 4->e2-only.
      return PatternHit{1, {idx[only1[0]], idx[shared[0]], idx[shared[1]], idx[only2[0]]}};
    }
    if (m == 3) {
      // Pattern 2 = K4 minus edge {1,3,4}; vertex 2 lies in all edges.
      std::vector<int> count(4, 0);
      for (const auto& e : sub.edges())
        for (int v : e) ++count[v];
      int center = -1;
      std::vector<int> rest;
      for (int v = 0; v < 4; ++v) {
        if (count[v] == 3)
          center = v;
        else
          rest.push_back(v);
      }
      return PatternHit{2, {idx[rest[0]], idx[center], idx[rest[1]], idx[rest[2]]}};
    }
  }
  // 5-vertex scan for the loose path: exactly two induced edges sharing
  // exactly one vertex and covering all five (two-shared cases were caught
  // by the 4-vertex scan above).
  for (const auto& idx : k_subsets(g.n(), 5)) {
    Hypergraph sub = induced(g, idx);
    if (sub.edges().size() != 2) continue;
    const auto& e1 = sub.edges()[0];
    const auto& e2 = sub.edges()[1];
    std::vector<int> shared;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) continue;
    std::vector<int> only1, only2;
    std::set_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                        std::back_inserter(only1));
    std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                        std::back_inserter(only2));
    // Pattern edges {1,2,3},{3,4,5} with 3 shared.
    return PatternHit{3, {idx[only1[0]], idx[only1[1]], idx[shared[0]],
                          idx[only2[0]], idx[only2[1]]}};
  }
  return std::nullopt;
}

namespace {

bool iso_extend(const Hypergraph& g, const Hypergraph& h, std::vector<int>& map,
                std::vector<bool>& used, int v, const std::vector<int>& gdeg,
                const std::vector<int>& hdeg) {
  int n = g.n();
  if (v == n) {
    for (const auto& e : g.edges()) {
      std::vector<int> f;
      for (int x : e) f.push_back(map[x]);
      std::sort(f.begin(), f.end());
      if (!h.has_edge(f)) return false;
    }
    return true;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w] || gdeg[v] != hdeg[w]) continue;
    map[v] = w;
    used[w] = true;
    // Check edges fully mapped so far.
    bool ok = true;
    for (const auto& e : g.edges()) {
      bool full = true;
      for (int x : e)
        if (x > v) { full = false; break; }
      if (!full || std::find(e.begin(), e.end(), v) == e.end()) continue;
      std::vector<int> f;
      for (int x : e) f.push_back(map[x]);
      std::sort(f.begin(), f.end());
      if (!h.has_edge(f)) { ok = false; break; }
    }
    if (ok && iso_extend(g, h, map, used, v + 1, gdeg, hdeg)) return true;
    used[w] = false;
  }
  map[v] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Hypergraph& g,
                                               const Hypergraph& h) {
  if (g.n() > 12 || h.n() > 12)
    throw std::invalid_argument("are_isomorphic: capped at n = 12");
  if (g.n() != h.n() || g.k() != h.k() || g.edges().size() != h.edges().size())
    return std::nullopt;
  std::vector<int> gdeg(g.n(), 0), hdeg(h.n(), 0);
  for (const auto& e : g.edges())
    for (int v : e) ++gdeg[v];
  for (const auto& e : h.edges())
    for (int v : e) ++hdeg[v];
  {
    auto gs = gdeg, hs = hdeg;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return std::nullopt;
  }
  std::vector<int> map(g.n(), -1);
  std::vector<bool> used(g.n(), false);
  if (iso_extend(g, h, map, used, 0, gdeg, hdeg)) return map;
  return std::nullopt;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) { /* single empty subset already pushed */ }
  return out;
}

}  // namespace cospec

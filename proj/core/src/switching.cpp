#include "cospec/switching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cospec {

namespace {

std::string join_verts(const Hypergraph& g, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ",";
    out += g.labels()[v];
  }
  return "{" + out + "}";
}

void check_switching_set(const Hypergraph& g, const std::vector<int>& c,
                         int dim) {
  if (static_cast<int>(c.size()) != dim)
    throw std::invalid_argument("switch: |C| does not match the matrix size");
  std::set<int> seen;
  for (int v : c) {
    if (v < 0 || v >= g.n() || !seen.insert(v).second)
      throw std::invalid_argument("switch: C is not a vertex subset");
  }
  if (g.k() < 2) throw std::invalid_argument("switch: k >= 2 required");
}

SwitchResult finish(const Hypergraph& g, Hypergraph h, SwitchPlan plan,
                    const RatMatrix& r) {
  SwitchResult res;
  res.q = place_on(r, plan.c, g.n());
  res.cert = certify_similarity(res.q, g, h);
  res.h = std::move(h);
  res.plan = std::move(plan);
  return res;
}

// Neighbourhoods in C of the (k-1)-tuples of D, collected from the edges
// that meet C exactly once. Keys are sorted tuples; values are C positions.
std::map<std::vector<int>, std::vector<int>> tuple_neighbourhoods(
    const Hypergraph& g, const std::vector<int>& c) {
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  std::map<std::vector<int>, std::vector<int>> nbrs;
  for (const auto& e : g.edges()) {
    std::vector<int> tuple;
    int hit = -1, cnt = 0;
    for (int v : e)
      if (pos[v] >= 0) {
        hit = pos[v];
        ++cnt;
      } else {
        tuple.push_back(v);
      }
    if (cnt == 1) nbrs[tuple].push_back(hit);
  }
  for (auto& [tuple, xs] : nbrs) std::sort(xs.begin(), xs.end());
  return nbrs;
}

Hypergraph rebuild_rank1(const Hypergraph& g, const std::vector<int>& c,
                         const std::map<std::vector<int>, std::vector<int>>&
                             replaced) {
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> edges;
  for (const auto& e : g.edges()) {
    std::vector<int> tuple;
    int cnt = 0;
    for (int v : e)
      if (pos[v] >= 0)
        ++cnt;
      else
        tuple.push_back(v);
    if (cnt != 1 || !replaced.count(tuple)) edges.push_back(e);
  }
  for (const auto& [tuple, xs] : replaced)
    for (int x : xs) {
      std::vector<int> e = tuple;
      e.push_back(c[x]);
      edges.push_back(std::move(e));
    }
  return Hypergraph(g.k(), g.labels(), std::move(edges));
}

}  // namespace

RatMatrix place_on(const RatMatrix& r, const std::vector<int>& c, int n) {
  RatMatrix q = RatMatrix::identity(n);
  for (size_t i = 0; i < c.size(); ++i) {
    q.at(c[i], c[i]) = Rational(0);
    for (size_t j = 0; j < c.size(); ++j) q.at(c[i], c[j]) = r.at(i, j);
  }
  return q;
}

SwitchResult switch_hypergraph(const Hypergraph& g, const std::vector<int>& c,
                               const SwitchFamily& family) {
  RatMatrix r = build(family);
  check_switching_set(g, c, r.rows());

  LinkTable table = link_decompose(g, c);
  std::vector<SwitchViolation> violations;
  SwitchPlan plan;
  plan.family = family;
  plan.c = c;
  LinkTable out = table;
  for (const auto& [a, l] : table.links) {
    auto image = verify_membership(r, l);
    if (!image) {
      violations.push_back(
          {a, "link at A = " + join_verts(g, a) + " is not switchable"});
      continue;
    }
    out.links[a] = *image;
    plan.replacements.push_back({a, l, *image});
  }
  if (!violations.empty()) throw SwitchError(std::move(violations));

  return finish(g, reassemble(g.k(), g.labels(), out), std::move(plan), r);
}

SwitchResult gm_switch(const Hypergraph& g, const std::vector<int>& c) {
  int s = static_cast<int>(c.size());
  SwitchFamily family = SwitchFamily::parse("gm:" + std::to_string(s));
  RatMatrix r = build(family);
  check_switching_set(g, c, s);

  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  std::vector<SwitchViolation> violations;
  for (const auto& e : g.edges()) {
    int cnt = 0;
    for (int v : e) cnt += pos[v] >= 0;
    if (cnt > 1)
      violations.push_back(
          {e, "edge " + join_verts(g, e) + " meets C more than once"});
  }
  auto nbrs = tuple_neighbourhoods(g, c);
  std::map<std::vector<int>, std::vector<int>> replaced;
  for (const auto& [tuple, xs] : nbrs) {
    if (static_cast<int>(xs.size()) == s) continue;
    if (static_cast<int>(xs.size()) != s / 2) {
      violations.push_back({tuple, "tuple " + join_verts(g, tuple) + " has " +
                                       std::to_string(xs.size()) +
                                       " neighbours in C"});
      continue;
    }
    std::vector<int> comp;
    for (int i = 0; i < s; ++i)
      if (!std::binary_search(xs.begin(), xs.end(), i)) comp.push_back(i);
    replaced[tuple] = std::move(comp);
  }
  if (!violations.empty()) throw SwitchError(std::move(violations));

  SwitchPlan plan;
  plan.family = family;
  plan.c = c;
  return finish(g, rebuild_rank1(g, c, replaced), std::move(plan), r);
}

SwitchResult wqh_switch(const Hypergraph& g, const std::vector<int>& c1,
                        const std::vector<int>& c2) {
  if (c1.size() != c2.size() || c1.empty())
    throw std::invalid_argument("wqh_switch: |C1| = |C2| >= 1 required");
  int p = static_cast<int>(c1.size());
  std::vector<int> c = c1;
  c.insert(c.end(), c2.begin(), c2.end());
  SwitchFamily family = SwitchFamily::parse("wqh:" + std::to_string(p));
  RatMatrix r = build(family);
  check_switching_set(g, c, 2 * p);

  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  std::vector<SwitchViolation> violations;
  for (const auto& e : g.edges()) {
    int cnt = 0;
    for (int v : e) cnt += pos[v] >= 0;
    if (cnt > 1)
      violations.push_back(
          {e, "edge " + join_verts(g, e) + " meets C1 ∪ C2 more than once"});
  }
  auto nbrs = tuple_neighbourhoods(g, c);
  std::map<std::vector<int>, std::vector<int>> replaced;
  for (const auto& [tuple, xs] : nbrs) {
    int lo = 0;
    for (int x : xs) lo += x < p;
    int hi = static_cast<int>(xs.size()) - lo;
    bool is_c1 = lo == p && hi == 0, is_c2 = hi == p && lo == 0;
    if (is_c1 || is_c2) {
      std::vector<int> other;
      for (int i = 0; i < p; ++i) other.push_back(is_c1 ? p + i : i);
      replaced[tuple] = std::move(other);
    } else if (lo != hi) {
      violations.push_back({tuple, "tuple " + join_verts(g, tuple) +
                                       " has unbalanced neighbourhood"});
    }
  }
  if (!violations.empty()) throw SwitchError(std::move(violations));

  SwitchPlan plan;
  plan.family = family;
  plan.c = c;
  return finish(g, rebuild_rank1(g, c, replaced), std::move(plan), r);
}

SwitchResult sun_switch(const Hypergraph& g,
                        const std::vector<std::vector<int>>& blocks) {
  int m = static_cast<int>(blocks.size());
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("sun_switch: odd m >= 3 blocks required");
  std::vector<int> c;
  for (const auto& b : blocks) {
    if (b.size() != 2)
      throw std::invalid_argument("sun_switch: blocks must be vertex pairs");
    c.insert(c.end(), b.begin(), b.end());
  }
  int n2 = 2 * m;
  SwitchFamily family = SwitchFamily::parse("sg:" + std::to_string(n2));
  RatMatrix r = build(family);
  check_switching_set(g, c, n2);

  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  std::vector<SwitchViolation> violations;
  LinkTable table = link_decompose(g, c);
  LinkTable out = table;
  SwitchPlan plan;
  plan.family = family;
  plan.c = c;
  for (const auto& [a, l] : table.links) {
    int rank = g.k() - static_cast<int>(a.size());
    if (rank == 1) {
      // Per-block neighbour counts must share one parity; transversals
      // shift back a block, even profiles stay put.
      std::vector<int> count(m, 0);
      for (const auto& e : l.edges()) ++count[e[0] / 2];
      int parity = -1;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (parity == -1 && count[i] != 0) parity = count[i] % 2;
        if (parity != -1 && count[i] % 2 != parity) ok = false;
      }
      if (!ok) {
        violations.push_back({a, "tuple " + join_verts(g, a) +
                                     " has mixed neighbour parities"});
        continue;
      }
      std::vector<std::vector<int>> image_edges;
      if (parity == 1) {
        for (const auto& e : l.edges())
          image_edges.push_back({(e[0] - 2 + n2) % n2});
      } else {
        image_edges = l.edges();
      }
      out.links[a] = Hypergraph(1, l.labels(), std::move(image_edges));
    } else {
      auto image = verify_membership(r, l);
      if (!image) {
        violations.push_back({a, "rank-" + std::to_string(rank) +
                                     " link at A = " + join_verts(g, a) +
                                     " is not switchable"});
        continue;
      }
      out.links[a] = *image;
    }
    plan.replacements.push_back({a, l, out.links[a]});
  }
  if (!violations.empty()) throw SwitchError(std::move(violations));

  return finish(g, reassemble(g.k(), g.labels(), out), std::move(plan), r);
}

SwitchResult fano_switch(const Hypergraph& g, const std::vector<int>& c) {
  if (g.k() != 3) throw std::invalid_argument("fano_switch: k = 3 only");
  SwitchFamily family = SwitchFamily::parse("fano");
  RatMatrix r = build(family);
  check_switching_set(g, c, 7);

  FanoData fd = fano_lines_and_ovals();
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  std::vector<SwitchViolation> violations;
  for (const auto& e : g.edges()) {
    int cnt = 0;
    for (int v : e) cnt += pos[v] >= 0;
    if (cnt == 2)
      violations.push_back(
          {e, "edge " + join_verts(g, e) + " meets C in exactly two vertices"});
  }

  LinkTable table = link_decompose(g, c);
  LinkTable out = table;
  SwitchPlan plan;
  plan.family = family;
  plan.c = c;
  for (const auto& [a, l] : table.links) {
    if (a.empty()) {
      if (l.edges() != fd.f1.edges()) {
        violations.push_back(
            {a, "induced 3-graph on C is neither empty nor the line plane"});
        continue;
      }
      out.links[a] = Hypergraph(3, l.labels(), fd.f2.edges());
    } else if (a.size() == 2) {
      std::vector<int> xs;
      for (const auto& e : l.edges()) xs.push_back(e[0]);
      std::vector<std::vector<int>> image_verts;
      if (static_cast<int>(xs.size()) == 7) {
        image_verts.push_back({0, 1, 2, 3, 4, 5, 6});
      } else {
        for (int i = 0; i < 7 && image_verts.empty(); ++i) {
          if (xs == fd.lines[i]) image_verts.push_back(fd.ovals[i]);
        }
        if (image_verts.empty() && xs.size() == 4) {
          for (int i = 0; i < 7 && image_verts.empty(); ++i) {
            std::vector<int> co;
            for (int v = 0; v < 7; ++v)
              if (!std::binary_search(fd.lines[i].begin(), fd.lines[i].end(),
                                      v))
                co.push_back(v);
            if (xs == co) {
              std::vector<int> oco;
              for (int v = 0; v < 7; ++v)
                if (!std::binary_search(fd.ovals[i].begin(), fd.ovals[i].end(),
                                        v))
                  oco.push_back(v);
              image_verts.push_back(std::move(oco));
            }
          }
        }
        if (image_verts.empty()) {
          violations.push_back({a, "pair " + join_verts(g, a) +
                                       " has a neighbourhood that is not ∅, "
                                       "C, a line or a co-line"});
          continue;
        }
      }
      std::vector<std::vector<int>> edges;
      for (int v : image_verts[0]) edges.push_back({v});
      out.links[a] = Hypergraph(1, l.labels(), std::move(edges));
    } else {
      violations.push_back({a, "link at A = " + join_verts(g, a) +
                                   " has unsupported rank"});
      continue;
    }
    plan.replacements.push_back({a, l, out.links[a]});
  }
  if (!violations.empty()) throw SwitchError(std::move(violations));

  return finish(g, reassemble(g.k(), g.labels(), out), std::move(plan), r);
}

}  // namespace cospec

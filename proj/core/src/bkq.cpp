#include "cospec/bkq.hpp"

#include <algorithm>

namespace cospec {

std::optional<Hypergraph> verify_membership(const RatMatrix& r,
                                            const Hypergraph& g) {
  if (g.n() != r.rows() || !r.square())
    throw std::invalid_argument("verify_membership: size mismatch");
  SymTensor image = conjugate_squarefree(r.transpose(), adjacency_tensor(g));
  return as_adjacency(image, g.labels());
}

namespace {

struct Form {
  bool squarefree;              // admissible values {0,1}, else exactly 0
  std::vector<int> edge;        // the output k-subset, when squarefree
  Rational cur;                 // contribution of assigned variables
  Rational pos_rem, neg_rem;    // achievable range of the unassigned rest
};

struct Search {
  int s, k;
  std::vector<std::vector<int>> vars;  // candidate edges, DFS order
  std::vector<Form> forms;
  // Per variable: (form index, coefficient) for nonzero coefficients.
  std::vector<std::vector<std::pair<int, Rational>>> cols;
  std::vector<int> assign;
  long long budget = 0, nodes = 0;
  std::vector<BkqPair> out;

  bool feasible(int f) const {
    const Form& fm = forms[f];
    if (fm.cur + fm.pos_rem < Rational(0)) return false;
    Rational hi = fm.squarefree ? Rational(1) : Rational(0);
    return fm.cur + fm.neg_rem <= hi;
  }

  void record() {
    std::vector<std::vector<int>> ge, he;
    for (size_t v = 0; v < vars.size(); ++v)
      if (assign[v]) ge.push_back(vars[v]);
    for (const Form& fm : forms) {
      if (fm.cur.is_zero()) continue;
      if (!fm.squarefree || fm.cur != Rational(1)) return;  // not 0/1
      he.push_back(fm.edge);
    }
    out.push_back({Hypergraph::on_range(k, s, std::move(ge)),
                   Hypergraph::on_range(k, s, std::move(he))});
  }

  void dfs(size_t v) {
    if (budget > 0 && ++nodes > budget) {
      std::sort(out.begin(), out.end());
      throw BkqBudgetExhausted(std::move(out));
    }
    if (v == vars.size()) {
      record();
      return;
    }
    // Retire the variable's coefficients from every touched range.
    for (const auto& [f, c] : cols[v])
      (c.sign() > 0 ? forms[f].pos_rem : forms[f].neg_rem) -= c;
    for (int val : {0, 1}) {
      assign[v] = val;
      if (val) for (const auto& [f, c] : cols[v]) forms[f].cur += c;
      bool ok = true;
      for (const auto& [f, c] : cols[v])
        if (!feasible(f)) { ok = false; break; }
      if (ok) dfs(v + 1);
      if (val) for (const auto& [f, c] : cols[v]) forms[f].cur -= c;
    }
    assign[v] = 0;
    for (const auto& [f, c] : cols[v])
      (c.sign() > 0 ? forms[f].pos_rem : forms[f].neg_rem) += c;
  }
};

bool is_circulant(const RatMatrix& r) {
  int s = r.rows();
  for (int i = 0; i + 1 < s; ++i)
    for (int j = 0; j < s; ++j)
      if (r.at(i, j) != r.at(i + 1, (j + 1) % s)) return false;
  return true;
}

Hypergraph rotate(const Hypergraph& g, int shift) {
  std::vector<std::vector<int>> edges;
  for (const auto& e : g.edges()) {
    std::vector<int> f;
    for (int v : e) f.push_back((v + shift) % g.n());
    edges.push_back(std::move(f));
  }
  return Hypergraph::on_range(g.k(), g.n(), std::move(edges));
}

std::vector<BkqPair> enumerate_k1(const RatMatrix& r) {
  std::vector<BkqPair> out;
  for (const auto& pr : vq(r)) {
    std::vector<std::vector<int>> ge, he;
    for (size_t i = 0; i < pr.v.size(); ++i) {
      if (pr.v[i]) ge.push_back({static_cast<int>(i)});
      if (pr.image[i]) he.push_back({static_cast<int>(i)});
    }
    out.push_back({Hypergraph::on_range(1, r.rows(), std::move(ge)),
                   Hypergraph::on_range(1, r.rows(), std::move(he))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BkqPair> enumerate_bkq(const RatMatrix& r, int k,
                                   const BkqOptions& opts) {
  if (!r.square()) throw std::invalid_argument("enumerate_bkq: square R only");
  if (k < 1) throw std::invalid_argument("enumerate_bkq: k >= 1");
  if (k == 1) return enumerate_k1(r);

  int s = r.rows();
  Search srch;
  srch.s = s;
  srch.k = k;
  srch.budget = opts.budget_nodes;
  RatMatrix rt = r.transpose();

  std::vector<std::vector<int>> vars = k_subsets(s, k);
  for (const auto& i_key : sorted_multisets(s, k)) {
    Form fm;
    fm.squarefree =
        std::adjacent_find(i_key.begin(), i_key.end()) == i_key.end();
    if (fm.squarefree) fm.edge = i_key;
    srch.forms.push_back(std::move(fm));
  }
  srch.cols.resize(vars.size());
  // Coefficient table: per(R^T restricted to output rows x edge columns).
  {
    auto multis = sorted_multisets(s, k);
    for (size_t f = 0; f < multis.size(); ++f)
      for (size_t v = 0; v < vars.size(); ++v) {
        Rational c = permanent(rt.submatrix(multis[f], vars[v]));
        if (c.is_zero()) continue;
        srch.cols[v].push_back({static_cast<int>(f), c});
        (c.sign() > 0 ? srch.forms[f].pos_rem : srch.forms[f].neg_rem) += c;
      }
  }

  // Fail-first: heaviest variables early.
  std::vector<size_t> order(vars.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<Rational> mass(vars.size());
  for (size_t v = 0; v < vars.size(); ++v)
    for (const auto& [f, c] : srch.cols[v])
      mass[v] += (c.sign() > 0 ? c : -c);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return mass[b] < mass[a]; });
  for (size_t i : order) {
    srch.vars.push_back(vars[i]);
  }
  {
    std::vector<std::vector<std::pair<int, Rational>>> cols2;
    for (size_t i : order) cols2.push_back(std::move(srch.cols[i]));
    srch.cols = std::move(cols2);
  }
  srch.assign.assign(srch.vars.size(), 0);

  srch.dfs(0);
  std::vector<BkqPair> out = std::move(srch.out);

  // Circulant R commutes with the vertex rotation, so solutions are closed
  // under it; useful as a cheap cross-check, and output is deduped anyway.
  if (opts.symmetry && is_circulant(r)) {
    size_t base = out.size();
    for (size_t i = 0; i < base; ++i)
      for (int t = 1; t < s; ++t)
        out.push_back({rotate(out[i].g, t), rotate(out[i].tg, t)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Hypergraph singletons(int n, const std::vector<int>& xs) {
  std::vector<std::vector<int>> e;
  for (int x : xs) e.push_back({x});
  return Hypergraph::on_range(1, n, std::move(e));
}

std::vector<int> complement(int n, const std::vector<int>& xs) {
  std::vector<bool> in(n, false);
  for (int x : xs) in[x] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    std::vector<int> x;
    for (int i = 0; i < n; ++i)
      if (mask & (uint32_t(1) << i)) x.push_back(i);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<BkqPair> prop4_closed_form(int part, int param) {
  std::vector<BkqPair> out;
  switch (part) {
    case 1: {  // gm: empty, full, and the balanced complement pairs
      int s = param;
      if (s < 4 || s % 2) throw std::invalid_argument("prop4 part 1: even s >= 4");
      for (const auto& x : all_subsets(s)) {
        if (x.empty() || static_cast<int>(x.size()) == s)
          out.push_back({singletons(s, x), singletons(s, x)});
        else if (static_cast<int>(x.size()) == s / 2)
          out.push_back({singletons(s, x), singletons(s, complement(s, x))});
      }
      break;
    }
    case 2: {  // wqh: balanced sets fixed, plus the two half swaps
      int p = param, n = 2 * param;
      if (p < 1) throw std::invalid_argument("prop4 part 2: p >= 1");
      for (const auto& x : all_subsets(n)) {
        int c1 = 0;
        for (int v : x) c1 += v < p;
        if (c1 == static_cast<int>(x.size()) - c1)
          out.push_back({singletons(n, x), singletons(n, x)});
      }
      std::vector<int> c1, c2;
      for (int i = 0; i < p; ++i) c1.push_back(i);
      for (int i = p; i < n; ++i) c2.push_back(i);
      out.push_back({singletons(n, c1), singletons(n, c2)});
      out.push_back({singletons(n, c2), singletons(n, c1)});
      break;
    }
    case 3: {  // fano, k = 1: lines to ovals and their complements
      FanoData fd = fano_lines_and_ovals();
      std::vector<int> full = {0, 1, 2, 3, 4, 5, 6};
      out.push_back({singletons(7, {}), singletons(7, {})});
      out.push_back({singletons(7, full), singletons(7, full)});
      for (int i = 0; i < 7; ++i) {
        out.push_back({singletons(7, fd.lines[i]), singletons(7, fd.ovals[i])});
        out.push_back({singletons(7, complement(7, fd.lines[i])),
                       singletons(7, complement(7, fd.ovals[i]))});
      }
      break;
    }
    case 4: {  // fano, k = 3
      FanoData fd = fano_lines_and_ovals();
      out.push_back({Hypergraph::on_range(3, 7, {}),
                     Hypergraph::on_range(3, 7, {})});
      out.push_back({fd.f1, fd.f2});
      break;
    }
    case 5: {  // sun: even trace fixed, transversals shifted back one block
      int m = param, n = 2 * param;
      if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("prop4 part 5: odd m >= 3");
      for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        std::vector<int> x;
        for (int i = 0; i < m; ++i)
          if (mask & (uint32_t(1) << i)) {
            x.push_back(2 * i);
            x.push_back(2 * i + 1);
          }
        out.push_back({singletons(n, x), singletons(n, x)});
      }
      for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        std::vector<int> x, px;
        for (int i = 0; i < m; ++i) {
          int v = 2 * i + ((mask >> i) & 1);
          x.push_back(v);
          px.push_back((v - 2 + n) % n);
        }
        out.push_back({singletons(n, x), singletons(n, px)});
      }
      break;
    }
    default:
      throw std::invalid_argument("prop4: part must be 1..5");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Prop4Report reproduce_prop4(int part, int param, const BkqOptions& opts) {
  RatMatrix r;
  int k = 1;
  switch (part) {
    case 1: r = build(SwitchFamily::parse("gm:" + std::to_string(param))); break;
    case 2: r = build(SwitchFamily::parse("wqh:" + std::to_string(param))); break;
    case 3: r = build(SwitchFamily::parse("fano")); break;
    case 4: r = build(SwitchFamily::parse("fano")); k = 3; break;
    case 5:
      r = build(SwitchFamily::parse("sg:" + std::to_string(2 * param)));
      break;
    default: throw std::invalid_argument("prop4: part must be 1..5");
  }
  Prop4Report rep;
  rep.found = enumerate_bkq(r, k, opts);
  std::vector<BkqPair> expected = prop4_closed_form(part, param);
  std::set_difference(expected.begin(), expected.end(), rep.found.begin(),
                      rep.found.end(), std::back_inserter(rep.missing));
  std::set_difference(rep.found.begin(), rep.found.end(), expected.begin(),
                      expected.end(), std::back_inserter(rep.unexpected));
  return rep;
}

}  // namespace cospec

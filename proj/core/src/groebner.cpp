#include "cospec/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace cospec {

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (ord == MonomialOrder::Lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

namespace {

Monomial monomial_sub(const Monomial& a, const Monomial& b) {
  Monomial d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Monomial monomial_add(const Monomial& a, const Monomial& b) {
  Monomial s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

}  // namespace

const Monomial& MultiPoly::lead_monomial() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: zero has no LT");
  return terms_.front().first;
}

const Rational& MultiPoly::lead_coeff() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: zero has no LT");
  return terms_.front().second;
}

void MultiPoly::add_term(const Monomial& exp, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [this](const std::pair<Monomial, Rational>& t, const Monomial& m) {
        return monomial_less(m, t.first, ord_);  // descending storage
      });
  if (it != terms_.end() && it->first == exp) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {exp, c});
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void MultiPoly::sub_scaled(const Rational& c, const Monomial& exp,
                           const MultiPoly& o) {
  for (const auto& [m, oc] : o.terms_) add_term(monomial_add(m, exp), -c * oc);
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(nvars_, ord_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [m, rc] : r.terms_) rc *= c;
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / lead_coeff());
}

MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& g) {
  size_t idx = 0;
  while (idx < p.terms().size()) {
    const auto& [mon, coef] = p.terms()[idx];
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.is_zero() || !monomial_divides(gi.lead_monomial(), mon)) continue;
      Monomial q = monomial_sub(mon, gi.lead_monomial());
      p.sub_scaled(coef / gi.lead_coeff(), q, gi);
      reduced = true;
      break;
    }
    if (!reduced) ++idx;
  }
  return p;
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = monomial_lcm(f.lead_monomial(), g.lead_monomial());
  MultiPoly s(f.nvars(), f.order());
  s.sub_scaled(-(Rational(1) / f.lead_coeff()),
               monomial_sub(l, f.lead_monomial()), f);
  s.sub_scaled(Rational(1) / g.lead_coeff(),
               monomial_sub(l, g.lead_monomial()), g);
  return s;
}

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      MultiPoly f = g[i];
      g[i] = MultiPoly(f.nvars(), f.order());  // exclude from the reducers
      MultiPoly h = normal_form(f, g).monic();
      if (h.is_zero()) {
        g.erase(g.begin() + i);
        --i;
        changed = true;
      } else {
        changed = changed || !(h == f);
        g[i] = std::move(h);
      }
    }
  }
  return g;
}

}  // namespace

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens,
                                  const GroebnerOptions& opts) {
  std::vector<MultiPoly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  MonomialOrder ord = g.front().order();

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back(
          {i, j, monomial_lcm(g[i].lead_monomial(), g[j].lead_monomial())});
  };
  for (size_t j = 0; j < g.size(); ++j) push_pairs(j);

  long processed = 0;
  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    size_t best = 0;
    for (size_t i = 1; i < pairs.size(); ++i)
      if (monomial_less(pairs[i].lcm, pairs[best].lcm, ord)) best = i;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);

    if (opts.max_pairs > 0 && ++processed > opts.max_pairs)
      throw GroebnerBudgetExhausted();

    // Coprime leading terms reduce to zero (Buchberger's first criterion).
    if (pr.lcm ==
        monomial_add(g[pr.i].lead_monomial(), g[pr.j].lead_monomial()))
      continue;

    MultiPoly h = normal_form(s_poly(g[pr.i], g[pr.j]), g);
    if (h.is_zero()) continue;
    g.push_back(h.monic());
    push_pairs(g.size() - 1);
  }
  return interreduce(std::move(g));
}

bool variety_is_origin_only(const std::vector<MultiPoly>& gb, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : gb) {
      if (g.is_zero()) continue;
      const Monomial& m = g.lead_monomial();
      bool pure = m[v] > 0;
      for (int u = 0; u < nvars && pure; ++u)
        if (u != v && m[u] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

EliminationResult echar_eliminate_full(const SymTensor& t, bool scaled,
                                       const GroebnerOptions& opts) {
  int n = t.dim(), k = t.order();
  if (!((k == 2 && n <= 5) || (k == 3 && n <= 4)))
    throw std::invalid_argument(
        "echar_eliminate: supported sizes are k=2 n<=5 and k=3 n<=4");
  long fact = 1;
  for (int i = 2; i < k; ++i) fact *= i;
  Rational scale = scaled ? Rational(1, fact) : Rational(1);

  // Variables x_0..x_{n-1} then lambda, lex: x's eliminated first.
  int nv = n + 1;
  std::vector<MultiPoly> gens;
  for (int i = 0; i < n; ++i) {
    MultiPoly row(nv, MonomialOrder::Lex);
    for (const auto& [key, val] : t.entries()) {
      std::vector<int> perm = key;
      std::sort(perm.begin(), perm.end());
      do {
        if (perm[0] != i) continue;
        Monomial m(nv, 0);
        for (size_t p = 1; p < perm.size(); ++p) ++m[perm[p]];
        row.add_term(m, val * scale);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    Monomial lx(nv, 0);
    lx[i] = 1;
    lx[n] = 1;  // lambda * x_i
    row.add_term(lx, Rational(-1));
    gens.push_back(std::move(row));
  }
  MultiPoly sphere(nv, MonomialOrder::Lex);
  for (int i = 0; i < n; ++i) {
    Monomial m(nv, 0);
    m[i] = 2;
    sphere.add_term(m, Rational(1));
  }
  sphere.add_term(Monomial(nv, 0), Rational(-1));
  gens.push_back(std::move(sphere));

  auto gb = buchberger(std::move(gens), opts);

  EliminationResult res{UniPoly::constant(Rational(1)), false};
  UniPoly acc;
  for (const auto& g : gb) {
    bool has_x = false;
    int deg = 0;
    for (const auto& [m, c] : g.terms()) {
      for (int v = 0; v < n; ++v) has_x = has_x || m[v] != 0;
      deg = std::max(deg, m[n]);
    }
    if (!has_x && deg == 0 && !g.is_zero()) {
      res.trivial_ideal = true;
      return res;
    }
    if (has_x) continue;
    std::vector<Rational> coeffs(deg + 1);
    for (const auto& [m, c] : g.terms()) coeffs[m[n]] = c;
    UniPoly u(std::move(coeffs));
    acc = acc.is_zero() ? u : poly_gcd(acc, u);
  }
  if (acc.is_zero())
    throw std::runtime_error("echar_eliminate: no univariate eliminant found");
  res.g = acc.monic();
  return res;
}

UniPoly echar_eliminate(const SymTensor& t, bool scaled,
                        const GroebnerOptions& opts) {
  return echar_eliminate_full(t, scaled, opts).g;
}

long generic_degree_bound(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("generic_degree_bound");
  if (k == 2) return n;
  long acc = 0, pw = 1;
  for (int i = 0; i < n; ++i) {
    acc += pw;
    pw *= k - 1;
  }
  return acc;  // ((k-1)^n - 1)/(k-2) summed directly
}

}  // namespace cospec

#pragma once

#include "cospec/polynomial.hpp"
#include "cospec/rational.hpp"
#include "cospec/tensor.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cospec {

/// Exponent vector over a fixed variable list; entry i is the power of
/// variable i.
using Monomial = std::vector<int>;

enum class MonomialOrder {
  Lex,      // compare exponents left to right: earlier variables rank higher
  GrevLex,  // total degree, ties by reverse lexicographic
};

/// a < b in the given order.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder ord);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q on a fixed number of variables.
/// Terms are kept sorted descending in the polynomial's monomial order,
/// with no zero coefficients.
class MultiPoly {
public:
  MultiPoly(int nvars, MonomialOrder ord) : nvars_(nvars), ord_(ord) {}

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return ord_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const {
    return terms_;
  }
  const Monomial& lead_monomial() const;
  const Rational& lead_coeff() const;

  /// Adds c * x^exp, merging and dropping zeros.
  void add_term(const Monomial& exp, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  /// this -= c * x^exp * o
  void sub_scaled(const Rational& c, const Monomial& exp, const MultiPoly& o);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly monic() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  int nvars_;
  MonomialOrder ord_;
  std::vector<std::pair<Monomial, Rational>> terms_;
};

struct GroebnerOptions {
  /// S-pairs processed before giving up; <= 0 means unlimited.
  long max_pairs = 100000;
};

struct GroebnerBudgetExhausted : std::runtime_error {
  GroebnerBudgetExhausted()
      : std::runtime_error("groebner: S-pair budget exhausted") {}
};

/// Buchberger with the coprime-leading-term skip and full interreduction
/// of the result (reduced Groebner basis, monic generators).
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens,
                                  const GroebnerOptions& opts = {});

/// Full normal form of p modulo the (not necessarily reduced) family g.
MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& g);

/// True iff the leading-term ideal contains a pure power of every
/// variable — for a homogeneous ideal this says the variety is {0}.
bool variety_is_origin_only(const std::vector<MultiPoly>& gb, int nvars);

struct EliminationResult {
  UniPoly g;           // monic generator of the ideal cut down to lambda
  bool trivial_ideal;  // basis contained a nonzero constant; g = 1
};

/// Lex elimination of x_1..x_n from (A x - lambda x, x^T x - 1): returns
/// the monic univariate generator whose roots are the normalized
/// E-eigenvalues. Size caps: k = 3 needs n <= 4, k = 2 needs n <= 5.
/// `scaled` divides tensor entries by (k-1)!.
EliminationResult echar_eliminate_full(const SymTensor& t, bool scaled,
                                       const GroebnerOptions& opts = {});
UniPoly echar_eliminate(const SymTensor& t, bool scaled,
                        const GroebnerOptions& opts = {});

/// ((k-1)^n - 1)/(k-2) for k >= 3, n for k = 2: the degree of the generic
/// E-characteristic polynomial. For odd k the lambda-degree bound of the
/// eliminant is twice this value.
long generic_degree_bound(int n, int k);

}  // namespace cospec

#include "cospec/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cospec {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int deg, const Rational& c) {
  std::vector<Rational> v(deg + 1);
  v[deg] = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i]
                                                        : Rational(0);
}

Rational UniPoly::leading() const {
  if (is_zero()) throw std::domain_error("UniPoly: zero has no leading coeff");
  return coeffs_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return UniPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::complex<double> UniPoly::eval(const std::complex<double>& x) const {
  std::complex<double> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->to_double();
  return acc;
}

UniPoly UniPoly::reflected() const {
  std::vector<Rational> v = coeffs_;
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(
      a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  Rational lc = b.leading();
  for (int d = a.degree(); d >= b.degree(); --d) {
    if (rem[d].is_zero()) continue;
    Rational f = rem[d] / lc;
    quo[d - b.degree()] = f;
    for (int i = 0; i <= b.degree(); ++i)
      rem[d - b.degree() + i] -= f * b.coeffs_[i];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = mag == Rational(1) && i > 0;
    if (!unit) os << mag.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() < 1) return p.monic();
  UniPoly g = poly_gcd(p, p.derivative());
  return UniPoly::divmod(p, g).first.monic();
}

UniPoly char_poly_matrix(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly_matrix: not square");
  int n = m.rows();
  if (n > 10) throw std::invalid_argument("char_poly_matrix: n <= 10");
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
  // M_{j+1} = A (M_j + c_{n-j} I), c_{n-j-1} = -tr(M_{j+1})/(j+1).
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  RatMatrix mj = m;
  for (int j = 1; j <= n; ++j) {
    Rational tr;
    for (int i = 0; i < n; ++i) tr += mj.at(i, i);
    c[n - j] = -tr / Rational(j);
    if (j == n) break;
    for (int i = 0; i < n; ++i) mj.at(i, i) += c[n - j];
    mj = m * mj;
  }
  return UniPoly(std::move(c));
}

}  // namespace cospec

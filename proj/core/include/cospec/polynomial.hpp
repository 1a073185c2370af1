#pragma once

#include "cospec/matrix.hpp"
#include "cospec/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies x^i; the
/// leading coefficient is nonzero and the zero polynomial stores nothing.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  /// c * x^deg
  static UniPoly monomial(int deg, const Rational& c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;
  Rational leading() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  /// Substitution x -> -x.
  UniPoly reflected() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  /// "x^3 - 2x" with rational coefficients as p/q.
  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'), monic: same roots, each simple.
UniPoly squarefree_part(const UniPoly& p);

/// Exact det(xI - M) by Faddeev-LeVerrier. Square input, n <= 10.
UniPoly char_poly_matrix(const RatMatrix& m);

}  // namespace cospec

#pragma once

#include "cospec/rational.hpp"

#include <vector>

namespace cospec {

/// Element a + b·i + c·√m + d·i·√m of the field Q(i, √m), with m a fixed
/// positive square-free integer. The default m = 3 covers every witness
/// coordinate arising from 3-uniform patterns; the rank-2 witness path may
/// need another single m, so m travels with the value.
class QuadExt {
public:
  QuadExt() : m_(3) {}
  QuadExt(Rational a, long m = 3) : a_(std::move(a)), m_(m) {}
  QuadExt(Rational a, Rational b, Rational c, Rational d, long m = 3)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), m_(m) {}

  static QuadExt i(long m = 3) { return QuadExt(0, 1, 0, 0, m); }
  static QuadExt sqrt_m(long m = 3) { return QuadExt(0, 0, 1, 0, m); }
  static QuadExt i_sqrt_m(long m = 3) { return QuadExt(0, 0, 0, 1, m); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  long radicand() const { return m_; }

  bool is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }
  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  /// Complex conjugate (i -> -i).
  QuadExt conj() const { return QuadExt(a_, -b_, c_, -d_, m_); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, -c_, -d_, m_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  std::string str() const;

private:
  // Radicals must agree before mixing non-rational values.
  static long join(const QuadExt& x, const QuadExt& y);

  Rational a_, b_, c_, d_;
  long m_;
};

/// Square-free part of |n|, by trial division (desk-scale inputs).
long squarefree_part(const mpz_class& n);

}  // namespace cospec

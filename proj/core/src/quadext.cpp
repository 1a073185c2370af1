#include "cospec/quadext.hpp"

#include <sstream>

namespace cospec {

long QuadExt::join(const QuadExt& x, const QuadExt& y) {
  bool xr = x.c_.is_zero() && x.d_.is_zero();
  bool yr = y.c_.is_zero() && y.d_.is_zero();
  if (xr) return y.m_;
  if (yr) return x.m_;
  if (x.m_ != y.m_)
    throw std::domain_error("QuadExt: mixing distinct radicals");
  return x.m_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  m_ = join(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  m_ = join(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  // Basis products: i^2 = -1, (sqrt m)^2 = m, (i sqrt m)^2 = -m,
  // i * sqrt m = i sqrt m, i * i sqrt m = -sqrt m, sqrt m * i sqrt m = m i.
  long m = join(*this, o);
  Rational mm(m);
  Rational a = a_ * o.a_ - b_ * o.b_ + mm * (c_ * o.c_ - d_ * o.d_);
  Rational b = a_ * o.b_ + b_ * o.a_ + mm * (c_ * o.d_ + d_ * o.c_);
  Rational c = a_ * o.c_ + c_ * o.a_ - b_ * o.d_ - d_ * o.b_;
  Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  m_ = m;
  return *this;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  os << a_.str() << " + (" << b_.str() << ")i + (" << c_.str() << ")sqrt(" << m_
     << ") + (" << d_.str() << ")i*sqrt(" << m_ << ")";
  return os.str();
}

long squarefree_part(const mpz_class& n) {
  mpz_class v = ::abs(n);
  if (v == 0) return 0;
  long result = 1;
  for (long p = 2; mpz_class(p) * p <= v; ++p) {
    int count = 0;
    while (v % p == 0) {
      v /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  if (v > 1) result *= v.get_si();
  return result;
}

}  // namespace cospec

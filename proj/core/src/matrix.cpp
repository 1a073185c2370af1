#include "cospec/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace cospec {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::ones(int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(1);
  return m;
}

RatMatrix RatMatrix::circulant(const RatVector& first_row) {
  int n = static_cast<int>(first_row.size());
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = first_row[((j - i) % n + n) % n];
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) * s;
  return m;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("RatMatrix::apply: dimension mismatch");
  RatVector y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("RatMatrix: product dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("RatMatrix: sum dimension mismatch");
  RatMatrix c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  return a + b.scaled(Rational(-1));
}

RatMatrix RatMatrix::direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) c.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return c;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& row_idx,
                               const std::vector<int>& col_idx) const {
  RatMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
  return s;
}

namespace {

Rational permanent_naive(const RatMatrix& m) {
  int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    Rational prod(1);
    for (int i = 0; i < n && !prod.is_zero(); ++i) prod *= m.at(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational permanent_ryser(const RatMatrix& m) {
  int n = m.rows();
  Rational total;
  // Gray-code walk over column subsets with incremental row sums.
  std::vector<Rational> row_sum(n);
  uint64_t prev = 0;
  for (uint64_t g = 1; g < (uint64_t(1) << n); ++g) {
    uint64_t gray = g ^ (g >> 1);
    uint64_t diff = gray ^ prev;
    int j = std::countr_zero(diff);
    bool added = gray & diff;
    for (int i = 0; i < n; ++i) {
      if (added)
        row_sum[i] += m.at(i, j);
      else
        row_sum[i] -= m.at(i, j);
    }
    prev = gray;
    Rational prod(1);
    for (int i = 0; i < n && !prod.is_zero(); ++i) prod *= row_sum[i];
    int popcount = std::popcount(gray);
    if ((n - popcount) % 2 == 1) prod = -prod;
    total += prod;
  }
  return total;
}

}  // namespace

Rational permanent(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("permanent: matrix not square");
  if (m.rows() == 0) return Rational(1);
  if (m.rows() <= 4) return permanent_naive(m);
  return permanent_ryser(m);
}

int rank(const RatMatrix& m) {
  // Integral lift: scale each row by the lcm of its denominators, then
  // run Bareiss fraction-free elimination.
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) {
      mpz_class g;
      mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
      l = g;
    }
    for (int j = 0; j < cols; ++j)
      a[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
  }
  mpz_class prev_pivot = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev_pivot;
      a[i][c] = 0;
    }
    prev_pivot = a[r][c];
    ++r;
  }
  return r;
}

int nullity(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("nullity: matrix not square");
  return m.cols() - rank(m);
}

std::vector<RatVector> null_space(const RatMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  // Rational RREF.
  std::vector<RatVector> a(rows, RatVector(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    Rational inv = Rational(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVector v(cols);
    v[c] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

mpz_class level(const RatMatrix& m) {
  mpz_class l = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      mpz_class g;
      mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
      l = g;
    }
  return l;
}

RegularOrthoResult is_regular_orthogonal(const RatMatrix& m) {
  RegularOrthoResult res;
  if (!m.square())
    throw std::invalid_argument("is_regular_orthogonal: matrix not square");
  if (!(m * m.transpose() == RatMatrix::identity(m.rows()))) {
    res.failure = RegularOrthoFailure::NotOrthogonal;
    return res;
  }
  Rational r;
  for (int i = 0; i < m.rows(); ++i) {
    Rational s;
    for (int j = 0; j < m.cols(); ++j) s += m.at(i, j);
    if (i == 0)
      r = s;
    else if (s != r) {
      res.failure = RegularOrthoFailure::RowSumsNotConstant;
      return res;
    }
  }
  res.row_sum = r;
  return res;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cospec

#pragma once

#include "cospec/rational.hpp"

#include <optional>
#include <vector>

namespace cospec {

using RatVector = std::vector<Rational>;

/// Dense exact-rational matrix, row-major.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix zero(int n) { return RatMatrix(n, n); }
  static RatMatrix ones(int rows, int cols);
  /// First row given; each subsequent row is the right rotation of the
  /// previous one.
  static RatMatrix circulant(const RatVector& first_row);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  RatMatrix transpose() const;
  RatMatrix scaled(const Rational& s) const;
  RatVector apply(const RatVector& x) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Block-diagonal composition.
  static RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

  /// k x k extraction with rows/cols taken with multiplicity.
  RatMatrix submatrix(const std::vector<int>& row_idx,
                      const std::vector<int>& col_idx) const;

private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

/// per(M) = sum over permutations. Naive expansion for dim <= 4, Ryser
/// inclusion-exclusion above.
Rational permanent(const RatMatrix& m);

/// Rank over Q, via fraction-free (Bareiss) elimination on the integral
/// lift of the matrix.
int rank(const RatMatrix& m);

/// Dimension of the rational null space; square input required.
int nullity(const RatMatrix& m);

/// Basis of the right null space, exact.
std::vector<RatVector> null_space(const RatMatrix& m);

/// Least l >= 1 with l*M integral (lcm of entry denominators).
mpz_class level(const RatMatrix& m);

enum class RegularOrthoFailure { NotOrthogonal, RowSumsNotConstant };

struct RegularOrthoResult {
  std::optional<Rational> row_sum;  // set on success
  std::optional<RegularOrthoFailure> failure;
  bool ok() const { return row_sum.has_value(); }
};

/// Succeeds iff M * M^T = I exactly and M * 1 = r * 1 for a single r.
RegularOrthoResult is_regular_orthogonal(const RatMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace cospec

#include "doctest.h"

#include "cospec/catalog.hpp"
#include "cospec/matrix.hpp"
#include "cospec/quadext.hpp"
#include "cospec/rational.hpp"

#include <random>

using namespace cospec;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

RatVector random_vector(std::mt19937& rng, int n) {
  RatVector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

RatMatrix random_matrix(std::mt19937& rng, int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng);
  return m;
}

QuadExt random_quadext(std::mt19937& rng) {
  return QuadExt(random_rational(rng), random_rational(rng),
                 random_rational(rng), random_rational(rng));
}

RatMatrix random_permutation_matrix(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  RatMatrix p(n, n);
  for (int i = 0; i < n; ++i) p.at(i, perm[i]) = Rational(1);
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("permanent basics") {
  CHECK(permanent(RatMatrix::identity(3)) == Rational(1));
  CHECK(permanent(RatMatrix::ones(2, 2)) == Rational(2));
  RatMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(3);
  m.at(1, 1) = Rational(4);
  CHECK(permanent(m) == Rational(10));
  CHECK_THROWS(permanent(RatMatrix(2, 3)));
}

TEST_CASE("naive and Ryser permanents agree") {
  // Ryser only kicks in above dim 4; compare it against the definition on
  // random 5x5 and 6x6 inputs via expansion along explicit permutations.
  std::mt19937 rng(7);
  for (int n : {5, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      RatMatrix m = random_matrix(rng, n);
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      Rational expected;
      do {
        Rational prod(1);
        for (int i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
        expected += prod;
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(permanent(m) == expected);
    }
  }
}

TEST_CASE("permanent is invariant under row/column permutations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 4);
    RatMatrix p = random_permutation_matrix(rng, 4);
    RatMatrix q = random_permutation_matrix(rng, 4);
    CHECK(permanent(p * m * q) == permanent(m));
  }
}

TEST_CASE("nullity basics") {
  CHECK(nullity(RatMatrix::zero(2)) == 2);
  CHECK(nullity(RatMatrix::identity(4)) == 0);
  // 3-vertex path adjacency: char poly x^3 - 2x has one zero root.
  RatMatrix p3(3, 3);
  p3.at(0, 1) = p3.at(1, 0) = p3.at(1, 2) = p3.at(2, 1) = Rational(1);
  CHECK(nullity(p3) == 1);
}

TEST_CASE("nullity + rank = dim on random matrices") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      RatMatrix m = random_matrix(rng, n);
      // Skew density so singular cases appear too.
      if (trial % 2 == 0)
        for (int i = 0; i < n; ++i) m.at(n - 1, i) = m.at(0, i);
      CHECK(nullity(m) + rank(m) == n);
    }
  }
}

TEST_CASE("null_space vectors really annihilate") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix m = random_matrix(rng, 5);
    for (int i = 0; i < 5; ++i) m.at(4, i) = m.at(0, i) + m.at(1, i);
    auto basis = null_space(m);
    CHECK(static_cast<int>(basis.size()) == nullity(m));
    for (const auto& v : basis) {
      auto mv = m.apply(v);
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("level of catalog matrices") {
  CHECK(level(build(SwitchFamily::parse("gm4"))) == 2);
  CHECK(level(RatMatrix::identity(5)) == 1);
  CHECK(level(build(SwitchFamily::parse("gm:6"))) == 3);
}

TEST_CASE("is_regular_orthogonal") {
  auto rf = is_regular_orthogonal(build(SwitchFamily::parse("fano")));
  REQUIRE(rf.ok());
  CHECK(*rf.row_sum == Rational(1));

  auto id = is_regular_orthogonal(RatMatrix::identity(4));
  REQUIRE(id.ok());
  CHECK(*id.row_sum == Rational(1));

  auto j2 = is_regular_orthogonal(RatMatrix::ones(2, 2));
  CHECK_FALSE(j2.ok());
  CHECK(*j2.failure == RegularOrthoFailure::NotOrthogonal);

  // Orthogonal but row sums not constant.
  RatMatrix flip(2, 2);
  flip.at(0, 0) = Rational(1);
  flip.at(1, 1) = Rational(-1);
  auto r = is_regular_orthogonal(flip);
  CHECK_FALSE(r.ok());
  CHECK(*r.failure == RegularOrthoFailure::RowSumsNotConstant);
}

TEST_CASE("catalog matrices preserve the inner product") {
  std::mt19937 rng(17);
  for (const char* fam : {"gm4", "gm:6", "sg:6", "sg:10", "fano", "cube",
                          "wqh:1", "wqh:3"}) {
    RatMatrix m = build(SwitchFamily::parse(fam));
    for (int trial = 0; trial < 5; ++trial) {
      RatVector u = random_vector(rng, m.rows());
      RatVector v = random_vector(rng, m.rows());
      CHECK(dot(m.apply(u), m.apply(v)) == dot(u, v));
    }
  }
}

TEST_CASE("quadext field arithmetic") {
  QuadExt i = QuadExt::i();
  QuadExt s3 = QuadExt::sqrt_m();
  CHECK(i * i == QuadExt(Rational(-1)));
  CHECK(s3 * s3 == QuadExt(Rational(3)));
  CHECK(i * s3 == QuadExt::i_sqrt_m());
  CHECK((i * s3) * (i * s3) == QuadExt(Rational(-3)));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    QuadExt x = random_quadext(rng);
    QuadExt y = random_quadext(rng);
    QuadExt z = random_quadext(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    QuadExt norm = x.conj() * x;
    CHECK(norm.b().is_zero());
    CHECK(norm.d().is_zero());
  }
}

TEST_CASE("quadext witness coordinate identity") {
  // ((-1/2)(1 + i sqrt3)) * ((-1/2)(1 - i sqrt3)) = 1 and their sum is -1:
  // the two non-real cube roots of unity.
  QuadExt w1(Rational(-1, 2), Rational(0), Rational(0), Rational(-1, 2));
  QuadExt w2(Rational(-1, 2), Rational(0), Rational(0), Rational(1, 2));
  CHECK(w1 * w2 == QuadExt(Rational(1)));
  CHECK(w1 + w2 == QuadExt(Rational(-1)));
  CHECK(w1 * w1 == w2);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(mpz_class(12)) == 3);
  CHECK(squarefree_part(mpz_class(49)) == 1);
  CHECK(squarefree_part(mpz_class(30)) == 30);
  CHECK(squarefree_part(mpz_class(1)) == 1);
}

#include <doctest.h>

#include <random>

#include "hopfkit/exactla.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int sparsity = 0) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::uniform_int_distribution<int> z(0, 9);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) >= sparsity) m.set(i, j, f.from_int(d(rng)));
  return m;
}

/* rank-deficient: product of thin factors */
Matrix low_rank(const Field& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937& rng) {
  return multiply_serial(random_matrix(f, r, k, rng), random_matrix(f, k, c, rng));
}

oracle::Mat rows_of(const Matrix& m) {
  oracle::Mat out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

oracle::Arith arith(const Field& f) {
  oracle::Arith a;
  a.p = f.characteristic();
  return a;
}

const Field kFields[] = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(101)};

}  // namespace

TEST_SUITE("exactla") {
  TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(7);
    CHECK(f.format(f.parse("12")) == "5");
    CHECK_THROWS_AS(f.parse("3/2"), Error);
    CHECK(f.format(f.parse("-1")) == "6");
    CHECK(f.format(f.inverse(f.from_int(3))) == "5");
    CHECK_THROWS_AS(Field::prime(2).parse("1/2"), Error);
    CHECK_THROWS_AS(Field::prime(9), Error);
    CHECK(Field::rationals().format(Field::rationals().parse("6/4")) == "3/2");
    CHECK(f.elements().size() == 7);
  }

  TEST_CASE("multiply matches the triple loop") {
    std::mt19937 rng(11);
    for (const Field& f : kFields) {
      Matrix a = random_matrix(f, 7, 5, rng, 4), b = random_matrix(f, 5, 6, rng, 4);
      Matrix c = multiply(a, b);
      oracle::Arith F = arith(f);
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
          mpq_class s = 0;
          for (std::size_t k = 0; k < 5; ++k) s += a(i, k) * b(k, j);
          CHECK(F.eq(c(i, j), s));
        }
      CHECK(multiply_serial(a, b) == c);
    }
  }

  TEST_CASE("rank agrees with naive elimination") {
    std::mt19937 rng(12);
    for (const Field& f : kFields)
      for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 8;
        Matrix m = trial % 2 ? low_rank(f, r, c, 1 + trial % 3, rng) : random_matrix(f, r, c, rng, 5);
        CHECK(rank(m) == arith(f).rank(rows_of(m)));
        RowEchelon p = rref(m), s = rref_serial(m);
        CHECK(p.reduced == s.reduced);
        CHECK(p.pivots == s.pivots);
      }
  }

  TEST_CASE("kernel, image and solve") {
    std::mt19937 rng(13);
    for (const Field& f : kFields)
      for (int trial = 0; trial < 10; ++trial) {
        Matrix m = low_rank(f, 5, 7, 1 + trial % 4, rng);
        std::size_t r = arith(f).rank(rows_of(m));
        Matrix k = kernel_matrix(m);
        CHECK(k.cols() == 7 - r);
        CHECK((m * k).is_zero());
        CHECK(arith(f).rank(rows_of(k)) == k.cols());
        CHECK(image_matrix(m).cols() == r);
        CHECK(same_column_space(image_matrix(m), m));

        Matrix x = random_matrix(f, 7, 1, rng);
        Matrix b = m * x;
        auto y = solve_particular(m, b);
        REQUIRE(y);
        CHECK(m * *y == b);
      }
  }

  TEST_CASE("inverse and unique solutions") {
    std::mt19937 rng(14);
    for (const Field& f : kFields) {
      Matrix m = random_matrix(f, 4, 4, rng);
      bool inv = arith(f).invertible(rows_of(m));
      CHECK(is_invertible(m) == inv);
      if (auto mi = inverse(m)) {
        CHECK((m * *mi).is_identity());
        CHECK((*mi * m).is_identity());
      }
      Matrix sing = low_rank(f, 4, 4, 2, rng);
      CHECK_FALSE(inverse(sing));
      Matrix tall = random_matrix(f, 6, 3, rng);
      if (rank(tall) == 3) {
        Matrix x = random_matrix(f, 3, 1, rng);
        auto y = solve(tall, tall * x);
        REQUIRE(y);
        CHECK(*y == x);
      }
    }
  }

  TEST_CASE("kron and factor permutations") {
    Field f = Field::rationals();
    Matrix a = Matrix::from_ints(f, {{1, 2}, {3, 4}}), b = Matrix::from_ints(f, {{0, 1, 5}});
    Matrix k = kron(a, b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 6);
    CHECK(k(1, 5) == 4 * 5);
    CHECK(k(0, 4) == 2);

    TensorShape shape({2, 3});
    Matrix p = factor_permutation(f, shape, {1, 0});
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(p(j * 2 + i, i * 3 + j) == 1);
    CHECK(shape.unflatten(shape.flatten({1, 2})) == std::vector<std::size_t>{1, 2});

    /* (A⊗B)(C⊗D) = AC⊗BD */
    std::mt19937 rng(15);
    Matrix c = random_matrix(f, 2, 2, rng), d = random_matrix(f, 3, 2, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

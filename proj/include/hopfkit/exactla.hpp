#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/error.hpp"

namespace hopfkit {

using Scalar = mpq_class;

/*
 * Either the rationals or a prime field GF(p). Elements of GF(p) are stored
 * as their canonical representative in [0, p).
 */
class Field {
 public:
  static Field rationals();
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  void normalize(Scalar& x) const;
  Scalar from_int(long v) const;
  Scalar inverse(const Scalar& x) const;  // throws on zero
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& x) const;
  /* All elements in the order 0, 1, ..., p-1. Finite fields only. */
  std::vector<Scalar> elements() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/* Dense matrix. Rows index the codomain, columns the domain. */
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix unit_vector(const Field& f, std::size_t n, std::size_t i);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);
  static Matrix column(const Field& f, const std::vector<Scalar>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  /* Adds v to entry (r, c). */
  void accumulate(std::size_t r, std::size_t c, const Scalar& v);

  Matrix col(std::size_t c) const;
  Matrix row(std::size_t r) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& raw() { return data_; }
  /* Reduces every entry into the field; for callers that filled raw(). */
  void renormalize();

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/* OpenMP row-parallel product with zero skipping. */
Matrix multiply(const Matrix& a, const Matrix& b);
/* Reference kernel for multiply. */
Matrix multiply_serial(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/* Reduced row echelon form. Elimination below/above each pivot runs in parallel. */
RowEchelon rref(const Matrix& m);
RowEchelon rref_serial(const Matrix& m);

std::size_t rank(const Matrix& m);
/* Canonical RREF kernel basis: one vector per free column, ascending. */
std::vector<Matrix> kernel_basis(const Matrix& m);
/* Kernel basis packed as the columns of a cols(m) x k matrix. */
Matrix kernel_matrix(const Matrix& m);
/* Basis of the column space: the pivot columns of m. */
Matrix image_matrix(const Matrix& m);

/* Unique solution x of m x = b when m has full column rank and b is consistent. */
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
/* Some solution (free variables zero) when consistent. */
std::optional<Matrix> solve_particular(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
/* Column spaces equal. */
bool same_column_space(const Matrix& a, const Matrix& b);

class TensorShape {
 public:
  TensorShape() = default;
  explicit TensorShape(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  std::size_t flat_size() const;

  std::size_t flatten(std::span<const std::size_t> index) const;
  std::size_t flatten(std::initializer_list<std::size_t> index) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

 private:
  std::vector<std::size_t> dims_;
};

/*
 * Basis permutation e_i -> e_image[i]. Multiplying by it reindexes rows or
 * columns instead of building the dense matrix.
 */
class Permutation {
 public:
  Permutation(Field f, std::vector<std::size_t> image);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }
  Matrix matrix() const;
  operator Matrix() const { return matrix(); }

 private:
  Field field_;
  std::vector<std::size_t> image_;
};

Matrix operator*(const Permutation& p, const Matrix& m);
Matrix operator*(const Matrix& m, const Permutation& p);

/*
 * Permutation of tensor factors: output factor k is input factor perm[k].
 * Sends e_(i_0..i_n) to e_(i_perm[0]..i_perm[n]).
 */
Permutation factor_permutation(const Field& f, const TensorShape& shape, const std::vector<std::size_t>& perm);

/* Products with X ⊗ I_n or I_n ⊗ X, without forming the Kronecker product. */
Matrix times_kron_identity(const Matrix& m, const Matrix& x, std::size_t n);  // M (X ⊗ I_n)
Matrix kron_identity_times(const Matrix& x, std::size_t n, const Matrix& m);  // (X ⊗ I_n) M
Matrix identity_kron_times(std::size_t n, const Matrix& x, const Matrix& m);  // (I_n ⊗ X) M

std::string to_string(const Matrix& m);

}  // namespace hopfkit

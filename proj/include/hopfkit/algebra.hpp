#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hopfkit/exactla.hpp"

namespace hopfkit {

using Tensor3 = std::vector<std::vector<std::vector<Scalar>>>;

/*
 * Associative unital algebra by structure constants. mult() is the
 * dim x dim^2 matrix of m: A⊗A → A, so column i*dim+j holds e_i·e_j.
 */
class Algebra {
 public:
  Algebra();
  Algebra(Field f, Matrix mult, Matrix unit);
  /* m[i][j][k] is the coefficient of e_k in e_i e_j. */
  static Algebra from_tensor(const Field& f, const Tensor3& m, const std::vector<Scalar>& unit);

  const Field& field() const { return d_->mult.field(); }
  std::size_t dim() const { return d_->unit.rows(); }
  const Matrix& mult() const { return d_->mult; }
  const Matrix& unit() const { return d_->unit; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return d_->mult(k, i * dim() + j); }

  Matrix product(const Matrix& x, const Matrix& y) const;
  /* Matrix of x ↦ e_i x. */
  const Matrix& left_mult(std::size_t i) const { return d_->lmul.at(i); }
  /* Matrix of x ↦ x e_i. */
  const Matrix& right_mult(std::size_t i) const { return d_->rmul.at(i); }
  Matrix left_mult_by(const Matrix& x) const;
  Matrix right_mult_by(const Matrix& x) const;
  /* The ground field as a one-dimensional algebra. */
  bool is_ground() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.d_ == b.d_ || (a.d_->mult == b.d_->mult && a.d_->unit == b.d_->unit);
  }

 private:
  /* immutable, so copies share it */
  struct Data {
    Matrix mult;
    Matrix unit;
    std::vector<Matrix> lmul, rmul;
  };
  std::shared_ptr<const Data> d_;
};

Algebra ground_algebra(const Field& f);
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
CheckReport check_algebra(const Algebra& a);

struct AlgebraInclusion {
  Algebra sub;
  Algebra amb;
  Matrix embed;  // amb.dim x sub.dim
};

CheckReport check_inclusion(const AlgebraInclusion& inc);
AlgebraInclusion identity_inclusion(const Algebra& a);
AlgebraInclusion unit_inclusion(const Algebra& a);
/*
 * The subalgebra spanned by the columns of `basis` (which must contain 1 and
 * be closed under products), with structure constants in that basis.
 */
AlgebraInclusion subalgebra_from_basis(const Algebra& a, const Matrix& basis);

/*
 * (A,B)-bimodule. left_op(a) is the action of basis element a of A, right_op(b)
 * the action of basis element b of B; both are dim x dim matrices.
 */
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(Algebra left, Algebra right, std::vector<Matrix> left_ops, std::vector<Matrix> right_ops);

  const Algebra& left_alg() const { return left_; }
  const Algebra& right_alg() const { return right_; }
  const Field& field() const { return left_.field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& left_op(std::size_t a) const { return lops_.at(a); }
  const Matrix& right_op(std::size_t b) const { return rops_.at(b); }
  const std::vector<Matrix>& left_ops() const { return lops_; }
  const std::vector<Matrix>& right_ops() const { return rops_; }
  Matrix left_op_by(const Matrix& x) const;
  Matrix right_op_by(const Matrix& x) const;
  /* act: M ← A⊗M, column a*dim+m. */
  Matrix left_act() const;
  /* act: M ← M⊗B, column m*dimB+b. */
  Matrix right_act() const;

 private:
  Algebra left_, right_;
  std::size_t dim_ = 0;
  std::vector<Matrix> lops_, rops_;
};

Bimodule regular_bimodule(const Algebra& a);
Bimodule vector_space(const Field& f, std::size_t n);
/* Left A-module given by act: M ← A⊗M (column a*dim+m); right side is k. */
Bimodule left_module(const Algebra& a, std::size_t dim, const Matrix& act);
/* Right B-module with left side k. */
Bimodule right_module(const Algebra& b, std::size_t dim, const Matrix& act);
Bimodule restrict_left(const Bimodule& m, const AlgebraInclusion& inc);
Bimodule restrict_right(const Bimodule& m, const AlgebraInclusion& inc);
/* Forget one side down to the ground field. */
Bimodule forget_left(const Bimodule& m);
Bimodule forget_right(const Bimodule& m);
/* X⊗M for an x_dim-dimensional space X, actions on the M factor. */
Bimodule scalar_extend_left(std::size_t x_dim, const Bimodule& m);
/* Sub-bimodule spanned by the columns of `basis` (must be stable). */
Bimodule sub_bimodule(const Bimodule& m, const Matrix& basis);
CheckReport check_bimodule(const Bimodule& m);
bool same_bimodule(const Bimodule& a, const Bimodule& b);

struct BimoduleMap {
  Bimodule src;
  Bimodule dst;
  Matrix matrix;  // dst.dim x src.dim
};

CheckReport check_bimodule_map(const BimoduleMap& f);
BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);
BimoduleMap identity_map(const Bimodule& m);
std::vector<BimoduleMap> bimodule_hom_basis(const Bimodule& p, const Bimodule& q);

/*
 * Iterated tensor product M1 ⊗_{B1} M2 ⊗ ... ⊗ Mn, realized as the quotient
 * of the flat Kronecker space by the balancing relations at every junction.
 * projection: quotient ← flat; section: flat ← quotient (a right inverse).
 */
struct TensorProduct {
  std::vector<Bimodule> factors;
  TensorShape flat_shape;
  Matrix projection;
  Matrix section;
  Bimodule result;

  std::size_t dim() const { return result.dim(); }
  std::size_t flat_dim() const { return flat_shape.flat_size(); }
  /* Class of the pure tensor e_{i_1}⊗...⊗e_{i_n}. */
  Matrix pure(std::initializer_list<std::size_t> index) const;
};

TensorProduct tensor_chain(const std::vector<Bimodule>& factors);
TensorProduct tensor_over(const Bimodule& p, const Bimodule& q);
/* False when the balanced product is the plain tensor product (ground or one-dimensional bases). */
bool has_balancing_relations(const std::vector<Bimodule>& factors);

/*
 * f is a map out of src's flat space. Returns the induced map on the quotient,
 * after checking that f kills every balancing generator (NotBalanced otherwise).
 */
Matrix induce_on_quotient(const TensorProduct& src, const Matrix& f);
/* Same, for a flat map between two tensor chains: the result is π_dst f s_src. */
Matrix induce(const TensorProduct& src, const Matrix& f, const TensorProduct& dst);
/* Tensor product of maps between chains with the same number of factors. */
Matrix tensor_maps(const TensorProduct& src, const std::vector<Matrix>& maps, const TensorProduct& dst);

}  // namespace hopfkit

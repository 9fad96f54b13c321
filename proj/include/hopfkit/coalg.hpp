#pragma once

#include <optional>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

/* comult(): dim^2 x dim, column i is Δe_i with e_j⊗e_k at row j*dim+k. */
class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(Matrix comult, Matrix counit);
  /* d[i][j][k] is the coefficient of e_j⊗e_k in Δe_i. */
  static Coalgebra from_tensor(const Field& f, const Tensor3& d, const std::vector<Scalar>& counit);

  const Field& field() const { return counit_.field(); }
  std::size_t dim() const { return counit_.cols(); }
  const Matrix& comult() const { return comult_; }
  const Matrix& counit() const { return counit_; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return comult_(j * dim() + k, i); }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.comult_ == b.comult_ && a.counit_ == b.counit_;
  }

 private:
  Matrix comult_;
  Matrix counit_;
};

Coalgebra trivial_coalgebra(const Field& f);
/* n grouplike basis elements: Δe_i = e_i⊗e_i, ε(e_i) = 1. */
Coalgebra grouplike_coalgebra(const Field& f, std::size_t n);
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);
CheckReport check_coalgebra(const Coalgebra& c);

struct Bialgebra {
  Algebra alg;
  Coalgebra coalg;
  const Field& field() const { return alg.field(); }
  std::size_t dim() const { return alg.dim(); }
};

CheckReport check_bialgebra(const Bialgebra& h);

struct HopfAlgebra {
  Bialgebra bialg;
  Matrix antipode;
};

/* Both antipode identities plus S(1) = 1 and εS = ε. */
CheckReport check_hopf_algebra(const HopfAlgebra& h);
/* Solves m(S⊗id)Δ = ιε for S in one linear system; nullopt certifies that no antipode exists. */
std::optional<HopfAlgebra> antipode(const Bialgebra& h);

/* ν: A → H⊗A, rows h*dimA + a. base embeds B ⊆ A^{co H}. */
struct ComoduleAlgebra {
  Bialgebra H;
  Algebra A;
  Matrix nu;
  AlgebraInclusion base;
};

Matrix coinvariants(const Bialgebra& h, const Algebra& a, const Matrix& nu);
Matrix coinvariants(const ComoduleAlgebra& ca);
/* Comodule algebra with B = A^{co H}. */
ComoduleAlgebra make_comodule_algebra(const Bialgebra& h, const Algebra& a, const Matrix& nu);
ComoduleAlgebra make_comodule_algebra(const Bialgebra& h, const Algebra& a, const Matrix& nu,
                                      const AlgebraInclusion& base);
CheckReport check_comodule_algebra(const ComoduleAlgebra& ca);

/* action: Z ← H⊗Z, column h*dimZ + z. */
struct ModuleCoalgebra {
  Bialgebra H;
  Coalgebra Z;
  Matrix action;
};

ModuleCoalgebra free_module_coalgebra(const Bialgebra& h, const Coalgebra& c);
CheckReport check_module_coalgebra(const ModuleCoalgebra& z);

/* The regular coaction Δ: H → H⊗H viewed as a comodule algebra over itself. */
ComoduleAlgebra regular_comodule_algebra(const Bialgebra& h);

}  // namespace hopfkit

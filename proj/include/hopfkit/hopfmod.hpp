#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/coring.hpp"

namespace hopfkit {

/* Doi–Koppinen Hopf module: A-module and Z-comodule with A-linear coaction. */
struct DKHopfModule {
  ComoduleAlgebra data;
  ModuleCoalgebra Z;
  std::size_t dim = 0;
  Matrix action;    // dim x dimA*dim, column a*dim + m
  Matrix coaction;  // dimZ*dim x dim, row z*dim + m

  Bimodule module() const { return left_module(data.A, dim, action); }
};

CheckReport check_dk_hopf_module(const DKHopfModule& n);

/* B-module with B-linear C-coaction. */
struct BCBimodule {
  Algebra B;
  Coalgebra C;
  std::size_t dim = 0;
  Matrix action;    // dim x dimB*dim
  Matrix coaction;  // dimC*dim x dim

  Bimodule module() const { return left_module(B, dim, action); }
};

CheckReport check_bc_bimodule(const BCBimodule& m);
/* B itself with the trivial coaction of the trivial coalgebra. */
BCBimodule base_bc_bimodule(const ComoduleAlgebra& ca);
/* (A, multiplication, ν) as a Hopf module over Z = H. */
DKHopfModule regular_hopf_module(const ComoduleAlgebra& ca);

/* A linear map between two tensor chains (flat codomains are chains over k). */
struct LinearOperator {
  TensorProduct domain;
  TensorProduct codomain;
  Matrix matrix;
};

/* A⊗_B(X⊗M) → (H⊗X)⊗(A⊗_B M), a⊗x⊗m ↦ a_{-1}⊗x⊗(a_0⊗m). */
LinearOperator chi(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m);

DKHopfModule functor_A(const ComoduleAlgebra& ca, const Coalgebra& c, const BCBimodule& m);

struct FunctorBResult {
  BCBimodule module;
  Matrix inclusion;  // into C⊗N
};
FunctorBResult functor_B(const ComoduleAlgebra& ca, const Coalgebra& c, const DKHopfModule& n);

/* M → ℬ𝒜(M); throws UnitNotWellDefined if the image leaves the equalizer. */
Matrix adjunction_unit(const ComoduleAlgebra& ca, const Coalgebra& c, const BCBimodule& m);
/* 𝒜ℬ(N) → N. */
Matrix adjunction_counit(const ComoduleAlgebra& ca, const Coalgebra& c, const DKHopfModule& n);

/* Galois map as the composite (id⊗μ_M)∘χ_{X,S(M)}. */
LinearOperator galois_map(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m);
/* Galois map from the closed formula a⊗x⊗(a'⊗m) ↦ (a1⊗x)⊗(a2a'⊗m). */
LinearOperator galois_map_formula(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m);
/* A⊗_B A → H⊗A, a⊗a' ↦ a1⊗a2a'. */
LinearOperator canonical_map(const ComoduleAlgebra& ca);

struct GaloisFactorization {
  bool identity_holds = false;  // Ψ𝔾 = (id_C ⊗ (can⊗_B id_M))Φ
  std::size_t rank_galois = 0;
  std::size_t rank_block = 0;  // rank of can⊗_B id_M
  std::size_t c_dim = 0;
  bool rank_identity() const { return rank_galois == c_dim * rank_block; }
};
GaloisFactorization galois_factorization(const ComoduleAlgebra& ca, const Coalgebra& c, const Bimodule& m);

/* h⊗h'⊗m ↦ h1⊗h2h'⊗m on H⊗H⊗M. */
Matrix fusion_operator(const Bialgebra& h, std::size_t m_dim);

/* A⊗_B(X⊗N) → (H⊗X)⊗N, a⊗x⊗n ↦ (a1⊗x)⊗a2·n, for an A-module N. */
LinearOperator hopf_operator(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& n);
/* (id⊗ξ_N)∘χ_{X,K(N)}. */
LinearOperator aux_operator(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& n);
/* χ_{F(X),N}∘K(ℍ_{X,N}) = 𝔸_{X,N}. */
CheckReport check_aux_identity(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& n);
/* 𝔸_{X,S(M)} = 𝔾_{X,M} (formula) = 𝔾_{X,M} (composite). */
CheckReport check_aux_free(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m);

/* Z⊗A as an A-coring; its comodules are the Doi–Koppinen Hopf modules. */
Coring hopf_module_coring(const ComoduleAlgebra& ca, const ModuleCoalgebra& z);
CoringComodule dk_as_coring_comodule(const Coring& e, const DKHopfModule& n);
/* χ_C as an (A,B)-map A⊗_B(C⊗B) → Z⊗A with Z = H⊗C. */
BimoduleMap chi_colax(const ComoduleAlgebra& ca, const Coalgebra& c);
/* universal_factor(χ_C) against the Hopf operator and the coring-morphism axioms. */
CheckReport check_hopf_colax(const ComoduleAlgebra& ca, const Coalgebra& c);

/* Π = σ(S⊗id)ζ for a Hopf module over Z = H with A = H. */
Matrix coinv_projector(const HopfAlgebra& h, const DKHopfModule& n);

Algebra smash_product(const ComoduleAlgebra& ca);
struct SmashToEnd {
  Algebra smash;
  Matrix end_basis;  // columns: vec of B-linear endomorphisms of A (row-major)
  Matrix map;        // coordinates of the images in end_basis
  bool multiplicative = false;
  bool invertible = false;
};
SmashToEnd smash_to_end(const ComoduleAlgebra& ca);

enum class BatchMode { Parallel, Serial };

struct ObjectVerdict {
  std::string name;
  std::size_t dim = 0;
  std::size_t image_dim = 0;  // dim of ℬ𝒜(M) or 𝒜ℬ(N)
  bool bijective = false;
  std::string error;
};

struct FthmReport {
  bool galois = false;    // canonical map invertible
  bool galois_c = false;  // 𝔾_{C,B} invertible
  bool free_over_base = false;
  std::string freeness_reason;
  std::vector<ObjectVerdict> units;
  std::vector<ObjectVerdict> counits;
  std::vector<std::string> skipped;
  bool all_bijective() const;
  /* When Galois and free, every unit and counit must be bijective. */
  bool consistent() const { return !(galois && free_over_base) || all_bijective(); }
  std::optional<std::string> witness() const;
};

using NamedBC = std::pair<std::string, BCBimodule>;
using NamedDK = std::pair<std::string, DKHopfModule>;

/* Certifies faithful flatness: B a division algebra, or an explicit right B-basis of A. */
std::pair<bool, std::string> certify_free(const ComoduleAlgebra& ca, const std::optional<Matrix>& basis = std::nullopt);

FthmReport fthm_report(const ComoduleAlgebra& ca, const Coalgebra& c, const std::vector<NamedBC>& unit_family,
                       const std::vector<NamedDK>& counit_family, BatchMode mode = BatchMode::Parallel,
                       const std::optional<Matrix>& freeness_basis = std::nullopt);

}  // namespace hopfkit

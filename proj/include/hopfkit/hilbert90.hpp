#pragma once

#include <optional>
#include <vector>

#include "hopfkit/hopfmod.hpp"

namespace hopfkit {

struct GroupPresentation {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = gh
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t mul(std::size_t g, std::size_t h) const { return table.at(g).at(h); }
  bool is_abelian() const;
};

/* C_n with element i standing for σ^i. */
GroupPresentation cyclic_group(std::size_t n);
CheckReport check_group(const GroupPresentation& g);

/* G acting on a commutative algebra by automorphisms. */
struct GroupAction {
  GroupPresentation G;
  Algebra A;
  std::vector<Matrix> maps;
};

CheckReport check_group_action(const GroupAction& act);
Matrix fixed_subalgebra(const GroupAction& act);

/* k^G: pointwise product, Δδ_g = Σ_{xy=g} δ_x⊗δ_y, S(δ_g) = δ_{g⁻¹}. */
HopfAlgebra dual_group_hopf(const GroupPresentation& g, const Field& f);
/* ν(a) = Σ_g δ_g⊗(g·a); needs an abelian group for coassociativity. */
ComoduleAlgebra action_to_comodule_algebra(const GroupAction& act);

/* A-module N with g·(am) = (g·a)(g·m). */
struct SemilinearModule {
  GroupAction action;
  Bimodule module;  // left A-module
  std::vector<Matrix> rho;
};

SemilinearModule regular_semilinear(const GroupAction& act);
CheckReport check_semilinear(const SemilinearModule& n);
/* ζ(m) = Σ_g δ_g⊗(g·m), a Hopf module over Z = k^G. */
DKHopfModule to_hopf_module(const SemilinearModule& n);

/* φ(fg) = φ(f)∘(f·φ(g)) with (f·α) = ρ_f α ρ_f⁻¹. */
struct Cocycle {
  SemilinearModule base;
  std::vector<Matrix> values;
};

CheckReport check_cocycle(const Cocycle& phi);
Cocycle trivial_cocycle(const SemilinearModule& n);
/* g·_φ x = φ(g)(g·x). */
SemilinearModule twist(const Cocycle& phi);
DKHopfModule twisted_hopf_module(const Cocycle& phi);
/* θ(g) = ρ'_g ρ_g⁻¹ for two semilinear structures on the same A-module. */
Cocycle untwist(const SemilinearModule& twisted, const SemilinearModule& base);

/* Invertible A-linear endomorphisms of N; PoolNotFinite over ℚ. */
std::vector<Matrix> automorphism_pool(const SemilinearModule& n);
/* α ∈ Aut_A(N) with ψ(g)(g·α) = αφ(g), searched among solutions of the linear system. */
std::optional<Matrix> cohomologous(const Cocycle& phi, const Cocycle& psi);

struct H1Class {
  Cocycle representative;
  std::size_t size = 0;
};

struct H1Result {
  std::size_t cocycles = 0;
  std::vector<H1Class> classes;
};

/* pool: the candidate values of the cocycles; required over ℚ. */
H1Result h1_classes(const SemilinearModule& n, const std::optional<std::vector<Matrix>>& pool = std::nullopt);

/* Brute force over GL_n of the ground field; finite fields only. */
std::optional<Matrix> hopf_module_isomorphism(const DKHopfModule& a, const DKHopfModule& b);
/* Untwist round trip and cohomologous ⇔ isomorphic twists, over all cocycles from the pool. */
CheckReport check_groupoid_equivalence(const SemilinearModule& n,
                                       const std::optional<std::vector<Matrix>>& pool = std::nullopt);

}  // namespace hopfkit

#pragma once

#include "hopfkit/coalg.hpp"

namespace hopfkit {

/* R-coring: an (R,R)-bimodule D with δ: D → D⊗_R D and ε: D → R. */
struct Coring {
  Algebra base;
  Bimodule carrier;
  TensorProduct square;  // D ⊗_R D
  Matrix delta;          // square.dim x dim D
  Matrix eps;            // dim R x dim D
};

Coring make_coring(const Bimodule& carrier, const Matrix& delta, const Matrix& eps);
CheckReport check_coring(const Coring& d);

/* Left comodule: R-module N (right side k) with d: N → D⊗_R N. */
struct CoringComodule {
  Coring coring;
  Bimodule carrier;
  TensorProduct ext;  // D ⊗_R N
  Matrix coaction;    // ext.dim x dim N
};

CoringComodule make_comodule(const Coring& d, const Bimodule& carrier, const Matrix& coaction);
/* The four split-cofork identities plus R-linearity of d. */
CheckReport check_split_cofork(const CoringComodule& m);
CoringComodule cofree_comodule(const Coring& d, const Bimodule& n);

struct CoringMorphism {
  Coring src;
  Coring dst;
  Matrix map;  // dst.carrier.dim x src.carrier.dim
};

CheckReport check_coring_morphism(const CoringMorphism& rho);
CoringComodule transport_comodule(const CoringMorphism& rho, const CoringComodule& m);
bool is_invertible_morphism(const CoringMorphism& rho);
CoringMorphism identity_morphism(const Coring& d);
/* ε as a morphism onto the trivial coring. */
CoringMorphism counit_morphism(const Coring& d);

Coring lift_coalgebra_to_coring(const Coalgebra& c, const Algebra& r);
Coring trivial_coring(const Algebra& r);

/* B ⊆ A with the adjunction H = A⊗_B(-) ⊣ K = restriction. */
struct ExtensionData {
  AlgebraInclusion inc;
  Bimodule a_ab;       // A as (A,B)-bimodule: represents H
  Bimodule a_ba;       // A as (B,A)-bimodule: represents K
  TensorProduct a_a;   // A ⊗_B A
  Matrix eta;          // B → A, the unit at B
  Matrix xi;           // A ⊗_B A → A, the counit at A
};

ExtensionData make_extension(const AlgebraInclusion& inc);
/* Triangle identities on the representing bimodules. */
CheckReport check_extension(const ExtensionData& ext);

/* The conjugate coring A⊗_B D⊗_B A together with γ and its mate γ̄. */
struct ConjugateCoring {
  ExtensionData ext;
  Coring lower;           // D over B
  Coring coring;          // over A
  TensorProduct chain;    // A ⊗_B D ⊗_B A
  TensorProduct hd;       // A ⊗_B D, an (A,B)-bimodule
  TensorProduct dh;       // D ⊗_B A, a (B,A)-bimodule
  BimoduleMap gamma;      // a⊗d ↦ a⊗d⊗1
  BimoduleMap gamma_bar;  // d⊗a ↦ 1⊗d⊗a
};

ConjugateCoring conjugate_coring(const ExtensionData& ext, const Coring& d);
/* The Sweedler coring A⊗_B A built directly. */
Coring sweedler_coring(const ExtensionData& ext);

/*
 * Colax conditions for σ: A⊗_B D → E, an (A,B)-map representing HC → EH:
 * δ_E σ = (Eσ)(σC)(Hδ) and ε_E σ = Hε.
 */
CheckReport check_colax(const ConjugateCoring& cc, const Coring& e, const BimoduleMap& sigma);
/* σ' = (Eξ)(σK). Throws NotColax when σ is not colax. */
CoringMorphism universal_factor(const ConjugateCoring& cc, const Coring& e, const BimoduleMap& sigma);
/* X ↦ X∘γ is injective on (A,A)-maps from the conjugate coring to E. */
bool universal_factor_unique(const ConjugateCoring& cc, const Coring& e);

/* σ: A⊗_B D → E ((A,B)-map) to its mate τ: D⊗_B A → E ((B,A)-map), and back. */
BimoduleMap mate_of(const ExtensionData& ext, const Bimodule& d, const Bimodule& e, const BimoduleMap& sigma);
BimoduleMap mate_inverse(const ExtensionData& ext, const Bimodule& d, const Bimodule& e, const BimoduleMap& tau);

/* A⊗_B M with coaction H(c) followed by HC(η_M). */
CoringComodule comparison_comodule(const ConjugateCoring& cc, const CoringComodule& m);
/* The same comodule computed as the transport of H(c) along γ. */
CoringComodule transport_along_gamma(const ConjugateCoring& cc, const CoringComodule& m);

struct DescentResult {
  CoringComodule comodule;  // over D
  Matrix inclusion;         // into D ⊗_B K(N)
};

/* Equalizer of C(τ_N)δ_{KN} and C(d) inside D ⊗_B K(N). */
DescentResult descent_comodule(const ConjugateCoring& cc, const CoringComodule& n);
/* M → K^τ(A⊗_B M). Throws UnitNotWellDefined if the image leaves the equalizer. */
Matrix comparison_unit(const ConjugateCoring& cc, const CoringComodule& m);
/* A⊗_B K^τ(N) → N. */
Matrix descent_counit(const ConjugateCoring& cc, const CoringComodule& n);

}  // namespace hopfkit

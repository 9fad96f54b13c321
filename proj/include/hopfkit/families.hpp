#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfkit/hopfmod.hpp"

namespace hopfkit {

/*
 * Exhaustive finite families of small test objects. Generator matrices range
 * over coeffs entrywise, first cut down to roots of each generator's minimal
 * polynomial. Comodules are modules over the dual algebra. A dimension where
 * either stage exceeds budget is skipped and recorded instead of truncated.
 */
struct FamilyOptions {
  std::size_t max_dim = 4;
  std::vector<Scalar> coeffs;  // empty: {0, 1}
  double budget = 1 << 20;
  std::string prefix;
  /* keep one module per orbit under conjugation by permutation matrices; pairs
     with comodules still reach every orbit of the pair */
  bool up_to_permutation = true;
};

template <class T>
struct Family {
  std::vector<std::pair<std::string, T>> members;
  std::vector<std::string> skipped;
};

struct Comodule {
  Coalgebra C;
  std::size_t dim = 0;
  Matrix coaction;  // dimC*dim x dim
};

/* Basis elements of A whose words generate A, and each basis element in the word basis. */
struct AlgebraWords {
  std::vector<std::size_t> generators;
  std::vector<std::vector<std::size_t>> words;  // in generator positions
  Matrix coords;                                // e_i = Σ_w coords(w, i) w
};
AlgebraWords algebra_words(const Algebra& a);

Family<Bimodule> enumerate_modules(const Algebra& a, const FamilyOptions& opt);
Family<Comodule> enumerate_comodules(const Coalgebra& c, const FamilyOptions& opt);
Family<BCBimodule> enumerate_bc_modules(const Algebra& b, const Coalgebra& c, const FamilyOptions& opt);
Family<DKHopfModule> enumerate_dk_modules(const ComoduleAlgebra& ca, const ModuleCoalgebra& z,
                                          const FamilyOptions& opt);

/* The image of a (B,C)-family under 𝒜. */
Family<DKHopfModule> induced_family(const ComoduleAlgebra& ca, const Coalgebra& c, const Family<BCBimodule>& m);

}  // namespace hopfkit

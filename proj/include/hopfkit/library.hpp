#pragma once

#include <vector>

#include "hopfkit/hilbert90.hpp"

namespace hopfkit {

/* kG with grouplike basis and S(g) = g⁻¹. */
HopfAlgebra group_hopf(const GroupPresentation& g, const Field& f);
/* Sweedler's H₄ on 1, g, x, gx: g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x. */
Bialgebra sweedler_h4(const Field& f);
/* k{1, e} with e² = e and both basis elements grouplike. */
Bialgebra idempotent_monoid(const Field& f);

/* GF(p)[t]/(m) for a monic m given by its low coefficients m_0..m_{n-1}. */
Algebra prime_power_field(std::uint64_t p, const std::vector<long>& low_coeffs);
/* C_n acting on GF(p^n) through powers of x ↦ x^p. */
GroupAction frobenius_action(const Algebra& ext, std::size_t degree);
GroupAction trivial_action(const GroupPresentation& g, const Algebra& a);

Algebra gf4();  // GF(2)[t]/(t²+t+1)
Algebra gf8();  // GF(2)[t]/(t³+t+1)

}  // namespace hopfkit

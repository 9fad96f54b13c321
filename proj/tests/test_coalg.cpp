#include <doctest.h>

#include "hopfkit/hilbert90.hpp"
#include "hopfkit/library.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

oracle::Arith arith(const Field& f) {
  oracle::Arith a;
  a.p = f.characteristic();
  return a;
}

/* both antipode identities by explicit sums over structure constants */
bool naive_antipode(const Bialgebra& h, const Matrix& s) {
  const std::size_t n = h.dim();
  oracle::Arith F = arith(h.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t out = 0; out < n; ++out) {
      mpq_class l = 0, r = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const mpq_class& c = h.coalg.coeff(i, j, k);
          if (c == 0) continue;
          for (std::size_t t = 0; t < n; ++t) {
            l += c * s(t, j) * h.alg.coeff(t, k, out);
            r += c * s(t, k) * h.alg.coeff(j, t, out);
          }
        }
      mpq_class want = h.coalg.counit()(0, i) * h.alg.unit()(out, 0);
      if (!F.eq(l, want) || !F.eq(r, want)) return false;
    }
  return true;
}

/* h⊗h' ↦ h1⊗h2h' built from the structure constants */
oracle::Mat naive_fusion(const Bialgebra& h) {
  const std::size_t n = h.dim();
  oracle::Mat f(n * n, std::vector<mpq_class>(n * n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t t = 0; t < n; ++t) f[j * n + t][a * n + b] += h.coalg.coeff(a, j, k) * h.alg.coeff(k, b, t);
  return f;
}

}  // namespace

TEST_SUITE("coalg") {
  TEST_CASE("coalgebra axioms") {
    Field q = Field::rationals();
    CHECK(check_coalgebra(grouplike_coalgebra(q, 3)).empty());
    CHECK(check_coalgebra(tensor_coalgebra(grouplike_coalgebra(q, 2), sweedler_h4(q).coalg)).empty());
    CHECK(check_bialgebra(sweedler_h4(q)).empty());
    CHECK(check_bialgebra(idempotent_monoid(q)).empty());
    CHECK(check_hopf_algebra(dual_group_hopf(cyclic_group(3), Field::prime(2))).empty());
  }

  TEST_CASE("antipode of kC2 is the identity") {
    HopfAlgebra kc2 = group_hopf(cyclic_group(2), Field::rationals());
    auto s = antipode(kc2.bialg);
    REQUIRE(s);
    CHECK(s->antipode.is_identity());
    CHECK(naive_antipode(kc2.bialg, s->antipode));
  }

  TEST_CASE("antipode of Sweedler's algebra") {
    Field q = Field::rationals();
    Bialgebra h = sweedler_h4(q);
    auto s = antipode(h);
    REQUIRE(s);
    CHECK(s->antipode == Matrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
    CHECK(naive_antipode(h, s->antipode));
    /* S has order 4 */
    Matrix s2 = s->antipode * s->antipode;
    CHECK_FALSE(s2.is_identity());
    CHECK((s2 * s2).is_identity());
  }

  TEST_CASE("idempotent monoid has no antipode") {
    Bialgebra h = idempotent_monoid(Field::rationals());
    CHECK_FALSE(antipode(h));
    CHECK_FALSE(is_invertible(fusion_operator(h, 1)));
  }

  TEST_CASE("fusion operator matches the explicit construction") {
    for (const Bialgebra& h : {sweedler_h4(Field::rationals()), idempotent_monoid(Field::rationals()),
                               dual_group_hopf(cyclic_group(3), Field::prime(2)).bialg}) {
      Matrix f = fusion_operator(h, 1);
      oracle::Mat naive = naive_fusion(h);
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) CHECK(arith(h.field()).eq(f(r, c), naive[r][c]));
      CHECK(antipode(h).has_value() == arith(h.field()).invertible(naive));
    }
  }

  TEST_CASE("coinvariants") {
    GroupAction frob = frobenius_action(gf4(), 2);
    ComoduleAlgebra ca = action_to_comodule_algebra(frob);
    CHECK(check_comodule_algebra(ca).empty());
    CHECK(coinvariants(ca).cols() == 1);
    CHECK(same_column_space(coinvariants(ca), fixed_subalgebra(frob)));
    ComoduleAlgebra reg = regular_comodule_algebra(sweedler_h4(Field::rationals()));
    CHECK(check_comodule_algebra(reg).empty());
    CHECK(reg.base.sub.dim() == 1);
  }

  TEST_CASE("free module coalgebra") {
    Bialgebra h = sweedler_h4(Field::rationals());
    ModuleCoalgebra z = free_module_coalgebra(h, grouplike_coalgebra(Field::rationals(), 2));
    CHECK(z.Z.dim() == 8);
    CHECK(check_module_coalgebra(z).empty());
  }
}

#include <doctest.h>

#include "hopfkit/document.hpp"
#include "hopfkit/library.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

oracle::Arith arith(const Field& f) {
  oracle::Arith a;
  a.p = f.characteristic();
  return a;
}

/* dim P⊗_B Q as dim P·dim Q minus the rank of all balancing relations pb⊗q - p⊗bq */
std::size_t naive_tensor_dim(const Bimodule& p, const Bimodule& q) {
  const std::size_t np = p.dim(), nq = q.dim(), nb = p.right_alg().dim();
  oracle::Mat rel;
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = 0; j < nq; ++j) {
        std::vector<mpq_class> v(np * nq);
        for (std::size_t i2 = 0; i2 < np; ++i2) v[i2 * nq + j] += p.right_op(b)(i2, i);
        for (std::size_t j2 = 0; j2 < nq; ++j2) v[i * nq + j2] -= q.left_op(b)(j2, j);
        rel.push_back(v);
      }
  return np * nq - arith(p.field()).rank(rel);
}

/* dim Hom of bimodules as the nullity of the commutation equations */
std::size_t naive_hom_dim(const Bimodule& p, const Bimodule& q) {
  const std::size_t np = p.dim(), nq = q.dim(), n = np * nq;
  oracle::Mat eq;
  auto add = [&](const Matrix& lp, const Matrix& lq) {
    /* f lp - lq f = 0, with f(r, c) at index r*np + c */
    for (std::size_t r = 0; r < nq; ++r)
      for (std::size_t c = 0; c < np; ++c) {
        std::vector<mpq_class> v(n);
        for (std::size_t k = 0; k < np; ++k) v[r * np + k] += lp(k, c);
        for (std::size_t k = 0; k < nq; ++k) v[k * np + c] -= lq(r, k);
        eq.push_back(v);
      }
  };
  for (std::size_t a = 0; a < p.left_alg().dim(); ++a) add(p.left_op(a), q.left_op(a));
  for (std::size_t b = 0; b < p.right_alg().dim(); ++b) add(p.right_op(b), q.right_op(b));
  return n - arith(p.field()).rank(eq);
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("library algebras satisfy the axioms") {
    CHECK(check_algebra(gf4()).empty());
    CHECK(check_algebra(gf8()).empty());
    CHECK(check_algebra(sweedler_h4(Field::rationals()).alg).empty());
    CHECK(check_algebra(tensor_algebra(gf4(), gf4())).empty());
    CHECK(tensor_algebra(gf4(), gf8()).dim() == 6);
  }

  TEST_CASE("a broken product is located") {
    Algebra a = gf4();
    Matrix m = a.mult();
    m.set(0, 1, a.field().from_int(1));  // 1·e1 picks up an e0 term
    CheckReport rep = check_algebra(Algebra(a.field(), m, a.unit()));
    REQUIRE_FALSE(rep.empty());
    CHECK_FALSE(rep.front().witness.empty());
  }

  TEST_CASE("subalgebras and inclusions") {
    Algebra a = gf4();
    AlgebraInclusion u = unit_inclusion(a);
    CHECK(check_inclusion(u).empty());
    CHECK(u.sub.dim() == 1);
    CHECK(check_inclusion(identity_inclusion(a)).empty());
  }

  TEST_CASE("balanced tensor dimension matches the relation count") {
    for (const char* name : {"f4-galois", "kc2", "sweedler-h4", "idempotent-monoid"}) {
      Document doc = load_builtin(name);
      for (auto& o : doc.objects) {
        auto* ca = std::get_if<ComoduleAlgebraObject>(&o.value);
        if (!ca) continue;
        ExtensionData ext = make_extension(ca->ca.base);
        CAPTURE(name);
        CHECK(ext.a_a.dim() == naive_tensor_dim(ext.a_ab, ext.a_ba));
        Bimodule reg = regular_bimodule(ca->ca.A);
        CHECK(tensor_over(reg, reg).dim() == ca->ca.A.dim());
        TensorProduct three = tensor_chain({ext.a_ab, ext.a_ba, ext.a_ab});
        CHECK(check_bimodule(three.result).empty());
      }
    }
  }

  TEST_CASE("hom basis dimension") {
    Algebra h = sweedler_h4(Field::rationals()).alg;
    Bimodule reg = regular_bimodule(h);
    auto basis = bimodule_hom_basis(reg, reg);
    CHECK(basis.size() == naive_hom_dim(reg, reg));
    for (auto& f : basis) CHECK(check_bimodule_map(f).empty());
    Bimodule left = forget_right(reg);
    CHECK(bimodule_hom_basis(left, left).size() == naive_hom_dim(left, left));
  }

  TEST_CASE("unbalanced maps are rejected") {
    Algebra a = gf4();
    Bimodule reg = regular_bimodule(a);
    TensorProduct t = tensor_over(reg, reg);
    /* projection onto e0⊗e1 only: not balanced over F4 */
    Matrix f(a.field(), 1, t.flat_dim());
    f.set(0, 1, a.field().from_int(1));
    CHECK_THROWS_AS(induce_on_quotient(t, f), Error);
  }
}

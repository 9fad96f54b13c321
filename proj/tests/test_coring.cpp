#include <doctest.h>

#include "hopfkit/document.hpp"
#include "hopfkit/library.hpp"

using namespace hopfkit;

namespace {

ComoduleAlgebra builtin_ca(const std::string& doc_name, const std::string& name) {
  Document doc = load_builtin(doc_name);
  return std::get<ComoduleAlgebraObject>(doc.find(name).value).ca;
}

}  // namespace

TEST_SUITE("coring") {
  TEST_CASE("trivial and lifted corings") {
    Algebra a = gf4();
    CHECK(check_coring(trivial_coring(a)).empty());
    Coring lifted = lift_coalgebra_to_coring(grouplike_coalgebra(a.field(), 2), a);
    CHECK(lifted.carrier.dim() == 4);
    CHECK(check_coring(lifted).empty());
    CHECK(check_coring_morphism(counit_morphism(lifted)).empty());
    CHECK(is_invertible_morphism(identity_morphism(lifted)));
  }

  TEST_CASE("broken counit is caught") {
    Coring d = trivial_coring(gf4());
    Matrix eps = d.eps;
    eps.set(0, 0, d.base.field().from_int(0));
    CHECK_FALSE(check_coring(make_coring(d.carrier, d.delta, eps)).empty());
  }

  TEST_CASE("conjugate of the trivial coring is the Sweedler coring") {
    for (auto [doc, name] : {std::pair{"f4-galois", "gal"}, {"f8-galois", "gal"}, {"kc2", "reg"}}) {
      ComoduleAlgebra ca = builtin_ca(doc, name);
      ExtensionData ext = make_extension(ca.base);
      CHECK(check_extension(ext).empty());
      ConjugateCoring cc = conjugate_coring(ext, trivial_coring(ca.base.sub));
      Coring sw = sweedler_coring(ext);
      CHECK(check_coring(sw).empty());
      CHECK(check_coring(cc.coring).empty());
      CHECK(sw.carrier.dim() == ca.A.dim() * ca.A.dim() / ca.base.sub.dim());
      CHECK(same_bimodule(cc.coring.carrier, sw.carrier));
      CHECK(to_string(cc.coring.delta) == to_string(sw.delta));
      CHECK(to_string(cc.coring.eps) == to_string(sw.eps));
    }
  }

  TEST_CASE("mates round trip") {
    ComoduleAlgebra ca = builtin_ca("f4-galois", "gal");
    ExtensionData ext = make_extension(ca.base);
    Coring d0 = trivial_coring(ca.base.sub);
    ConjugateCoring cc = conjugate_coring(ext, d0);
    Coring e = hopf_module_coring(ca, free_module_coalgebra(ca.H, trivial_coalgebra(ca.A.field())));
    auto sigmas = bimodule_hom_basis(cc.hd.result, restrict_right(e.carrier, ca.base));
    REQUIRE_FALSE(sigmas.empty());
    for (auto& s : sigmas) {
      BimoduleMap tau = mate_of(ext, d0.carrier, e.carrier, s);
      CHECK(check_bimodule_map(tau).empty());
      CHECK(mate_inverse(ext, d0.carrier, e.carrier, tau).matrix == s.matrix);
    }
  }

  TEST_CASE("universal factor of chi is the Hopf operator") {
    ComoduleAlgebra ca = builtin_ca("f4-galois", "gal");
    CHECK(check_hopf_colax(ca, trivial_coalgebra(ca.A.field())).empty());
    CHECK(check_hopf_colax(ca, grouplike_coalgebra(ca.A.field(), 2)).empty());
    ExtensionData ext = make_extension(ca.base);
    ConjugateCoring cc = conjugate_coring(ext, trivial_coring(ca.base.sub));
    Coring e = hopf_module_coring(ca, free_module_coalgebra(ca.H, trivial_coalgebra(ca.A.field())));
    CHECK(universal_factor_unique(cc, e));
  }

  TEST_CASE("Hopf modules are comodules over the Hopf module coring") {
    ComoduleAlgebra ca = builtin_ca("kc2", "reg");
    Coring e = hopf_module_coring(ca, free_module_coalgebra(ca.H, trivial_coalgebra(ca.A.field())));
    CHECK(check_coring(e).empty());
    CHECK(check_split_cofork(dk_as_coring_comodule(e, regular_hopf_module(ca))).empty());
    CHECK(check_split_cofork(cofree_comodule(e, forget_right(regular_bimodule(ca.A)))).empty());
  }
}

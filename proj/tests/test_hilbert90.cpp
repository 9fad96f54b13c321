#include <doctest.h>

#include "hopfkit/document.hpp"
#include "hopfkit/library.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

GroupActionObject action_of(const std::string& builtin, const std::string& name) {
  Document doc = load_builtin(builtin);
  return std::get<GroupActionObject>(doc.find(name).value);
}

}  // namespace

TEST_SUITE("hilbert90") {
  TEST_CASE("H1 counts against brute force") {
    struct Case {
      const char* doc;
      const char* action;
      std::size_t cocycles, classes;
    };
    for (Case c : {Case{"f4-galois", "frob", 3, 1}, Case{"f8-galois", "frob", 7, 1}, Case{"gf3-trivial", "triv", 2, 2}}) {
      CAPTURE(c.doc);
      oracle::BruteH1 brute = oracle::brute_h1(nlohmann::json::parse(builtin_text(c.doc)), c.action);
      CHECK(brute.cocycles == c.cocycles);
      CHECK(brute.classes == c.classes);
      H1Result h = h1_classes(regular_semilinear(action_of(c.doc, c.action).action));
      CHECK(h.cocycles == brute.cocycles);
      CHECK(h.classes.size() == brute.classes);
      std::size_t total = 0;
      for (auto& k : h.classes) total += k.size;
      CHECK(total == h.cocycles);
    }
  }

  TEST_CASE("groupoid equivalence on F4") {
    SemilinearModule n = regular_semilinear(action_of("f4-galois", "frob").action);
    CHECK(check_semilinear(n).empty());
    CHECK(check_groupoid_equivalence(n).empty());
  }

  TEST_CASE("twist and untwist") {
    Document doc = load_builtin("f4-galois");
    const Cocycle& omega = std::get<CocycleObject>(doc.find("omega").value).cocycle;
    CHECK(check_cocycle(omega).empty());
    SemilinearModule tw = twist(omega);
    CHECK(check_semilinear(tw).empty());
    CHECK(check_dk_hopf_module(twisted_hopf_module(omega)).empty());
    Cocycle back = untwist(tw, omega.base);
    for (std::size_t g = 0; g < omega.values.size(); ++g) CHECK(back.values[g] == omega.values[g]);
    auto alpha = cohomologous(trivial_cocycle(omega.base), omega);
    REQUIRE(alpha);
    CHECK(hopf_module_isomorphism(to_hopf_module(omega.base), twisted_hopf_module(omega)));
  }

  TEST_CASE("sign cocycle is not a coboundary") {
    Document doc = load_builtin("gf3-trivial");
    const Cocycle& sign = std::get<CocycleObject>(doc.find("sign").value).cocycle;
    CHECK(check_cocycle(sign).empty());
    CHECK_FALSE(cohomologous(trivial_cocycle(sign.base), sign));
    CHECK_FALSE(hopf_module_isomorphism(to_hopf_module(sign.base), twisted_hopf_module(sign)));
  }

  TEST_CASE("pool required over the rationals") {
    GroupAction act = trivial_action(cyclic_group(2), ground_algebra(Field::rationals()));
    CHECK_THROWS_AS(h1_classes(regular_semilinear(act)), Error);
  }

  TEST_CASE("group axioms") {
    CHECK(check_group(cyclic_group(5)).empty());
    GroupPresentation g = cyclic_group(3);
    g.table[1][1] = 1;
    CHECK_FALSE(check_group(g).empty());
  }
}

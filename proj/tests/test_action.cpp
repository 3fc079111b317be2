#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "fixtures.hpp"
#include "sgt/action.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/star.hpp"

using fixtures::chain2;
using fixtures::chain3;
using fixtures::left_zero2;
using fixtures::right_group_2_2;
using fixtures::right_zero2;
using fixtures::z2;
using fixtures::z4;
using sgt::ActionMorphism;
using sgt::EtaleAction;
using sgt::SemigroupHom;
using sgt::StarStructure;
using sgt::Witness;

namespace {

// Conjugation of the two-element chain on its idempotents: s.e = ses = s^e.
EtaleAction chain2_conjugation() {
  return sgt::load_action(chain2(), 2, {0, 1}, {0, 0, 0, 1});
}

// Z_2 translating itself; every point is anchored at the identity.
EtaleAction z2_translation() {
  return sgt::load_action(z2(), 2, {0, 0}, {0, 1, 1, 0});
}

// The restriction of chain2 conjugation to the bottom point only.
EtaleAction chain2_bottom_orbit() {
  return sgt::load_action(chain2(), 1, {0}, {0, 0});
}

}  // namespace

TEST_CASE("valid actions load and apply row-major") {
  const EtaleAction conj = chain2_conjugation();
  CHECK(conj.apply(0, 0) == 0);
  CHECK(conj.apply(0, 1) == 0);
  CHECK(conj.apply(1, 0) == 0);
  CHECK(conj.apply(1, 1) == 1);
  CHECK(!sgt::action_witness(conj).has_value());

  const EtaleAction swap = z2_translation();
  CHECK(swap.apply(1, 0) == 1);
  CHECK(swap.apply(1, 1) == 0);
  CHECK(!sgt::action_witness(swap).has_value());
}

TEST_CASE("action shape errors are rejected as invalid input") {
  SECTION("empty point set") {
    CHECK_THROWS_AS(sgt::load_action(chain2(), 0, {}, {}), sgt::invalid_input);
  }
  SECTION("anchor length mismatch") {
    CHECK_THROWS_AS(sgt::load_action(chain2(), 2, {0}, {0, 0, 0, 1}),
                    sgt::invalid_input);
  }
  SECTION("table size mismatch") {
    CHECK_THROWS_AS(sgt::load_action(chain2(), 2, {0, 1}, {0, 0, 0}),
                    sgt::invalid_input);
  }
  SECTION("anchor value out of range") {
    CHECK_THROWS_AS(sgt::load_action(chain2(), 2, {0, 2}, {0, 0, 0, 1}),
                    sgt::invalid_input);
  }
  SECTION("table entry out of range") {
    CHECK_THROWS_AS(sgt::load_action(chain2(), 2, {0, 1}, {0, 0, 0, 2}),
                    sgt::invalid_input);
  }
  SECTION("base must be inverse") {
    try {
      sgt::load_action(right_zero2(), 2, {0, 1}, {0, 1, 0, 1});
      FAIL("expected invalid_input");
    } catch (const sgt::invalid_input&) {
      SUCCEED();
    }
  }
}

TEST_CASE("each action invariant reports its first violation") {
  SECTION("anchor not idempotent") {
    const auto a = sgt::assemble_action_unchecked(z2(), 1, {1}, {0, 0});
    const auto w = sgt::action_witness(a);
    REQUIRE(w.has_value());
    CHECK(w->kind == "PNotIdempotent");
    CHECK(w->elements == std::vector<int>{0});
  }
  SECTION("action law") {
    // Row for the bottom element is the identity map, row for the top is the
    // swap: composing top after top is the identity but bottom.top = bottom
    // already disagrees with top applied twice at the first probe (0,1,0).
    const auto a =
        sgt::assemble_action_unchecked(chain2(), 2, {0, 0}, {0, 1, 1, 0});
    const auto w = sgt::action_witness(a);
    REQUIRE(w.has_value());
    CHECK(w->kind == "ActionLawViolated");
    CHECK(w->elements == std::vector<int>{0, 1, 0});
  }
  SECTION("anchor must fix its point") {
    const auto a =
        sgt::assemble_action_unchecked(chain2(), 2, {1, 1}, {0, 0, 0, 0});
    const auto w = sgt::action_witness(a);
    REQUIRE(w.has_value());
    CHECK(w->kind == "E1Violated");
    CHECK(w->elements == std::vector<int>{1});
  }
  SECTION("anchors must transform by conjugation") {
    const auto a = sgt::assemble_action_unchecked(chain2(), 1, {1}, {0, 0});
    const auto w = sgt::action_witness(a);
    REQUIRE(w.has_value());
    CHECK(w->kind == "E2Violated");
    CHECK(w->elements == std::vector<int>{0, 0});
  }
  SECTION("load_action refuses a broken table") {
    CHECK_THROWS_AS(sgt::load_action(chain2(), 2, {0, 0}, {0, 1, 1, 0}),
                    sgt::invalid_input);
  }
}

TEST_CASE("the induced order on points") {
  SECTION("conjugation of the chain recovers the chain order") {
    const auto r = sgt::action_order(chain2_conjugation());
    CHECK(!r.violation.has_value());
    CHECK(r.order.contains(0, 0));
    CHECK(r.order.contains(0, 1));
    CHECK(r.order.contains(1, 1));
    CHECK(!r.order.contains(1, 0));
  }
  SECTION("group translation induces equality") {
    const auto r = sgt::action_order(z2_translation());
    CHECK(!r.violation.has_value());
    CHECK(r.order.pairs() ==
          std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  }
  SECTION("a broken action can fail reflexivity, and the check says so") {
    const auto a =
        sgt::assemble_action_unchecked(chain2(), 2, {1, 1}, {0, 0, 0, 0});
    const auto r = sgt::action_order(a);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->kind == "NotReflexive");
    CHECK(r.violation->elements == std::vector<int>{1});
  }
}

TEST_CASE("global support means the anchors hit every idempotent") {
  CHECK(sgt::has_global_support(chain2_conjugation()));
  CHECK(sgt::has_global_support(z2_translation()));
  CHECK(!sgt::has_global_support(chain2_bottom_orbit()));
}

TEST_CASE("action morphisms") {
  const EtaleAction conj = chain2_conjugation();
  const EtaleAction swap = z2_translation();

  SECTION("identity morphism passes") {
    const auto m = sgt::identity_action_morphism(conj);
    CHECK(!sgt::check_action_morphism(conj, conj, m).has_value());
  }
  SECTION("point swap is equivariant for the translation action") {
    const ActionMorphism m{sgt::identity_hom(z2()), {1, 0}};
    CHECK(!sgt::check_action_morphism(swap, swap, m).has_value());
  }
  SECTION("two-base morphism onto the top anchor") {
    // Z_2 can only map to the chain via a constant homomorphism; sending
    // every point to the top point intertwines the anchors.
    const SemigroupHom alpha{z2(), chain2(), {1, 1}};
    const ActionMorphism good{alpha, {1, 1}};
    CHECK(!sgt::check_action_morphism(swap, conj, good).has_value());

    const ActionMorphism bad{alpha, {0, 0}};
    const auto w = sgt::check_action_morphism(swap, conj, bad);
    REQUIRE(w.has_value());
    CHECK(w->kind == "MorphismAnchorMismatch");
    CHECK(w->elements == std::vector<int>{0});
  }
  SECTION("collapsing the translation action is not equivariant") {
    const ActionMorphism m{sgt::identity_hom(z2()), {0, 0}};
    const auto w = sgt::check_action_morphism(swap, swap, m);
    REQUIRE(w.has_value());
    CHECK(w->kind == "MorphismNotEquivariant");
    CHECK(w->elements == std::vector<int>{1, 0});
  }
  SECTION("structural rejects") {
    CHECK_THROWS_AS(
        sgt::check_action_morphism(swap, swap,
                                   ActionMorphism{sgt::identity_hom(z2()), {0}}),
        sgt::invalid_input);
    CHECK_THROWS_AS(
        sgt::check_action_morphism(
            swap, swap, ActionMorphism{sgt::identity_hom(z2()), {0, 2}}),
        sgt::invalid_input);
    CHECK_THROWS_AS(
        sgt::check_action_morphism(
            swap, swap, ActionMorphism{sgt::identity_hom(chain2()), {0, 1}}),
        sgt::invalid_input);
    CHECK_THROWS_AS(
        sgt::check_action_morphism(
            swap, swap, ActionMorphism{SemigroupHom{z2(), z2(), {1, 1}}, {0, 1}}),
        sgt::invalid_input);
  }
}

TEST_CASE("bijective-restriction reports") {
  SECTION("quotient of the right group by its minimum inverse congruence") {
    const auto gq = sgt::gamma_quotient(right_group_2_2());
    const StarStructure star{right_group_2_2(), {0, 1, 2, 3}};
    const auto rep = sgt::check_etale_hom(gq.projection, star);
    CHECK(rep.idems == std::vector<int>{0, 1});
    REQUIRE(rep.restrictions.size() == 2);
    CHECK(rep.restrictions[0].holds);
    CHECK(rep.restrictions[1].holds);
    CHECK(rep.etale);
    CHECK(rep.te_injective);
    CHECK(rep.kernel.class_of == std::vector<int>{0, 0, 2, 2});
    CHECK(rep.image == std::vector<int>{0, 1});
    CHECK(rep.image_left_ideal.holds);
  }
  SECTION("identity on the chain") {
    const StarStructure star{chain2(), {0, 1}};
    const auto rep = sgt::check_etale_hom(sgt::identity_hom(chain2()), star);
    CHECK(rep.etale);
  }
  SECTION("collapsing the chain to its bottom is not bijective at the top") {
    const SemigroupHom collapse{chain2(), chain2(), {0, 0}};
    const StarStructure star{chain2(), {0, 1}};
    const auto rep = sgt::check_etale_hom(collapse, star);
    CHECK(!rep.etale);
    CHECK(rep.restrictions[0].holds);
    REQUIRE(rep.restrictions[1].witness.has_value());
    CHECK(rep.restrictions[1].witness->kind == "RestrictionNotInjective");
    CHECK(rep.restrictions[1].witness->elements == std::vector<int>{1, 0, 1});
    CHECK(!rep.te_injective);
    CHECK(rep.image == std::vector<int>{0});
    CHECK(rep.image_left_ideal.holds);
  }
  SECTION("the chain includes into the longer chain bijectively") {
    const SemigroupHom incl{chain2(), chain3(), {0, 1}};
    const StarStructure star{chain2(), {0, 1}};
    const auto rep = sgt::check_etale_hom(incl, star);
    CHECK(rep.etale);
    CHECK(rep.image == std::vector<int>{0, 1});
    CHECK(rep.image_left_ideal.holds);
  }
  SECTION("reduction mod two collapses the four-element cycle") {
    const SemigroupHom mod2{z4(), z2(), {0, 1, 0, 1}};
    const StarStructure star{z4(), {0, 3, 2, 1}};
    const auto rep = sgt::check_etale_hom(mod2, star);
    CHECK(!rep.etale);
    REQUIRE(rep.restrictions.size() == 1);
    REQUIRE(rep.restrictions[0].witness.has_value());
    CHECK(rep.restrictions[0].witness->elements == std::vector<int>{0, 0, 2});
  }
  SECTION("preconditions and structural errors") {
    const StarStructure chain_star{chain2(), {0, 1}};
    // Target must be inverse.
    CHECK_THROWS_AS(sgt::check_etale_hom(
                        SemigroupHom{chain2(), right_zero2(), {0, 0}}, chain_star),
                    sgt::precondition_error);
    // Source must be right generalized inverse.
    CHECK_THROWS_AS(sgt::check_etale_hom(
                        SemigroupHom{left_zero2(), chain2(), {0, 0}},
                        StarStructure{left_zero2(), {0, 1}}),
                    sgt::precondition_error);
    // Star must satisfy the axioms.
    CHECK_THROWS_AS(sgt::check_etale_hom(sgt::identity_hom(chain2()),
                                         StarStructure{chain2(), {1, 0}}),
                    sgt::precondition_error);
    // Star must live over the source.
    CHECK_THROWS_AS(sgt::check_etale_hom(sgt::identity_hom(chain2()),
                                         StarStructure{z2(), {0, 1}}),
                    sgt::invalid_input);
    // Map must be a homomorphism.
    CHECK_THROWS_AS(sgt::check_etale_hom(
                        SemigroupHom{chain2(), chain2(), {1, 0}}, chain_star),
                    sgt::invalid_input);
  }
}

TEST_CASE("the three-way characterization holds on every probe") {
  SECTION("all conditions true on the right group quotient") {
    const auto gq = sgt::gamma_quotient(right_group_2_2());
    const StarStructure star{right_group_2_2(), {0, 1, 2, 3}};
    const auto c = sgt::etale_characterization(gq.projection, star);
    CHECK(c.etale);
    CHECK(c.te_injective);
    CHECK(c.kernel_is_gamma);
    CHECK(c.image_left_ideal);
  }
  SECTION("collapse: left-ideal image alone does not force the rest") {
    const SemigroupHom collapse{chain2(), chain2(), {0, 0}};
    const StarStructure star{chain2(), {0, 1}};
    const auto c = sgt::etale_characterization(collapse, star);
    CHECK(!c.etale);
    CHECK(!c.te_injective);
    CHECK(!c.kernel_is_gamma);
    CHECK(c.image_left_ideal);
  }
  SECTION("inclusion: all four conditions hold") {
    const SemigroupHom incl{chain2(), chain3(), {0, 1}};
    const StarStructure star{chain2(), {0, 1}};
    const auto c = sgt::etale_characterization(incl, star);
    CHECK(c.etale);
    CHECK(c.kernel_is_gamma);
    CHECK(c.image_left_ideal);
  }
  SECTION("mod two: kernel too coarse, image still a left ideal") {
    const SemigroupHom mod2{z4(), z2(), {0, 1, 0, 1}};
    const StarStructure star{z4(), {0, 3, 2, 1}};
    const auto c = sgt::etale_characterization(mod2, star);
    CHECK(!c.etale);
    CHECK(!c.te_injective);
    CHECK(!c.kernel_is_gamma);
    CHECK(c.image_left_ideal);
  }
}

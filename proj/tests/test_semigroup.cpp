#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "sgt/semigroup.hpp"

using namespace sgt;
using fixtures::chain2;
using fixtures::right_group_2_2;
using fixtures::right_zero2;
using fixtures::z2;

TEST_CASE("load_semigroup validates tables") {
  SECTION("trivial semigroup") {
    auto s = load_semigroup(1, {0});
    REQUIRE(s.n == 1);
    REQUIRE(s.product(0, 0) == 0);
  }
  SECTION("right zero semigroup is associative") { REQUIRE_NOTHROW(right_zero2()); }
  SECTION("out-of-range entry") {
    try {
      load_semigroup(2, {0, 1, 1, 2});
      FAIL("expected invalid_input");
    } catch (const invalid_input& e) {
      REQUIRE(e.witness().kind == "OutOfRangeEntry");
      REQUIRE(e.witness().elements == std::vector<int>{1, 1, 2});
    }
  }
  SECTION("non-associative table reports smallest witness") {
    // xy = x except 1*1 = 0: (0*1)*1 = 0 but 0*(1*1) = 0; try a genuinely
    // broken table: left zero except 0*0 = 1.
    try {
      load_semigroup(2, {1, 0, 1, 1});
      FAIL("expected invalid_input");
    } catch (const invalid_input& e) {
      REQUIRE(e.witness().kind == "NotAssociative");
      REQUIRE(e.witness().elements.size() == 3);
    }
  }
  SECTION("cap is enforced and overridable") {
    std::vector<int> table(65 * 65, 0);
    REQUIRE_THROWS_AS(load_semigroup(65, table), invalid_input);
    REQUIRE_NOTHROW(load_semigroup(65, table, 70));
  }
}

TEST_CASE("idempotents by direct definition") {
  REQUIRE(idempotents(right_zero2()) == std::vector<int>{0, 1});
  REQUIRE(idempotents(chain2()) == std::vector<int>{0, 1});
  REQUIRE(idempotents(z2()) == std::vector<int>{0});
}

TEST_CASE("inverse sets") {
  SECTION("semilattice elements are self-inverse singletons") {
    auto s = chain2();
    REQUIRE(inverses_of(s, 0) == std::vector<int>{0});
    REQUIRE(inverses_of(s, 1) == std::vector<int>{1});
  }
  SECTION("right group V((1,0)) = {(1,0),(1,1)}") {
    auto s = right_group_2_2();
    REQUIRE(inverses_of(s, 2) == std::vector<int>{2, 3});
  }
  SECTION("non-regular element has empty inverse set") {
    // Monogenic: x*y = 1 for all x,y; 0 is not regular (0b0 = 1 always).
    auto s = load_semigroup({{1, 1}, {1, 1}});
    REQUIRE(inverses_of(s, 0).empty());
    REQUIRE(inverses_of(s, 1) == std::vector<int>{1});
  }
}

TEST_CASE("classification flags") {
  SECTION("right zero semigroup") {
    auto rep = classify(right_zero2());
    REQUIRE(rep.is_band());
    REQUIRE(rep.is_right_normal_band());
    REQUIRE(rep.is_orthodox());
    REQUIRE(rep.is_right_generalized_inverse());
    REQUIRE_FALSE(rep.is_inverse());
    REQUIRE(rep.inverse.witness.has_value());
    REQUIRE(rep.inverse.witness->kind == "IdempotentsDontCommute");
    REQUIRE(rep.inverse.witness->elements == std::vector<int>{0, 1});
  }
  SECTION("2-chain semilattice is inverse") {
    auto rep = classify(chain2());
    REQUIRE(rep.is_inverse());
    REQUIRE(rep.is_locally_inverse());
  }
  SECTION("right group is right generalized inverse but not inverse") {
    auto rep = classify(right_group_2_2());
    REQUIRE(rep.is_regular());
    REQUIRE(rep.is_right_generalized_inverse());
    REQUIRE(rep.is_locally_inverse());
    REQUIRE_FALSE(rep.is_inverse());
    REQUIRE_FALSE(rep.is_band());
  }
  SECTION("flag implications") {
    for (auto s : {right_zero2(), chain2(), z2(), right_group_2_2()}) {
      auto rep = classify(s);
      if (rep.is_inverse()) REQUIRE(rep.is_orthodox());
      if (rep.is_orthodox()) REQUIRE(rep.is_regular());
      REQUIRE(rep.is_right_generalized_inverse() ==
              (rep.is_regular() && rep.is_right_normal_band()));
    }
  }
}

TEST_CASE("Green's relations") {
  SECTION("right normal band has discrete L") {
    auto g = green_relations(right_zero2());
    REQUIRE(g.l.is_discrete());
    REQUIRE(g.r.num_classes() == 1);
  }
  SECTION("group table: all five universal") {
    auto g = green_relations(z2());
    for (const auto* p : {&g.l, &g.r, &g.h, &g.d, &g.j}) REQUIRE(p->num_classes() == 1);
  }
  SECTION("right group: L classes {0,2},{1,3}") {
    auto g = green_relations(right_group_2_2());
    REQUIRE(g.l.same_class(0, 2));
    REQUIRE(g.l.same_class(1, 3));
    REQUIRE_FALSE(g.l.same_class(0, 1));
  }
}

TEST_CASE("natural partial order") {
  SECTION("2-chain: meet order") {
    auto r = natural_partial_order(chain2());
    REQUIRE(r.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
  }
  SECTION("right zero: equality only") {
    auto r = natural_partial_order(right_zero2());
    REQUIRE(r.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  }
  SECTION("right group: equality only") {
    auto r = natural_partial_order(right_group_2_2());
    for (auto [a, b] : r.pairs()) REQUIRE(a == b);
    REQUIRE(r.pairs().size() == 4);
  }
  SECTION("band order coincides with e = ef = fe") {
    for (auto s : {right_zero2(), chain2()}) {
      auto r = natural_partial_order(s);
      for (int e = 0; e < s.n; ++e)
        for (int f = 0; f < s.n; ++f) {
          bool band_le = s.product(e, f) == e && s.product(f, e) == e;
          REQUIRE(r.contains(e, f) == band_le);
        }
    }
  }
  SECTION("non-regular input rejected") {
    auto s = load_semigroup({{1, 1}, {1, 1}});
    REQUIRE_THROWS_AS(natural_partial_order(s), precondition_error);
  }
}

TEST_CASE("homomorphism checking") {
  SECTION("identity always passes") {
    for (auto s : {right_zero2(), chain2(), z2(), right_group_2_2()})
      REQUIRE_FALSE(check_hom(identity_hom(s)).has_value());
  }
  SECTION("projection of the right group onto Z2") {
    SemigroupHom h{right_group_2_2(), z2(), {0, 0, 1, 1}};
    REQUIRE_FALSE(check_hom(h).has_value());
  }
  SECTION("identity-on-points map R2 -> 2-chain fails") {
    SemigroupHom h{right_zero2(), chain2(), {0, 1}};
    auto w = check_hom(h);
    REQUIRE(w.has_value());
    REQUIRE(w->kind == "NotMultiplicative");
    REQUIRE(w->elements == std::vector<int>{0, 1});
  }
  SECTION("malformed maps are invalid input") {
    SemigroupHom bad_len{right_zero2(), chain2(), {0}};
    REQUIRE_THROWS_AS(check_hom(bad_len), invalid_input);
    SemigroupHom bad_range{right_zero2(), chain2(), {0, 5}};
    REQUIRE_THROWS_AS(check_hom(bad_range), invalid_input);
  }
}

TEST_CASE("local submonoids") {
  SECTION("identity of a monoid gives the whole monoid") {
    auto sub = local_submonoid(z2(), 0);
    REQUIRE(sub.semigroup.n == 2);
    REQUIRE(sub.carrier == std::vector<int>{0, 1});
  }
  SECTION("right zero with e=0 gives the trivial semigroup") {
    auto sub = local_submonoid(right_zero2(), 0);
    REQUIRE(sub.semigroup.n == 1);
    REQUIRE(sub.carrier == std::vector<int>{0});
  }
  SECTION("non-idempotent rejected") {
    REQUIRE_THROWS_AS(local_submonoid(z2(), 1), precondition_error);
  }
}

TEST_CASE("partition canonical labels are class minima") {
  auto p = make_partition({2, 2, 0, 0, 2});
  REQUIRE(p.class_of == std::vector<int>{0, 0, 2, 2, 0});
  REQUIRE(p.class_ids() == std::vector<int>{0, 2});
  REQUIRE(p.classes() == std::vector<std::vector<int>>{{0, 1, 4}, {2, 3}});
}

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "fixtures.hpp"
#include "sgt/star.hpp"

using fixtures::chain2;
using fixtures::right_group_2_2;
using fixtures::right_zero2;
using fixtures::z2;

namespace {

// All maps {0,...,n-1} -> {0,...,n-1}, in lexicographic order.
std::vector<std::vector<int>> all_unary_maps(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(n, 0);
  while (true) {
    out.push_back(m);
    int i = n - 1;
    while (i >= 0 && m[i] == n - 1) {
      m[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

}  // namespace

TEST_CASE("inversion star on a group passes all axioms") {
  auto s = z2();
  auto star = sgt::inversion_star(s);
  REQUIRE(star == std::vector<int>{0, 1});
  auto rep = sgt::check_star(s, star);
  REQUIRE(rep.involution.holds);
  REQUIRE(rep.gives_inverse.holds);
  REQUIRE(rep.product_rule.holds);
  REQUIRE(rep.fixes_idempotents.holds);
  REQUIRE(rep.is_rgis_star);
}

TEST_CASE("identity star on a semilattice passes all axioms") {
  auto s = chain2();
  auto rep = sgt::check_star(s, {0, 1});
  REQUIRE(rep.all_axioms());
  REQUIRE(rep.is_rgis_star);
}

TEST_CASE("swap star on the right group passes all axioms") {
  auto s = right_group_2_2();
  // (h,x)* = (h^-1, h.x) with h = 1 swapping the two right-zero points.
  std::vector<int> swap_star{0, 1, 3, 2};
  auto rep = sgt::check_star(s, swap_star);
  REQUIRE(rep.all_axioms());
  REQUIRE(rep.is_rgis_star);
}

TEST_CASE("identity star on the right group also passes: stars are not unique") {
  auto s = right_group_2_2();
  auto rep = sgt::check_star(s, {0, 1, 2, 3});
  REQUIRE(rep.all_axioms());
  REQUIRE(rep.is_rgis_star);
}

TEST_CASE("broken stars report the smallest witness") {
  auto s = chain2();

  SECTION("swap map is not an involution problem but fails the inverse axiom") {
    auto rep = sgt::check_star(s, {1, 0});
    REQUIRE(rep.involution.holds);
    REQUIRE_FALSE(rep.gives_inverse.holds);
    REQUIRE(rep.gives_inverse.witness->elements == std::vector<int>{0});
    REQUIRE_FALSE(rep.fixes_idempotents.holds);
    REQUIRE(rep.fixes_idempotents.witness->elements == std::vector<int>{0});
    REQUIRE_FALSE(rep.is_rgis_star);
  }

  SECTION("constant map fails involution") {
    auto rep = sgt::check_star(s, {0, 0});
    REQUIRE_FALSE(rep.involution.holds);
    REQUIRE(rep.involution.witness->elements == std::vector<int>{1});
  }

  SECTION("malformed star lengths are rejected") {
    REQUIRE_THROWS_AS(sgt::check_star(s, {0}), sgt::invalid_input);
    REQUIRE_THROWS_AS(sgt::check_star(s, {0, 5}), sgt::invalid_input);
  }
}

TEST_CASE("wrong star on a group fails the inverse axiom") {
  auto rep = sgt::check_star(z2(), {1, 0});
  REQUIRE_FALSE(rep.gives_inverse.holds);
  REQUIRE(rep.gives_inverse.witness->elements == std::vector<int>{0});
}

TEST_CASE("idempotent-fixing follows from the other axioms on right zero") {
  auto s = right_zero2();
  int passing = 0;
  for (const auto& m : all_unary_maps(2)) {
    auto rep = sgt::check_star(s, m);
    if (rep.involution.holds && rep.gives_inverse.holds && rep.product_rule.holds) {
      ++passing;
      REQUIRE(rep.fixes_idempotents.holds);
      REQUIRE_FALSE(sgt::verify_s4_derivation(s, m).has_value());
    }
  }
  // Exactly the identity map survives the first three axioms on R2.
  REQUIRE(passing == 1);
}

TEST_CASE("idempotent-fixing follows from the other axioms on the right group") {
  auto s = right_group_2_2();
  int passing = 0;
  for (const auto& m : all_unary_maps(4)) {
    auto rep = sgt::check_star(s, m);
    if (rep.involution.holds && rep.gives_inverse.holds && rep.product_rule.holds) {
      ++passing;
      REQUIRE(rep.fixes_idempotents.holds);
      REQUIRE_FALSE(sgt::verify_s4_derivation(s, m).has_value());
    }
  }
  // Of all 256 unary maps only the identity star and the swap star survive.
  REQUIRE(passing == 2);
}

TEST_CASE("s4 derivation check rejects out-of-scope inputs") {
  // Left zero band: idempotents do not form a right normal band.
  auto lz = fixtures::left_zero2();
  REQUIRE_THROWS_AS(sgt::verify_s4_derivation(lz, {0, 1}), sgt::precondition_error);
  // In-scope base, but the map breaks the first three axioms.
  REQUIRE_THROWS_AS(sgt::verify_s4_derivation(chain2(), {1, 0}),
                    sgt::precondition_error);
}

TEST_CASE("star order formulas agree with the natural partial order") {
  SECTION("two-chain with identity star") {
    REQUIRE_FALSE(sgt::star_order_check({chain2(), {0, 1}}).has_value());
  }
  SECTION("right group with swap star: order is equality") {
    REQUIRE_FALSE(sgt::star_order_check({right_group_2_2(), {0, 1, 3, 2}}).has_value());
  }
  SECTION("right group with identity star") {
    REQUIRE_FALSE(sgt::star_order_check({right_group_2_2(), {0, 1, 2, 3}}).has_value());
  }
  SECTION("group with inversion star") {
    REQUIRE_FALSE(sgt::star_order_check({z2(), {0, 1}}).has_value());
  }
}

TEST_CASE("star order check enforces its preconditions") {
  auto lz = fixtures::left_zero2();
  REQUIRE_THROWS_AS(sgt::star_order_check({lz, {0, 1}}), sgt::precondition_error);
  REQUIRE_THROWS_AS(sgt::star_order_check({chain2(), {1, 0}}),
                    sgt::precondition_error);
}

TEST_CASE("inversion star requires an inverse semigroup") {
  REQUIRE_THROWS_AS(sgt::inversion_star(right_zero2()), sgt::precondition_error);
  auto star = sgt::inversion_star(chain2());
  REQUIRE(star == std::vector<int>{0, 1});
}

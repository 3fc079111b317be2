#pragma once

// Small hand-checked semigroups shared across the test suite.  Tables are
// row-major; element encodings are noted where they matter.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <utility>

#include "sgt/semigroup.hpp"

namespace fixtures {

// Matches any library exception whose witness carries the given kind.
class WitnessKindMatcher : public Catch::Matchers::MatcherGenericBase {
 public:
  explicit WitnessKindMatcher(std::string kind) : kind_(std::move(kind)) {}
  template <typename E>
  bool match(const E& e) const {
    return e.witness().kind == kind_;
  }
  std::string describe() const override { return "witness kind is " + kind_; }

 private:
  std::string kind_;
};

inline WitnessKindMatcher witness_is(std::string kind) {
  return WitnessKindMatcher(std::move(kind));
}

// Two-element right zero: xy = y.
inline sgt::FiniteSemigroup right_zero2() {
  return sgt::load_semigroup(2, {0, 1, 0, 1});
}

// Two-element left zero: xy = x.
inline sgt::FiniteSemigroup left_zero2() {
  return sgt::load_semigroup(2, {0, 0, 1, 1});
}

// Two-element chain semilattice under min.
inline sgt::FiniteSemigroup chain2() {
  return sgt::load_semigroup(2, {0, 0, 0, 1});
}

// Three-element chain semilattice under min.
inline sgt::FiniteSemigroup chain3() {
  return sgt::load_semigroup(3, {0, 0, 0, 0, 1, 1, 0, 1, 2});
}

// Cyclic group of order two.
inline sgt::FiniteSemigroup z2() {
  return sgt::load_semigroup(2, {0, 1, 1, 0});
}

// Cyclic group of order four.
inline sgt::FiniteSemigroup z4() {
  return sgt::load_semigroup(
      4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
}

// Z2 x R2, encoded as 2h + x for (h, x).  Right generalized inverse but not
// inverse; its idempotents {0, 1} form a right zero band.
inline sgt::FiniteSemigroup right_group_2_2() {
  return sgt::load_semigroup(
      4, {0, 1, 2, 3, 0, 1, 2, 3, 2, 3, 0, 1, 2, 3, 0, 1});
}

// (h,x)* = (h^-1, h.x) for the nontrivial Z2-action on the two points.
inline std::vector<int> right_group_swap_star() { return {0, 1, 3, 2}; }

// Two-element semigroup with xy = 1 for all x, y; element 0 is not regular.
inline sgt::FiniteSemigroup non_regular2() {
  return sgt::load_semigroup(2, {1, 1, 1, 1});
}

// One-element semigroup.
inline sgt::FiniteSemigroup trivial() { return sgt::load_semigroup(1, {0}); }

}  // namespace fixtures

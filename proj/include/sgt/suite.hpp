#pragma once

// The acceptance property suite: every structural claim the library encodes,
// checked across the whole generated corpus.  Each criterion runs a batch of
// labeled checks; a falsified claim (or any error escaping a check) marks
// the criterion failed and is recorded verbatim, so a run never stops at the
// first failure.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/equivalence.hpp"
#include "sgt/families.hpp"
#include "sgt/gamma.hpp"

namespace sgt {

struct CriterionResult {
  std::string name;
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;
};

struct SuiteResult {
  int max_n = 0;
  unsigned seed = 0;
  bool injected = false;
  std::vector<CriterionResult> criteria;

  bool all_passed() const {
    for (const auto& c : criteria)
      if (!c.passed) return false;
    return true;
  }
  int total_checks() const {
    int total = 0;
    for (const auto& c : criteria) total += c.checks;
    return total;
  }
};

namespace detail {

/// Collects labeled pass/fail checks for one criterion.  The body returns
/// whether the check passed; any exception fails the check with its message.
class CriterionRun {
 public:
  explicit CriterionRun(std::string name) { result_.name = std::move(name); }

  template <typename Body>
  void check(const std::string& label, Body&& body) {
    ++result_.checks;
    try {
      if (!body()) fail(label);
    } catch (const std::exception& e) {
      fail(label + ": " + e.what());
    }
  }

  void fail(std::string note) {
    result_.passed = false;
    result_.failures.push_back(std::move(note));
  }

  CriterionResult take() { return std::move(result_); }

 private:
  CriterionResult result_;
};

inline StarStructure starred(const GeneratedSemigroup& g) {
  return StarStructure{g.s, g.star};
}

}  // namespace detail

/// Quotient separation laws: the minimum inverse congruence separates left
/// ideals, is idempotent pure, realizes its absorptions, and makes the
/// natural map etale; every star found by exhaustive search on small members
/// fixes idempotents.
inline CriterionResult criterion_gamma_laws(const Corpus& c) {
  detail::CriterionRun run("gamma-laws");
  for (const auto& g : c.semigroups) {
    if (!classify(g.s).is_right_generalized_inverse()) continue;
    const Congruence cong = gamma(g.s);
    run.check(g.family + ": left ideals separated", [&] {
      return !check_left_ideal_separation(g.s, cong).has_value();
    });
    run.check(g.family + ": idempotent pure", [&] {
      return !check_idempotent_pure(g.s, cong).has_value();
    });
    run.check(g.family + ": absorption witnesses", [&] {
      return !check_absorption_witness(g.s, cong).has_value();
    });
    run.check(g.family + ": natural map etale", [&] {
      return check_etale_hom(gamma_quotient(g.s).projection, detail::starred(g))
          .etale;
    });
    if (g.s.n <= 6) {
      run.check(g.family + ": searched stars fix idempotents", [&] {
        find_stars(g.s);  // falsifies if a found star moves an idempotent
        return true;
      });
    }
  }
  return run.take();
}

/// Order compatibility of the star: both order descriptions agree and the
/// star is an order embedding, on every corpus star structure.
inline CriterionResult criterion_star_order(const Corpus& c) {
  detail::CriterionRun run("star-order");
  for (const auto& g : c.semigroups) {
    run.check(g.family + ": star respects the natural order", [&] {
      return !star_order_check(detail::starred(g)).has_value();
    });
  }
  return run.take();
}

/// Covering and coordinates: the natural map is an L-cover, the coordinate
/// map is a bijection, and rebuilding the semigroup as the semidirect
/// product of its canonical action recovers the original cardinality.
inline CriterionResult criterion_lcover_coordinates(const Corpus& c) {
  detail::CriterionRun run("lcover-and-coordinates");
  for (const auto& g : c.semigroups) {
    run.check(g.family + ": natural map is an L-cover", [&] {
      return !check_l_cover(gamma_quotient(g.s).projection).has_value();
    });
    run.check(g.family + ": coordinates biject", [&] {
      return static_cast<int>(coordinatize(g.s).pairs.size()) == g.s.n;
    });
    run.check(g.family + ": carrier size is |S/gamma * E(S)|", [&] {
      const CanonicalAction ca = canonical_action(detail::starred(g));
      return build_semidirect(ca.action).product.n == g.s.n;
    });
  }
  return run.take();
}

/// Etale characterization consistency on every corpus homomorphism into an
/// inverse target (the three implications are falsified inside the call).
inline CriterionResult criterion_etale_characterization(const Corpus& c) {
  detail::CriterionRun run("etale-characterization");
  for (const auto& h : c.homs) {
    if (!classify(h.hom.target).is_inverse()) continue;
    run.check(h.label + ": characterization consistent", [&] {
      etale_characterization(h.hom,
                             StarStructure{h.hom.source, h.source_star});
      return true;
    });
  }
  return run.take();
}

/// Semidirect product construction: all structural verifications built into
/// build_semidirect, the componentwise order description, and closure of the
/// anchor map under the action.
inline CriterionResult criterion_semidirect(const Corpus& c) {
  detail::CriterionRun run("semidirect-product");
  for (const auto& entry : c.actions) {
    run.check(entry.label + ": semidirect product verified", [&] {
      const SemidirectResult r = build_semidirect(entry.action);
      return !check_semidirect_order(r).has_value();
    });
    run.check(entry.label + ": anchors stay idempotent under the action", [&] {
      const EtaleAction& a = entry.action;
      for (int t = 0; t < a.s.n; ++t)
        for (int x = 0; x < a.x_size; ++x)
          if (!is_idempotent(a.s, a.p[a.apply(t, x)])) return false;
      return true;
    });
  }
  return run.take();
}

/// Round trips in both directions: every action is recovered from its
/// semidirect product, and every etale corpus map is recovered from its
/// induced action.
inline CriterionResult criterion_round_trips(const Corpus& c) {
  detail::CriterionRun run("round-trips");
  for (const auto& entry : c.actions) {
    run.check(entry.label + ": action round trip", [&] {
      return roundtrip_action(entry.action).ok();
    });
  }
  for (const auto& h : c.homs) {
    const StarStructure star{h.hom.source, h.source_star};
    bool etale = false;
    try {
      etale = check_etale_hom(h.hom, star).etale;
    } catch (const std::exception&) {
      continue;  // not even a candidate; the characterization criterion
                 // already covers these maps
    }
    if (!etale) continue;
    run.check(h.label + ": etale round trip", [&] {
      return roundtrip_etale(h.hom, star).ok();
    });
  }
  return run.take();
}

/// Functoriality of the semidirect construction on global-support actions:
/// identity morphisms lift to identity homomorphisms, composites lift to
/// composites, and every starred member sits over its inverse quotient via
/// a surjective etale projection.
inline CriterionResult criterion_global_support_functors(const Corpus& c,
                                                         int max_n) {
  detail::CriterionRun run("global-support-functors");

  std::map<int, SemidirectResult> built;
  auto semidirect_of = [&](int idx) -> const SemidirectResult& {
    auto it = built.find(idx);
    if (it == built.end())
      it = built.emplace(idx, build_semidirect(c.actions[idx].action)).first;
    return it->second;
  };

  std::vector<std::optional<SemigroupHom>> lifted(c.morphisms.size());
  for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
    const CorpusMorphism& m = c.morphisms[i];
    run.check(m.label + ": lifts to the semidirect products", [&] {
      lifted[i] = global_support_functor(
          c.actions[m.source].action, c.actions[m.target].action, m.m,
          semidirect_of(m.source), semidirect_of(m.target));
      return true;
    });
    const bool is_identity =
        m.source == m.target &&
        m.m.alpha.map == identity_hom(c.actions[m.source].action.s).map &&
        m.m.beta == identity_action_morphism(c.actions[m.source].action).beta;
    if (is_identity && lifted[i]) {
      run.check(m.label + ": identity lifts to the identity", [&] {
        return lifted[i]->map == identity_hom(semidirect_of(m.source).product).map;
      });
    }
  }

  int composable = 0;
  for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
    for (std::size_t j = 0; j < c.morphisms.size(); ++j) {
      const CorpusMorphism& first = c.morphisms[i];
      const CorpusMorphism& second = c.morphisms[j];
      if (first.target != second.source) continue;
      if (!lifted[i] || !lifted[j]) continue;
      ++composable;
      run.check(second.label + " after " + first.label +
                    ": composite lifts to the composite",
                [&] {
                  const ActionMorphism composite =
                      compose_action_morphism(second.m, first.m);
                  const SemigroupHom direct = global_support_functor(
                      c.actions[first.source].action,
                      c.actions[second.target].action, composite,
                      semidirect_of(first.source), semidirect_of(second.target));
                  return direct.map == compose(*lifted[j], *lifted[i]).map;
                });
    }
  }
  if (max_n >= 6) {
    run.check("at least ten composable morphism pairs exercised", [&] {
      return composable >= 10;
    });
  }

  for (const auto& g : c.semigroups) {
    run.check(g.family + ": over its inverse quotient", [&] {
      return over_inverse(detail::starred(g)).over;
    });
  }
  return run.take();
}

/// The worked closing example: the four-element right group with the swap
/// star is exactly the semidirect product of the two-point swap action, and
/// its natural map induces the swap action back.
inline CriterionResult criterion_closing_example(const Corpus&, int max_n) {
  detail::CriterionRun run("closing-example");
  if (max_n < 2) return run.take();  // the example needs four elements

  const GeneratedSemigroup g = right_group(2, 2, {1, 0});
  run.check("star is (h,x)* = (h^-1, h.x) on all four elements", [&] {
    for (int h = 0; h < 2; ++h)
      for (int x = 0; x < 2; ++x) {
        const int expected = ((2 - h) % 2) * 2 + (h == 1 ? 1 - x : x);
        if (g.star[h * 2 + x] != expected) return false;
      }
    return true;
  });

  const EtaleAction swap =
      load_action(group_cyclic(2).s, 2, {0, 0}, {0, 1, 1, 0});
  run.check("swap-action semidirect product equals the right group", [&] {
    const SemidirectResult r = build_semidirect(swap);
    return r.product == g.s && r.star.star == g.star;
  });
  run.check("natural map induces the swap action back", [&] {
    const CanonicalAction ca = canonical_action(detail::starred(g));
    return ca.action.x_size == 2 && ca.action.p == std::vector<int>{0, 0} &&
           ca.action.act == std::vector<int>{0, 1, 1, 0};
  });
  return run.take();
}

/// Cross-checks against independent models: the seven partial injections on
/// two points with relational composition, separation of the minimum inverse
/// congruence there, and singleton L-classes on every right normal band.
inline CriterionResult criterion_independent_oracles(const Corpus& c) {
  detail::CriterionRun run("independent-oracles");

  run.check("partial injections match the relation oracle", [&] {
    const GeneratedSemigroup i2 = symmetric_inverse_monoid(2);
    if (i2.s.n != 7) return false;
    if (idempotents(i2.s).size() != 4) return false;

    // Relations on {0,1} as 4-bit masks, bit i*2+j = the pair (i -> j).
    auto functional_injective = [](int mask) {
      const bool functional = (mask & 0b0011) != 0b0011 && (mask & 0b1100) != 0b1100;
      const bool injective = (mask & 0b0101) != 0b0101 && (mask & 0b1010) != 0b1010;
      return functional && injective;
    };
    std::vector<int> masks;
    for (int mask = 0; mask < 16; ++mask)
      if (functional_injective(mask)) masks.push_back(mask);
    if (masks.size() != 7) return false;

    // Order the oracle's elements by their image vectors, matching the
    // library's canonical enumeration order.
    auto image_of = [](int mask) {
      std::vector<int> img(2, -1);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (mask & (1 << (i * 2 + j))) img[i] = j;
      return img;
    };
    std::vector<std::pair<std::vector<int>, int>> order;
    for (int mask : masks) order.emplace_back(image_of(mask), mask);
    std::sort(order.begin(), order.end());
    std::map<int, int> index_of_mask;
    for (int idx = 0; idx < 7; ++idx) index_of_mask[order[idx].second] = idx;

    auto compose_masks = [](int outer, int inner) {
      int out = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            if ((inner & (1 << (i * 2 + j))) && (outer & (1 << (j * 2 + k))))
              out |= 1 << (i * 2 + k);
      return out;
    };
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        const int composed =
            compose_masks(order[a].second, order[b].second);
        if (i2.s.product(a, b) != index_of_mask.at(composed)) return false;
      }
    return true;
  });

  run.check("minimum inverse congruence separates the partial injections", [&] {
    const GeneratedSemigroup i2 = symmetric_inverse_monoid(2);
    return gamma(i2.s).partition.class_ids().size() == 7;
  });

  for (const auto& g : c.semigroups) {
    const ClassificationReport cls = classify(g.s);
    if (!cls.is_band() || !cls.is_right_normal_band()) continue;
    run.check(g.family + ": L-classes are singletons", [&] {
      return green_relations(g.s).l.class_ids().size() ==
             static_cast<std::size_t>(g.s.n);
    });
  }
  return run.take();
}

/// Runs the whole suite over corpus(max_n, seed).  With `inject` the first
/// action with at least two points is corrupted (its anchor law is broken)
/// before the checks run, to demonstrate that a false input is caught and
/// reported as a falsification.
inline SuiteResult run_suite(int max_n, unsigned seed, bool inject = false) {
  Corpus c = corpus(max_n, seed);
  if (inject) {
    for (auto& entry : c.actions) {
      if (entry.action.x_size < 2) continue;
      std::vector<int> act = entry.action.act;
      const std::size_t slot =
          static_cast<std::size_t>(entry.action.p[0]) * entry.action.x_size;
      act[slot] = act[slot] == 0 ? 1 : 0;
      entry.action = assemble_action_unchecked(
          entry.action.s, entry.action.x_size, entry.action.p, std::move(act));
      entry.label += " [injected]";
      break;
    }
  }

  SuiteResult out;
  out.max_n = max_n;
  out.seed = seed;
  out.injected = inject;
  out.criteria.push_back(criterion_gamma_laws(c));
  out.criteria.push_back(criterion_star_order(c));
  out.criteria.push_back(criterion_lcover_coordinates(c));
  out.criteria.push_back(criterion_etale_characterization(c));
  out.criteria.push_back(criterion_semidirect(c));
  out.criteria.push_back(criterion_round_trips(c));
  out.criteria.push_back(criterion_global_support_functors(c, max_n));
  out.criteria.push_back(criterion_closing_example(c, max_n));
  out.criteria.push_back(criterion_independent_oracles(c));
  return out;
}

}  // namespace sgt

#pragma once

// The two directions of the action/star-semigroup correspondence and the
// mechanical verification of their round trips.
//
// Forward: an action (S, X, p) yields the semidirect-style semigroup S*X on
// the carrier {(s,x) : d(s) = p(x)} with (s,x)(t,y) = (st, d(st).y), star
// (s,x)* = (s^-1, s.x), and the first-coordinate projection.  Backward: a
// homomorphism theta: T -> S that restricts bijectively on every Te yields an
// action of S on the idempotents of T.  Each construction re-verifies every
// claimed property of its output and raises falsification_error the moment
// one fails, so a broken instance can never flow downstream silently.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/action.hpp"
#include "sgt/gamma.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/star.hpp"

namespace sgt {

/// The semidirect product of an action, with everything verified: product
/// table, star, projection, and the carrier decoding table.
struct SemidirectResult {
  EtaleAction action;       // the action the product was built from
  FiniteSemigroup product;  // on the carrier, lexicographic (s, x) order
  StarStructure star;       // over `product`
  SemigroupHom projection;  // (s, x) -> s
  std::vector<std::pair<int, int>> pair_index;  // product index -> (s, x)

  /// Product index of the pair (s, x), or -1 when it is not in the carrier.
  int index_of(int s, int x) const {
    const std::pair<int, int> key{s, x};
    auto it = std::lower_bound(pair_index.begin(), pair_index.end(), key);
    if (it == pair_index.end() || *it != key) return -1;
    return static_cast<int>(it - pair_index.begin());
  }
};

inline SemidirectResult build_semidirect(const EtaleAction& a) {
  const FiniteSemigroup& s = a.s;
  const std::vector<int> inv = inversion_star(s);
  std::vector<int> dom(s.n);
  for (int t = 0; t < s.n; ++t) dom[t] = s.product(inv[t], t);

  SemidirectResult r;
  r.action = a;
  for (int t = 0; t < s.n; ++t)
    for (int x = 0; x < a.x_size; ++x)
      if (dom[t] == a.p[x]) r.pair_index.emplace_back(t, x);
  if (r.pair_index.empty()) {
    throw falsification_error("semidirect carrier is inhabited",
                              Witness{"EmptyCarrier", {}},
                              "no pair (s, x) satisfies d(s) = p(x)");
  }

  const int m = static_cast<int>(r.pair_index.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int st = s.product(r.pair_index[i].first, r.pair_index[j].first);
      const int y = a.apply(dom[st], r.pair_index[j].second);
      const int k = r.index_of(st, y);
      if (k < 0) {
        throw falsification_error("semidirect product is closed",
                                  Witness{"ProductEscapesCarrier", {i, j}},
                                  "(st, d(st).y) landed outside the carrier");
      }
      table[static_cast<std::size_t>(i) * m + j] = k;
    }
  }
  r.product = FiniteSemigroup{m, std::move(table)};
  if (auto w = associativity_witness(r.product)) {
    throw falsification_error("semidirect product is associative", *w,
                              "the carrier table has a non-associative triple");
  }

  std::vector<int> star(m);
  for (int i = 0; i < m; ++i) {
    const auto [t, x] = r.pair_index[i];
    const int k = r.index_of(inv[t], a.apply(t, x));
    if (k < 0) {
      throw falsification_error("semidirect star is closed",
                                Witness{"StarEscapesCarrier", {i}},
                                "(s^-1, s.x) landed outside the carrier");
    }
    star[i] = k;
  }
  {
    const StarReport rep = check_star(r.product, star);
    for (const Verdict* v : {&rep.involution, &rep.gives_inverse,
                             &rep.product_rule, &rep.fixes_idempotents}) {
      if (!v->holds) {
        throw falsification_error("semidirect star satisfies the star axioms",
                                  *v->witness,
                                  "(s,x)* = (s^-1, s.x) broke a star axiom");
      }
    }
  }
  r.star = StarStructure{r.product, std::move(star)};

  {
    const ClassificationReport cls = classify(r.product);
    if (!cls.is_right_generalized_inverse()) {
      throw falsification_error(
          "semidirect product is right generalized inverse",
          cls.right_generalized_inverse.witness
              ? *cls.right_generalized_inverse.witness
              : Witness{"NotRightGeneralizedInverse", {}},
          "the carrier semigroup failed the classification");
    }
  }

  {
    std::vector<int> expected;
    for (int x = 0; x < a.x_size; ++x) {
      const int k = r.index_of(a.p[x], x);
      if (k < 0) {
        throw falsification_error(
            "semidirect idempotents are the anchored pairs",
            Witness{"AnchoredPairMissing", {x}},
            "(p(x), x) is not in the carrier");
      }
      expected.push_back(k);
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()),
                   expected.end());
    const std::vector<int> actual = idempotents(r.product);
    if (actual != expected) {
      std::vector<int> diff;
      std::set_symmetric_difference(actual.begin(), actual.end(),
                                    expected.begin(), expected.end(),
                                    std::back_inserter(diff));
      throw falsification_error(
          "semidirect idempotents are the anchored pairs",
          Witness{"IdempotentCharacterizationFails", {diff.front()}},
          "idempotent set differs from {(p(x), x)}");
    }
  }

  std::vector<int> proj(m);
  for (int i = 0; i < m; ++i) proj[i] = r.pair_index[i].first;
  r.projection = SemigroupHom{r.product, s, std::move(proj)};
  if (auto w = check_hom(r.projection)) {
    throw falsification_error("semidirect projection is a homomorphism", *w,
                              "(s,x) -> s is not multiplicative");
  }

  {
    const EtaleHomReport rep = check_etale_hom(r.projection, r.star);
    if (!rep.etale) {
      const auto bad =
          std::find_if(rep.restrictions.begin(), rep.restrictions.end(),
                       [](const Verdict& v) { return !v.holds; });
      throw falsification_error("semidirect projection is etale",
                                *bad->witness,
                                "a restriction to an idempotent ideal is not "
                                "a bijection");
    }
    if (is_surjective(r.projection) != has_global_support(a)) {
      throw falsification_error(
          "projection surjectivity matches global support",
          Witness{"SurjectivitySupportMismatch", {}},
          "exactly one of {projection surjective, action has global support} "
          "holds");
    }
    if (!(rep.kernel == gamma(r.product).partition)) {
      throw falsification_error(
          "kernel of the semidirect projection is the minimum inverse "
          "congruence",
          Witness{"KernelGammaMismatch", {}},
          "kernel partition differs from the minimum inverse congruence");
    }
  }
  return r;
}

/// Confirms that the natural partial order of the product is exactly the
/// componentwise order: (s,x) <= (t,y) iff s <= t in the base and x <= y in
/// the action order.  Returns the first mismatch (product indices) if any.
inline std::optional<Witness> check_semidirect_order(const SemidirectResult& r) {
  const Relation prod_order = natural_partial_order(r.product);
  const Relation base_order = natural_partial_order(r.action.s);
  const ActionOrderResult point_order = action_order(r.action);
  if (point_order.violation) return point_order.violation;

  const int m = r.product.n;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const bool lhs = prod_order.contains(i, j);
      const bool rhs =
          base_order.contains(r.pair_index[i].first, r.pair_index[j].first) &&
          point_order.order.contains(r.pair_index[i].second,
                                     r.pair_index[j].second);
      if (lhs != rhs) return Witness{"OrderMismatch", {i, j}};
    }
  }
  return std::nullopt;
}

namespace detail {

inline void require_built_from(const SemidirectResult& r, const EtaleAction& a,
                               const char* which) {
  if (!(r.action == a)) {
    throw invalid_input(Witness{"SemidirectActionMismatch", {}},
                        std::string("semidirect result was not built from the ")
                            + which + " action");
  }
}

}  // namespace detail

/// Lifts a same-base action morphism to the homomorphism
/// (s, x) -> (s, beta(x)) between the semidirect products, verifying that it
/// is multiplicative, star-preserving, and projection-compatible.
inline SemigroupHom lift_action_morphism(const EtaleAction& a,
                                         const EtaleAction& b,
                                         const ActionMorphism& m,
                                         const SemidirectResult& ra,
                                         const SemidirectResult& rb) {
  detail::require_built_from(ra, a, "source");
  detail::require_built_from(rb, b, "target");
  for (int t = 0; t < m.alpha.source.n; ++t) {
    if (m.alpha.map[t] != t) {
      throw precondition_error(Witness{"AlphaNotIdentity", {t}},
                               "lift requires a same-base morphism");
    }
  }
  if (auto w = check_action_morphism(a, b, m)) {
    throw precondition_error(*w, "not an action morphism");
  }

  const int n = ra.product.n;
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) {
    const auto [t, x] = ra.pair_index[i];
    const int k = rb.index_of(t, m.beta[x]);
    if (k < 0) {
      throw falsification_error("lifted morphism lands in the carrier",
                                Witness{"ImageOutsideCarrier", {i}},
                                "(s, beta(x)) is not in the target carrier");
    }
    map[i] = k;
  }
  SemigroupHom lift{ra.product, rb.product, std::move(map)};
  if (auto w = check_hom(lift)) {
    throw falsification_error("lift of an action morphism is a homomorphism",
                              *w, "(s,x) -> (s, beta(x)) is not multiplicative");
  }
  for (int i = 0; i < n; ++i) {
    if (lift.map[ra.star.star[i]] != rb.star.star[lift.map[i]]) {
      throw falsification_error(
          "lift of an action morphism preserves the star",
          Witness{"LiftNotStarPreserving", {i}},
          "lift and star do not commute at this element");
    }
    if (rb.projection(lift.map[i]) != ra.projection(i)) {
      throw falsification_error(
          "lift of an action morphism commutes with the projections",
          Witness{"ProjectionMismatch", {i}},
          "target projection of the lift differs from the source projection");
    }
  }
  return lift;
}

/// Composite m2 . m1 of action morphisms (m1: A -> B, m2: B -> C).
inline ActionMorphism compose_action_morphism(const ActionMorphism& m2,
                                              const ActionMorphism& m1) {
  ActionMorphism out{compose(m2.alpha, m1.alpha),
                     std::vector<int>(m1.beta.size())};
  for (std::size_t x = 0; x < m1.beta.size(); ++x)
    out.beta[x] = m2.beta[m1.beta[x]];
  return out;
}

/// The action induced on the idempotents of theta's source: p(e) = theta(e)
/// and s.e = tt* for the unique t with t*t <= e and theta(t) = s theta(e).
/// Requires theta to restrict bijectively on every Te; zero or multiple
/// candidates t signal exactly that failure and raise NotEtale.
inline EtaleAction build_action_from_etale(const SemigroupHom& theta,
                                           const StarStructure& star) {
  const EtaleHomReport rep = check_etale_hom(theta, star);
  if (!rep.etale) {
    const auto bad = std::find_if(rep.restrictions.begin(),
                                  rep.restrictions.end(),
                                  [](const Verdict& v) { return !v.holds; });
    throw precondition_error(Witness{"NotEtale", bad->witness->elements},
                             "map does not restrict bijectively on an "
                             "idempotent ideal");
  }

  const FiniteSemigroup& t = theta.source;
  const FiniteSemigroup& s = theta.target;
  const std::vector<int>& es = rep.idems;
  const int xs = static_cast<int>(es.size());
  std::vector<int> pos(t.n, -1);
  for (int i = 0; i < xs; ++i) pos[es[i]] = i;

  const Relation order = natural_partial_order(t);
  std::vector<int> p(xs);
  for (int i = 0; i < xs; ++i) p[i] = theta(es[i]);

  std::vector<int> act(static_cast<std::size_t>(s.n) * xs);
  for (int a = 0; a < s.n; ++a) {
    for (int i = 0; i < xs; ++i) {
      const int image = s.product(a, theta(es[i]));
      int found = -1;
      for (int cand = 0; cand < t.n; ++cand) {
        if (theta(cand) != image) continue;
        if (!order.contains(t.product(star.star[cand], cand), es[i])) continue;
        if (found != -1) {
          throw precondition_error(Witness{"NotEtale", {a, es[i]}},
                                   "multiple candidates t with t*t <= e and "
                                   "theta(t) = s theta(e)");
        }
        found = cand;
      }
      if (found == -1) {
        throw precondition_error(Witness{"NotEtale", {a, es[i]}},
                                 "no candidate t with t*t <= e and "
                                 "theta(t) = s theta(e)");
      }
      const int range = t.product(found, star.star[found]);
      if (pos[range] < 0)
        throw std::logic_error("tt* is not idempotent after (S2) held");
      act[static_cast<std::size_t>(a) * xs + i] = pos[range];
    }
  }

  EtaleAction out{s, xs, std::move(p), std::move(act)};
  if (auto w = action_witness(out)) {
    throw falsification_error(
        "induced action on the idempotents is a valid etale action", *w,
        "s.e = tt* violated an action invariant");
  }
  return out;
}

/// A right generalized inverse *-semigroup presented over an inverse
/// semigroup: the star structure plus the structure map theta into the base.
struct EtaleObject {
  StarStructure star;
  SemigroupHom theta;  // star.base -> common inverse base
};

/// Restriction of a star-preserving homomorphism between two sources etale
/// over the same base to their idempotents, as a same-base action morphism
/// between the induced actions.
inline ActionMorphism restrict_hom(const EtaleObject& t1, const EtaleObject& t2,
                                   const SemigroupHom& alpha) {
  if (alpha.source.table != t1.star.base.table ||
      alpha.target.table != t2.star.base.table) {
    throw invalid_input(Witness{"MorphismBaseMismatch", {}},
                        "map does not join the two etale sources");
  }
  if (!(t1.theta.target == t2.theta.target)) {
    throw precondition_error(Witness{"NotOverSameBase", {}},
                             "the two sources are etale over different bases");
  }
  if (auto w = check_hom(alpha)) {
    throw precondition_error(*w, "map is not a homomorphism");
  }
  for (int x = 0; x < alpha.source.n; ++x) {
    if (alpha(t1.star.star[x]) != t2.star.star[alpha(x)]) {
      throw precondition_error(Witness{"NotStarPreserving", {x}},
                               "map does not commute with the stars");
    }
    if (t2.theta(alpha(x)) != t1.theta(x)) {
      throw precondition_error(Witness{"DoesNotCommuteWithStructureMaps", {x}},
                               "map does not commute with the structure maps");
    }
  }

  const EtaleAction a1 = build_action_from_etale(t1.theta, t1.star);
  const EtaleAction a2 = build_action_from_etale(t2.theta, t2.star);
  const std::vector<int> es1 = idempotents(t1.star.base);
  const std::vector<int> es2 = idempotents(t2.star.base);
  std::vector<int> pos2(t2.star.base.n, -1);
  for (int i = 0; i < static_cast<int>(es2.size()); ++i) pos2[es2[i]] = i;

  ActionMorphism m{identity_hom(t1.theta.target),
                   std::vector<int>(es1.size())};
  for (int i = 0; i < static_cast<int>(es1.size()); ++i) {
    const int image = alpha(es1[i]);
    if (pos2[image] < 0)
      throw std::logic_error("homomorphic image of an idempotent is not "
                             "idempotent");
    m.beta[i] = pos2[image];
  }
  if (auto w = check_action_morphism(a1, a2, m)) {
    throw falsification_error(
        "restriction of a star-homomorphism to the idempotents is an action "
        "morphism",
        *w, "the restricted map broke a morphism equation");
  }
  return m;
}

/// One verified round trip: the direction tag, the explicit map the
/// construction supplies, and the named verification verdicts.
struct RoundTripReport {
  std::string direction;   // "action" or "etale"
  std::vector<int> forward;
  std::vector<std::pair<std::string, Verdict>> verdicts;

  bool ok() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const auto& v) { return v.second.holds; });
  }
};

namespace detail {

inline void raise_if_failed(const RoundTripReport& rep, const char* property) {
  for (const auto& [name, v] : rep.verdicts) {
    if (!v.holds) {
      throw falsification_error(property, *v.witness,
                                "round-trip verdict '" + name + "' failed");
    }
  }
}

}  // namespace detail

/// Action -> semidirect product -> induced action of the projection, then
/// the explicit map (p(x), x) -> x is verified to be an isomorphism.
inline RoundTripReport roundtrip_action(const EtaleAction& a) {
  const SemidirectResult r = build_semidirect(a);
  const EtaleAction back = build_action_from_etale(r.projection, r.star);

  RoundTripReport rep;
  rep.direction = "action";
  const std::vector<int> es = idempotents(r.product);
  for (int e : es) rep.forward.push_back(r.pair_index[e].second);

  Verdict bijective = pass_verdict();
  if (static_cast<int>(rep.forward.size()) != a.x_size) {
    bijective = fail_verdict(
        {"PointCountMismatch",
         {static_cast<int>(rep.forward.size()), a.x_size}});
  } else {
    std::vector<int> seen(a.x_size, -1);
    for (int i = 0; i < static_cast<int>(rep.forward.size()); ++i) {
      if (seen[rep.forward[i]] != -1) {
        bijective = fail_verdict(
            {"ForwardNotInjective", {seen[rep.forward[i]], i}});
        break;
      }
      seen[rep.forward[i]] = i;
    }
  }
  Verdict anchors = pass_verdict();
  Verdict equivariance = pass_verdict();
  if (bijective.holds) {
    const ActionMorphism m{identity_hom(a.s), rep.forward};
    if (auto w = check_action_morphism(back, a, m)) {
      (w->kind == "MorphismAnchorMismatch" ? anchors : equivariance) =
          fail_verdict(*w);
    }
  }
  rep.verdicts = {{"bijective", bijective},
                  {"anchors", anchors},
                  {"equivariance", equivariance}};
  detail::raise_if_failed(
      rep, "round trip through the semidirect product recovers the action");
  return rep;
}

/// Etale map -> induced action -> its semidirect product, then the explicit
/// map alpha(t) = (theta(t), t*t) is verified to be a star-isomorphism
/// commuting with the projections.
inline RoundTripReport roundtrip_etale(const SemigroupHom& theta,
                                       const StarStructure& star) {
  const EtaleAction mid = build_action_from_etale(theta, star);
  const SemidirectResult r = build_semidirect(mid);

  const FiniteSemigroup& t = theta.source;
  const std::vector<int> es = idempotents(t);
  std::vector<int> pos(t.n, -1);
  for (int i = 0; i < static_cast<int>(es.size()); ++i) pos[es[i]] = i;

  RoundTripReport rep;
  rep.direction = "etale";
  rep.forward.assign(t.n, -1);
  Verdict defined = pass_verdict();
  for (int u = 0; u < t.n; ++u) {
    const int dom = t.product(star.star[u], u);
    const int k = r.index_of(theta(u), pos[dom]);
    if (k < 0) {
      defined = fail_verdict({"ImageOutsideCarrier", {u}});
      break;
    }
    rep.forward[u] = k;
  }

  Verdict bijective = pass_verdict();
  Verdict homomorphism = pass_verdict();
  Verdict star_preserving = pass_verdict();
  Verdict projection_compatible = pass_verdict();
  if (defined.holds) {
    if (r.product.n != t.n) {
      bijective = fail_verdict({"SizeMismatch", {t.n, r.product.n}});
    } else {
      std::vector<int> seen(r.product.n, -1);
      for (int u = 0; u < t.n && bijective.holds; ++u) {
        if (seen[rep.forward[u]] != -1)
          bijective = fail_verdict({"NotInjective", {seen[rep.forward[u]], u}});
        seen[rep.forward[u]] = u;
      }
    }
    if (auto w = check_hom(SemigroupHom{t, r.product, rep.forward}))
      homomorphism = fail_verdict(*w);
    for (int u = 0; u < t.n && star_preserving.holds; ++u)
      if (rep.forward[star.star[u]] != r.star.star[rep.forward[u]])
        star_preserving = fail_verdict({"NotStarPreserving", {u}});
    for (int u = 0; u < t.n && projection_compatible.holds; ++u)
      if (r.projection(rep.forward[u]) != theta(u))
        projection_compatible = fail_verdict({"ProjectionMismatch", {u}});
  }
  rep.verdicts = {{"defined", defined},
                  {"bijective", bijective},
                  {"homomorphism", homomorphism},
                  {"star-preserving", star_preserving},
                  {"projection-compatible", projection_compatible}};
  detail::raise_if_failed(
      rep, "round trip through the induced action recovers the semigroup");
  return rep;
}

/// The canonical presentation of a right generalized inverse *-semigroup
/// over an inverse semigroup: its quotient by the minimum inverse congruence
/// together with the action induced by the natural map.
struct CanonicalAction {
  GammaQuotient gq;
  EtaleAction action;  // action of gq.quotient on the idempotents
};

inline CanonicalAction canonical_action(const StarStructure& t) {
  CanonicalAction c{gamma_quotient(t.base), {}};
  c.action = build_action_from_etale(c.gq.projection, t);
  return c;
}

/// Star-homomorphism direction of the global-support correspondence: a
/// star-preserving homomorphism theta between two *-semigroups descends to
/// a two-base morphism between their canonical actions.
struct InducedActionMorphism {
  CanonicalAction source;
  CanonicalAction target;
  ActionMorphism morphism;  // alpha on the quotients, beta on the idempotents
};

inline InducedActionMorphism global_support_functor(const StarStructure& s,
                                                    const StarStructure& t,
                                                    const SemigroupHom& theta) {
  if (theta.source.table != s.base.table ||
      theta.target.table != t.base.table) {
    throw invalid_input(Witness{"MorphismBaseMismatch", {}},
                        "map does not join the two star-semigroups");
  }
  if (auto w = check_hom(theta)) {
    throw precondition_error(*w, "map is not a homomorphism");
  }
  for (int x = 0; x < s.base.n; ++x) {
    if (theta(s.star[x]) != t.star[theta(x)]) {
      throw precondition_error(Witness{"NotStarPreserving", {x}},
                               "map does not commute with the stars");
    }
  }

  InducedActionMorphism out{canonical_action(s), canonical_action(t), {}};
  const SemigroupHom& ps = out.source.gq.projection;
  const SemigroupHom& pt = out.target.gq.projection;
  for (int a = 0; a < s.base.n; ++a) {
    for (int b = a + 1; b < s.base.n; ++b) {
      if (ps(a) == ps(b) && pt(theta(a)) != pt(theta(b))) {
        throw falsification_error(
            "star-homomorphisms descend to the quotients",
            Witness{"QuotientMapIllDefined", {a, b}},
            "congruent elements have incongruent images");
      }
    }
  }
  std::vector<int> qmap(out.source.gq.quotient.n, -1);
  for (int a = 0; a < s.base.n; ++a) qmap[ps(a)] = pt(theta(a));
  SemigroupHom theta1{out.source.gq.quotient, out.target.gq.quotient,
                      std::move(qmap)};
  if (auto w = check_hom(theta1)) {
    throw falsification_error("induced quotient map is a homomorphism", *w,
                              "the descended map is not multiplicative");
  }

  const std::vector<int> es = idempotents(s.base);
  const std::vector<int> et = idempotents(t.base);
  std::vector<int> pos(t.base.n, -1);
  for (int i = 0; i < static_cast<int>(et.size()); ++i) pos[et[i]] = i;
  std::vector<int> beta(es.size());
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    const int image = theta(es[i]);
    if (pos[image] < 0)
      throw std::logic_error("homomorphic image of an idempotent is not "
                             "idempotent");
    beta[i] = pos[image];
  }
  out.morphism = ActionMorphism{std::move(theta1), std::move(beta)};
  if (auto w = check_action_morphism(out.source.action, out.target.action,
                                     out.morphism)) {
    throw falsification_error(
        "induced quotient and idempotent maps form an action morphism", *w,
        "the descended pair broke a morphism equation");
  }
  return out;
}

/// Action-morphism direction of the global-support correspondence: a
/// two-base morphism between actions with global support induces the
/// star-homomorphism (s, x) -> (alpha(s), beta(x)) between the semidirect
/// products.
inline SemigroupHom global_support_functor(const EtaleAction& a,
                                           const EtaleAction& b,
                                           const ActionMorphism& m,
                                           const SemidirectResult& ra,
                                           const SemidirectResult& rb) {
  detail::require_built_from(ra, a, "source");
  detail::require_built_from(rb, b, "target");
  if (auto w = check_action_morphism(a, b, m)) {
    throw precondition_error(*w, "not an action morphism");
  }
  if (!has_global_support(a) || !has_global_support(b)) {
    throw precondition_error(Witness{"NoGlobalSupport", {}},
                             "both actions must have global support");
  }

  const int n = ra.product.n;
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) {
    const auto [t, x] = ra.pair_index[i];
    const int k = rb.index_of(m.alpha(t), m.beta[x]);
    if (k < 0) {
      throw falsification_error(
          "induced map between semidirect products lands in the carrier",
          Witness{"ImageOutsideCarrier", {i}},
          "(alpha(s), beta(x)) is not in the target carrier");
    }
    map[i] = k;
  }
  SemigroupHom hom{ra.product, rb.product, std::move(map)};
  if (auto w = check_hom(hom)) {
    throw falsification_error(
        "induced map between semidirect products is a homomorphism", *w,
        "(s,x) -> (alpha(s), beta(x)) is not multiplicative");
  }
  for (int i = 0; i < n; ++i) {
    if (hom.map[ra.star.star[i]] != rb.star.star[hom.map[i]]) {
      throw falsification_error(
          "induced map between semidirect products preserves the star",
          Witness{"NotStarPreserving", {i}},
          "induced map and star do not commute at this element");
    }
  }
  return hom;
}

/// The quotient by the minimum inverse congruence together with confirmation
/// that the natural map is a surjective etale map — the sense in which the
/// input sits over an inverse semigroup.
struct OverInverseResult {
  GammaQuotient gq;
  EtaleHomReport report;
  bool over = false;
};

inline OverInverseResult over_inverse(const StarStructure& t) {
  {
    const ClassificationReport cls = classify(t.base);
    if (!cls.is_right_generalized_inverse()) {
      throw precondition_error(cls.right_generalized_inverse.witness
                                   ? *cls.right_generalized_inverse.witness
                                   : Witness{"NotRightGeneralizedInverse", {}},
                               "input is not right generalized inverse");
    }
    const StarReport rep = check_star(t.base, t.star);
    if (!rep.all_axioms()) {
      throw precondition_error(Witness{"StarAxiomsFail", {}},
                               "star does not satisfy the axioms");
    }
  }
  OverInverseResult out{gamma_quotient(t.base), {}, false};
  out.report = check_etale_hom(out.gq.projection, t);
  const bool surjective = is_surjective(out.gq.projection);
  out.over = surjective && out.report.etale;
  if (!out.over) {
    Witness w{"ProjectionNotSurjective", {}};
    if (surjective) {
      const auto bad = std::find_if(out.report.restrictions.begin(),
                                    out.report.restrictions.end(),
                                    [](const Verdict& v) { return !v.holds; });
      w = *bad->witness;
    }
    throw falsification_error(
        "natural map onto the quotient is a surjective etale map", w,
        "the input does not sit etale over its quotient");
  }
  return out;
}

}  // namespace sgt

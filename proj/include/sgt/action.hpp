#pragma once

// Actions of an inverse semigroup on a finite point set, anchored by a map
// p: X -> E(S) that is compatible with the action (p(x)x = x and
// p(sx) = s p(x) s^-1).  Alongside the actions themselves this file covers
// their morphisms (same-base and two-base), the induced partial order on X,
// global support, and the bijective-restriction condition on homomorphisms
// that the semidirect construction in equivalence.hpp pivots on.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/gamma.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/star.hpp"

namespace sgt {

struct EtaleAction {
  FiniteSemigroup s;     // inverse base
  int x_size = 0;
  std::vector<int> p;    // point -> idempotent of s
  std::vector<int> act;  // row-major |S| x |X|; act[a][x] is a.x

  int apply(int a, int x) const {
    return act[static_cast<std::size_t>(a) * x_size + x];
  }
  bool operator==(const EtaleAction&) const = default;
};

namespace detail {

inline void require_action_shape(const FiniteSemigroup& s, int x_size,
                                 const std::vector<int>& p,
                                 const std::vector<int>& act) {
  if (x_size <= 0) {
    throw invalid_input(Witness{"EmptyPointSet", {x_size}},
                        "action needs at least one point");
  }
  if (static_cast<int>(p.size()) != x_size) {
    throw invalid_input(Witness{"BadDimensions", {static_cast<int>(p.size()), x_size}},
                        "anchor length does not match the point count");
  }
  if (static_cast<long long>(act.size()) != static_cast<long long>(s.n) * x_size) {
    throw invalid_input(Witness{"BadDimensions", {static_cast<int>(act.size()), s.n, x_size}},
                        "action table is not |S| x |X|");
  }
  for (int x = 0; x < x_size; ++x) {
    if (p[x] < 0 || p[x] >= s.n) {
      throw invalid_input(Witness{"OutOfRangeEntry", {x, p[x]}},
                          "anchor value outside the semigroup");
    }
  }
  for (std::size_t i = 0; i < act.size(); ++i) {
    if (act[i] < 0 || act[i] >= x_size) {
      throw invalid_input(Witness{"OutOfRangeEntry", {static_cast<int>(i), act[i]}},
                          "action table entry outside the point set");
    }
  }
  const ClassificationReport cls = classify(s);
  if (!cls.is_inverse()) {
    throw invalid_input(cls.inverse.witness ? *cls.inverse.witness
                                            : Witness{"BaseNotInverse", {}},
                        "action base must be an inverse semigroup");
  }
}

}  // namespace detail

/// Shape-checked assembly with NO invariant verification.  Exists so tests
/// and the fault-injection hook can route a broken table through the loud
/// verification paths; everything else should use load_action.
inline EtaleAction assemble_action_unchecked(FiniteSemigroup s, int x_size,
                                             std::vector<int> p,
                                             std::vector<int> act) {
  detail::require_action_shape(s, x_size, p, act);
  return EtaleAction{std::move(s), x_size, std::move(p), std::move(act)};
}

/// First violated action invariant, if any: anchor values idempotent, the
/// action law, p(x)x = x, and p(sx) = s p(x) s^-1, in that order.
inline std::optional<Witness> action_witness(const EtaleAction& a) {
  const FiniteSemigroup& s = a.s;
  for (int x = 0; x < a.x_size; ++x) {
    if (!is_idempotent(s, a.p[x])) {
      return Witness{"PNotIdempotent", {x}};
    }
  }
  for (int t1 = 0; t1 < s.n; ++t1) {
    for (int t2 = 0; t2 < s.n; ++t2) {
      const int prod = s.product(t1, t2);
      for (int x = 0; x < a.x_size; ++x) {
        if (a.apply(prod, x) != a.apply(t1, a.apply(t2, x))) {
          return Witness{"ActionLawViolated", {t1, t2, x}};
        }
      }
    }
  }
  for (int x = 0; x < a.x_size; ++x) {
    if (a.apply(a.p[x], x) != x) {
      return Witness{"E1Violated", {x}};
    }
  }
  const std::vector<int> inv = inversion_star(s);
  for (int t = 0; t < s.n; ++t) {
    for (int x = 0; x < a.x_size; ++x) {
      if (a.p[a.apply(t, x)] != s.product(t, a.p[x], inv[t])) {
        return Witness{"E2Violated", {t, x}};
      }
    }
  }
  return std::nullopt;
}

/// Validating constructor: shape plus all four invariants.
inline EtaleAction load_action(FiniteSemigroup s, int x_size, std::vector<int> p,
                               std::vector<int> act) {
  EtaleAction a = assemble_action_unchecked(std::move(s), x_size, std::move(p),
                                            std::move(act));
  if (auto w = action_witness(a)) {
    throw invalid_input(*w, "action invariants fail");
  }
  return a;
}

struct ActionOrderResult {
  Relation order;                    // x <= y iff some idempotent sends y to x
  std::optional<Witness> violation;  // first partial-order axiom failure
};

/// The relation x <= y iff e.y = x for some idempotent e.  Reflexive on any
/// valid action; antisymmetry and transitivity are checked rather than
/// assumed, and a violation is reported instead of thrown.
inline ActionOrderResult action_order(const EtaleAction& a) {
  ActionOrderResult out{Relation(a.x_size), std::nullopt};
  const std::vector<int> es = idempotents(a.s);
  for (int y = 0; y < a.x_size; ++y) {
    for (int e : es) out.order.add(a.apply(e, y), y);
  }
  out.violation = partial_order_witness(out.order);
  return out;
}

/// True when the anchor map hits every idempotent of the base.
inline bool has_global_support(const EtaleAction& a) {
  std::vector<char> hit(a.s.n, 0);
  for (int x = 0; x < a.x_size; ++x) hit[a.p[x]] = 1;
  for (int e : idempotents(a.s)) {
    if (!hit[e]) return false;
  }
  return true;
}

/// A morphism of actions: a base homomorphism alpha (the identity in the
/// same-base category) together with a point map beta.
struct ActionMorphism {
  SemigroupHom alpha;
  std::vector<int> beta;
};

inline ActionMorphism identity_action_morphism(const EtaleAction& a) {
  ActionMorphism m{identity_hom(a.s), std::vector<int>(a.x_size)};
  for (int x = 0; x < a.x_size; ++x) m.beta[x] = x;
  return m;
}

/// Both morphism equations, checked exhaustively: anchors are intertwined
/// (q(beta x) = alpha(p x)) and beta is equivariant over alpha.
inline std::optional<Witness> check_action_morphism(const EtaleAction& a,
                                                    const EtaleAction& b,
                                                    const ActionMorphism& m) {
  if (m.alpha.source.table != a.s.table || m.alpha.target.table != b.s.table) {
    throw invalid_input(Witness{"MorphismBaseMismatch", {}},
                        "base map does not join the two action bases");
  }
  if (auto w = check_hom(m.alpha)) {
    throw invalid_input(*w, "base map is not a homomorphism");
  }
  if (static_cast<int>(m.beta.size()) != a.x_size) {
    throw invalid_input(Witness{"BadDimensions", {static_cast<int>(m.beta.size()), a.x_size}},
                        "point map length does not match the source points");
  }
  for (int x = 0; x < a.x_size; ++x) {
    if (m.beta[x] < 0 || m.beta[x] >= b.x_size) {
      throw invalid_input(Witness{"OutOfRangeEntry", {x, m.beta[x]}},
                          "point map value outside the target points");
    }
  }

  for (int x = 0; x < a.x_size; ++x) {
    if (b.p[m.beta[x]] != m.alpha(a.p[x])) {
      return Witness{"MorphismAnchorMismatch", {x}};
    }
  }
  for (int t = 0; t < a.s.n; ++t) {
    for (int x = 0; x < a.x_size; ++x) {
      if (m.beta[a.apply(t, x)] != b.apply(m.alpha(t), m.beta[x])) {
        return Witness{"MorphismNotEquivariant", {t, x}};
      }
    }
  }
  return std::nullopt;
}

/// Everything check_etale_hom decides about a homomorphism theta from a
/// right generalized inverse *-semigroup into an inverse semigroup.  The
/// headline flag is etale: theta restricts to a bijection Te -> S theta(e)
/// for every idempotent e.
struct EtaleHomReport {
  std::vector<int> idems;             // source idempotents, ascending
  std::vector<Verdict> restrictions;  // bijectivity of theta on Te, per idem
  bool etale = false;
  bool te_injective = false;          // every restriction at least injective
  Partition kernel;
  std::vector<int> image;             // sorted image of theta
  Verdict image_left_ideal;
};

inline EtaleHomReport check_etale_hom(const SemigroupHom& theta,
                                      const StarStructure& star) {
  if (star.base.table != theta.source.table) {
    throw invalid_input(Witness{"StarBaseMismatch", {}},
                        "star structure is not over the map's source");
  }
  if (auto w = check_hom(theta)) {
    throw invalid_input(*w, "map is not a homomorphism");
  }
  const ClassificationReport src = classify(theta.source);
  if (!src.is_right_generalized_inverse()) {
    throw precondition_error(src.right_generalized_inverse.witness
                                 ? *src.right_generalized_inverse.witness
                                 : Witness{"NotRightGeneralizedInverse", {}},
                             "source is not right generalized inverse");
  }
  {
    const StarReport rep = check_star(theta.source, star.star);
    if (!rep.all_axioms()) {
      throw precondition_error(Witness{"StarAxiomsFail", {}},
                               "source star does not satisfy the axioms");
    }
  }
  const ClassificationReport dst = classify(theta.target);
  if (!dst.is_inverse()) {
    throw precondition_error(dst.inverse.witness ? *dst.inverse.witness
                                                 : Witness{"NotInverse", {}},
                             "target is not inverse");
  }

  const FiniteSemigroup& t = theta.source;
  const FiniteSemigroup& s = theta.target;

  EtaleHomReport rep;
  rep.idems = idempotents(t);
  rep.te_injective = true;
  for (int e : rep.idems) {
    std::vector<int> te;
    for (int a = 0; a < t.n; ++a) te.push_back(t.product(a, e));
    std::sort(te.begin(), te.end());
    te.erase(std::unique(te.begin(), te.end()), te.end());

    std::vector<char> ideal(s.n, 0);
    for (int a = 0; a < s.n; ++a) ideal[s.product(a, theta(e))] = 1;

    Verdict v = pass_verdict();
    std::vector<int> preimage(s.n, -1);
    for (int a : te) {
      const int img = theta(a);
      if (preimage[img] != -1) {
        v = fail_verdict({"RestrictionNotInjective", {e, preimage[img], a}});
        rep.te_injective = false;
        break;
      }
      preimage[img] = a;
    }
    if (v.holds) {
      for (int b = 0; b < s.n; ++b) {
        if (ideal[b] && preimage[b] == -1) {
          v = fail_verdict({"RestrictionNotOnto", {e, b}});
          break;
        }
      }
    }
    rep.restrictions.push_back(std::move(v));
  }
  rep.etale = std::all_of(rep.restrictions.begin(), rep.restrictions.end(),
                          [](const Verdict& v) { return v.holds; });

  rep.kernel = kernel_partition(theta);
  rep.image = theta.map;
  std::sort(rep.image.begin(), rep.image.end());
  rep.image.erase(std::unique(rep.image.begin(), rep.image.end()), rep.image.end());

  rep.image_left_ideal = pass_verdict();
  std::vector<char> in_image(s.n, 0);
  for (int b : rep.image) in_image[b] = 1;
  for (int a = 0; a < s.n && rep.image_left_ideal.holds; ++a) {
    for (int b : rep.image) {
      if (!in_image[s.product(a, b)]) {
        rep.image_left_ideal = fail_verdict({"ImageNotLeftIdeal", {a, b}});
        break;
      }
    }
  }
  return rep;
}

/// The three conditions tied together by the bijective-restriction property,
/// with their pairwise implications asserted on this instance:
///   etale            implies the image is a left ideal,
///   te_injective     implies kernel = minimum inverse congruence,
///   kernel = gamma and left-ideal image together imply etale.
struct EtaleCharacterization {
  EtaleHomReport report;
  bool etale = false;
  bool te_injective = false;
  bool kernel_is_gamma = false;
  bool image_left_ideal = false;
};

inline EtaleCharacterization etale_characterization(const SemigroupHom& theta,
                                                    const StarStructure& star) {
  EtaleCharacterization out;
  out.report = check_etale_hom(theta, star);
  out.etale = out.report.etale;
  out.te_injective = out.report.te_injective;
  out.image_left_ideal = out.report.image_left_ideal.holds;
  out.kernel_is_gamma = out.report.kernel == gamma(theta.source).partition;

  if (out.etale && !out.image_left_ideal) {
    throw falsification_error("etale maps have left-ideal images",
                              *out.report.image_left_ideal.witness,
                              "bijective restrictions but the image is not a "
                              "left ideal");
  }
  if (out.te_injective && !out.kernel_is_gamma) {
    const Partition& g = gamma(theta.source).partition;
    Witness w{"KernelGammaMismatch", {}};
    for (int a = 0; a < theta.source.n && w.elements.empty(); ++a) {
      for (int b = a + 1; b < theta.source.n; ++b) {
        if (out.report.kernel.same_class(a, b) != g.same_class(a, b)) {
          w.elements = {a, b};
          break;
        }
      }
    }
    throw falsification_error(
        "injective restrictions force kernel = minimum inverse congruence", w,
        "restrictions are injective yet the kernel differs from the minimum "
        "inverse congruence");
  }
  if (out.kernel_is_gamma && out.image_left_ideal && !out.etale) {
    const auto bad = std::find_if(out.report.restrictions.begin(),
                                  out.report.restrictions.end(),
                                  [](const Verdict& v) { return !v.holds; });
    throw falsification_error(
        "kernel and image conditions force etale", *bad->witness,
        "kernel is the minimum inverse congruence and the image is a left "
        "ideal, yet a restriction is not bijective");
  }
  return out;
}

}  // namespace sgt

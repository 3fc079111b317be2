#pragma once

// The minimum inverse congruence on an orthodox semigroup: two elements are
// identified exactly when they have the same set of inverses.  This file
// builds that congruence, quotients by it, and derives the coordinate
// bijection s -> (class of s, s's) that the rest of the library leans on.
//
// Every structural claim this file relies on (the inverse-set dichotomy,
// compatibility of the relation, inverseness of the quotient, bijectivity of
// the coordinates) is re-verified on each instance; a violation raises
// falsification_error rather than limping on.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/semigroup.hpp"
#include "sgt/star.hpp"

namespace sgt {

struct Congruence {
  FiniteSemigroup base;
  Partition partition;
};

/// First left/right compatibility violation of `p` on `s`, if any.
inline std::optional<Witness> congruence_witness(const FiniteSemigroup& s,
                                                 const Partition& p) {
  for (int a = 0; a < s.n; ++a) {
    for (int b = a + 1; b < s.n; ++b) {
      if (!p.same_class(a, b)) continue;
      for (int c = 0; c < s.n; ++c) {
        if (!p.same_class(s.product(c, a), s.product(c, b))) {
          return Witness{"CongruenceNotLeftCompatible", {c, a, b}};
        }
        if (!p.same_class(s.product(a, c), s.product(b, c))) {
          return Witness{"CongruenceNotRightCompatible", {a, b, c}};
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline void require_canonical_partition(const FiniteSemigroup& s,
                                        const Partition& p) {
  if (p.size() != s.n) {
    throw invalid_input(Witness{"PartitionSizeMismatch", {p.size(), s.n}},
                        "partition does not cover the carrier");
  }
  for (int a = 0; a < s.n; ++a) {
    const int id = p.class_of[a];
    if (id < 0 || id > a || p.class_of[id] != id) {
      throw invalid_input(Witness{"PartitionNotCanonical", {a, id}},
                          "class ids must be minimum member indices");
    }
  }
}

inline void require_same_base(const FiniteSemigroup& s, const Congruence& c) {
  if (c.base.n != s.n || c.base.table != s.table) {
    throw invalid_input(Witness{"CongruenceBaseMismatch", {c.base.n, s.n}},
                        "congruence was built over a different semigroup");
  }
}

}  // namespace detail

/// The relation "same inverse set" on an orthodox semigroup, verified to be
/// a congruence before it is returned.
inline Congruence gamma(const FiniteSemigroup& s) {
  const ClassificationReport cls = classify(s);
  if (!cls.is_orthodox()) {
    throw precondition_error(cls.orthodox.witness ? *cls.orthodox.witness
                                                  : Witness{"NotOrthodox", {}},
                             "the minimum inverse congruence needs an orthodox base");
  }

  std::vector<std::vector<int>> v(s.n);
  for (int a = 0; a < s.n; ++a) v[a] = inverses_of(s, a);

  // Inverse sets of two elements are either equal or disjoint.  Overlap
  // without equality would make the relation ill-behaved, so it is treated
  // as a falsified claim, not a soft failure.
  for (int a = 0; a < s.n; ++a) {
    for (int b = a + 1; b < s.n; ++b) {
      if (v[a] == v[b]) continue;
      bool overlap = false;
      std::size_t i = 0, j = 0;
      while (i < v[a].size() && j < v[b].size()) {
        if (v[a][i] == v[b][j]) { overlap = true; break; }
        (v[a][i] < v[b][j]) ? ++i : ++j;
      }
      if (overlap) {
        throw falsification_error(
            "inverse-set dichotomy", Witness{"InverseSetsOverlap", {a, b}},
            "inverse sets overlap without being equal on an orthodox base");
      }
    }
  }

  std::map<std::vector<int>, int> seen;
  std::vector<int> labels(s.n);
  for (int a = 0; a < s.n; ++a) {
    labels[a] = seen.emplace(v[a], static_cast<int>(seen.size())).first->second;
  }
  Congruence c{s, make_partition(std::move(labels))};

  if (auto w = congruence_witness(s, c.partition)) {
    throw falsification_error("minimum inverse congruence compatibility", *w,
                              "same-inverse-set relation is not compatible with "
                              "multiplication on an orthodox base");
  }
  return c;
}

struct QuotientResult {
  FiniteSemigroup quotient;
  SemigroupHom projection;  // the natural map, surjective by construction
};

/// Quotient of `s` by a verified congruence.  Quotient elements are the
/// congruence classes, ordered by their minimum member.
inline QuotientResult quotient(const FiniteSemigroup& s, const Congruence& c) {
  detail::require_same_base(s, c);
  detail::require_canonical_partition(s, c.partition);
  if (auto w = congruence_witness(s, c.partition)) {
    throw precondition_error(*w, "partition is not a congruence");
  }

  const std::vector<int> reps = c.partition.class_ids();
  const int qn = static_cast<int>(reps.size());
  std::vector<int> pos(s.n, -1);
  for (int i = 0; i < qn; ++i) pos[reps[i]] = i;

  std::vector<int> table(static_cast<std::size_t>(qn) * qn);
  for (int i = 0; i < qn; ++i) {
    for (int j = 0; j < qn; ++j) {
      const int prod = s.product(reps[i], reps[j]);
      table[static_cast<std::size_t>(i) * qn + j] = pos[c.partition.class_of[prod]];
    }
  }

  QuotientResult out;
  out.quotient = load_semigroup(qn, std::move(table), qn);
  std::vector<int> map(s.n);
  for (int a = 0; a < s.n; ++a) map[a] = pos[c.partition.class_of[a]];
  out.projection = SemigroupHom{s, out.quotient, std::move(map)};
  if (check_hom(out.projection)) {
    throw std::logic_error("quotient projection is not multiplicative");
  }
  return out;
}

struct GammaQuotient {
  Congruence congruence;
  FiniteSemigroup quotient;
  SemigroupHom projection;
};

/// gamma + quotient in one step, with the quotient verified inverse.
inline GammaQuotient gamma_quotient(const FiniteSemigroup& s) {
  Congruence c = gamma(s);
  QuotientResult q = quotient(s, c);
  const ClassificationReport cls = classify(q.quotient);
  if (!cls.is_inverse()) {
    throw falsification_error(
        "quotient by the minimum inverse congruence is inverse",
        cls.inverse.witness ? *cls.inverse.witness : Witness{"NotInverse", {}},
        "quotient fails to be inverse on an orthodox base");
  }
  return GammaQuotient{std::move(c), std::move(q.quotient), std::move(q.projection)};
}

/// A congruence is idempotent pure when any element congruent to its own
/// square is already idempotent.
inline std::optional<Witness> check_idempotent_pure(const FiniteSemigroup& s,
                                                    const Congruence& c) {
  detail::require_same_base(s, c);
  for (int a = 0; a < s.n; ++a) {
    const int sq = s.product(a, a);
    if (c.partition.same_class(a, sq) && a != sq) {
      return Witness{"NotIdempotentPure", {a}};
    }
  }
  return std::nullopt;
}

/// Distinct elements of Se (e idempotent) must land in distinct classes.
inline std::optional<Witness> check_left_ideal_separation(const FiniteSemigroup& s,
                                                          const Congruence& c) {
  detail::require_same_base(s, c);
  for (int e : idempotents(s)) {
    std::vector<char> in_se(s.n, 0);
    for (int a = 0; a < s.n; ++a) in_se[s.product(a, e)] = 1;
    for (int a = 0; a < s.n; ++a) {
      if (!in_se[a]) continue;
      for (int b = a + 1; b < s.n; ++b) {
        if (in_se[b] && c.partition.same_class(a, b)) {
          return Witness{"LeftIdealNotSeparated", {e, a, b}};
        }
      }
    }
  }
  return std::nullopt;
}

/// When the class of `a` absorbs the class of an idempotent `e` on the
/// right, the element ae realizes that absorption inside Se: it stays in
/// the class of `a` and lies in Se.
inline std::optional<Witness> check_absorption_witness(const FiniteSemigroup& s,
                                                       const Congruence& c) {
  detail::require_same_base(s, c);
  for (int e : idempotents(s)) {
    std::vector<char> in_se(s.n, 0);
    for (int a = 0; a < s.n; ++a) in_se[s.product(a, e)] = 1;
    for (int a = 0; a < s.n; ++a) {
      const int b = s.product(a, e);
      if (!c.partition.same_class(a, b)) continue;
      if (!in_se[b] || !c.partition.same_class(b, a)) {
        return Witness{"AbsorptionWitnessFails", {a, e}};
      }
    }
  }
  return std::nullopt;
}

/// A surjective homomorphism between regular semigroups is an L-cover when
/// it restricts to a bijection on the L-class of every idempotent.
inline std::optional<Witness> check_l_cover(const SemigroupHom& h) {
  if (auto w = check_hom(h)) {
    throw invalid_input(*w, "map is not a homomorphism");
  }
  if (!is_surjective(h)) {
    throw precondition_error(Witness{"NotSurjective", {}},
                             "L-cover check needs a surjective map");
  }
  const ClassificationReport src = classify(h.source);
  if (!src.regular.holds) {
    throw precondition_error(*src.regular.witness, "source is not regular");
  }
  const ClassificationReport dst = classify(h.target);
  if (!dst.regular.holds) {
    throw precondition_error(*dst.regular.witness, "target is not regular");
  }

  const Partition sl = green_relations(h.source).l;
  const Partition tl = green_relations(h.target).l;

  for (int e : idempotents(h.source)) {
    // Injectivity of h on the L-class of e.
    for (int a = 0; a < h.source.n; ++a) {
      if (!sl.same_class(a, e)) continue;
      for (int b = a + 1; b < h.source.n; ++b) {
        if (sl.same_class(b, e) && h(a) == h(b)) {
          return Witness{"LClassMapNotInjective", {e, a, b}};
        }
      }
    }
    // Surjectivity onto the L-class of h(e).
    std::vector<char> hit(h.target.n, 0);
    for (int a = 0; a < h.source.n; ++a) {
      if (sl.same_class(a, e)) hit[h(a)] = 1;
    }
    for (int t = 0; t < h.target.n; ++t) {
      if (tl.same_class(t, h(e)) && !hit[t]) {
        return Witness{"LClassMapNotSurjective", {e, t}};
      }
    }
  }
  return std::nullopt;
}

struct Coordinatization {
  Congruence congruence;
  std::vector<std::pair<int, int>> pairs;  // (class id, idempotent), lexicographic
  std::vector<int> kappa;                  // element -> index into pairs
};

/// The coordinate bijection on a right generalized inverse semigroup:
/// s -> (class of s, s's) for any inverse s' of s.  Both the independence of
/// the choice of s' and the bijectivity onto the admissible pairs are
/// treated as falsifiable claims.
inline Coordinatization coordinatize(const FiniteSemigroup& s) {
  const ClassificationReport cls = classify(s);
  if (!cls.is_right_generalized_inverse()) {
    throw precondition_error(cls.right_generalized_inverse.witness
                                 ? *cls.right_generalized_inverse.witness
                                 : Witness{"NotRightGeneralizedInverse", {}},
                             "coordinates need a right generalized inverse base");
  }

  Coordinatization out;
  out.congruence = gamma(s);
  const Partition& part = out.congruence.partition;

  // d[a] = s'a for every inverse s' of a; verified independent of s'.
  std::vector<int> d(s.n);
  for (int a = 0; a < s.n; ++a) {
    const std::vector<int> inv = inverses_of(s, a);
    d[a] = s.product(inv.front(), a);
    for (int other : inv) {
      if (s.product(other, a) != d[a]) {
        throw falsification_error(
            "coordinate idempotent independent of inverse choice",
            Witness{"CoordinateIdempotentVaries", {a, inv.front(), other}},
            "s'a depends on the chosen inverse s'");
      }
    }
  }

  // Admissible pairs: (class c, idempotent e) with e in the class of the
  // coordinate idempotent of c.
  const std::vector<int> es = idempotents(s);
  std::map<std::pair<int, int>, int> index;
  for (int c : part.class_ids()) {
    const int dc = part.class_of[d[c]];
    for (int e : es) {
      if (part.class_of[e] == dc) {
        index.emplace(std::pair<int, int>{c, e}, static_cast<int>(out.pairs.size()));
        out.pairs.emplace_back(c, e);
      }
    }
  }

  out.kappa.resize(s.n);
  std::vector<int> preimage(out.pairs.size(), -1);
  for (int a = 0; a < s.n; ++a) {
    const auto it = index.find({part.class_of[a], d[a]});
    if (it == index.end()) {
      throw std::logic_error("coordinate pair missing from the admissible set");
    }
    if (preimage[it->second] != -1) {
      throw falsification_error(
          "coordinates separate elements",
          Witness{"CoordinatesCollide", {preimage[it->second], a}},
          "two elements share a coordinate pair");
    }
    preimage[it->second] = a;
    out.kappa[a] = it->second;
  }
  for (std::size_t i = 0; i < preimage.size(); ++i) {
    if (preimage[i] == -1) {
      throw falsification_error(
          "coordinates are onto",
          Witness{"CoordinatePairUnrealized", {out.pairs[i].first, out.pairs[i].second}},
          "admissible pair has no preimage");
    }
  }
  return out;
}

/// Under the natural map, a star must turn into inversion in the quotient.
inline std::optional<Witness> check_star_projects_to_inversion(
    const FiniteSemigroup& s, const std::vector<int>& star) {
  detail::require_star_shape(s, star);
  const GammaQuotient g = gamma_quotient(s);
  const std::vector<int> qstar = inversion_star(g.quotient);
  for (int a = 0; a < s.n; ++a) {
    if (g.projection(star[a]) != qstar[g.projection(a)]) {
      return Witness{"StarDoesNotProjectToInversion", {a}};
    }
  }
  return std::nullopt;
}

}  // namespace sgt

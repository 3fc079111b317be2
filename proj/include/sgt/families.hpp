#pragma once

// Deterministic generators for the example semigroups, star structures, and
// actions the verification suite runs on: right zero semigroups, chain
// semilattices, cyclic groups, right groups with a chosen group action on
// the right-zero coordinate, symmetric inverse monoids, Brandt semigroups,
// the canonical actions (conjugation, left regular, orbit restrictions), a
// seeded randomized action builder, exhaustive star search on small
// carriers, and the corpus aggregator the acceptance suite consumes.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sgt/action.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/star.hpp"

namespace sgt {

/// A family member: the semigroup, its canonical star, printable element
/// labels, and whether the instance is boundary coverage beyond the core
/// correspondence (Brandt semigroups with zero).
struct GeneratedSemigroup {
  std::string family;
  FiniteSemigroup s;
  std::vector<int> star;
  std::vector<std::string> element_labels;
  bool extension = false;
};

/// n-element right zero semigroup: xy = y.  The identity map is a star.
inline GeneratedSemigroup right_zero(int n) {
  if (n < 1) throw invalid_input(Witness{"InvalidParams", {n}}, "right_zero needs n >= 1");
  GeneratedSemigroup g;
  g.family = "right_zero(" + std::to_string(n) + ")";
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = b;
  g.s = load_semigroup(n, std::move(table), n);
  g.star.resize(n);
  for (int a = 0; a < n; ++a) {
    g.star[a] = a;
    g.element_labels.push_back("r" + std::to_string(a));
  }
  return g;
}

/// n-element chain semilattice under minimum.  The identity map is the star.
inline GeneratedSemigroup semilattice_chain(int n) {
  if (n < 1) throw invalid_input(Witness{"InvalidParams", {n}}, "chain needs n >= 1");
  GeneratedSemigroup g;
  g.family = "chain(" + std::to_string(n) + ")";
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = std::min(a, b);
  g.s = load_semigroup(n, std::move(table), n);
  g.star.resize(n);
  for (int a = 0; a < n; ++a) {
    g.star[a] = a;
    g.element_labels.push_back("c" + std::to_string(a));
  }
  return g;
}

/// Cyclic group of order n under addition, starred by inversion.
inline GeneratedSemigroup group_cyclic(int n) {
  if (n < 1) throw invalid_input(Witness{"InvalidParams", {n}}, "cyclic needs n >= 1");
  GeneratedSemigroup g;
  g.family = "cyclic(" + std::to_string(n) + ")";
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  g.s = load_semigroup(n, std::move(table), n);
  g.star.resize(n);
  for (int a = 0; a < n; ++a) {
    g.star[a] = (n - a) % n;
    g.element_labels.push_back("g" + std::to_string(a));
  }
  return g;
}

/// Right group Z_k x R_m, encoded h*m + x, with (h,x)(h',x') = (h+h', x').
/// `pi` is the permutation by which the group generator acts on the m
/// right-zero points; the star is (h,x)* = (h^-1, h.x).  Requires pi^k = id.
inline GeneratedSemigroup right_group(int k, int m, const std::vector<int>& pi) {
  if (k < 1 || m < 1) {
    throw invalid_input(Witness{"InvalidParams", {k, m}},
                        "right_group needs k, m >= 1");
  }
  if (static_cast<int>(pi.size()) != m) {
    throw invalid_input(Witness{"InvalidParams", {static_cast<int>(pi.size()), m}},
                        "action permutation must have length m");
  }
  {
    std::vector<char> seen(m, 0);
    for (int x : pi) {
      if (x < 0 || x >= m || seen[x]) {
        throw invalid_input(Witness{"InvalidParams", {x}},
                            "action map is not a permutation");
      }
      seen[x] = 1;
    }
  }
  // powers[h][x] = pi^h(x)
  std::vector<std::vector<int>> powers(k, std::vector<int>(m));
  for (int x = 0; x < m; ++x) powers[0][x] = x;
  for (int h = 1; h < k; ++h)
    for (int x = 0; x < m; ++x) powers[h][x] = pi[powers[h - 1][x]];
  for (int x = 0; x < m; ++x) {
    if (pi[powers[k - 1][x]] != x) {
      throw invalid_input(Witness{"InvalidParams", {x}},
                          "permutation order must divide the group order");
    }
  }

  GeneratedSemigroup g;
  g.family = "right_group(" + std::to_string(k) + "," + std::to_string(m) + ")";
  const int n = k * m;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int h = 0; h < k; ++h)
    for (int x = 0; x < m; ++x)
      for (int h2 = 0; h2 < k; ++h2)
        for (int x2 = 0; x2 < m; ++x2)
          table[static_cast<std::size_t>(h * m + x) * n + (h2 * m + x2)] =
              ((h + h2) % k) * m + x2;
  g.s = load_semigroup(n, std::move(table), n);
  g.star.resize(n);
  for (int h = 0; h < k; ++h)
    for (int x = 0; x < m; ++x) {
      g.star[h * m + x] = ((k - h) % k) * m + powers[h][x];
      g.element_labels.push_back("(h=" + std::to_string(h) + ",x=" +
                                 std::to_string(x) + ")");
    }
  return g;
}

namespace detail {

// All partial injections on {0..n-1} as image vectors (-1 = undefined),
// in ascending lexicographic order with -1 smallest.
inline std::vector<std::vector<int>> partial_injections(int n) {
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, -1);
  while (true) {
    bool injective = true;
    std::vector<char> used(n, 0);
    for (int v : cur) {
      if (v >= 0) {
        if (used[v]) { injective = false; break; }
        used[v] = 1;
      }
    }
    if (injective) maps.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n - 1) cur[i--] = -1;
    if (i < 0) break;
    ++cur[i];
  }
  return maps;
}

}  // namespace detail

/// Symmetric inverse monoid I_n: all partial injections on n points with
/// (st)(i) = s(t(i)), elements in lexicographic image-vector order.
inline GeneratedSemigroup symmetric_inverse_monoid(int n) {
  if (n < 1) {
    throw invalid_input(Witness{"InvalidParams", {n}},
                        "symmetric_inverse_monoid needs n >= 1");
  }
  const std::vector<std::vector<int>> maps = detail::partial_injections(n);
  const int count = static_cast<int>(maps.size());
  auto index_of = [&](const std::vector<int>& m) {
    return static_cast<int>(
        std::lower_bound(maps.begin(), maps.end(), m) - maps.begin());
  };

  GeneratedSemigroup g;
  g.family = "symmetric_inverse_monoid(" + std::to_string(n) + ")";
  std::vector<int> table(static_cast<std::size_t>(count) * count);
  std::vector<int> comp(n);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      for (int i = 0; i < n; ++i) {
        const int mid = maps[b][i];
        comp[i] = mid < 0 ? -1 : maps[a][mid];
      }
      table[static_cast<std::size_t>(a) * count + b] = index_of(comp);
    }
  }
  g.s = load_semigroup(count, std::move(table), count);
  g.star = inversion_star(g.s);
  for (const auto& m : maps) {
    std::string label = "[";
    for (int i = 0; i < n; ++i) {
      if (i > 0) label += ",";
      label += m[i] < 0 ? "-" : std::to_string(m[i]);
    }
    g.element_labels.push_back(label + "]");
  }
  return g;
}

/// Brandt semigroup over the cyclic group of order `g_order` with k indices:
/// elements are a zero (index 0) and the triples (i, h, j) encoded as
/// 1 + i*g_order*k + h*k + j, with (i,h,j)(i',h',j') = (i, h+h', j') when
/// j = i' and zero otherwise.
inline GeneratedSemigroup brandt(int g_order, int k) {
  if (g_order < 1 || k < 1) {
    throw invalid_input(Witness{"InvalidParams", {g_order, k}},
                        "brandt needs group order and index count >= 1");
  }
  const int n = 1 + k * g_order * k;
  auto enc = [&](int i, int h, int j) { return 1 + i * g_order * k + h * k + j; };

  GeneratedSemigroup g;
  g.family = "brandt(" + std::to_string(g_order) + "," + std::to_string(k) + ")";
  g.extension = true;
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < k; ++i)
    for (int h = 0; h < g_order; ++h)
      for (int j = 0; j < k; ++j)
        for (int i2 = 0; i2 < k; ++i2)
          for (int h2 = 0; h2 < g_order; ++h2)
            for (int j2 = 0; j2 < k; ++j2)
              if (j == i2)
                table[static_cast<std::size_t>(enc(i, h, j)) * n +
                      enc(i2, h2, j2)] = enc(i, (h + h2) % g_order, j2);
  g.s = load_semigroup(n, std::move(table), n);
  g.star = inversion_star(g.s);
  g.element_labels.push_back("0");
  for (int i = 0; i < k; ++i)
    for (int h = 0; h < g_order; ++h)
      for (int j = 0; j < k; ++j)
        g.element_labels.push_back("(" + std::to_string(i) + "," +
                                   std::to_string(h) + "," + std::to_string(j) +
                                   ")");
  return g;
}

/// A semigroup family member by name; see the individual generators.
/// Families: right_zero(n), chain(n), cyclic(n), right_group(k,m[,shift]),
/// symmetric_inverse_monoid(n), brandt(g,k).  right_group's optional third
/// parameter selects the generator action: 0 = trivial, 1 = the m-cycle
/// x -> x+1 (whose order must divide k).
struct FamilySpec {
  std::string family;
  std::vector<int> params;
  unsigned seed = 0;
};

inline GeneratedSemigroup generate(const FamilySpec& spec) {
  const auto need = [&](std::size_t lo, std::size_t hi) {
    if (spec.params.size() < lo || spec.params.size() > hi) {
      throw invalid_input(Witness{"InvalidParams",
                                  {static_cast<int>(spec.params.size())}},
                          "wrong number of parameters for " + spec.family);
    }
  };
  if (spec.family == "right_zero") { need(1, 1); return right_zero(spec.params[0]); }
  if (spec.family == "chain") { need(1, 1); return semilattice_chain(spec.params[0]); }
  if (spec.family == "cyclic") { need(1, 1); return group_cyclic(spec.params[0]); }
  if (spec.family == "right_group") {
    need(2, 3);
    const int m = spec.params[1];
    std::vector<int> pi(m);
    for (int x = 0; x < m; ++x) pi[x] = x;
    if (spec.params.size() == 3 && spec.params[2] != 0) {
      for (int x = 0; x < m; ++x) pi[x] = (x + 1) % m;
    }
    return right_group(spec.params[0], m, pi);
  }
  if (spec.family == "symmetric_inverse_monoid") {
    need(1, 1);
    return symmetric_inverse_monoid(spec.params[0]);
  }
  if (spec.family == "brandt") { need(2, 2); return brandt(spec.params[0], spec.params[1]); }
  throw invalid_input(Witness{"InvalidFamily", {}},
                      "unknown family '" + spec.family + "'");
}

/// Conjugation action of an inverse semigroup on its idempotents:
/// X = E(S), p the identity embedding, s.e = ses^-1.
inline EtaleAction conjugation_action(const FiniteSemigroup& s) {
  const std::vector<int> inv = inversion_star(s);
  const std::vector<int> es = idempotents(s);
  std::vector<int> pos(s.n, -1);
  const int xs = static_cast<int>(es.size());
  for (int i = 0; i < xs; ++i) pos[es[i]] = i;
  std::vector<int> act(static_cast<std::size_t>(s.n) * xs);
  for (int a = 0; a < s.n; ++a)
    for (int i = 0; i < xs; ++i)
      act[static_cast<std::size_t>(a) * xs + i] = pos[s.product(a, es[i], inv[a])];
  return load_action(s, xs, es, std::move(act));
}

/// Left regular action of an inverse semigroup on itself:
/// X = S, p(x) = xx^-1, s.x = sx.
inline EtaleAction left_regular_action(const FiniteSemigroup& s) {
  const std::vector<int> inv = inversion_star(s);
  std::vector<int> p(s.n);
  for (int x = 0; x < s.n; ++x) p[x] = s.product(x, inv[x]);
  std::vector<int> act(static_cast<std::size_t>(s.n) * s.n);
  for (int a = 0; a < s.n; ++a)
    for (int x = 0; x < s.n; ++x)
      act[static_cast<std::size_t>(a) * s.n + x] = s.product(a, x);
  return load_action(s, s.n, std::move(p), std::move(act));
}

namespace detail {

// Smallest subset of E(S) containing e and closed under all conjugations.
inline std::vector<int> conjugation_orbit(const FiniteSemigroup& s,
                                          const std::vector<int>& inv, int e) {
  std::vector<char> in(s.n, 0);
  std::vector<int> queue{e};
  in[e] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int a = 0; a < s.n; ++a) {
      const int image = s.product(a, queue[q], inv[a]);
      if (!in[image]) {
        in[image] = 1;
        queue.push_back(image);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace detail

/// Conjugation action restricted to the orbit of one idempotent.  The orbit
/// of a non-maximal idempotent generally misses idempotents, giving the
/// standard example of an action without global support.
inline EtaleAction conjugation_orbit_action(const FiniteSemigroup& s, int e) {
  if (e < 0 || e >= s.n || !is_idempotent(s, e)) {
    throw invalid_input(Witness{"NotIdempotent", {e}},
                        "orbit seed must be an idempotent");
  }
  const std::vector<int> inv = inversion_star(s);
  const std::vector<int> orbit = detail::conjugation_orbit(s, inv, e);
  std::vector<int> pos(s.n, -1);
  const int xs = static_cast<int>(orbit.size());
  for (int i = 0; i < xs; ++i) pos[orbit[i]] = i;
  std::vector<int> act(static_cast<std::size_t>(s.n) * xs);
  for (int a = 0; a < s.n; ++a)
    for (int i = 0; i < xs; ++i)
      act[static_cast<std::size_t>(a) * xs + i] = pos[s.product(a, orbit[i], inv[a])];
  return load_action(s, xs, orbit, std::move(act));
}

/// Seeded action builder: stacks conjugation orbits of randomly chosen
/// idempotents as disjoint point blocks until at least `min_points` points
/// exist, then relabels the points by a seeded shuffle.  The assembled table
/// is validated before it is returned; a validation failure rejects the
/// attempt and retries with fresh randomness.
inline EtaleAction random_action(const FiniteSemigroup& s, int min_points,
                                 unsigned seed) {
  if (min_points < 1) {
    throw invalid_input(Witness{"InvalidParams", {min_points}},
                        "random_action needs at least one point");
  }
  const std::vector<int> inv = inversion_star(s);
  const std::vector<int> es = idempotents(s);
  std::mt19937 rng(seed);
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> carrier;  // carrier[i] = the orbit element behind point i
    std::vector<int> block_of;
    std::vector<std::vector<int>> blocks;
    while (static_cast<int>(carrier.size()) < min_points) {
      const int e = es[rng() % es.size()];
      blocks.push_back(detail::conjugation_orbit(s, inv, e));
      for (int x : blocks.back()) {
        carrier.push_back(x);
        block_of.push_back(static_cast<int>(blocks.size()) - 1);
      }
    }
    const int total = static_cast<int>(carrier.size());
    // Deterministic Fisher-Yates: slot i ends up at point perm[i].
    std::vector<int> perm(total);
    for (int i = 0; i < total; ++i) perm[i] = i;
    for (int i = total - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng() % (i + 1)]);
    }
    std::vector<int> p(total), act(static_cast<std::size_t>(s.n) * total);
    std::vector<int> slot_base(blocks.size(), 0);
    for (int i = 1; i < static_cast<int>(blocks.size()); ++i)
      slot_base[i] = slot_base[i - 1] + static_cast<int>(blocks[i - 1].size());
    for (int i = 0; i < total; ++i) {
      p[perm[i]] = carrier[i];
      const std::vector<int>& block = blocks[block_of[i]];
      for (int a = 0; a < s.n; ++a) {
        const int image = s.product(a, carrier[i], inv[a]);
        const int local = static_cast<int>(
            std::lower_bound(block.begin(), block.end(), image) - block.begin());
        act[static_cast<std::size_t>(a) * total + perm[i]] =
            perm[slot_base[block_of[i]] + local];
      }
    }
    EtaleAction candidate = assemble_action_unchecked(s, total, std::move(p),
                                                      std::move(act));
    if (!action_witness(candidate).has_value()) return candidate;
  }
  throw precondition_error(Witness{"GenerationExhausted", {kAttempts}},
                           "random action search exhausted its budget");
}

/// Exhaustive star search: every unary map satisfying the involution,
/// inverse, and product axioms, in lexicographic order.  Candidates for
/// each element are its inverses, so the search space is the product of the
/// inverse-set sizes; feasibility is guarded by the n^n model against
/// `budget`.  On right generalized inverse input every found map is also
/// verified to fix idempotents, and a violation is a falsification.
inline std::vector<StarStructure> find_stars(const FiniteSemigroup& s,
                                             long long budget = 46656) {
  long long model = 1;
  for (int i = 0; i < s.n; ++i) {
    model *= s.n;
    if (model > budget) {
      throw precondition_error(Witness{"BudgetExceeded", {s.n}},
                               "n^n exceeds the enumeration budget");
    }
  }
  std::vector<std::vector<int>> cand(s.n);
  for (int a = 0; a < s.n; ++a) {
    cand[a] = inverses_of(s, a);
    if (cand[a].empty()) return {};  // a non-regular element admits no star
  }

  const bool rgis = classify(s).is_right_generalized_inverse();
  std::vector<StarStructure> found;
  std::vector<int> choice(s.n, 0);
  std::vector<int> star(s.n);
  while (true) {
    for (int a = 0; a < s.n; ++a) star[a] = cand[a][choice[a]];
    const StarReport rep = check_star(s, star);
    if (rep.involution.holds && rep.gives_inverse.holds &&
        rep.product_rule.holds) {
      if (rgis) {
        if (auto w = verify_s4_derivation(s, star)) {
          throw falsification_error(
              "stars satisfying the first three axioms fix idempotents", *w,
              "a star satisfying (S1)-(S3) moved an idempotent");
        }
      }
      found.push_back(StarStructure{s, star});
    }
    int i = s.n - 1;
    while (i >= 0 && choice[i] + 1 == static_cast<int>(cand[i].size()))
      choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return found;
}

/// One corpus action, homomorphism, or action morphism, labeled for reports.
struct CorpusAction {
  std::string label;
  EtaleAction action;
};

struct CorpusHom {
  std::string label;
  SemigroupHom hom;
  std::vector<int> source_star;  // a verified star on hom.source
};

struct CorpusMorphism {
  std::string label;
  int source = 0;  // index into Corpus::actions
  int target = 0;
  ActionMorphism m;
};

/// Everything the acceptance suite iterates over, generated as a pure
/// function of (max_n, seed).
struct Corpus {
  std::vector<GeneratedSemigroup> semigroups;
  std::vector<CorpusAction> actions;
  std::vector<CorpusHom> homs;
  std::vector<CorpusMorphism> morphisms;
};

inline Corpus corpus(int max_n, unsigned seed) {
  Corpus c;
  for (int n = 2; n <= max_n; ++n) c.semigroups.push_back(right_zero(n));
  for (int n = 2; n <= max_n; ++n) c.semigroups.push_back(semilattice_chain(n));
  for (int n = 1; n <= max_n; ++n) c.semigroups.push_back(group_cyclic(n));
  for (int k : {1, 2, 3}) {
    for (int m : {2, 3}) {
      if (k * m > 2 * max_n) continue;
      std::vector<int> pi(m);
      const bool shift = k % m == 0;
      for (int x = 0; x < m; ++x) pi[x] = shift ? (x + 1) % m : x;
      GeneratedSemigroup g = right_group(k, m, pi);
      g.family = "right_group(" + std::to_string(k) + "," + std::to_string(m) +
                 (shift ? ";shift)" : ";trivial)");
      c.semigroups.push_back(std::move(g));
    }
  }
  for (int n = 1; n <= std::min(max_n, 3); ++n)
    c.semigroups.push_back(symmetric_inverse_monoid(n));
  for (auto [g, k] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
    if (g <= max_n && k <= max_n) c.semigroups.push_back(brandt(g, k));
  }

  // Actions over every inverse member, plus the named special cases.
  std::vector<int> inverse_members;
  for (int i = 0; i < static_cast<int>(c.semigroups.size()); ++i) {
    if (classify(c.semigroups[i].s).is_inverse()) inverse_members.push_back(i);
  }
  for (int i : inverse_members) {
    const GeneratedSemigroup& g = c.semigroups[i];
    c.actions.push_back({"conjugation(" + g.family + ")",
                         conjugation_action(g.s)});
    c.actions.push_back({"left_regular(" + g.family + ")",
                         left_regular_action(g.s)});
  }
  if (max_n >= 2) {
    c.actions.push_back({"orbit(chain(2),0)",
                         conjugation_orbit_action(semilattice_chain(2).s, 0)});
    c.actions.push_back({"swap(cyclic(2))",
                         load_action(group_cyclic(2).s, 2, {0, 0}, {0, 1, 1, 0})});
  }
  if (max_n >= 3) {
    // Orbit of the empty partial injection: a one-point, non-global-support
    // action over a monoid with several idempotents.
    c.actions.push_back({"orbit(symmetric_inverse_monoid(2),0)",
                         conjugation_orbit_action(symmetric_inverse_monoid(2).s, 0)});
  }
  {
    unsigned offset = 0;
    for (int i : inverse_members) {
      const GeneratedSemigroup& g = c.semigroups[i];
      if (g.s.n > 10) continue;
      const int points = static_cast<int>(idempotents(g.s).size()) + 2;
      c.actions.push_back({"random(" + g.family + ")",
                           random_action(g.s, points, seed + offset)});
      ++offset;
    }
  }

  // Homomorphisms: the natural map of every member, identities on inverse
  // members, and the fixed cross-family maps.
  for (const GeneratedSemigroup& g : c.semigroups) {
    c.homs.push_back({"natural(" + g.family + ")",
                      gamma_quotient(g.s).projection, g.star});
  }
  for (int i : inverse_members) {
    const GeneratedSemigroup& g = c.semigroups[i];
    c.homs.push_back({"identity(" + g.family + ")", identity_hom(g.s), g.star});
  }
  if (max_n >= 2) {
    const FiniteSemigroup ch2 = semilattice_chain(2).s;
    c.homs.push_back({"collapse(chain(2))",
                      SemigroupHom{ch2, ch2, {0, 0}}, {0, 1}});
    if (max_n >= 3) {
      c.homs.push_back({"include(chain(2),chain(3))",
                        SemigroupHom{ch2, semilattice_chain(3).s, {0, 1}},
                        {0, 1}});
    }
    if (max_n >= 4) {
      c.homs.push_back({"mod2(cyclic(4))",
                        SemigroupHom{group_cyclic(4).s, group_cyclic(2).s,
                                     {0, 1, 0, 1}},
                        group_cyclic(4).star});
    }
  }

  // Action morphisms: identities on global-support actions, the collapse of
  // every global-support action onto the one-point action over the trivial
  // group, and the point swap on the group swap action.
  int trivial_target = -1;
  for (int i = 0; i < static_cast<int>(c.actions.size()); ++i) {
    if (c.actions[i].label == "conjugation(cyclic(1))") trivial_target = i;
  }
  for (int i = 0; i < static_cast<int>(c.actions.size()); ++i) {
    const CorpusAction& a = c.actions[i];
    if (!has_global_support(a.action)) continue;
    c.morphisms.push_back({"identity(" + a.label + ")", i, i,
                           identity_action_morphism(a.action)});
    if (trivial_target >= 0) {
      const EtaleAction& target = c.actions[trivial_target].action;
      ActionMorphism collapse{
          SemigroupHom{a.action.s, target.s,
                       std::vector<int>(a.action.s.n, 0)},
          std::vector<int>(a.action.x_size, 0)};
      c.morphisms.push_back({"collapse(" + a.label + ")", i, trivial_target,
                             std::move(collapse)});
    }
    if (a.label == "swap(cyclic(2))") {
      c.morphisms.push_back({"pointswap(" + a.label + ")", i, i,
                             ActionMorphism{identity_hom(a.action.s), {1, 0}}});
    }
  }
  return c;
}

}  // namespace sgt

#pragma once

// Finite semigroups as dense multiplication tables, with classification
// predicates, Green's relations, inverse sets and the natural partial order.
//
// Elements are dense integers 0..n-1; the table is row-major and total.
// Every type in this library is immutable after construction and every
// operation is a pure function of its inputs, so everything here may be
// called concurrently without synchronization.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

/// A violated law together with the elements demonstrating the violation.
/// Searches always run in lexicographic element order, so the witness
/// reported is the smallest violating tuple.
struct Witness {
  std::string kind;
  std::vector<int> elements;
};

inline std::string describe(const Witness& w) {
  std::string s = w.kind + "(";
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(w.elements[i]);
  }
  return s + ")";
}

/// Malformed input: bad table dimensions, out-of-range entries, a
/// non-associative table. Maps to CLI exit code 2.
class invalid_input : public std::runtime_error {
 public:
  invalid_input(Witness w, const std::string& msg)
      : std::runtime_error(msg + " [" + describe(w) + "]"), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Structurally valid input handed to an operation whose precondition it
/// does not meet (e.g. the natural partial order on a non-regular
/// semigroup). Maps to CLI exit code 2.
class precondition_error : public std::runtime_error {
 public:
  precondition_error(Witness w, const std::string& msg)
      : std::runtime_error(msg + " [" + describe(w) + "]"), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// A verified theorem failed on an instance that met its hypotheses.
/// This signals either an implementation bug or a genuine counterexample;
/// both must halt the run loudly. Maps to CLI exit code 3.
class falsification_error : public std::runtime_error {
 public:
  falsification_error(std::string property, Witness w, const std::string& detail)
      : std::runtime_error("FALSIFIED " + property + ": " + detail + " [" + describe(w) + "]"),
        property_(std::move(property)),
        witness_(std::move(w)) {}
  const std::string& property() const { return property_; }
  const Witness& witness() const { return witness_; }

 private:
  std::string property_;
  Witness witness_;
};

/// Default cap on semigroup size. Exhaustive checks are cubic, so the cap
/// keeps a single validation under ~0.3M products. Overridable per call.
inline constexpr int kDefaultCap = 64;

/// A finite semigroup on {0,..,n-1} with a total row-major multiplication
/// table; table[a*n+b] is the product ab. Construct through
/// load_semigroup() so associativity is established once, then rely on it.
struct FiniteSemigroup {
  int n = 0;
  std::vector<int> table;

  int product(int a, int b) const { return table[a * n + b]; }
  int product(int a, int b, int c) const { return product(product(a, b), c); }
  bool operator==(const FiniteSemigroup&) const = default;
};

/// Re-assertable associativity check; nullopt when the table is associative.
inline std::optional<Witness> associativity_witness(const FiniteSemigroup& s) {
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      for (int c = 0; c < s.n; ++c)
        if (s.product(s.product(a, b), c) != s.product(a, s.product(b, c)))
          return Witness{"NotAssociative", {a, b, c}};
  return std::nullopt;
}

/// Validates and returns a semigroup: dimensions, entry range, then the
/// naive O(n^3) associativity sweep.
inline FiniteSemigroup load_semigroup(int n, std::vector<int> table, int cap = kDefaultCap) {
  if (n < 1) throw invalid_input(Witness{"EmptyCarrier", {n}}, "carrier must be non-empty");
  if (n > cap)
    throw invalid_input(Witness{"CapExceeded", {n, cap}}, "element count exceeds cap");
  if (static_cast<int>(table.size()) != n * n)
    throw invalid_input(Witness{"BadDimensions", {static_cast<int>(table.size()), n}},
                        "table size must be n*n");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = table[a * n + b];
      if (v < 0 || v >= n)
        throw invalid_input(Witness{"OutOfRangeEntry", {a, b, v}}, "table entry out of range");
    }
  FiniteSemigroup s{n, std::move(table)};
  if (auto w = associativity_witness(s)) throw invalid_input(*w, "table is not associative");
  return s;
}

/// Convenience for literal tables in tests and generators.
inline FiniteSemigroup load_semigroup(const std::vector<std::vector<int>>& rows,
                                      int cap = kDefaultCap) {
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw invalid_input(Witness{"BadDimensions", {static_cast<int>(row.size()), n}},
                          "ragged table row");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return load_semigroup(n, std::move(flat), cap);
}

inline bool is_idempotent(const FiniteSemigroup& s, int e) { return s.product(e, e) == e; }

/// E(S): exactly the solutions of ee = e, ascending.
inline std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int e = 0; e < s.n; ++e)
    if (is_idempotent(s, e)) out.push_back(e);
  return out;
}

/// V(a): every b with aba = a and bab = b, ascending. Empty exactly when a
/// is not regular.
inline std::vector<int> inverses_of(const FiniteSemigroup& s, int a) {
  std::vector<int> out;
  for (int b = 0; b < s.n; ++b)
    if (s.product(s.product(a, b), a) == a && s.product(s.product(b, a), b) == b)
      out.push_back(b);
  return out;
}

inline bool is_regular_element(const FiniteSemigroup& s, int a) {
  for (int b = 0; b < s.n; ++b)
    if (s.product(s.product(a, b), a) == a && s.product(s.product(b, a), b) == b) return true;
  return false;
}

/// A partition of {0,..,n-1}; class_of[x] is the smallest member of the
/// class containing x, which doubles as the class id.
struct Partition {
  std::vector<int> class_of;

  bool operator==(const Partition&) const = default;
  int size() const { return static_cast<int>(class_of.size()); }
  bool same_class(int a, int b) const { return class_of[a] == class_of[b]; }

  /// Class ids in ascending order (each id is its class minimum).
  std::vector<int> class_ids() const {
    std::vector<int> ids(class_of);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  int num_classes() const { return static_cast<int>(class_ids().size()); }

  std::vector<std::vector<int>> classes() const {
    auto ids = class_ids();
    std::vector<std::vector<int>> out(ids.size());
    for (int x = 0; x < size(); ++x) {
      auto it = std::lower_bound(ids.begin(), ids.end(), class_of[x]);
      out[static_cast<std::size_t>(it - ids.begin())].push_back(x);
    }
    return out;
  }

  bool is_discrete() const {
    for (int x = 0; x < size(); ++x)
      if (class_of[x] != x) return false;
    return true;
  }
};

/// Canonicalizes an arbitrary class labelling to min-member ids.
inline Partition make_partition(std::vector<int> labels) {
  std::vector<int> min_of(labels.size(), -1);
  for (int x = 0; x < static_cast<int>(labels.size()); ++x) {
    int& m = min_of[labels[x]];
    if (m < 0) m = x;
  }
  Partition p;
  p.class_of.resize(labels.size());
  for (int x = 0; x < static_cast<int>(labels.size()); ++x) p.class_of[x] = min_of[labels[x]];
  return p;
}

/// A binary relation on {0,..,n-1} stored densely.
struct Relation {
  int n = 0;
  std::vector<char> bits;

  explicit Relation(int size = 0) : n(size), bits(static_cast<std::size_t>(size) * size, 0) {}
  bool contains(int a, int b) const { return bits[static_cast<std::size_t>(a) * n + b] != 0; }
  void add(int a, int b) { bits[static_cast<std::size_t>(a) * n + b] = 1; }
  bool operator==(const Relation&) const = default;

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (contains(a, b)) out.emplace_back(a, b);
    return out;
  }
};

/// Witness that a relation is not a partial order, or nullopt.
inline std::optional<Witness> partial_order_witness(const Relation& r) {
  for (int a = 0; a < r.n; ++a)
    if (!r.contains(a, a)) return Witness{"NotReflexive", {a}};
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      if (a != b && r.contains(a, b) && r.contains(b, a)) return Witness{"NotAntisymmetric", {a, b}};
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.contains(a, b)) continue;
      for (int c = 0; c < r.n; ++c)
        if (r.contains(b, c) && !r.contains(a, c)) return Witness{"NotTransitive", {a, b, c}};
    }
  return std::nullopt;
}

namespace detail {

// S^1 a = Sa ∪ {a}, as a membership mask. Adjoining the identity virtually
// avoids mutating tables.
inline std::vector<char> left_ideal_mask(const FiniteSemigroup& s, int a) {
  std::vector<char> in(static_cast<std::size_t>(s.n), 0);
  in[a] = 1;
  for (int x = 0; x < s.n; ++x) in[s.product(x, a)] = 1;
  return in;
}

inline std::vector<char> right_ideal_mask(const FiniteSemigroup& s, int a) {
  std::vector<char> in(static_cast<std::size_t>(s.n), 0);
  in[a] = 1;
  for (int x = 0; x < s.n; ++x) in[s.product(a, x)] = 1;
  return in;
}

inline std::vector<char> two_sided_ideal_mask(const FiniteSemigroup& s, int a) {
  std::vector<char> in(static_cast<std::size_t>(s.n), 0);
  in[a] = 1;
  for (int x = 0; x < s.n; ++x) {
    in[s.product(x, a)] = 1;
    in[s.product(a, x)] = 1;
    for (int y = 0; y < s.n; ++y) in[s.product(s.product(x, a), y)] = 1;
  }
  return in;
}

inline Partition partition_by_key(const std::vector<std::vector<char>>& keys) {
  int n = static_cast<int>(keys.size());
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    labels[a] = a;
    for (int b = 0; b < a; ++b)
      if (keys[b] == keys[a]) {
        labels[a] = labels[b];
        break;
      }
  }
  return make_partition(std::move(labels));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

/// The five Green's relations as partitions.
struct GreenRelations {
  Partition l, r, h, d, j;
};

inline GreenRelations green_relations(const FiniteSemigroup& s) {
  std::vector<std::vector<char>> lkeys, rkeys, jkeys;
  lkeys.reserve(s.n);
  rkeys.reserve(s.n);
  jkeys.reserve(s.n);
  for (int a = 0; a < s.n; ++a) {
    lkeys.push_back(detail::left_ideal_mask(s, a));
    rkeys.push_back(detail::right_ideal_mask(s, a));
    jkeys.push_back(detail::two_sided_ideal_mask(s, a));
  }
  GreenRelations g;
  g.l = detail::partition_by_key(lkeys);
  g.r = detail::partition_by_key(rkeys);
  g.j = detail::partition_by_key(jkeys);

  // H = L ∩ R.
  {
    std::vector<int> labels(static_cast<std::size_t>(s.n));
    for (int a = 0; a < s.n; ++a) {
      labels[a] = a;
      for (int b = 0; b < a; ++b)
        if (g.l.same_class(a, b) && g.r.same_class(a, b)) {
          labels[a] = labels[b];
          break;
        }
    }
    g.h = make_partition(std::move(labels));
  }

  // D = join of L and R (equals L∘R on finite semigroups).
  {
    detail::UnionFind uf(s.n);
    for (int a = 0; a < s.n; ++a) {
      uf.unite(a, g.l.class_of[a]);
      uf.unite(a, g.r.class_of[a]);
    }
    std::vector<int> labels(static_cast<std::size_t>(s.n));
    for (int a = 0; a < s.n; ++a) labels[a] = uf.find(a);
    g.d = make_partition(std::move(labels));
  }
  return g;
}

/// One classification flag; witness holds the smallest violating tuple
/// when the flag fails.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

inline Verdict pass_verdict() { return Verdict{}; }
inline Verdict fail_verdict(Witness w) { return Verdict{false, std::move(w)}; }

/// Flags computed by direct definition over the whole table. Failures are
/// reported with witnesses, never raised.
struct ClassificationReport {
  Verdict band;                       // every element idempotent
  Verdict right_normal_band;          // E(S) closed and efg = feg on E(S)
  Verdict regular;                    // every element has an inverse
  Verdict orthodox;                   // regular and E(S) closed
  Verdict inverse;                    // regular and idempotents commute
  Verdict right_generalized_inverse;  // regular and E(S) a right normal band
  Verdict locally_inverse;            // every eSe inverse

  bool is_band() const { return band.holds; }
  bool is_right_normal_band() const { return right_normal_band.holds; }
  bool is_regular() const { return regular.holds; }
  bool is_orthodox() const { return orthodox.holds; }
  bool is_inverse() const { return inverse.holds; }
  bool is_right_generalized_inverse() const { return right_generalized_inverse.holds; }
  bool is_locally_inverse() const { return locally_inverse.holds; }
};

/// A map between semigroups, stored as images of source elements.
struct SemigroupHom {
  FiniteSemigroup source;
  FiniteSemigroup target;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
};

inline SemigroupHom identity_hom(const FiniteSemigroup& s) {
  std::vector<int> m(static_cast<std::size_t>(s.n));
  std::iota(m.begin(), m.end(), 0);
  return SemigroupHom{s, s, std::move(m)};
}

/// g ∘ f; requires f.target and g.source to coincide.
inline SemigroupHom compose(const SemigroupHom& g, const SemigroupHom& f) {
  if (!(f.target == g.source))
    throw precondition_error(Witness{"NotComposable", {f.target.n, g.source.n}},
                             "hom composition requires matching middle semigroup");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
  return SemigroupHom{f.source, g.target, std::move(m)};
}

inline bool is_surjective(const SemigroupHom& h) {
  std::vector<char> hit(static_cast<std::size_t>(h.target.n), 0);
  for (int v : h.map) hit[v] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

/// Partition of the source by equal images.
inline Partition kernel_partition(const SemigroupHom& h) {
  std::vector<int> labels(h.map.size());
  std::vector<int> first_with(static_cast<std::size_t>(h.target.n), -1);
  for (int a = 0; a < h.source.n; ++a) {
    int& f = first_with[h.map[a]];
    if (f < 0) f = a;
    labels[a] = f;
  }
  return make_partition(std::move(labels));
}

/// Multiplicativity check over all pairs; nullopt means the map is a
/// homomorphism. Malformed maps (wrong length, out-of-range entries) are
/// invalid input, not witnesses.
inline std::optional<Witness> check_hom(const SemigroupHom& h) {
  if (static_cast<int>(h.map.size()) != h.source.n)
    throw invalid_input(Witness{"BadDimensions", {static_cast<int>(h.map.size()), h.source.n}},
                        "hom map length must equal source size");
  for (int a = 0; a < h.source.n; ++a)
    if (h.map[a] < 0 || h.map[a] >= h.target.n)
      throw invalid_input(Witness{"OutOfRangeEntry", {a, h.map[a]}}, "hom image out of range");
  for (int a = 0; a < h.source.n; ++a)
    for (int b = 0; b < h.source.n; ++b)
      if (h.map[h.source.product(a, b)] != h.target.product(h.map[a], h.map[b]))
        return Witness{"NotMultiplicative", {a, b}};
  return std::nullopt;
}

inline ClassificationReport classify(const FiniteSemigroup& s) {
  ClassificationReport rep;
  const auto es = idempotents(s);

  rep.band = pass_verdict();
  for (int a = 0; a < s.n; ++a)
    if (!is_idempotent(s, a)) {
      rep.band = fail_verdict(Witness{"NotIdempotent", {a}});
      break;
    }

  rep.regular = pass_verdict();
  for (int a = 0; a < s.n; ++a)
    if (!is_regular_element(s, a)) {
      rep.regular = fail_verdict(Witness{"NotRegular", {a}});
      break;
    }

  // Closure of E(S) under multiplication.
  Verdict closed = pass_verdict();
  for (int e : es) {
    for (int f : es)
      if (!is_idempotent(s, s.product(e, f))) {
        closed = fail_verdict(Witness{"IdempotentsNotClosed", {e, f}});
        break;
      }
    if (!closed.holds) break;
  }

  rep.right_normal_band = closed;
  if (closed.holds) {
    for (std::size_t i = 0; i < es.size() && rep.right_normal_band.holds; ++i)
      for (std::size_t j = 0; j < es.size() && rep.right_normal_band.holds; ++j)
        for (std::size_t k = 0; k < es.size(); ++k) {
          int e = es[i], f = es[j], g = es[k];
          if (s.product(s.product(e, f), g) != s.product(s.product(f, e), g)) {
            rep.right_normal_band =
                fail_verdict(Witness{"RightNormalIdentityFails", {e, f, g}});
            break;
          }
        }
  }

  rep.orthodox = rep.regular.holds ? closed : rep.regular;

  rep.inverse = rep.regular;
  if (rep.inverse.holds)
    for (std::size_t i = 0; i < es.size() && rep.inverse.holds; ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        int e = es[i], f = es[j];
        if (s.product(e, f) != s.product(f, e)) {
          rep.inverse = fail_verdict(Witness{"IdempotentsDontCommute", {e, f}});
          break;
        }
      }

  rep.right_generalized_inverse = rep.regular.holds ? rep.right_normal_band : rep.regular;

  rep.locally_inverse = pass_verdict();
  for (int e : es) {
    // Carrier of eSe, then regularity + commuting idempotents inside it.
    std::vector<int> carrier;
    std::vector<char> seen(static_cast<std::size_t>(s.n), 0);
    for (int a = 0; a < s.n; ++a) {
      int v = s.product(s.product(e, a), e);
      if (!seen[v]) {
        seen[v] = 1;
        carrier.push_back(v);
      }
    }
    std::sort(carrier.begin(), carrier.end());
    bool local_ok = true;
    for (int a : carrier) {
      bool has_local_inverse = false;
      for (int b : carrier)
        if (s.product(s.product(a, b), a) == a && s.product(s.product(b, a), b) == b) {
          has_local_inverse = true;
          break;
        }
      if (!has_local_inverse) {
        rep.locally_inverse = fail_verdict(Witness{"LocalSubmonoidNotRegular", {e, a}});
        local_ok = false;
        break;
      }
    }
    if (!local_ok) break;
    for (std::size_t i = 0; i < carrier.size() && local_ok; ++i)
      for (std::size_t j = i + 1; j < carrier.size(); ++j) {
        int a = carrier[i], b = carrier[j];
        if (is_idempotent(s, a) && is_idempotent(s, b) &&
            s.product(a, b) != s.product(b, a)) {
          rep.locally_inverse =
              fail_verdict(Witness{"LocalIdempotentsDontCommute", {e, a, b}});
          local_ok = false;
          break;
        }
      }
    if (!local_ok) break;
  }

  return rep;
}

/// The natural partial order a ≤ b ⟺ a = eb = bf for idempotents e, f.
/// Defined for regular semigroups only. The returned relation is verified
/// to be a partial order; a violation would contradict its definition and
/// halts loudly.
inline Relation natural_partial_order(const FiniteSemigroup& s) {
  for (int a = 0; a < s.n; ++a)
    if (!is_regular_element(s, a))
      throw precondition_error(Witness{"NotRegular", {a}},
                               "natural partial order requires a regular semigroup");
  const auto es = idempotents(s);
  Relation r(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      bool left = false, right = false;
      for (int e : es)
        if (s.product(e, b) == a) {
          left = true;
          break;
        }
      if (!left) continue;
      for (int f : es)
        if (s.product(b, f) == a) {
          right = true;
          break;
        }
      if (right) r.add(a, b);
    }
  if (auto w = partial_order_witness(r))
    throw falsification_error("natural_partial_order_is_partial_order", *w,
                              "natural order on a regular semigroup failed an order axiom");
  return r;
}

/// A subsemigroup re-indexed canonically: carrier holds the original
/// indices in ascending order, and semigroup is the induced table.
struct Subsemigroup {
  FiniteSemigroup semigroup;
  std::vector<int> carrier;

  int original(int local) const { return carrier[local]; }
  int local(int orig) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), orig);
    return static_cast<int>(it - carrier.begin());
  }
};

/// eSe with the induced table.
inline Subsemigroup local_submonoid(const FiniteSemigroup& s, int e) {
  if (!is_idempotent(s, e))
    throw precondition_error(Witness{"NotIdempotent", {e}},
                             "local submonoid requires an idempotent");
  std::vector<char> seen(static_cast<std::size_t>(s.n), 0);
  std::vector<int> carrier;
  for (int a = 0; a < s.n; ++a) {
    int v = s.product(s.product(e, a), e);
    if (!seen[v]) {
      seen[v] = 1;
      carrier.push_back(v);
    }
  }
  std::sort(carrier.begin(), carrier.end());
  int m = static_cast<int>(carrier.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<int> local_of(static_cast<std::size_t>(s.n), -1);
  for (int i = 0; i < m; ++i) local_of[carrier[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = local_of[s.product(carrier[i], carrier[j])];
  return Subsemigroup{FiniteSemigroup{m, std::move(table)}, std::move(carrier)};
}

}  // namespace sgt

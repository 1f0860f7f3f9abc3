// finite_ring.hpp -- fully tabulated finite unital rings: exact table
// arithmetic, exhaustive property predicates, ideals and quotients.
//
// Every ring here is a complete addition/multiplication table over element
// indices 0..order-1, so all predicates are bounded quantifier sweeps and
// all results are exact. Values are immutable after construction and safe
// to share across threads.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewpbw {

using Elem = std::uint16_t;
inline constexpr Elem no_elem = 0xffff;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Outcome of an axiom/invariant check; `witness` holds the offending
/// element indices when `ok` is false.
struct ValidationResult {
  bool ok = true;
  std::string axiom;
  std::vector<Elem> witness;

  static ValidationResult pass() { return {}; }
  static ValidationResult fail(std::string ax, std::vector<Elem> w) {
    return {false, std::move(ax), std::move(w)};
  }
};

struct FiniteRing {
  std::size_t order = 0;
  std::vector<Elem> add_table;  // row-major, order x order
  std::vector<Elem> mul_table;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> labels;
  std::string name;

  // derived, filled by finalize()
  std::vector<Elem> neg_table;
  std::vector<Elem> inv_table;            // no_elem when not a unit
  std::vector<unsigned> nil_index_table;  // least m with r^m = 0, else 0
  std::vector<bool> central_mask;
  std::vector<Elem> nilpotent_elems;
  std::vector<Elem> idempotent_elems;
  std::map<std::string, Elem, std::less<>> label_index;

  Elem add(Elem a, Elem b) const { return add_table[a * order + b]; }
  Elem mul(Elem a, Elem b) const { return mul_table[a * order + b]; }
  Elem neg(Elem a) const { return neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem pow(Elem a, unsigned k) const {
    Elem r = one;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool is_nilpotent(Elem a) const { return nil_index_table[a] != 0; }
  unsigned nil_index(Elem a) const { return nil_index_table[a]; }
  bool is_unit(Elem a) const { return inv_table[a] != no_elem; }
  Elem inverse(Elem a) const {
    if (!is_unit(a)) throw Error("inverse of non-unit element " + labels[a]);
    return inv_table[a];
  }
  bool is_central(Elem a) const { return central_mask[a]; }
  bool is_idempotent(Elem a) const { return mul(a, a) == a; }

  const std::string& label(Elem a) const { return labels[a]; }
  std::optional<Elem> element_by_label(std::string_view s) const {
    auto it = label_index.find(s);
    if (it == label_index.end()) return std::nullopt;
    return it->second;
  }

  void finalize() {
    if (order == 0 || add_table.size() != order * order ||
        mul_table.size() != order * order || labels.size() != order)
      throw Error("ring tables have inconsistent dimensions");
    neg_table.assign(order, no_elem);
    inv_table.assign(order, no_elem);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        if (add(a, b) == zero) neg_table[a] = b;
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        if (mul(a, b) == one && mul(b, a) == one) inv_table[a] = b;
    nil_index_table.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
      Elem x = a;
      for (unsigned m = 1; m <= order; ++m) {
        if (x == zero) {
          nil_index_table[a] = m;
          break;
        }
        x = mul(x, a);
      }
    }
    central_mask.assign(order, true);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        if (mul(a, b) != mul(b, a)) central_mask[a] = false;
    nilpotent_elems.clear();
    idempotent_elems.clear();
    for (Elem a = 0; a < order; ++a) {
      if (is_nilpotent(a)) nilpotent_elems.push_back(a);
      if (mul(a, a) == a) idempotent_elems.push_back(a);
    }
    label_index.clear();
    for (Elem a = 0; a < order; ++a) label_index.emplace(labels[a], a);
  }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline RingPtr make_ring(FiniteRing r) {
  r.finalize();
  return std::make_shared<const FiniteRing>(std::move(r));
}

/// Checks the full unital-ring axioms by enumeration. Returns the first
/// violated axiom with a witnessing element tuple; the scan order is fixed
/// (additive axioms, multiplicative associativity, distributivity, unity,
/// label distinctness) so failures are deterministic.
inline ValidationResult validate_ring(const FiniteRing& R) {
  const std::size_t n = R.order;
  if (n == 0 || R.add_table.size() != n * n || R.mul_table.size() != n * n ||
      R.labels.size() != n || R.zero >= n || R.one >= n)
    return ValidationResult::fail("table_shape", {});
  for (std::size_t i = 0; i < n * n; ++i)
    if (R.add_table[i] >= n || R.mul_table[i] >= n)
      return ValidationResult::fail("table_entry_range",
                                    {static_cast<Elem>(i / n), static_cast<Elem>(i % n)});

  for (Elem a = 0; a < n; ++a)
    if (R.add(R.zero, a) != a || R.add(a, R.zero) != a)
      return ValidationResult::fail("additive_identity", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
          return ValidationResult::fail("additive_associativity", {a, b, c});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (R.add(a, b) != R.add(b, a))
        return ValidationResult::fail("additive_commutativity", {a, b});
  for (Elem a = 0; a < n; ++a) {
    bool has = false;
    for (Elem b = 0; b < n && !has; ++b) has = R.add(a, b) == R.zero;
    if (!has) return ValidationResult::fail("additive_inverse", {a});
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
          return ValidationResult::fail("multiplicative_associativity", {a, b, c});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
          return ValidationResult::fail("left_distributivity", {a, b, c});
        if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
          return ValidationResult::fail("right_distributivity", {a, b, c});
      }
  for (Elem a = 0; a < n; ++a)
    if (R.mul(R.one, a) != a || R.mul(a, R.one) != a)
      return ValidationResult::fail("multiplicative_identity", {a});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = static_cast<Elem>(a + 1); b < n; ++b)
      if (R.labels[a] == R.labels[b])
        return ValidationResult::fail("labels_distinct", {a, b});
  return ValidationResult::pass();
}

/// nil(R) = { r : r^m = 0 for some 1 <= m <= order }. The power sequence of
/// r cycles within `order` steps, so larger exponents cannot reach zero.
inline const std::vector<Elem>& nilpotents(const FiniteRing& R) {
  return R.nilpotent_elems;
}

inline const std::vector<Elem>& idempotents(const FiniteRing& R) {
  return R.idempotent_elems;
}

enum class RingProperty {
  reduced,
  symmetric,
  reversible,
  semicommutative,
  weak_symmetric,
  abelian,
  commutative,
};

inline const char* property_name(RingProperty p) {
  switch (p) {
    case RingProperty::reduced: return "reduced";
    case RingProperty::symmetric: return "symmetric";
    case RingProperty::reversible: return "reversible";
    case RingProperty::semicommutative: return "semicommutative";
    case RingProperty::weak_symmetric: return "weak_symmetric";
    case RingProperty::abelian: return "abelian";
    case RingProperty::commutative: return "commutative";
  }
  return "?";
}

inline std::optional<RingProperty> property_by_name(std::string_view s) {
  for (RingProperty p :
       {RingProperty::reduced, RingProperty::symmetric, RingProperty::reversible,
        RingProperty::semicommutative, RingProperty::weak_symmetric,
        RingProperty::abelian, RingProperty::commutative})
    if (s == property_name(p)) return p;
  return std::nullopt;
}

struct PropertyCheck {
  bool holds = true;
  std::vector<Elem> witness;  // first violating tuple, scan order fixed
};

inline constexpr std::size_t default_predicate_cap = 64;

/// Exhaustive quantifier check of a ring-theoretic property. Throws when
/// the order exceeds `cap` (the sweeps are O(order^3)..O(order^4)).
inline PropertyCheck check_property(const FiniteRing& R, RingProperty prop,
                                    std::size_t cap = default_predicate_cap) {
  const std::size_t n = R.order;
  if (n > cap)
    throw Error("ring order " + std::to_string(n) + " exceeds predicate cap " +
                std::to_string(cap) + "; raise the cap explicitly to proceed");
  switch (prop) {
    case RingProperty::reduced:
      for (Elem a = 0; a < n; ++a)
        if (a != R.zero && R.is_nilpotent(a)) return {false, {a}};
      return {};
    case RingProperty::commutative:
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (R.mul(a, b) != R.mul(b, a)) return {false, {a, b}};
      return {};
    case RingProperty::symmetric:
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (R.mul(R.mul(a, b), c) == R.zero &&
                R.mul(R.mul(a, c), b) != R.zero)
              return {false, {a, b, c}};
      return {};
    case RingProperty::weak_symmetric:
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (R.is_nilpotent(R.mul(R.mul(a, b), c)) &&
                !R.is_nilpotent(R.mul(R.mul(a, c), b)))
              return {false, {a, b, c}};
      return {};
    case RingProperty::reversible:
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (R.mul(a, b) == R.zero && R.mul(b, a) != R.zero)
            return {false, {a, b}};
      return {};
    case RingProperty::semicommutative:
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (R.mul(a, b) == R.zero)
            for (Elem r = 0; r < n; ++r)
              if (R.mul(R.mul(a, r), b) != R.zero) return {false, {a, r, b}};
      return {};
    case RingProperty::abelian:
      for (Elem e : R.idempotent_elems)
        for (Elem r = 0; r < n; ++r)
          if (R.mul(e, r) != R.mul(r, e)) return {false, {e, r}};
      return {};
  }
  throw Error("unknown ring property");
}

inline bool ring_property(const FiniteRing& R, RingProperty prop,
                          std::size_t cap = default_predicate_cap) {
  return check_property(R, prop, cap).holds;
}

struct Ideal {
  RingPtr ring;
  std::vector<Elem> members;  // sorted ascending
  std::vector<bool> mask;

  bool contains(Elem a) const { return mask[a]; }
  bool is_proper() const { return members.size() < ring->order; }
};

inline Ideal ideal_from_mask(RingPtr R, std::vector<bool> mask) {
  Ideal I;
  I.ring = std::move(R);
  I.mask = std::move(mask);
  for (Elem a = 0; a < I.ring->order; ++a)
    if (I.mask[a]) I.members.push_back(a);
  return I;
}

/// Smallest two-sided ideal containing `gens`: closure under addition,
/// negation and multiplication by arbitrary ring elements on both sides.
inline Ideal ideal_generated(RingPtr R, const std::vector<Elem>& gens) {
  const std::size_t n = R->order;
  std::vector<bool> mask(n, false);
  mask[R->zero] = true;
  for (Elem g : gens) {
    if (g >= n) throw Error("ideal generator index out of range");
    mask[g] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> cur;
    for (Elem a = 0; a < n; ++a)
      if (mask[a]) cur.push_back(a);
    auto insert = [&](Elem x) {
      if (!mask[x]) {
        mask[x] = true;
        changed = true;
      }
    };
    for (Elem a : cur) {
      insert(R->neg(a));
      for (Elem b : cur) insert(R->add(a, b));
      for (Elem r = 0; r < n; ++r) {
        insert(R->mul(r, a));
        insert(R->mul(a, r));
      }
    }
  }
  return ideal_from_mask(std::move(R), std::move(mask));
}

/// Wraps an explicit member set as an Ideal after verifying closure.
inline Ideal make_ideal(RingPtr R, const std::vector<Elem>& members) {
  const std::size_t n = R->order;
  std::vector<bool> mask(n, false);
  for (Elem m : members) {
    if (m >= n) throw Error("ideal member index out of range");
    mask[m] = true;
  }
  if (!mask[R->zero]) throw Error("ideal must contain zero");
  for (Elem a = 0; a < n; ++a) {
    if (!mask[a]) continue;
    if (!mask[R->neg(a)]) throw Error("ideal not closed under negation");
    for (Elem b = 0; b < n; ++b) {
      if (mask[b] && !mask[R->add(a, b)])
        throw Error("ideal not closed under addition");
      if (!mask[R->mul(a, b)] || !mask[R->mul(b, a)])
        throw Error("ideal not closed under ring multiplication");
    }
  }
  return ideal_from_mask(std::move(R), std::move(mask));
}

struct QuotientRing {
  RingPtr ring;
  std::vector<Elem> projection;  // element index of R -> element index of R/I
};

/// Quotient by a two-sided ideal on coset representatives; the canonical
/// representative of a coset is its smallest element index.
inline QuotientRing quotient(const RingPtr& R, const Ideal& I) {
  if (I.ring.get() != R.get()) throw Error("ideal belongs to a different ring");
  const std::size_t n = R->order;
  std::vector<Elem> rep_of(n, no_elem);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (rep_of[a] != no_elem) continue;
    for (Elem i : I.members) rep_of[R->add(a, i)] = a;
    reps.push_back(a);
  }
  std::vector<Elem> new_index(n, no_elem);
  for (std::size_t k = 0; k < reps.size(); ++k) new_index[reps[k]] = static_cast<Elem>(k);

  FiniteRing Q;
  Q.order = reps.size();
  Q.name = R->name + "/I";
  Q.add_table.resize(Q.order * Q.order);
  Q.mul_table.resize(Q.order * Q.order);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Q.add_table[i * Q.order + j] = new_index[rep_of[R->add(reps[i], reps[j])]];
      Q.mul_table[i * Q.order + j] = new_index[rep_of[R->mul(reps[i], reps[j])]];
    }
  Q.zero = new_index[rep_of[R->zero]];
  Q.one = new_index[rep_of[R->one]];
  for (Elem r : reps) Q.labels.push_back(R->labels[r]);

  QuotientRing out;
  out.ring = make_ring(std::move(Q));
  out.projection.resize(n);
  for (Elem a = 0; a < n; ++a) out.projection[a] = new_index[rep_of[a]];
  return out;
}

inline std::string describe_elems(const FiniteRing& R, const std::vector<Elem>& es) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) os << ", ";
    os << R.label(es[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace skewpbw

// monomial.hpp -- exponent vectors and the monomial orders (deglex, lex)
// used to sort normal forms.

#pragma once

#include "skewpbw/finite_ring.hpp"

namespace skewpbw {

/// Exponent vector alpha; the all-zero vector is the monomial 1.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

inline Monomial mono_sum(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial unit_monomial(std::size_t n) { return Monomial(n, 0); }

inline Monomial var_monomial(std::size_t n, std::size_t i) {
  Monomial m(n, 0);
  m[i] = 1;
  return m;
}

struct MonomialOrder {
  enum class Kind { deglex, lex };
  Kind kind = Kind::deglex;

  /// a strictly below b. Ties in deglex break lexicographically with
  /// earlier coordinates more significant; 1 is minimal in both orders.
  bool less(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::deglex) {
      unsigned da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }

  const char* name() const { return kind == Kind::deglex ? "deglex" : "lex"; }

  static std::optional<MonomialOrder> by_name(std::string_view s) {
    if (s == "deglex") return MonomialOrder{Kind::deglex};
    if (s == "lex") return MonomialOrder{Kind::lex};
    return std::nullopt;
  }
};

/// Map comparator: ascending in the chosen order, so the leading monomial
/// of a term map is its last entry.
struct MonoLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order.less(a, b);
  }
};

}  // namespace skewpbw

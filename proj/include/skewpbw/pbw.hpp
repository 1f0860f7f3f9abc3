// pbw.hpp -- skew PBW presentations and their normal-form arithmetic.
//
// A presentation stores, over a tabulated coefficient ring R with maps
// Sigma/Delta, the reordering data of the defining relations
//
//   (R1)  x_i r   ->  sigma_i(r) x_i + delta_i(r)            (r in R)
//   (R2)  x_j x_i ->  c_{i,j} x_i x_j + r_0 + sum_k r_k x_k  (i < j)
//
// The single rewriting engine reduces words over the alphabet
// {coefficient, variable} by applying R1/R2/coefficient-merge until no
// redex remains; polynomials are maps monomial -> nonzero coefficient in
// the presentation's monomial order. Every rewrite strictly decreases
// (variable count, inversion count, misplaced-coefficient count)
// lexicographically, so reduction terminates under any redex selection;
// check_presentation then certifies confluence on the diamond-lemma
// overlaps, which makes the normal form strategy independent.

#pragma once

#include "skewpbw/maps.hpp"
#include "skewpbw/monomial.hpp"

#include <mutex>
#include <utility>

namespace skewpbw {

struct PBWPresentation;
using PresPtr = std::shared_ptr<const PBWPresentation>;

struct SkewPoly {
  PresPtr pres;
  std::map<Monomial, Elem, MonoLess> terms;  // ascending; no zero coefficients

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SkewPoly& o) const { return terms == o.terms; }
  bool operator!=(const SkewPoly& o) const { return !(terms == o.terms); }
};

/// One normal-form term list, used for memoized engine results.
using TermList = std::vector<std::pair<Monomial, Elem>>;

/// Engine memo tables; entries are write-once per key and idempotent, so
/// concurrent population under the mutex is safe.
struct EngineMemo {
  std::mutex mutex;
  std::map<std::pair<Monomial, Elem>, TermList> mono_coeff;
  std::map<std::pair<Monomial, Monomial>, TermList> mono_mono;
};

struct PBWPresentation {
  RingPtr ring;
  std::size_t n = 0;
  std::vector<std::string> var_names;
  SigmaDeltaSystem system;
  std::vector<Elem> c;                  // pair-indexed (i<j)
  std::vector<std::vector<Elem>> tail;  // pair-indexed; each of size n+1: r0, r1..rn
  MonomialOrder order;
  std::string name;

  // derived classification flags
  bool quasi_commutative = false;
  bool endomorphism_type = false;
  bool bijective = false;
  bool constants_central = false;  // all c_{i,j} and tail constants central in R

  std::unique_ptr<EngineMemo> memo = std::make_unique<EngineMemo>();

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // i < j, packed upper triangle
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
  Elem c_of(std::size_t i, std::size_t j) const { return c[pair_index(i, j)]; }
  const std::vector<Elem>& tail_of(std::size_t i, std::size_t j) const {
    return tail[pair_index(i, j)];
  }
};

/// Builds a presentation and derives its classification flags. Relation
/// data defaults to the quasi-commutative shape c = 1, tails = 0 when the
/// corresponding arguments are empty. Structural errors throw; the
/// diamond-lemma confluence check is check_presentation below.
inline PresPtr make_presentation(RingPtr ring, std::vector<std::string> var_names,
                                 SigmaDeltaSystem system, std::vector<Elem> c = {},
                                 std::vector<std::vector<Elem>> tail = {},
                                 MonomialOrder order = {}, std::string name = {}) {
  PBWPresentation P;
  P.n = var_names.size();
  const std::size_t pairs = P.n * (P.n - 1) / 2;
  if (system.n != P.n) throw Error("system arity does not match variable count");
  if (system.ring.get() != ring.get()) throw Error("system acts on a different ring");
  if (c.empty()) c.assign(pairs, ring->one);
  if (tail.empty()) tail.assign(pairs, std::vector<Elem>(P.n + 1, ring->zero));
  if (c.size() != pairs || tail.size() != pairs)
    throw Error("relation data does not match variable count");
  for (const auto& t : tail)
    if (t.size() != P.n + 1) throw Error("tail rows must have n+1 constants");
  for (Elem u : c)
    if (u == ring->zero) throw Error("c_{i,j} must be nonzero");
  for (std::size_t i = 0; i < P.n; ++i)
    for (std::size_t j = i + 1; j < P.n; ++j)
      if (var_names[i] == var_names[j]) throw Error("variable names must be distinct");

  P.ring = std::move(ring);
  P.var_names = std::move(var_names);
  P.system = std::move(system);
  P.c = std::move(c);
  P.tail = std::move(tail);
  P.order = order;
  P.name = std::move(name);

  bool all_delta_zero = true;
  for (const auto& d : P.system.deltas)
    for (Elem v : d.image) all_delta_zero = all_delta_zero && v == P.ring->zero;
  bool all_tails_zero = true;
  bool central = true;
  for (const auto& t : P.tail)
    for (Elem v : t) {
      all_tails_zero = all_tails_zero && v == P.ring->zero;
      central = central && P.ring->is_central(v);
    }
  bool all_c_invertible = true;
  for (Elem u : P.c) {
    all_c_invertible = all_c_invertible && P.ring->is_unit(u);
    central = central && P.ring->is_central(u);
  }
  P.endomorphism_type = all_delta_zero;
  P.quasi_commutative = all_delta_zero && all_tails_zero;
  P.bijective = all_c_invertible;  // injective endos of a finite ring are bijective
  P.constants_central = central;
  return std::make_shared<const PBWPresentation>(std::move(P));
}

/// Same presentation under another monomial order (fresh memo tables).
inline PresPtr with_order(const PresPtr& P, MonomialOrder order) {
  return make_presentation(P->ring, P->var_names, P->system, P->c, P->tail, order,
                           P->name);
}

// ---- polynomial construction ----

inline SkewPoly zero_poly(PresPtr P) {
  SkewPoly f;
  f.terms = std::map<Monomial, Elem, MonoLess>(MonoLess{P->order});
  f.pres = std::move(P);
  return f;
}

inline void add_term(SkewPoly& f, const Monomial& m, Elem coeff) {
  const FiniteRing& R = *f.pres->ring;
  if (coeff == R.zero) return;
  auto [it, inserted] = f.terms.emplace(m, coeff);
  if (!inserted) {
    it->second = R.add(it->second, coeff);
    if (it->second == R.zero) f.terms.erase(it);
  }
}

inline SkewPoly term_poly(PresPtr P, const Monomial& m, Elem coeff) {
  SkewPoly f = zero_poly(std::move(P));
  add_term(f, m, coeff);
  return f;
}

inline SkewPoly const_poly(PresPtr P, Elem coeff) {
  Monomial one = unit_monomial(P->n);
  return term_poly(std::move(P), one, coeff);
}

inline SkewPoly one_poly(PresPtr P) {
  Elem e = P->ring->one;
  return const_poly(std::move(P), e);
}

inline SkewPoly var_poly(PresPtr P, std::size_t i) {
  Monomial m = var_monomial(P->n, i);
  Elem e = P->ring->one;
  return term_poly(std::move(P), m, e);
}

inline SkewPoly poly_from_terms(PresPtr P, const TermList& ts) {
  SkewPoly f = zero_poly(std::move(P));
  for (const auto& [m, c] : ts) add_term(f, m, c);
  return f;
}

inline unsigned poly_degree(const SkewPoly& f) {
  unsigned d = 0;
  for (const auto& [m, c] : f.terms) d = std::max(d, total_degree(m));
  return d;
}

// ---- the word rewriting engine ----

struct Letter {
  bool is_var;
  Elem v;  // variable index when is_var, element index otherwise
};
using Word = std::vector<Letter>;

enum class RedexStrategy { leftmost, rightmost };

namespace detail {

inline Word word_of_term(Elem coeff, const Monomial& m, Elem one) {
  Word w;
  if (coeff != one) w.push_back({false, coeff});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned k = 0; k < m[i]; ++k) w.push_back({true, static_cast<Elem>(i)});
  return w;
}

// redex positions: (C,C) merge, (V,C) coefficient passing, (V_j,V_i) with
// j > i reordering
inline std::ptrdiff_t find_redex(const Word& w, RedexStrategy s) {
  auto is_redex = [&](std::size_t p) {
    const Letter &a = w[p], &b = w[p + 1];
    if (!a.is_var && !b.is_var) return true;
    if (a.is_var && !b.is_var) return true;
    if (a.is_var && b.is_var && a.v > b.v) return true;
    return false;
  };
  if (w.size() < 2) return -1;
  if (s == RedexStrategy::leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (is_redex(p)) return static_cast<std::ptrdiff_t>(p);
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;)
      if (is_redex(p)) return static_cast<std::ptrdiff_t>(p);
  }
  return -1;
}

}  // namespace detail

/// Converts a fully reduced word (optional front coefficient, ascending
/// variables) into a term of `acc`.
inline void accumulate_normal_word(SkewPoly& acc, const Word& w) {
  const PBWPresentation& P = *acc.pres;
  Elem coeff = P.ring->one;
  Monomial m = unit_monomial(P.n);
  for (const Letter& l : w) {
    if (l.is_var)
      ++m[l.v];
    else
      coeff = P.ring->mul(coeff, l.v);
  }
  add_term(acc, m, coeff);
}

/// The canonical engine: reduces `start` to normal form with a worklist,
/// splitting words at each R1/R2 application. Words acquiring a zero
/// coefficient are dropped. The result is independent of `strategy`
/// whenever check_presentation certifies the overlaps.
inline SkewPoly reduce_word(const PresPtr& Pp, const Word& start,
                            RedexStrategy strategy = RedexStrategy::leftmost) {
  const PBWPresentation& P = *Pp;
  const FiniteRing& R = *P.ring;
  SkewPoly acc = zero_poly(Pp);
  std::vector<Word> work;

  auto push = [&](Word w) {
    for (const Letter& l : w)
      if (!l.is_var && l.v == R.zero) return;
    work.push_back(std::move(w));
  };
  push(start);

  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    std::ptrdiff_t p = detail::find_redex(w, strategy);
    if (p < 0) {
      accumulate_normal_word(acc, w);
      continue;
    }
    const Letter a = w[p], b = w[p + 1];
    auto splice = [&](std::initializer_list<Letter> mid) {
      Word out;
      out.reserve(w.size() + mid.size());
      out.insert(out.end(), w.begin(), w.begin() + p);
      out.insert(out.end(), mid.begin(), mid.end());
      out.insert(out.end(), w.begin() + p + 2, w.end());
      return out;
    };
    if (!a.is_var && !b.is_var) {
      push(splice({Letter{false, R.mul(a.v, b.v)}}));
    } else if (a.is_var && !b.is_var) {
      std::size_t i = a.v;
      Elem s = P.system.sigmas[i].image[b.v];
      Elem d = P.system.deltas[i].image[b.v];
      push(splice({Letter{false, s}, Letter{true, a.v}}));
      if (d != R.zero) push(splice({Letter{false, d}}));
    } else {
      std::size_t i = b.v, j = a.v;  // j > i
      const auto& t = P.tail_of(i, j);
      push(splice({Letter{false, P.c_of(i, j)}, Letter{true, b.v}, Letter{true, a.v}}));
      if (t[0] != R.zero) push(splice({Letter{false, t[0]}}));
      for (std::size_t k = 0; k < P.n; ++k)
        if (t[k + 1] != R.zero)
          push(splice({Letter{false, t[k + 1]}, Letter{true, static_cast<Elem>(k)}}));
    }
  }
  return acc;
}

// ---- memoized engine seeds ----

namespace detail {

inline TermList terms_of(const SkewPoly& f) {
  TermList out(f.terms.begin(), f.terms.end());
  return out;
}

inline const TermList& mono_coeff_nf(const PresPtr& P, const Monomial& alpha, Elem r) {
  std::scoped_lock lock(P->memo->mutex);
  auto key = std::make_pair(alpha, r);
  auto it = P->memo->mono_coeff.find(key);
  if (it != P->memo->mono_coeff.end()) return it->second;
  Word w = word_of_term(P->ring->one, alpha, P->ring->one);
  w.push_back({false, r});
  TermList nf = terms_of(reduce_word(P, w));
  return P->memo->mono_coeff.emplace(std::move(key), std::move(nf)).first->second;
}

inline const TermList& mono_mono_nf(const PresPtr& P, const Monomial& a,
                                    const Monomial& b) {
  std::scoped_lock lock(P->memo->mutex);
  auto key = std::make_pair(a, b);
  auto it = P->memo->mono_mono.find(key);
  if (it != P->memo->mono_mono.end()) return it->second;
  Word w = word_of_term(P->ring->one, a, P->ring->one);
  Word w2 = word_of_term(P->ring->one, b, P->ring->one);
  w.insert(w.end(), w2.begin(), w2.end());
  TermList nf = terms_of(reduce_word(P, w));
  return P->memo->mono_mono.emplace(std::move(key), std::move(nf)).first->second;
}

}  // namespace detail

// ---- arithmetic ----

inline SkewPoly add(const SkewPoly& f, const SkewPoly& g) {
  SkewPoly r = f;
  for (const auto& [m, c] : g.terms) add_term(r, m, c);
  return r;
}

inline SkewPoly negate(const SkewPoly& f) {
  SkewPoly r = zero_poly(f.pres);
  for (const auto& [m, c] : f.terms) add_term(r, m, f.pres->ring->neg(c));
  return r;
}

inline SkewPoly sub(const SkewPoly& f, const SkewPoly& g) { return add(f, negate(g)); }

/// Left scalar: a * f with coefficients multiplied on the left.
inline SkewPoly scale_left(Elem a, const SkewPoly& f) {
  SkewPoly r = zero_poly(f.pres);
  for (const auto& [m, c] : f.terms) add_term(r, m, f.pres->ring->mul(a, c));
  return r;
}

/// Normal form of f*g. Each term pair a x^alpha * b x^beta reduces through
/// the engine as (x^alpha b) first, then each resulting monomial times
/// x^beta, both memoized per presentation.
inline SkewPoly mul(const SkewPoly& f, const SkewPoly& g) {
  if (f.pres.get() != g.pres.get())
    throw Error("polynomials belong to different presentations");
  const PresPtr& P = f.pres;
  const FiniteRing& R = *P->ring;
  SkewPoly out = zero_poly(P);
  for (const auto& [alpha, a] : f.terms)
    for (const auto& [beta, b] : g.terms)
      for (const auto& [gamma, r] : detail::mono_coeff_nf(P, alpha, b))
        for (const auto& [mu, s] : detail::mono_mono_nf(P, gamma, beta))
          add_term(out, mu, R.mul(a, R.mul(r, s)));
  return out;
}

/// f^k with the small factor kept on the left of every product.
inline SkewPoly poly_pow(const SkewPoly& f, unsigned k) {
  SkewPoly acc = one_poly(f.pres);
  for (unsigned i = 0; i < k; ++i) acc = mul(f, acc);
  return acc;
}

// ---- the spec'd decompositions ----

/// x_i r = sigma_i(r) x_i + delta_i(r).
inline SkewPoly var_times_coeff(const PresPtr& P, std::size_t i, Elem r) {
  if (i >= P->n) throw Error("variable index out of range");
  SkewPoly f = zero_poly(P);
  add_term(f, var_monomial(P->n, i), P->system.sigmas[i].image[r]);
  add_term(f, unit_monomial(P->n), P->system.deltas[i].image[r]);
  return f;
}

struct ProductDecomposition {
  Elem leading_coeff;
  SkewPoly tail;
};

/// x^alpha r = sigma^alpha(r) x^alpha + p with deg p < |alpha| (or p = 0).
inline ProductDecomposition mono_times_coeff(const PresPtr& P, const Monomial& alpha,
                                             Elem r) {
  SkewPoly tail = poly_from_terms(P, detail::mono_coeff_nf(P, alpha, r));
  Elem lead = P->ring->zero;
  auto it = tail.terms.find(alpha);
  if (it != tail.terms.end()) {
    lead = it->second;
    tail.terms.erase(it);
  }
  return {lead, std::move(tail)};
}

/// x^alpha x^beta = c_{alpha,beta} x^{alpha+beta} + p with deg p < |alpha+beta|.
inline ProductDecomposition mono_times_mono(const PresPtr& P, const Monomial& alpha,
                                            const Monomial& beta) {
  SkewPoly tail = poly_from_terms(P, detail::mono_mono_nf(P, alpha, beta));
  Elem lead = P->ring->zero;
  auto it = tail.terms.find(mono_sum(alpha, beta));
  if (it != tail.terms.end()) {
    lead = it->second;
    tail.terms.erase(it);
  }
  return {lead, std::move(tail)};
}

/// Leading data under the presentation's order; the zero polynomial gets
/// the conventional zero answers rather than an error.
struct LeadingData {
  bool is_zero;
  Monomial lm;
  Elem lc;
  Monomial exp;
  unsigned deg;
};

inline LeadingData leading(const SkewPoly& f) {
  const PresPtr& P = f.pres;
  if (f.is_zero())
    return {true, unit_monomial(P->n), P->ring->zero, unit_monomial(P->n), 0};
  auto it = f.terms.rbegin();
  return {false, it->first, it->second, it->first, poly_degree(f)};
}

// ---- printing (printing convention shared with the expression parser) ----

inline std::string monomial_to_string(const PBWPresentation& P, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < P.n; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += P.var_names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

/// Terms in decreasing monomial order, coefficients left of monomials as
/// bracketed labels; unit coefficients are omitted next to a proper
/// monomial. The zero polynomial prints as the zero label.
inline std::string poly_to_string(const SkewPoly& f) {
  const PBWPresentation& P = *f.pres;
  const FiniteRing& R = *P.ring;
  if (f.is_zero()) return "[" + R.label(R.zero) + "]";
  std::string out;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono = monomial_to_string(P, it->first);
    if (mono.empty())
      out += "[" + R.label(it->second) + "]";
    else if (it->second == R.one)
      out += mono;
    else
      out += "[" + R.label(it->second) + "]*" + mono;
  }
  return out;
}

// ---- diamond-lemma confluence check ----

/// Result of check_presentation: the first failing overlap (with both
/// normal forms printed) or the first non-invertible c_{i,j}.
struct PresentationCheck {
  bool ok = true;
  std::string error;  // human-readable description of the failure
  std::string overlap_kind;
  std::vector<Elem> witness;
  std::string nf_left, nf_right;
};

/// Verifies, by full enumeration, that the reduction system resolves its
/// diamond-lemma overlaps: (O1) variable triples, (O2) variable pairs
/// against every coefficient, (O3) every variable against coefficient
/// pairs. Confluence on these overlaps gives the PBW basis property.
inline PresentationCheck check_presentation(const PresPtr& P) {
  const FiniteRing& R = *P->ring;
  PresentationCheck res;
  for (std::size_t i = 0; i < P->n; ++i)
    for (std::size_t j = i + 1; j < P->n; ++j)
      if (!R.is_unit(P->c_of(i, j))) {
        res.ok = false;
        res.overlap_kind = "c_invertible";
        res.error = "c_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    "} = " + R.label(P->c_of(i, j)) + " is not invertible";
        return res;
      }

  auto fail = [&](std::string kind, std::vector<Elem> wit, const SkewPoly& l,
                  const SkewPoly& r) {
    res.ok = false;
    res.overlap_kind = std::move(kind);
    res.witness = std::move(wit);
    res.nf_left = poly_to_string(l);
    res.nf_right = poly_to_string(r);
    res.error = res.overlap_kind + " overlap fails: " + res.nf_left +
                " != " + res.nf_right;
  };

  // O1: (x_k x_j) x_i vs x_k (x_j x_i), i < j < k
  for (std::size_t i = 0; i < P->n; ++i)
    for (std::size_t j = i + 1; j < P->n; ++j)
      for (std::size_t k = j + 1; k < P->n; ++k) {
        SkewPoly xi = var_poly(P, i), xj = var_poly(P, j), xk = var_poly(P, k);
        SkewPoly l = mul(mul(xk, xj), xi);
        SkewPoly r = mul(xk, mul(xj, xi));
        if (l != r) {
          fail("O1", {static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(k)},
               l, r);
          return res;
        }
      }
  // O2: (x_j x_i) r vs x_j (x_i r), i < j, all r
  for (std::size_t i = 0; i < P->n; ++i)
    for (std::size_t j = i + 1; j < P->n; ++j)
      for (Elem r = 0; r < R.order; ++r) {
        SkewPoly xi = var_poly(P, i), xj = var_poly(P, j);
        SkewPoly cr = const_poly(P, r);
        SkewPoly l = mul(mul(xj, xi), cr);
        SkewPoly rr = mul(xj, mul(xi, cr));
        if (l != rr) {
          fail("O2", {static_cast<Elem>(i), static_cast<Elem>(j), r}, l, rr);
          return res;
        }
      }
  // O3: (x_i r) s vs x_i (r s), all i, r, s
  for (std::size_t i = 0; i < P->n; ++i)
    for (Elem r = 0; r < R.order; ++r)
      for (Elem s = 0; s < R.order; ++s) {
        SkewPoly xi = var_poly(P, i);
        SkewPoly l = mul(mul(xi, const_poly(P, r)), const_poly(P, s));
        SkewPoly rr = mul(xi, const_poly(P, R.mul(r, s)));
        if (l != rr) {
          fail("O3", {static_cast<Elem>(i), r, s}, l, rr);
          return res;
        }
      }
  return res;
}

}  // namespace skewpbw

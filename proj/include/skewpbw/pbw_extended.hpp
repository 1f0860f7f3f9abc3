// pbw_extended.hpp -- extended maps sigma-bar/delta-bar on the whole
// extension, quotient extensions A/IA, and the capped tower extension
// A' = sigma(A)<x1',...,xn'>.

#pragma once

#include "skewpbw/pbw.hpp"

namespace skewpbw {

struct ExtendHypothesis {
  std::string name;
  bool holds = true;
  std::string witness;
};

/// Hypothesis ledger for extending Sigma/Delta coefficientwise to A:
/// sigma_i delta_j = delta_j sigma_i, delta_i delta_j = delta_j delta_i,
/// delta_k(c_{i,j}) = 0 and delta_k of every tail constant = 0 (the tail
/// row includes r_0). When all hold, sigma_bar/delta_bar act on
/// coefficients termwise.
struct ExtendedMaps {
  PresPtr pres;
  bool ok = false;
  std::vector<ExtendHypothesis> hypotheses;

  std::string first_failure() const {
    for (const auto& h : hypotheses)
      if (!h.holds) return h.name + " fails at " + h.witness;
    return "";
  }
};

inline ExtendedMaps extend_maps(const PresPtr& P) {
  const FiniteRing& R = *P->ring;
  const auto& S = P->system;
  ExtendedMaps out;
  out.pres = P;

  for (std::size_t i = 0; i < S.n; ++i)
    for (std::size_t j = 0; j < S.n; ++j) {
      ExtendHypothesis h;
      h.name = "sigma_" + std::to_string(i + 1) + " delta_" + std::to_string(j + 1) +
               " = delta_" + std::to_string(j + 1) + " sigma_" + std::to_string(i + 1);
      for (Elem r = 0; r < R.order && h.holds; ++r)
        if (S.sigmas[i].image[S.deltas[j].image[r]] !=
            S.deltas[j].image[S.sigmas[i].image[r]]) {
          h.holds = false;
          h.witness = R.label(r);
        }
      out.hypotheses.push_back(std::move(h));
    }
  for (std::size_t i = 0; i < S.n; ++i)
    for (std::size_t j = i + 1; j < S.n; ++j) {
      ExtendHypothesis h;
      h.name = "delta_" + std::to_string(i + 1) + " delta_" + std::to_string(j + 1) +
               " = delta_" + std::to_string(j + 1) + " delta_" + std::to_string(i + 1);
      for (Elem r = 0; r < R.order && h.holds; ++r)
        if (S.deltas[i].image[S.deltas[j].image[r]] !=
            S.deltas[j].image[S.deltas[i].image[r]]) {
          h.holds = false;
          h.witness = R.label(r);
        }
      out.hypotheses.push_back(std::move(h));
    }
  for (std::size_t k = 0; k < S.n; ++k)
    for (std::size_t i = 0; i < P->n; ++i)
      for (std::size_t j = i + 1; j < P->n; ++j) {
        {
          ExtendHypothesis h;
          h.name = "delta_" + std::to_string(k + 1) + "(c_{" + std::to_string(i + 1) +
                   "," + std::to_string(j + 1) + "}) = 0";
          Elem v = S.deltas[k].image[P->c_of(i, j)];
          if (v != R.zero) {
            h.holds = false;
            h.witness = "delta(c) = " + R.label(v);
          }
          out.hypotheses.push_back(std::move(h));
        }
        const auto& t = P->tail_of(i, j);
        for (std::size_t l = 0; l < t.size(); ++l) {
          if (t[l] == R.zero) continue;
          ExtendHypothesis h;
          h.name = "delta_" + std::to_string(k + 1) + "(r_" + std::to_string(l) +
                   "^{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}) = 0";
          Elem v = S.deltas[k].image[t[l]];
          if (v != R.zero) {
            h.holds = false;
            h.witness = "delta(r) = " + R.label(v);
          }
          out.hypotheses.push_back(std::move(h));
        }
      }

  out.ok = true;
  for (const auto& h : out.hypotheses) out.ok = out.ok && h.holds;
  return out;
}

/// Coefficientwise sigma_k on A; requires extend_maps(P).ok.
inline SkewPoly sigma_bar(const ExtendedMaps& E, std::size_t k, const SkewPoly& f) {
  if (!E.ok) throw Error("extended maps unavailable: " + E.first_failure());
  if (k >= E.pres->system.n) throw Error("sigma_bar index out of range");
  SkewPoly out = zero_poly(f.pres);
  for (const auto& [m, c] : f.terms)
    add_term(out, m, E.pres->system.sigmas[k].image[c]);
  return out;
}

inline SkewPoly delta_bar(const ExtendedMaps& E, std::size_t k, const SkewPoly& f) {
  if (!E.ok) throw Error("extended maps unavailable: " + E.first_failure());
  if (k >= E.pres->system.n) throw Error("delta_bar index out of range");
  SkewPoly out = zero_poly(f.pres);
  for (const auto& [m, c] : f.terms)
    add_term(out, m, E.pres->system.deltas[k].image[c]);
  return out;
}

// ---- quotient extension A/IA over R/I ----

struct QuotientExtension {
  PresPtr pres;             // presentation over R/I
  QuotientRing quotient;    // ring-level quotient with projection
  SigmaDeltaSystem system;  // induced maps (same object as pres->system)
};

/// A/IA as a presentation over R/I. Requires a proper,
/// (Sigma,Delta)-invariant ideal with sigma_i(I) = I; re-runs the diamond
/// check on the result and verifies IA intersect R = I through the coefficient
/// embedding (r lies in IA iff its image vanishes in the quotient).
inline QuotientExtension quotient_extension(const PresPtr& P, const Ideal& I) {
  if (!I.is_proper()) throw Error("quotient extension needs a proper ideal");
  if (!is_invariant_ideal(P->system, I, InvarianceFlavor::both))
    throw Error("ideal is not (Sigma,Delta)-invariant");
  if (!is_invariant_ideal(P->system, I, InvarianceFlavor::sigma_onto))
    throw Error("quotient extension needs sigma_i(I) = I for every i");

  InducedSystem ind = induced_quotient_system(P->system, I);
  const auto& proj = ind.quotient.projection;
  std::vector<Elem> c;
  std::vector<std::vector<Elem>> tail;
  for (std::size_t i = 0; i < P->n; ++i)
    for (std::size_t j = i + 1; j < P->n; ++j) {
      c.push_back(proj[P->c_of(i, j)]);
      std::vector<Elem> t;
      for (Elem v : P->tail_of(i, j)) t.push_back(proj[v]);
      tail.push_back(std::move(t));
    }
  QuotientExtension out;
  out.pres = make_presentation(ind.quotient.ring, P->var_names, ind.system,
                               std::move(c), std::move(tail), P->order,
                               P->name + "/I");
  out.system = out.pres->system;
  out.quotient = std::move(ind.quotient);

  PresentationCheck chk = check_presentation(out.pres);
  if (!chk.ok) throw Error("quotient extension fails its diamond check: " + chk.error);

  // IA intersect R = I on the coefficient embedding
  for (Elem r = 0; r < P->ring->order; ++r) {
    bool in_IA = out.quotient.projection[r] == out.pres->ring->zero;
    if (in_IA != I.contains(r))
      throw Error("IA intersect R != I at element " + P->ring->label(r));
  }
  return out;
}

// ---- the tower extension A' over the infinite coefficient ring A ----

/// Tower polynomials carry SkewPoly coefficients; all arithmetic is capped
/// (coefficient degree, term counts) because A is infinite. Exceeding a
/// cap is an explicit outcome, never a silent truncation.
struct TowerCaps {
  unsigned coeff_degree = 8;
  std::size_t max_terms = 64;
  unsigned power_cap = 16;
};

struct TowerPresentation {
  PresPtr base;  // A; variables x_i' reuse the base arities and relations
  ExtendedMaps maps;
  TowerCaps caps;
};

inline TowerPresentation tower_presentation(const PresPtr& P, TowerCaps caps = {}) {
  ExtendedMaps E = extend_maps(P);
  if (!E.ok)
    throw Error("tower construction needs the extended maps: " + E.first_failure());
  return {P, std::move(E), caps};
}

struct TowerPoly {
  // monomial in the primed variables -> SkewPoly coefficient in A
  std::map<Monomial, SkewPoly> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const TowerPoly& o) const { return terms == o.terms; }
};

inline void tower_add_term(TowerPoly& f, const Monomial& m, const SkewPoly& c) {
  if (c.is_zero()) return;
  auto it = f.terms.find(m);
  if (it == f.terms.end()) {
    f.terms.emplace(m, c);
    return;
  }
  it->second = add(it->second, c);
  if (it->second.is_zero()) f.terms.erase(it);
}

struct TowerCapExceeded : Error {
  using Error::Error;
};

inline void tower_check_caps(const TowerPresentation& T, const TowerPoly& f) {
  if (f.terms.size() > T.caps.max_terms)
    throw TowerCapExceeded("tower term count exceeds cap");
  for (const auto& [m, c] : f.terms)
    if (poly_degree(c) > T.caps.coeff_degree)
      throw TowerCapExceeded("tower coefficient degree exceeds cap");
}

inline TowerPoly tower_zero() { return {}; }

inline TowerPoly tower_term(const TowerPresentation& T, const Monomial& m,
                            const SkewPoly& c) {
  if (m.size() != T.base->n) throw Error("tower monomial arity mismatch");
  TowerPoly f;
  tower_add_term(f, m, c);
  tower_check_caps(T, f);
  return f;
}

inline TowerPoly tower_add(const TowerPresentation& T, const TowerPoly& f,
                           const TowerPoly& g) {
  TowerPoly out = f;
  for (const auto& [m, c] : g.terms) tower_add_term(out, m, c);
  tower_check_caps(T, out);
  return out;
}

namespace detail {

// x_i' * (coefficient f in A) = sigma_bar_i(f) x_i' + delta_bar_i(f)
inline TowerPoly tower_var_times_coeff(const TowerPresentation& T, std::size_t i,
                                       const SkewPoly& f) {
  TowerPoly out;
  tower_add_term(out, var_monomial(T.base->n, i), sigma_bar(T.maps, i, f));
  tower_add_term(out, unit_monomial(T.base->n), delta_bar(T.maps, i, f));
  return out;
}

inline TowerPoly tower_var_times_poly(const TowerPresentation& T, std::size_t i,
                                      const TowerPoly& g);

// x_i' * x'^beta in the primed variables, using the base relations with
// coefficients embedded as constants of A
inline TowerPoly tower_var_times_mono(const TowerPresentation& T, std::size_t i,
                                      const Monomial& beta) {
  const PresPtr& A = T.base;
  if (total_degree(beta) == 0)
    return tower_term(T, var_monomial(A->n, i), one_poly(A));
  std::size_t j = 0;
  while (beta[j] == 0) ++j;
  if (i <= j) {
    Monomial m = beta;
    ++m[i];
    return tower_term(T, m, one_poly(A));
  }
  Monomial rest = beta;
  --rest[j];
  // x_i' x_j' = c_{j,i} x_j' x_i' + tail, applied on the left of x'^rest
  TowerPoly xi_rest = tower_var_times_mono(T, i, rest);
  TowerPoly out;
  {
    TowerPoly tmp = tower_var_times_poly(T, j, xi_rest);
    for (auto& [m, c] : tmp.terms)
      tower_add_term(out, m, scale_left(A->c_of(j, i), c));
  }
  const auto& t = A->tail_of(j, i);
  if (t[0] != A->ring->zero)
    tower_add_term(out, rest, const_poly(A, t[0]));
  for (std::size_t k = 0; k < A->n; ++k) {
    if (t[k + 1] == A->ring->zero) continue;
    TowerPoly xk_rest = tower_var_times_mono(T, k, rest);
    for (auto& [m, c] : xk_rest.terms)
      tower_add_term(out, m, scale_left(t[k + 1], c));
  }
  return out;
}

inline TowerPoly tower_var_times_poly(const TowerPresentation& T, std::size_t i,
                                      const TowerPoly& g) {
  TowerPoly out;
  for (const auto& [beta, b] : g.terms) {
    SkewPoly sb = sigma_bar(T.maps, i, b);
    SkewPoly db = delta_bar(T.maps, i, b);
    if (!sb.is_zero()) {
      TowerPoly xib = tower_var_times_mono(T, i, beta);
      for (auto& [m, c] : xib.terms) tower_add_term(out, m, mul(sb, c));
    }
    tower_add_term(out, beta, db);
  }
  return out;
}

}  // namespace detail

inline TowerPoly tower_mul(const TowerPresentation& T, const TowerPoly& f,
                           const TowerPoly& g) {
  TowerPoly out;
  for (const auto& [alpha, a] : f.terms) {
    // a x'^alpha * g: apply the variables of alpha right to left, then a
    TowerPoly cur = g;
    for (std::size_t i = alpha.size(); i-- > 0;)
      for (unsigned k = 0; k < alpha[i]; ++k)
        cur = detail::tower_var_times_poly(T, i, cur);
    for (auto& [m, c] : cur.terms) tower_add_term(out, m, mul(a, c));
  }
  tower_check_caps(T, out);
  return out;
}

enum class TowerNilpotency { nilpotent, not_nilpotent_within_cap, inconclusive_cap };

struct TowerNilpotencyResult {
  TowerNilpotency outcome;
  unsigned exponent = 0;  // least m with f^m = 0 when nilpotent
};

/// Successive powers under the tower caps. A cap hit is an explicit
/// inconclusive outcome, never a refutation.
inline TowerNilpotencyResult tower_is_nilpotent(const TowerPresentation& T,
                                                const TowerPoly& f) {
  TowerPoly acc = tower_term(T, unit_monomial(T.base->n), one_poly(T.base));
  try {
    for (unsigned m = 1; m <= T.caps.power_cap; ++m) {
      acc = tower_mul(T, f, acc);
      if (acc.is_zero()) return {TowerNilpotency::nilpotent, m};
    }
  } catch (const TowerCapExceeded&) {
    return {TowerNilpotency::inconclusive_cap, 0};
  }
  return {TowerNilpotency::not_nilpotent_within_cap, 0};
}

}  // namespace skewpbw

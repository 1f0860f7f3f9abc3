// nil_theory.hpp -- nilpotency predicates for skew polynomials and the
// theorem-verification harness: each supported theorem id checks its
// hypotheses exhaustively on the coefficient ring, sweeps the stated
// conclusion over a bounded polynomial box (exhaustive or seeded), and
// reports a hypothesis ledger, counterexample list and verdict.

#pragma once

#include "skewpbw/pbw_extended.hpp"

#include <functional>

namespace skewpbw {

// ---- nilpotency of polynomials ----

struct NilpotencyResult {
  bool nilpotent = false;
  unsigned exponent = 0;  // least m with f^m = 0 when nilpotent
};

/// Successive powers with the small factor on the left; `cap` bounds the
/// exponent tried. Not reaching zero within the cap is a value, not an
/// error.
inline NilpotencyResult is_nilpotent_poly_direct(const SkewPoly& f, unsigned cap) {
  SkewPoly acc = one_poly(f.pres);
  for (unsigned m = 1; m <= cap; ++m) {
    acc = mul(f, acc);
    if (acc.is_zero()) return {true, m};
  }
  return {false, 0};
}

/// The exponent bound (m+1)k + 1 that suffices under the transfer
/// hypotheses: m+1 = term count, k = the largest nilpotency index among
/// the (nilpotent) coefficients.
inline unsigned nilpotency_power_bound(const SkewPoly& f) {
  const FiniteRing& R = *f.pres->ring;
  unsigned terms = static_cast<unsigned>(std::max<std::size_t>(1, f.terms.size()));
  unsigned k = 1;
  for (const auto& [m, c] : f.terms)
    if (R.is_nilpotent(c)) k = std::max(k, R.nil_index(c));
  return terms * k + 1;
}

/// nil(R)A membership: every coefficient nilpotent in R.
inline bool in_nilRA(const SkewPoly& f) {
  const FiniteRing& R = *f.pres->ring;
  for (const auto& [m, c] : f.terms)
    if (!R.is_nilpotent(c)) return false;
  return true;
}

struct Hypothesis {
  std::string name;
  bool holds = true;
  std::string witness;
};

/// The standing hypotheses of the nilpotency transfer results:
/// (Sigma,Delta)-compatibility, reversibility of R, and centrality of the
/// c_{i,j} and tail constants.
inline std::vector<Hypothesis> nil_theorem_hypotheses(const PresPtr& P,
                                                      unsigned word_len) {
  std::vector<Hypothesis> hs;
  {
    PredicateResult r = is_sigma_compatible(P->system, word_len);
    hs.push_back({"sigma_compatible", r.holds,
                  r.holds ? "" : r.describe(*P->ring)});
  }
  {
    PredicateResult r = is_delta_compatible(P->system, word_len);
    hs.push_back({"delta_compatible", r.holds,
                  r.holds ? "" : r.describe(*P->ring)});
  }
  {
    auto r = check_property(*P->ring, RingProperty::reversible,
                            std::max<std::size_t>(P->ring->order, default_predicate_cap));
    hs.push_back({"reversible", r.holds,
                  r.holds ? "" : describe_elems(*P->ring, r.witness)});
  }
  {
    std::string witness;
    if (!P->constants_central) {
      auto non_central = [&](Elem v) {
        if (witness.empty() && !P->ring->is_central(v))
          witness = P->ring->label(v) + " is not central";
      };
      for (Elem u : P->c) non_central(u);
      for (const auto& t : P->tail)
        for (Elem v : t) non_central(v);
    }
    hs.push_back({"constants_central", P->constants_central, witness});
  }
  return hs;
}

inline bool all_hold(const std::vector<Hypothesis>& hs) {
  for (const auto& h : hs)
    if (!h.holds) return false;
  return true;
}

/// Coefficient criterion for f in nil(A), with the hypothesis ledger.
/// When a hypothesis fails the criterion is unusable and the direct power
/// test (at the exponent bound) answers instead.
struct CriterionResult {
  std::vector<Hypothesis> hypotheses;
  bool hypotheses_ok = false;
  bool nilpotent = false;          // the returned verdict
  bool by_criterion = false;       // true when the coefficient test decided
  NilpotencyResult direct;         // filled when the direct method ran
};

inline CriterionResult is_nilpotent_poly_criterion(const SkewPoly& f,
                                                   unsigned word_len = default_word_length) {
  CriterionResult res;
  res.hypotheses = nil_theorem_hypotheses(f.pres, word_len);
  res.hypotheses_ok = all_hold(res.hypotheses);
  if (res.hypotheses_ok) {
    res.by_criterion = true;
    res.nilpotent = in_nilRA(f);
  } else {
    res.direct = is_nilpotent_poly_direct(f, nilpotency_power_bound(f));
    res.nilpotent = res.direct.nilpotent;
  }
  return res;
}

// ---- verification reports ----

enum class Verdict { verified_on_domain, hypothesis_failed, refuted, inconclusive_cap };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified_on_domain: return "verified_on_domain";
    case Verdict::hypothesis_failed: return "hypothesis_failed";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive_cap: return "inconclusive_cap";
  }
  return "?";
}

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string theorem;
  std::vector<Hypothesis> hypotheses;
  std::string domain;
  std::uint64_t checks_run = 0;
  std::vector<Counterexample> counterexamples;
  Verdict verdict = Verdict::verified_on_domain;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
};

struct Budget {
  unsigned max_terms = 2;
  unsigned max_deg = 2;
  enum class Mode { exhaustive, seeded } mode = Mode::exhaustive;
  std::uint64_t sample_count = 10000;
  std::uint64_t seed = 1;
  unsigned word_len = default_word_length;
  std::vector<std::string> ideal_gens;  // element labels, for the quotient theorems
  bool all_witnesses = false;

  std::string describe() const {
    std::string s = "polynomials with <= " + std::to_string(max_terms) +
                    " terms, degree <= " + std::to_string(max_deg) + ", ";
    s += mode == Mode::exhaustive
             ? "exhaustive"
             : "seeded(" + std::to_string(sample_count) + ", seed " +
                   std::to_string(seed) + ")";
    return s;
  }
};

inline Budget exhaustive_budget(unsigned max_terms, unsigned max_deg) {
  Budget b;
  b.max_terms = max_terms;
  b.max_deg = max_deg;
  b.mode = Budget::Mode::exhaustive;
  return b;
}

// ---- polynomial box enumeration and sampling ----

namespace detail {

inline std::vector<Monomial> monomial_box(std::size_t n, unsigned max_deg) {
  std::vector<Monomial> out;
  for_each_multi_index(n, max_deg, [&](const std::vector<unsigned>& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

/// All polynomials with at most max_terms terms over the monomial box and
/// arbitrary nonzero coefficients, the zero polynomial included. Returns
/// the number visited; fn returning false stops early.
template <typename Fn>
std::uint64_t for_each_poly_in_box(const PresPtr& P, unsigned max_terms,
                                   unsigned max_deg, Fn&& fn) {
  const FiniteRing& R = *P->ring;
  auto monos = monomial_box(P->n, max_deg);
  std::vector<Elem> nonzero;
  for (Elem e = 0; e < R.order; ++e)
    if (e != R.zero) nonzero.push_back(e);

  std::uint64_t count = 1;
  if (!fn(zero_poly(P))) return count;

  std::vector<std::size_t> subset;
  // enumerate k-subsets of the monomial box in lexicographic order
  auto visit_subset = [&]() -> bool {
    std::vector<std::size_t> cidx(subset.size(), 0);
    while (true) {
      SkewPoly f = zero_poly(P);
      for (std::size_t i = 0; i < subset.size(); ++i)
        add_term(f, monos[subset[i]], nonzero[cidx[i]]);
      ++count;
      if (!fn(f)) return false;
      std::size_t p = cidx.size();
      bool done = false;
      while (true) {
        if (p == 0) {
          done = true;
          break;
        }
        --p;
        if (++cidx[p] < nonzero.size()) break;
        cidx[p] = 0;
      }
      if (done) break;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!subset.empty() && !visit_subset()) return false;
    if (subset.size() == max_terms) return true;
    for (std::size_t i = start; i < monos.size(); ++i) {
      subset.push_back(i);
      if (!rec(i + 1)) return false;
      subset.pop_back();
    }
    return true;
  };
  if (!rec(0)) return count;
  return count;
}

/// Counter-based splittable generator (splitmix64 on seed + counter);
/// disjoint counter ranges give independent reproducible streams.
struct CounterRng {
  std::uint64_t seed;
  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline constexpr std::uint64_t rng_stride = 64;

/// Deterministic sample from the same box the exhaustive mode sweeps.
inline SkewPoly sample_poly(const PresPtr& P, const std::vector<Monomial>& monos,
                            unsigned max_terms, const CounterRng& rng,
                            std::uint64_t base) {
  const FiniteRing& R = *P->ring;
  SkewPoly f = zero_poly(P);
  unsigned k = static_cast<unsigned>(rng.at(base) % (max_terms + 1));
  std::uint64_t draw = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::size_t mi = rng.at(base + draw++) % monos.size();
    Elem c = static_cast<Elem>(rng.at(base + draw++) % (R.order - 1));
    if (c >= R.zero) c = static_cast<Elem>(c + 1);  // skip the zero element
    add_term(f, monos[mi], c);                      // repeated monomials merge
  }
  return f;
}

}  // namespace detail

// ---- the harness ----

inline const std::vector<std::string>& supported_theorems() {
  static const std::vector<std::string> ids = {
      "lemma_nil_words",      "lemma_sigma_reflect", "thm_nil_coeff",
      "thm_nil_product",      "thm_weak_sym_transfer", "thm_tower_weak_sym",
      "prop_idempotent_split", "thm_quotient_transfer", "thm_ext_weak_sigdelta"};
  return ids;
}

namespace detail {

inline void finalize_verdict(VerificationReport& rep, bool cap_hit = false) {
  if (!all_hold(rep.hypotheses))
    rep.verdict = Verdict::hypothesis_failed;
  else if (!rep.counterexamples.empty())
    rep.verdict = Verdict::refuted;
  else if (cap_hit)
    rep.verdict = Verdict::inconclusive_cap;
  else
    rep.verdict = Verdict::verified_on_domain;
}

/// Nilpotency in A used inside conclusion sweeps: the coefficient
/// criterion once the standing hypotheses hold (they are verified first),
/// the direct power test at the exponent bound otherwise.
inline bool sweep_nilpotent(const SkewPoly& f, bool hypotheses_ok) {
  if (hypotheses_ok) return in_nilRA(f);
  return is_nilpotent_poly_direct(f, nilpotency_power_bound(f)).nilpotent;
}

template <typename Fn>
void sweep_triples(const PresPtr& P, const Budget& budget, VerificationReport& rep,
                   Fn&& body) {
  auto monos = monomial_box(P->n, budget.max_deg);
  if (budget.mode == Budget::Mode::exhaustive) {
    std::vector<SkewPoly> box;
    for_each_poly_in_box(P, budget.max_terms, budget.max_deg,
                         [&](const SkewPoly& f) {
                           box.push_back(f);
                           return true;
                         });
    for (const auto& f : box)
      for (const auto& g : box)
        for (const auto& h : box) {
          ++rep.checks_run;
          if (!body(f, g, h)) return;
        }
  } else {
    rep.seed = budget.seed;
    CounterRng rng{budget.seed};
    for (std::uint64_t s = 0; s < budget.sample_count; ++s) {
      std::uint64_t base = s * rng_stride;
      SkewPoly f = sample_poly(P, monos, budget.max_terms, rng, base);
      SkewPoly g = sample_poly(P, monos, budget.max_terms, rng, base + rng_stride / 4);
      SkewPoly h = sample_poly(P, monos, budget.max_terms, rng, base + rng_stride / 2);
      ++rep.checks_run;
      if (!body(f, g, h)) return;
    }
  }
}

inline bool record(VerificationReport& rep, const Budget& budget, std::string inputs,
                   std::string expected, std::string got) {
  rep.counterexamples.push_back({std::move(inputs), std::move(expected), std::move(got)});
  return budget.all_witnesses && rep.counterexamples.size() < 100;
}

// -- individual theorems --

inline VerificationReport verify_lemma_nil_words(const PresPtr& P, const Budget& b) {
  VerificationReport rep;
  rep.theorem = "lemma_nil_words";
  rep.domain = "all ring pairs with ab nilpotent, words of length <= " +
               std::to_string(b.word_len);
  auto hs = nil_theorem_hypotheses(P, b.word_len);
  rep.hypotheses.assign(hs.begin(), hs.begin() + 3);  // compatibility + reversible
  const FiniteRing& R = *P->ring;
  std::vector<MapLetter> alphabet;
  for (std::size_t i = 0; i < P->system.n; ++i) {
    alphabet.push_back({MapLetter::Kind::sigma, i});
    alphabet.push_back({MapLetter::Kind::delta, i});
  }
  bool go_on = true;
  for_each_word(alphabet, b.word_len, [&](const MapWord& w) {
    for (Elem a = 0; a < R.order; ++a)
      for (Elem bb = 0; bb < R.order; ++bb) {
        if (!R.is_nilpotent(R.mul(a, bb))) continue;
        ++rep.checks_run;
        if (!R.is_nilpotent(R.mul(a, apply_word(P->system, w, bb)))) {
          go_on = record(rep, b,
                         "(" + R.label(a) + ", " + R.label(bb) + ", " +
                             word_to_string(w) + ")",
                         "a.w(b) nilpotent", "not nilpotent");
          if (!go_on) return false;
        }
      }
    return true;
  });
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_lemma_sigma_reflect(const PresPtr& P, const Budget& b) {
  VerificationReport rep;
  rep.theorem = "lemma_sigma_reflect";
  rep.domain = "all ring pairs, sigma words of length <= " + std::to_string(b.word_len);
  auto hs = nil_theorem_hypotheses(P, b.word_len);
  rep.hypotheses.assign(hs.begin(), hs.begin() + 2);  // compatibility only
  const FiniteRing& R = *P->ring;
  std::vector<MapLetter> alphabet;
  for (std::size_t i = 0; i < P->system.n; ++i)
    alphabet.push_back({MapLetter::Kind::sigma, i});
  for_each_word(alphabet, b.word_len, [&](const MapWord& w) {
    for (Elem a = 0; a < R.order; ++a)
      for (Elem bb = 0; bb < R.order; ++bb) {
        ++rep.checks_run;
        if (R.is_nilpotent(R.mul(a, apply_word(P->system, w, bb))) &&
            !R.is_nilpotent(R.mul(a, bb)))
          if (!record(rep, b,
                      "(" + R.label(a) + ", " + R.label(bb) + ", " +
                          word_to_string(w) + ")",
                      "ab nilpotent", "not nilpotent"))
            return false;
      }
    return true;
  });
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_thm_nil_coeff(const PresPtr& P, const Budget& b) {
  VerificationReport rep;
  rep.theorem = "thm_nil_coeff";
  rep.domain = b.describe() + "; criterion vs direct powers at exponent bound (m+1)k+1";
  rep.hypotheses = nil_theorem_hypotheses(P, b.word_len);
  if (b.mode == Budget::Mode::seeded) rep.seed = b.seed;

  auto compare = [&](const SkewPoly& f) {
    bool criterion = in_nilRA(f);
    NilpotencyResult direct = is_nilpotent_poly_direct(f, nilpotency_power_bound(f));
    if (criterion != direct.nilpotent)
      return record(rep, b, poly_to_string(f),
                    criterion ? "nilpotent (coefficients all nil)"
                              : "not nilpotent (a coefficient is not nil)",
                    direct.nilpotent
                        ? "direct power test reaches 0 at exponent " +
                              std::to_string(direct.exponent)
                        : "direct power test does not reach 0 within the cap");
    return true;
  };
  if (b.mode == Budget::Mode::exhaustive) {
    rep.checks_run =
        for_each_poly_in_box(P, b.max_terms, b.max_deg, compare);
  } else {
    CounterRng rng{b.seed};
    auto monos = monomial_box(P->n, b.max_deg);
    for (std::uint64_t s = 0; s < b.sample_count; ++s) {
      ++rep.checks_run;
      if (!compare(sample_poly(P, monos, b.max_terms, rng, s * rng_stride))) break;
    }
  }
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_thm_nil_product(const PresPtr& P, const Budget& b) {
  VerificationReport rep;
  rep.theorem = "thm_nil_product";
  rep.domain = b.describe() + "; parts (1) fg, (2) fgr over all r, (3) fgh";
  rep.hypotheses = nil_theorem_hypotheses(P, b.word_len);
  bool hyp_ok = all_hold(rep.hypotheses);
  const FiniteRing& R = *P->ring;

  std::vector<SkewPoly> box;
  for_each_poly_in_box(P, b.max_terms, b.max_deg, [&](const SkewPoly& f) {
    box.push_back(f);
    return true;
  });

  auto coeffs_of = [&](const SkewPoly& f) {
    std::vector<Elem> cs;
    if (f.is_zero()) cs.push_back(R.zero);
    for (const auto& [m, c] : f.terms) cs.push_back(c);
    return cs;
  };
  bool go_on = true;
  for (const auto& f : box) {
    if (!go_on) break;
    auto fc = coeffs_of(f);
    for (const auto& g : box) {
      if (!go_on) break;
      auto gc = coeffs_of(g);
      SkewPoly fg = mul(f, g);
      // (1)
      ++rep.checks_run;
      bool lhs = sweep_nilpotent(fg, hyp_ok);
      bool rhs = true;
      for (Elem a : fc)
        for (Elem bb : gc) rhs = rhs && R.is_nilpotent(R.mul(a, bb));
      if (lhs != rhs) {
        go_on = record(rep, b, "f = " + poly_to_string(f) + ", g = " + poly_to_string(g),
                       "fg nil(A) <=> all a_i b_j nil(R)",
                       lhs ? "fg nil but some a_i b_j not nil"
                           : "all a_i b_j nil but fg not nil");
        continue;
      }
      // (2) over every r
      for (Elem r = 0; r < R.order && go_on; ++r) {
        ++rep.checks_run;
        SkewPoly fgr = mul(fg, const_poly(P, r));
        bool l2 = sweep_nilpotent(fgr, hyp_ok);
        bool r2 = true;
        for (Elem a : fc)
          for (Elem bb : gc) r2 = r2 && R.is_nilpotent(R.mul(R.mul(a, bb), r));
        if (l2 != r2)
          go_on = record(rep, b,
                         "f = " + poly_to_string(f) + ", g = " + poly_to_string(g) +
                             ", r = " + R.label(r),
                         "fgr nil(A) <=> all a_i b_j r nil(R)", "mismatch");
      }
      // (3)
      for (const auto& h : box) {
        if (!go_on) break;
        ++rep.checks_run;
        SkewPoly fgh = mul(fg, h);
        bool l3 = sweep_nilpotent(fgh, hyp_ok);
        bool r3 = true;
        auto hc = coeffs_of(h);
        for (Elem a : fc)
          for (Elem bb : gc)
            for (Elem cc : hc) r3 = r3 && R.is_nilpotent(R.mul(R.mul(a, bb), cc));
        if (l3 != r3)
          go_on = record(rep, b,
                         "f = " + poly_to_string(f) + ", g = " + poly_to_string(g) +
                             ", h = " + poly_to_string(h),
                         "fgh nil(A) <=> all a_i b_j c_k nil(R)", "mismatch");
      }
    }
  }
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_thm_weak_sym_transfer(const PresPtr& P,
                                                       const Budget& b) {
  VerificationReport rep;
  rep.theorem = "thm_weak_sym_transfer";
  rep.domain = b.describe() + "; forward: fgh nil => fhg nil; reverse on constants";
  rep.hypotheses = nil_theorem_hypotheses(P, b.word_len);
  {
    auto r = check_property(*P->ring, RingProperty::weak_symmetric,
                            std::max<std::size_t>(P->ring->order, default_predicate_cap));
    rep.hypotheses.push_back({"ring_weak_symmetric", r.holds,
                              r.holds ? "" : describe_elems(*P->ring, r.witness)});
  }
  bool hyp_ok = all_hold(rep.hypotheses);
  const FiniteRing& R = *P->ring;

  sweep_triples(P, b, rep, [&](const SkewPoly& f, const SkewPoly& g, const SkewPoly& h) {
    SkewPoly fgh = mul(mul(f, g), h);
    if (!sweep_nilpotent(fgh, hyp_ok)) return true;
    SkewPoly fhg = mul(mul(f, h), g);
    if (!sweep_nilpotent(fhg, hyp_ok))
      return record(rep, b,
                    "f = " + poly_to_string(f) + ", g = " + poly_to_string(g) +
                        ", h = " + poly_to_string(h),
                    "fhg nilpotent", "not nilpotent");
    return true;
  });

  // reverse direction on coefficient triples embedded as constants
  for (Elem a = 0; a < R.order; ++a)
    for (Elem bb = 0; bb < R.order; ++bb)
      for (Elem c = 0; c < R.order; ++c) {
        ++rep.checks_run;
        SkewPoly abc = mul(mul(const_poly(P, a), const_poly(P, bb)), const_poly(P, c));
        SkewPoly acb = mul(mul(const_poly(P, a), const_poly(P, c)), const_poly(P, bb));
        bool ring_level = !R.is_nilpotent(R.mul(R.mul(a, bb), c)) ||
                          R.is_nilpotent(R.mul(R.mul(a, c), bb));
        bool ext_level = !sweep_nilpotent(abc, hyp_ok) || sweep_nilpotent(acb, hyp_ok);
        if (ring_level != ext_level)
          if (!record(rep, b,
                      "constants (" + R.label(a) + ", " + R.label(bb) + ", " +
                          R.label(c) + ")",
                      "constant embedding agrees with the ring level", "mismatch"))
            goto done;
      }
done:
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_thm_tower_weak_sym(const PresPtr& P, const Budget& b) {
  VerificationReport rep;
  rep.theorem = "thm_tower_weak_sym";
  rep.domain = "tower triples, " + b.describe() + "; capped nilpotency tests";
  {
    auto r = is_sigma_rigid(P->system, b.word_len);
    rep.hypotheses.push_back(
        {"sigma_rigid", r.holds, r.holds ? "" : r.describe(*P->ring)});
  }
  ExtendedMaps E = extend_maps(P);
  for (const auto& h : E.hypotheses)
    rep.hypotheses.push_back({"extend: " + h.name, h.holds, h.witness});
  rep.hypotheses.push_back({"constants_central", P->constants_central, ""});
  if (!all_hold(rep.hypotheses)) {
    finalize_verdict(rep);
    return rep;
  }

  TowerPresentation T = tower_presentation(P);
  rep.seed = b.seed;
  CounterRng rng{b.seed};
  auto monos = monomial_box(P->n, b.max_deg);
  bool cap_hit = false;
  std::uint64_t samples = b.mode == Budget::Mode::seeded ? b.sample_count : 200;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t base = s * rng_stride;
    auto sample_tower = [&](std::uint64_t off) {
      TowerPoly F;
      unsigned k = static_cast<unsigned>(rng.at(base + off) % b.max_terms) + 1;
      for (unsigned i = 0; i < k; ++i) {
        std::size_t mi = rng.at(base + off + 1 + 2 * i) % monos.size();
        SkewPoly c = sample_poly(P, monos, b.max_terms, rng, base + off + 7 + 3 * i);
        tower_add_term(F, monos[mi], c);
      }
      return F;
    };
    TowerPoly F = sample_tower(0), G = sample_tower(17), H = sample_tower(37);
    ++rep.checks_run;
    try {
      auto fgh = tower_is_nilpotent(T, tower_mul(T, tower_mul(T, F, G), H));
      if (fgh.outcome == TowerNilpotency::inconclusive_cap) {
        cap_hit = true;
        continue;
      }
      if (fgh.outcome != TowerNilpotency::nilpotent) continue;
      auto fhg = tower_is_nilpotent(T, tower_mul(T, tower_mul(T, F, H), G));
      if (fhg.outcome == TowerNilpotency::inconclusive_cap) {
        cap_hit = true;
        continue;
      }
      if (fhg.outcome != TowerNilpotency::nilpotent)
        if (!record(rep, b, "sampled tower triple #" + std::to_string(s),
                    "FHG nilpotent", "not nilpotent within cap"))
          break;
    } catch (const TowerCapExceeded&) {
      cap_hit = true;
    }
  }
  finalize_verdict(rep, cap_hit);
  return rep;
}

inline VerificationReport verify_prop_idempotent_split(const PresPtr& P,
                                                       const Budget& b) {
  VerificationReport rep;
  rep.theorem = "prop_idempotent_split";
  rep.domain = "all idempotents, exhaustive ideal checks";
  const FiniteRing& R = *P->ring;
  const auto& S = P->system;
  {
    auto r = check_property(R, RingProperty::abelian,
                            std::max<std::size_t>(R.order, default_predicate_cap));
    rep.hypotheses.push_back(
        {"abelian", r.holds, r.holds ? "" : describe_elems(R, r.witness)});
  }
  for (Elem e : idempotents(R)) {
    for (std::size_t i = 0; i < S.n; ++i) {
      if (S.sigmas[i].image[e] != e)
        rep.hypotheses.push_back({"sigma fixes idempotents", false,
                                  "sigma_" + std::to_string(i + 1) + "(" + R.label(e) +
                                      ") = " + R.label(S.sigmas[i].image[e])});
      if (S.deltas[i].image[e] != R.zero)
        rep.hypotheses.push_back({"delta kills idempotents", false,
                                  "delta_" + std::to_string(i + 1) + "(" + R.label(e) +
                                      ") = " + R.label(S.deltas[i].image[e])});
    }
  }
  if (rep.hypotheses.size() == 1) {
    rep.hypotheses.push_back({"sigma fixes idempotents", true, ""});
    rep.hypotheses.push_back({"delta kills idempotents", true, ""});
  }
  if (!all_hold(rep.hypotheses)) {
    finalize_verdict(rep);
    return rep;
  }

  bool lhs = is_weak_sigma_delta_symmetric(
                 S, std::max<std::size_t>(R.order, default_predicate_cap))
                 .holds;
  bool rhs = true;
  std::string rhs_witness;
  for (Elem e : idempotents(R)) {
    ++rep.checks_run;
    auto principal = [&](Elem idem) {
      std::vector<bool> mask(R.order, false);
      for (Elem r = 0; r < R.order; ++r) mask[R.mul(idem, r)] = true;
      return ideal_from_mask(P->ring, std::move(mask));
    };
    auto r1 = is_weak_sym_ideal(S, principal(e),
                                std::max<std::size_t>(R.order, default_predicate_cap));
    auto r2 = is_weak_sym_ideal(S, principal(R.sub(R.one, e)),
                                std::max<std::size_t>(R.order, default_predicate_cap));
    if (!r1.holds || !r2.holds) {
      rhs = false;
      rhs_witness = "e = " + R.label(e) + ": " +
                    (!r1.holds ? r1.describe(R) : r2.describe(R));
    }
  }
  if (lhs != rhs)
    record(rep, b, rhs_witness.empty() ? "equivalence of (1) and (2)" : rhs_witness,
           "R weak (Sigma,Delta)-symmetric <=> eR and (1-e)R weak symmetric ideals",
           lhs ? "(1) holds but (2) fails" : "(2) holds but (1) fails");
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_thm_quotient_transfer(const PresPtr& P,
                                                       const Budget& b) {
  VerificationReport rep;
  rep.theorem = "thm_quotient_transfer";
  const FiniteRing& R = *P->ring;
  std::vector<Elem> gens;
  for (const auto& lab : b.ideal_gens) {
    auto e = R.element_by_label(lab);
    if (!e) throw Error("ideal generator label " + lab + " not in " + R.name);
    gens.push_back(*e);
  }
  Ideal I = ideal_generated(P->ring, gens);
  rep.domain = "I generated by " + std::to_string(gens.size()) +
               " elements, |I| = " + std::to_string(I.members.size()) +
               "; ring-level transfer checked exhaustively both ways";

  {
    bool sub = true;
    Elem wit = R.zero;
    for (Elem m : I.members)
      if (!R.is_nilpotent(m)) {
        sub = false;
        wit = m;
        break;
      }
    rep.hypotheses.push_back(
        {"I subset of nil(R)", sub, sub ? "" : R.label(wit)});
  }
  auto invariance_witness = [&](InvarianceFlavor flavor) -> std::string {
    for (std::size_t i = 0; i < P->system.n; ++i)
      for (Elem a : I.members) {
        Elem s = P->system.sigmas[i].image[a];
        Elem d = P->system.deltas[i].image[a];
        if (flavor != InvarianceFlavor::delta && !I.contains(s))
          return "sigma_" + std::to_string(i + 1) + "(" + R.label(a) + ") = " +
                 R.label(s) + " escapes I";
        if ((flavor == InvarianceFlavor::delta || flavor == InvarianceFlavor::both) &&
            !I.contains(d))
          return "delta_" + std::to_string(i + 1) + "(" + R.label(a) + ") = " +
                 R.label(d) + " escapes I";
      }
    if (flavor == InvarianceFlavor::sigma_onto)
      for (std::size_t i = 0; i < P->system.n; ++i) {
        std::vector<bool> hit(R.order, false);
        for (Elem a : I.members) hit[P->system.sigmas[i].image[a]] = true;
        for (Elem a : I.members)
          if (!hit[a])
            return R.label(a) + " is not in sigma_" + std::to_string(i + 1) + "(I)";
      }
    return "";
  };
  {
    bool inv = is_invariant_ideal(P->system, I, InvarianceFlavor::both);
    rep.hypotheses.push_back({"I (Sigma,Delta)-invariant", inv,
                              inv ? "" : invariance_witness(InvarianceFlavor::both)});
  }
  // the quotient construction needs sigma_i(I) = I, not just containment
  {
    bool onto = is_invariant_ideal(P->system, I, InvarianceFlavor::sigma_onto);
    rep.hypotheses.push_back(
        {"sigma_i(I) = I", onto,
         onto ? "" : invariance_witness(InvarianceFlavor::sigma_onto)});
  }
  {
    auto r = is_weak_sym_ideal(P->system, I,
                               std::max<std::size_t>(R.order, default_predicate_cap));
    rep.hypotheses.push_back(
        {"I weak (Sigma,Delta)-symmetric ideal", r.holds, r.holds ? "" : r.describe(R)});
  }
  rep.hypotheses.push_back(
      {"I proper", I.is_proper(), I.is_proper() ? "" : "I is the whole ring"});
  rep.notes.push_back(
      "quotient hypothesis read as sigma_i(I) = I, onto rather than into");
  if (!all_hold(rep.hypotheses)) {
    finalize_verdict(rep);
    return rep;
  }

  bool ring_side = is_weak_sigma_delta_symmetric(
                       P->system, std::max<std::size_t>(R.order, default_predicate_cap))
                       .holds;
  InducedSystem ind = induced_quotient_system(P->system, I);
  bool quot_side =
      is_weak_sigma_delta_symmetric(
          ind.system, std::max<std::size_t>(ind.quotient.ring->order,
                                            default_predicate_cap))
          .holds;
  ++rep.checks_run;
  if (ring_side != quot_side)
    record(rep, b, "transfer between R and R/I",
           "R weak (Sigma,Delta)-symmetric <=> R/I weak symmetric",
           ring_side ? "R holds, R/I fails" : "R/I holds, R fails");

  // IA intersect R = I through the quotient extension
  try {
    quotient_extension(P, I);
    ++rep.checks_run;
    rep.notes.push_back("IA intersect R = I verified on the coefficient embedding");
  } catch (const Error& e) {
    record(rep, b, "quotient extension construction", "IA intersect R = I", e.what());
  }
  finalize_verdict(rep);
  return rep;
}

inline VerificationReport verify_thm_ext_weak_sigdelta(const PresPtr& P,
                                                       const Budget& b) {
  VerificationReport rep;
  rep.theorem = "thm_ext_weak_sigdelta";
  rep.domain = b.describe() +
               "; fgh nil => fh.sigma_bar_i(g) and fh.delta_bar_i(g) nil, every i";
  rep.hypotheses = nil_theorem_hypotheses(P, b.word_len);
  ExtendedMaps E = extend_maps(P);
  bool emaps_ok = E.ok;
  rep.hypotheses.push_back(
      {"extended_maps", emaps_ok, emaps_ok ? "" : E.first_failure()});
  {
    auto r = is_weak_sigma_delta_symmetric(
        P->system, std::max<std::size_t>(P->ring->order, default_predicate_cap));
    rep.hypotheses.push_back({"ring_weak_sigma_delta_symmetric", r.holds,
                              r.holds ? "" : r.sigma_forward.holds
                                                 ? r.delta_forward.describe(*P->ring)
                                                 : r.sigma_forward.describe(*P->ring)});
  }
  bool hyp_ok = all_hold(rep.hypotheses);
  if (!emaps_ok) {
    finalize_verdict(rep);
    return rep;
  }

  sweep_triples(P, b, rep, [&](const SkewPoly& f, const SkewPoly& g, const SkewPoly& h) {
    SkewPoly fgh = mul(mul(f, g), h);
    if (!sweep_nilpotent(fgh, hyp_ok)) return true;
    SkewPoly fh = mul(f, h);
    for (std::size_t i = 0; i < P->system.n; ++i) {
      if (!sweep_nilpotent(mul(fh, sigma_bar(E, i, g)), hyp_ok))
        return record(rep, b,
                      "f = " + poly_to_string(f) + ", g = " + poly_to_string(g) +
                          ", h = " + poly_to_string(h),
                      "fh.sigma_bar_" + std::to_string(i + 1) + "(g) nilpotent",
                      "not nilpotent");
      if (!sweep_nilpotent(mul(fh, delta_bar(E, i, g)), hyp_ok))
        return record(rep, b,
                      "f = " + poly_to_string(f) + ", g = " + poly_to_string(g) +
                          ", h = " + poly_to_string(h),
                      "fh.delta_bar_" + std::to_string(i + 1) + "(g) nilpotent",
                      "not nilpotent");
    }
    return true;
  });
  finalize_verdict(rep);
  return rep;
}

}  // namespace detail

/// Runs one theorem check. Unsupported ids throw; an empty enumeration box
/// (degenerate budget) throws as well.
inline VerificationReport verify(const std::string& theorem, const PresPtr& P,
                                 const Budget& budget = {}) {
  if (budget.max_terms == 0 && theorem != "prop_idempotent_split" &&
      theorem != "thm_quotient_transfer")
    throw Error("budget renders the polynomial box empty (max_terms = 0)");
  if (theorem == "lemma_nil_words") return detail::verify_lemma_nil_words(P, budget);
  if (theorem == "lemma_sigma_reflect")
    return detail::verify_lemma_sigma_reflect(P, budget);
  if (theorem == "thm_nil_coeff") return detail::verify_thm_nil_coeff(P, budget);
  if (theorem == "thm_nil_product") return detail::verify_thm_nil_product(P, budget);
  if (theorem == "thm_weak_sym_transfer")
    return detail::verify_thm_weak_sym_transfer(P, budget);
  if (theorem == "thm_tower_weak_sym")
    return detail::verify_thm_tower_weak_sym(P, budget);
  if (theorem == "prop_idempotent_split")
    return detail::verify_prop_idempotent_split(P, budget);
  if (theorem == "thm_quotient_transfer")
    return detail::verify_thm_quotient_transfer(P, budget);
  if (theorem == "thm_ext_weak_sigdelta")
    return detail::verify_thm_ext_weak_sigdelta(P, budget);
  throw Error("unsupported theorem id: " + theorem);
}

/// Ring-level weak symmetry versus the budgeted extension-level check,
/// with the hypothesis ledger deciding how a disagreement reads: under
/// failed hypotheses it is expected behavior, not a refutation.
struct TransferPairReport {
  bool ring_weak_symmetric = false;
  VerificationReport extension;
  bool agree = false;
  bool hypotheses_ok = false;
};

inline TransferPairReport check_transfer_pair(const PresPtr& P, const Budget& b = {}) {
  TransferPairReport out;
  out.ring_weak_symmetric =
      ring_property(*P->ring, RingProperty::weak_symmetric,
                    std::max<std::size_t>(P->ring->order, default_predicate_cap));
  out.extension = detail::verify_thm_weak_sym_transfer(P, b);
  out.hypotheses_ok = all_hold(out.extension.hypotheses);
  out.agree = out.extension.counterexamples.empty();
  return out;
}

}  // namespace skewpbw

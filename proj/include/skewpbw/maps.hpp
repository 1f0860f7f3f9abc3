// maps.hpp -- endomorphism families Sigma and Sigma-derivation families
// Delta on a tabulated ring, plus the compatibility / rigidity / weak
// symmetry predicates that gate the transfer theorems.
//
// Word convention: a MapWord is read as a composition expression, so
// apply_word({s1, d2}, r) = sigma_1(delta_2(r)) -- the last letter acts
// first. A multi-index power sigma^alpha is the word
// sigma_1^{a1} ... sigma_n^{an}, matching the right-to-left evaluation
// sigma_1^{a1}(sigma_2^{a2}(...(sigma_n^{an}(r)))).

#pragma once

#include "skewpbw/finite_ring.hpp"
#include "skewpbw/ring_spec.hpp"

namespace skewpbw {

struct RingEndo {
  RingPtr ring;
  std::vector<Elem> image;  // image[a] = sigma(a)

  Elem operator()(Elem a) const { return image[a]; }
};

struct SigmaDerivation {
  RingPtr ring;
  RingEndo sigma;  // the partner endomorphism of the Leibniz rule
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }
};

inline RingEndo identity_endo(RingPtr R) {
  RingEndo e;
  e.ring = R;
  e.image.resize(R->order);
  for (Elem a = 0; a < R->order; ++a) e.image[a] = a;
  return e;
}

inline SigmaDerivation zero_derivation(RingPtr R, RingEndo sigma) {
  SigmaDerivation d;
  d.ring = R;
  d.sigma = std::move(sigma);
  d.image.assign(R->order, R->zero);
  return d;
}

/// Additive + multiplicative + unital + injective, checked over all pairs.
inline ValidationResult validate_endo(const RingEndo& s) {
  const FiniteRing& R = *s.ring;
  if (s.image.size() != R.order) return ValidationResult::fail("endo_shape", {});
  if (s.image[R.one] != R.one) return ValidationResult::fail("endo_unital", {R.one});
  for (Elem a = 0; a < R.order; ++a)
    for (Elem b = 0; b < R.order; ++b) {
      if (s.image[R.add(a, b)] != R.add(s.image[a], s.image[b]))
        return ValidationResult::fail("endo_additive", {a, b});
      if (s.image[R.mul(a, b)] != R.mul(s.image[a], s.image[b]))
        return ValidationResult::fail("endo_multiplicative", {a, b});
    }
  std::vector<bool> seen(R.order, false);
  for (Elem a = 0; a < R.order; ++a) {
    if (seen[s.image[a]]) return ValidationResult::fail("endo_injective", {a});
    seen[s.image[a]] = true;
  }
  return ValidationResult::pass();
}

/// delta(a+b) = delta(a)+delta(b), delta(ab) = sigma(a)delta(b)+delta(a)b,
/// delta(1) = 0; all pairs swept.
inline ValidationResult validate_derivation(const SigmaDerivation& d) {
  const FiniteRing& R = *d.ring;
  if (d.image.size() != R.order || d.sigma.image.size() != R.order)
    return ValidationResult::fail("derivation_shape", {});
  if (d.image[R.one] != R.zero)
    return ValidationResult::fail("derivation_unit_to_zero", {R.one});
  for (Elem a = 0; a < R.order; ++a)
    for (Elem b = 0; b < R.order; ++b) {
      if (d.image[R.add(a, b)] != R.add(d.image[a], d.image[b]))
        return ValidationResult::fail("derivation_additive", {a, b});
      Elem lhs = d.image[R.mul(a, b)];
      Elem rhs = R.add(R.mul(d.sigma.image[a], d.image[b]), R.mul(d.image[a], b));
      if (lhs != rhs) return ValidationResult::fail("derivation_leibniz", {a, b});
    }
  return ValidationResult::pass();
}

struct SigmaDeltaSystem {
  RingPtr ring;
  std::size_t n = 0;
  std::vector<RingEndo> sigmas;
  std::vector<SigmaDerivation> deltas;
};

inline SigmaDeltaSystem make_system(RingPtr R, std::vector<RingEndo> sigmas,
                                    std::vector<SigmaDerivation> deltas) {
  SigmaDeltaSystem S;
  S.ring = std::move(R);
  S.n = sigmas.size();
  if (deltas.size() != S.n)
    throw Error("system needs one derivation per endomorphism");
  for (std::size_t i = 0; i < S.n; ++i) {
    if (sigmas[i].ring.get() != S.ring.get() || deltas[i].ring.get() != S.ring.get())
      throw Error("system maps act on different rings");
    if (deltas[i].sigma.image != sigmas[i].image)
      throw Error("delta[" + std::to_string(i) + "] is not partnered with sigma[" +
                  std::to_string(i) + "]");
    ValidationResult v = validate_endo(sigmas[i]);
    if (!v.ok)
      throw Error("sigma_" + std::to_string(i + 1) + " fails " + v.axiom + " at " +
                  describe_elems(*S.ring, v.witness));
    v = validate_derivation(deltas[i]);
    if (!v.ok)
      throw Error("delta_" + std::to_string(i + 1) + " fails " + v.axiom + " at " +
                  describe_elems(*S.ring, v.witness));
  }
  S.sigmas = std::move(sigmas);
  S.deltas = std::move(deltas);
  return S;
}

/// Identity-sigma, zero-delta system with n variables -- the "constant" case.
inline SigmaDeltaSystem trivial_system(RingPtr R, std::size_t n) {
  std::vector<RingEndo> ss;
  std::vector<SigmaDerivation> ds;
  for (std::size_t i = 0; i < n; ++i) {
    ss.push_back(identity_endo(R));
    ds.push_back(zero_derivation(R, identity_endo(R)));
  }
  return make_system(std::move(R), std::move(ss), std::move(ds));
}

// ---- generator-image builders ----

/// Endomorphism of base[t]/(t^d) determined by t -> t_image; base constants
/// are fixed. Validated exhaustively afterwards.
inline RingEndo endo_from_t_image(RingPtr R, const RingSpec& spec, Elem t_image) {
  if (spec.kind != RingSpec::Kind::trunc_poly)
    throw Error("endo_from_t_image needs a trunc_poly ring");
  RingEndo s;
  s.ring = R;
  s.image.resize(R->order);
  for (Elem e = 0; e < R->order; ++e) {
    auto digits = trunc_digits(spec, e);
    Elem acc = R->zero;
    for (unsigned k = 0; k < digits.size(); ++k) {
      Elem coeff = trunc_term_index(spec, digits[k], 0);  // embedded constant
      acc = R->add(acc, R->mul(coeff, R->pow(t_image, k)));
    }
    s.image[e] = acc;
  }
  ValidationResult v = validate_endo(s);
  if (!v.ok)
    throw Error("t-image endomorphism fails " + v.axiom + " at " +
                describe_elems(*R, v.witness));
  return s;
}

/// Sigma-derivation of base[t]/(t^d) determined by t -> d_image via the
/// Leibniz closure delta(t^k) = sigma(t) delta(t^{k-1}) + delta(t) t^{k-1},
/// delta(constants) = 0. Validated exhaustively afterwards.
inline SigmaDerivation derivation_from_t_image(RingPtr R, const RingSpec& spec,
                                               RingEndo sigma, Elem d_image) {
  if (spec.kind != RingSpec::Kind::trunc_poly)
    throw Error("derivation_from_t_image needs a trunc_poly ring");
  const unsigned d = spec.trunc_degree;
  RingPtr base = ring_of_spec(*spec.base);
  Elem t = d == 1 ? R->zero : trunc_term_index(spec, base->one, 1);
  std::vector<Elem> dt(d, R->zero);  // dt[k] = delta(t^k)
  if (d > 1) {
    dt[1] = d_image;
    for (unsigned k = 2; k < d; ++k)
      dt[k] = R->add(R->mul(sigma.image[t], dt[k - 1]),
                     R->mul(d_image, R->pow(t, k - 1)));
  }
  SigmaDerivation out;
  out.ring = R;
  out.sigma = std::move(sigma);
  out.image.resize(R->order);
  for (Elem e = 0; e < R->order; ++e) {
    auto digits = trunc_digits(spec, e);
    Elem acc = R->zero;
    for (unsigned k = 0; k < digits.size(); ++k) {
      Elem coeff = trunc_term_index(spec, digits[k], 0);
      acc = R->add(acc, R->mul(coeff, dt[k]));
    }
    out.image[e] = acc;
  }
  ValidationResult v = validate_derivation(out);
  if (!v.ok)
    throw Error("t-image derivation fails " + v.axiom + " at " +
                describe_elems(*R, v.witness));
  return out;
}

/// Endomorphism of a product ring permuting its (identically specified)
/// factors: component i of the image is component perm[i] of the argument.
inline RingEndo endo_from_permutation(RingPtr R, const RingSpec& spec,
                                      const std::vector<std::size_t>& perm) {
  if (spec.kind != RingSpec::Kind::product)
    throw Error("endo_from_permutation needs a product ring");
  if (perm.size() != spec.factors.size())
    throw Error("permutation arity does not match factor count");
  RingEndo s;
  s.ring = R;
  s.image.resize(R->order);
  for (Elem e = 0; e < R->order; ++e) {
    auto digits = product_digits(spec, e);
    std::vector<Elem> out(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (perm[i] >= digits.size()) throw Error("permutation index out of range");
      out[i] = digits[perm[i]];
    }
    s.image[e] = product_index(spec, out);
  }
  ValidationResult v = validate_endo(s);
  if (!v.ok)
    throw Error("permutation endomorphism fails " + v.axiom + " at " +
                describe_elems(*R, v.witness));
  return s;
}

inline RingEndo endo_from_images(RingPtr R, std::vector<Elem> image) {
  RingEndo s;
  s.ring = std::move(R);
  s.image = std::move(image);
  ValidationResult v = validate_endo(s);
  if (!v.ok)
    throw Error("endomorphism image list fails " + v.axiom + " at " +
                describe_elems(*s.ring, v.witness));
  return s;
}

inline SigmaDerivation derivation_from_images(RingPtr R, RingEndo sigma,
                                              std::vector<Elem> image) {
  SigmaDerivation d;
  d.ring = std::move(R);
  d.sigma = std::move(sigma);
  d.image = std::move(image);
  ValidationResult v = validate_derivation(d);
  if (!v.ok)
    throw Error("derivation image list fails " + v.axiom + " at " +
                describe_elems(*d.ring, v.witness));
  return d;
}

// ---- words over the sigma/delta alphabet ----

struct MapLetter {
  enum class Kind { sigma, delta };
  Kind kind;
  std::size_t index;  // 0-based

  bool operator==(const MapLetter&) const = default;
};

using MapWord = std::vector<MapLetter>;

inline std::string word_to_string(const MapWord& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += (l.kind == MapLetter::Kind::sigma ? "s" : "d") + std::to_string(l.index + 1);
  }
  return s;
}

/// Last letter acts first (composition order).
inline Elem apply_word(const SigmaDeltaSystem& S, const MapWord& word, Elem r) {
  for (std::size_t i = word.size(); i-- > 0;) {
    const MapLetter& l = word[i];
    if (l.index >= S.n) throw Error("word index out of range");
    r = l.kind == MapLetter::Kind::sigma ? S.sigmas[l.index].image[r]
                                         : S.deltas[l.index].image[r];
  }
  return r;
}

/// The sigma-word of a multi-index: sigma_1^{a1} ... sigma_n^{an}.
inline MapWord sigma_word(const std::vector<unsigned>& alpha) {
  MapWord w;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (unsigned k = 0; k < alpha[i]; ++k)
      w.push_back({MapLetter::Kind::sigma, i});
  return w;
}

inline constexpr unsigned default_word_length = 3;

namespace detail {

/// Enumerates words over a fixed alphabet, lengths 1..max_len, in
/// (length, lexicographic) order; stops early when fn returns false.
template <typename Fn>
bool for_each_word(const std::vector<MapLetter>& alphabet, unsigned max_len, Fn&& fn) {
  if (alphabet.empty()) return true;
  for (unsigned len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> idx(len, 0);
    bool done = false;
    while (!done) {
      MapWord w(len);
      for (unsigned i = 0; i < len; ++i) w[i] = alphabet[idx[i]];
      if (!fn(w)) return false;
      std::size_t p = len;
      while (true) {
        if (p == 0) {
          done = true;
          break;
        }
        --p;
        if (++idx[p] < alphabet.size()) break;
        idx[p] = 0;
      }
    }
  }
  return true;
}

template <typename Fn>
bool compositions_rec(std::size_t n, unsigned total, std::vector<unsigned>& cur,
                      std::size_t pos, Fn&& fn) {
  if (pos + 1 == n) {
    cur[pos] = total;
    return fn(static_cast<const std::vector<unsigned>&>(cur));
  }
  for (unsigned v = 0; v <= total; ++v) {
    cur[pos] = v;
    if (!compositions_rec(n, total - v, cur, pos + 1, fn)) return false;
  }
  return true;
}

/// All multi-indices alpha in N^n with |alpha| <= max_total, ascending by
/// (|alpha|, lexicographic); stops early when fn returns false.
template <typename Fn>
bool for_each_multi_index(std::size_t n, unsigned max_total, Fn&& fn) {
  if (n == 0) {
    std::vector<unsigned> empty;
    return fn(static_cast<const std::vector<unsigned>&>(empty));
  }
  std::vector<unsigned> cur(n);
  for (unsigned total = 0; total <= max_total; ++total)
    if (!compositions_rec(n, total, cur, 0, fn)) return false;
  return true;
}

}  // namespace detail

struct PredicateResult {
  bool holds = true;
  MapWord word;               // failing word (or sigma-word of alpha)
  std::vector<Elem> witness;  // failing elements
  std::string note;

  std::string describe(const FiniteRing& R) const {
    if (holds) return "holds";
    return "fails at " + describe_elems(R, witness) + " with word " +
           word_to_string(word) + (note.empty() ? "" : " (" + note + ")");
  }
};

/// Sigma-compatibility: a sigma^w(b) = 0 <=> ab = 0 for all pure sigma
/// words w with 1 <= |w| <= max_len. The first failing (word, a, b) in
/// (length, word, a, b) order is the witness.
inline PredicateResult is_sigma_compatible(const SigmaDeltaSystem& S,
                                           unsigned max_len = default_word_length,
                                           std::size_t cap = default_predicate_cap) {
  const FiniteRing& R = *S.ring;
  if (R.order > cap) throw Error("ring order exceeds predicate cap");
  std::vector<MapLetter> alpha;
  for (std::size_t i = 0; i < S.n; ++i) alpha.push_back({MapLetter::Kind::sigma, i});
  PredicateResult res;
  detail::for_each_word(alpha, max_len, [&](const MapWord& w) {
    for (Elem a = 0; a < R.order; ++a)
      for (Elem b = 0; b < R.order; ++b) {
        bool ab0 = R.mul(a, b) == R.zero;
        bool awb0 = R.mul(a, apply_word(S, w, b)) == R.zero;
        if (ab0 != awb0) {
          res = {false, w, {a, b},
                 ab0 ? "ab = 0 but a.w(b) != 0" : "a.w(b) = 0 but ab != 0"};
          return false;
        }
      }
    return true;
  });
  return res;
}

/// Delta-compatibility: ab = 0 => a delta^w(b) = 0 for pure delta words.
inline PredicateResult is_delta_compatible(const SigmaDeltaSystem& S,
                                           unsigned max_len = default_word_length,
                                           std::size_t cap = default_predicate_cap) {
  const FiniteRing& R = *S.ring;
  if (R.order > cap) throw Error("ring order exceeds predicate cap");
  std::vector<MapLetter> alpha;
  for (std::size_t i = 0; i < S.n; ++i) alpha.push_back({MapLetter::Kind::delta, i});
  PredicateResult res;
  detail::for_each_word(alpha, max_len, [&](const MapWord& w) {
    for (Elem a = 0; a < R.order; ++a)
      for (Elem b = 0; b < R.order; ++b)
        if (R.mul(a, b) == R.zero && R.mul(a, apply_word(S, w, b)) != R.zero) {
          res = {false, w, {a, b}, "ab = 0 but a.w(b) != 0"};
          return false;
        }
    return true;
  });
  return res;
}

/// Full compatibility: the sigma biconditional, the delta implication, and
/// additionally ab = 0 => a.w(b) = 0 for every mixed word containing a
/// delta (catches mixed-word regressions; for compatible systems mixed
/// words vanish on annihilating pairs).
inline PredicateResult is_compatible(const SigmaDeltaSystem& S,
                                     unsigned max_len = default_word_length,
                                     std::size_t cap = default_predicate_cap) {
  PredicateResult r = is_sigma_compatible(S, max_len, cap);
  if (!r.holds) return r;
  r = is_delta_compatible(S, max_len, cap);
  if (!r.holds) return r;
  const FiniteRing& R = *S.ring;
  std::vector<MapLetter> alphabet;
  for (std::size_t i = 0; i < S.n; ++i) alphabet.push_back({MapLetter::Kind::sigma, i});
  for (std::size_t i = 0; i < S.n; ++i) alphabet.push_back({MapLetter::Kind::delta, i});
  PredicateResult res;
  detail::for_each_word(alphabet, max_len, [&](const MapWord& w) {
    bool has_delta = false;
    for (const auto& l : w) has_delta = has_delta || l.kind == MapLetter::Kind::delta;
    if (!has_delta) return true;
    for (Elem a = 0; a < R.order; ++a)
      for (Elem b = 0; b < R.order; ++b)
        if (R.mul(a, b) == R.zero && R.mul(a, apply_word(S, w, b)) != R.zero) {
          res = {false, w, {a, b}, "mixed word: ab = 0 but a.w(b) != 0"};
          return false;
        }
    return true;
  });
  return res;
}

/// Sigma-rigidity: r sigma^alpha(r) = 0 => r = 0, swept over all alpha
/// with |alpha| <= max_total (alpha = 0 included, so rigid => reduced).
inline PredicateResult is_sigma_rigid(const SigmaDeltaSystem& S,
                                      unsigned max_total = default_word_length,
                                      std::size_t cap = default_predicate_cap) {
  const FiniteRing& R = *S.ring;
  if (R.order > cap) throw Error("ring order exceeds predicate cap");
  PredicateResult res;
  detail::for_each_multi_index(S.n, max_total, [&](const std::vector<unsigned>& a) {
    MapWord w = sigma_word(a);
    for (Elem r = 0; r < R.order; ++r)
      if (r != R.zero && R.mul(r, apply_word(S, w, r)) == R.zero) {
        res = {false, w, {r}, "r.sigma^alpha(r) = 0 with r != 0"};
        return false;
      }
    return true;
  });
  return res;
}

/// Weak (Sigma,Delta)-symmetry of the coefficient ring. The definition's
/// sigma condition is an implication; its source states a biconditional,
/// so both directions are computed and reported separately. `holds` is the
/// definition as printed: forward sigma + forward delta.
struct WeakSigmaDeltaResult {
  PredicateResult sigma_forward;  // abc nil => ac sigma_i(b) nil
  PredicateResult sigma_reverse;  // ac sigma_i(b) nil => abc nil
  PredicateResult delta_forward;  // abc nil => ac delta_i(b) nil
  bool holds = true;              // sigma_forward && delta_forward
};

inline WeakSigmaDeltaResult is_weak_sigma_delta_symmetric(
    const SigmaDeltaSystem& S, std::size_t cap = default_predicate_cap) {
  const FiniteRing& R = *S.ring;
  if (R.order > cap) throw Error("ring order exceeds predicate cap");
  WeakSigmaDeltaResult out;
  for (Elem a = 0; a < R.order && out.sigma_forward.holds; ++a)
    for (Elem b = 0; b < R.order && out.sigma_forward.holds; ++b)
      for (Elem c = 0; c < R.order && out.sigma_forward.holds; ++c) {
        if (!R.is_nilpotent(R.mul(R.mul(a, b), c))) continue;
        for (std::size_t i = 0; i < S.n; ++i)
          if (!R.is_nilpotent(R.mul(R.mul(a, c), S.sigmas[i].image[b]))) {
            out.sigma_forward = {false, {{MapLetter::Kind::sigma, i}}, {a, b, c},
                                 "abc nil but ac.sigma_i(b) not nil"};
            break;
          }
      }
  for (Elem a = 0; a < R.order && out.sigma_reverse.holds; ++a)
    for (Elem b = 0; b < R.order && out.sigma_reverse.holds; ++b)
      for (Elem c = 0; c < R.order && out.sigma_reverse.holds; ++c)
        for (std::size_t i = 0; i < S.n; ++i)
          if (R.is_nilpotent(R.mul(R.mul(a, c), S.sigmas[i].image[b])) &&
              !R.is_nilpotent(R.mul(R.mul(a, b), c))) {
            out.sigma_reverse = {false, {{MapLetter::Kind::sigma, i}}, {a, b, c},
                                 "ac.sigma_i(b) nil but abc not nil"};
            break;
          }
  for (Elem a = 0; a < R.order && out.delta_forward.holds; ++a)
    for (Elem b = 0; b < R.order && out.delta_forward.holds; ++b)
      for (Elem c = 0; c < R.order && out.delta_forward.holds; ++c) {
        if (!R.is_nilpotent(R.mul(R.mul(a, b), c))) continue;
        for (std::size_t i = 0; i < S.n; ++i)
          if (!R.is_nilpotent(R.mul(R.mul(a, c), S.deltas[i].image[b]))) {
            out.delta_forward = {false, {{MapLetter::Kind::delta, i}}, {a, b, c},
                                 "abc nil but ac.delta_i(b) not nil"};
            break;
          }
      }
  out.holds = out.sigma_forward.holds && out.delta_forward.holds;
  return out;
}

enum class InvarianceFlavor { sigma, delta, both, sigma_onto };

/// sigma_i(I) inside I / delta_i(I) inside I per flavor; sigma_onto additionally
/// requires sigma_i(I) = I elementwise.
inline bool is_invariant_ideal(const SigmaDeltaSystem& S, const Ideal& I,
                               InvarianceFlavor flavor) {
  bool want_sigma = flavor != InvarianceFlavor::delta;
  bool want_delta = flavor == InvarianceFlavor::delta || flavor == InvarianceFlavor::both;
  for (std::size_t i = 0; i < S.n; ++i) {
    if (want_sigma)
      for (Elem a : I.members)
        if (!I.contains(S.sigmas[i].image[a])) return false;
    if (want_delta)
      for (Elem a : I.members)
        if (!I.contains(S.deltas[i].image[a])) return false;
    if (flavor == InvarianceFlavor::sigma_onto) {
      std::vector<bool> hit(S.ring->order, false);
      for (Elem a : I.members) hit[S.sigmas[i].image[a]] = true;
      for (Elem a : I.members)
        if (!hit[a]) return false;
    }
  }
  return true;
}

/// Weak (Sigma,Delta)-symmetric ideal: the defining implication with all
/// three quantifiers restricted to I (nilpotency still taken in R).
inline PredicateResult is_weak_sym_ideal(const SigmaDeltaSystem& S, const Ideal& I,
                                         std::size_t cap = default_predicate_cap) {
  const FiniteRing& R = *S.ring;
  if (R.order > cap) throw Error("ring order exceeds predicate cap");
  for (Elem a : I.members)
    for (Elem b : I.members)
      for (Elem c : I.members) {
        if (!R.is_nilpotent(R.mul(R.mul(a, b), c))) continue;
        for (std::size_t i = 0; i < S.n; ++i) {
          if (!R.is_nilpotent(R.mul(R.mul(a, c), S.sigmas[i].image[b])))
            return {false, {{MapLetter::Kind::sigma, i}}, {a, b, c},
                    "abc nil but ac.sigma_i(b) not nil on I"};
          if (!R.is_nilpotent(R.mul(R.mul(a, c), S.deltas[i].image[b])))
            return {false, {{MapLetter::Kind::delta, i}}, {a, b, c},
                    "abc nil but ac.delta_i(b) not nil on I"};
        }
      }
  return {};
}

struct InducedSystem {
  QuotientRing quotient;
  SigmaDeltaSystem system;
};

/// System induced on R/I by sigma_i(r+I) = sigma_i(r)+I and likewise for
/// delta. Requires (Sigma,Delta)-invariance; well-definedness is verified
/// by checking constancy on cosets, and non-injective induced maps are
/// rejected (such a quotient cannot serve as a presentation system).
inline InducedSystem induced_quotient_system(const SigmaDeltaSystem& S, const Ideal& I) {
  if (!is_invariant_ideal(S, I, InvarianceFlavor::both))
    throw Error("ideal is not (Sigma,Delta)-invariant; induced system undefined");
  const FiniteRing& R = *S.ring;
  QuotientRing q = quotient(S.ring, I);
  std::vector<RingEndo> sigmas;
  std::vector<SigmaDerivation> deltas;
  for (std::size_t i = 0; i < S.n; ++i) {
    std::vector<Elem> simg(q.ring->order, no_elem), dimg(q.ring->order, no_elem);
    for (Elem a = 0; a < R.order; ++a) {
      Elem qa = q.projection[a];
      Elem sv = q.projection[S.sigmas[i].image[a]];
      Elem dv = q.projection[S.deltas[i].image[a]];
      if (simg[qa] != no_elem && simg[qa] != sv)
        throw Error("induced sigma_" + std::to_string(i + 1) +
                    " is not constant on cosets");
      if (dimg[qa] != no_elem && dimg[qa] != dv)
        throw Error("induced delta_" + std::to_string(i + 1) +
                    " is not constant on cosets");
      simg[qa] = sv;
      dimg[qa] = dv;
    }
    std::vector<bool> seen(q.ring->order, false);
    for (Elem a = 0; a < q.ring->order; ++a) {
      if (seen[simg[a]])
        throw Error("induced sigma_" + std::to_string(i + 1) +
                    " is not injective; quotient unusable as a presentation system");
      seen[simg[a]] = true;
    }
    RingEndo s{q.ring, std::move(simg)};
    SigmaDerivation d{q.ring, s, std::move(dimg)};
    sigmas.push_back(std::move(s));
    deltas.push_back(std::move(d));
  }
  InducedSystem out;
  out.system = make_system(q.ring, std::move(sigmas), std::move(deltas));
  out.quotient = std::move(q);
  return out;
}

}  // namespace skewpbw

#include <catch2/catch.hpp>

#include "skewpbw/catalog.hpp"
#include "skewpbw/nil_theory.hpp"

using namespace skewpbw;

namespace {

SkewPoly poly_of(PresPtr P, std::initializer_list<std::pair<Monomial, Elem>> ts) {
  SkewPoly f = zero_poly(std::move(P));
  for (const auto& [m, c] : ts) add_term(f, m, c);
  return f;
}

}  // namespace

TEST_CASE("direct nilpotency by powers") {
  auto cz4 = named_presentation("constant_z4");
  CHECK(is_nilpotent_poly_direct(zero_poly(cz4), 4).exponent == 1);
  auto f = poly_of(cz4, {{{1}, 2}, {{0}, 2}});  // 2x + 2
  auto r = is_nilpotent_poly_direct(f, nilpotency_power_bound(f));
  CHECK(r.nilpotent);
  CHECK(r.exponent == 2);

  auto sw = named_presentation("swap_ore");
  Elem e10 = *sw->ring->element_by_label("(1,0)");
  auto g = poly_of(sw, {{{1}, e10}});
  auto rs = is_nilpotent_poly_direct(g, nilpotency_power_bound(g));
  CHECK(rs.nilpotent);
  CHECK(rs.exponent == 2);

  // not nilpotent within cap is a value
  auto one = one_poly(cz4);
  CHECK_FALSE(is_nilpotent_poly_direct(one, 10).nilpotent);
}

TEST_CASE("nilpotency exponent bound formula") {
  auto cz4 = named_presentation("constant_z4");
  auto f = poly_of(cz4, {{{1}, 2}, {{0}, 2}});  // 2 terms, k = 2
  CHECK(nilpotency_power_bound(f) == 2 * 2 + 1);
  CHECK(nilpotency_power_bound(zero_poly(cz4)) == 2);
}

TEST_CASE("nil(R)A membership") {
  auto cz4 = named_presentation("constant_z4");
  CHECK(in_nilRA(zero_poly(cz4)));
  CHECK(in_nilRA(poly_of(cz4, {{{1}, 2}, {{0}, 2}})));
  CHECK_FALSE(in_nilRA(poly_of(cz4, {{{1}, 2}, {{0}, 1}})));

  auto ut2 = named_presentation("ut2_constant");
  Elem e12 = *ut2->ring->element_by_label("[0 1;0 0]");
  CHECK(in_nilRA(poly_of(ut2, {{{1}, e12}})));
}

TEST_CASE("coefficient criterion with hypothesis ledger") {
  auto cz4 = named_presentation("constant_z4");
  auto r1 = is_nilpotent_poly_criterion(poly_of(cz4, {{{1}, 2}, {{0}, 2}}));
  CHECK(r1.hypotheses_ok);
  CHECK(r1.by_criterion);
  CHECK(r1.nilpotent);

  auto r2 = is_nilpotent_poly_criterion(poly_of(cz4, {{{1}, 2}, {{0}, 1}}));
  CHECK(r2.hypotheses_ok);
  CHECK_FALSE(r2.nilpotent);

  // swap Ore: hypotheses fail, the direct method answers, and the verdict
  // (nilpotent) disagrees with the coefficient test -- the hypothesis is
  // necessary
  auto sw = named_presentation("swap_ore");
  Elem e10 = *sw->ring->element_by_label("(1,0)");
  auto r3 = is_nilpotent_poly_criterion(poly_of(sw, {{{1}, e10}}));
  CHECK_FALSE(r3.hypotheses_ok);
  CHECK_FALSE(r3.by_criterion);
  CHECK(r3.nilpotent);
  CHECK_FALSE(in_nilRA(poly_of(sw, {{{1}, e10}})));
}

TEST_CASE("verify thm_nil_coeff on the quantum plane: exhaustive, pinned count") {
  auto rep = verify("thm_nil_coeff", named_presentation("qplane_z4"),
                    exhaustive_budget(2, 2));
  CHECK(rep.verdict == Verdict::verified_on_domain);
  CHECK(rep.counterexamples.empty());
  // 1 zero + 6*3 single-term + C(6,2)*9 two-term polynomials
  CHECK(rep.checks_run == 154);
}

TEST_CASE("verify thm_nil_coeff on swap Ore: hypothesis failure with witness") {
  Budget b = exhaustive_budget(1, 1);
  auto rep = verify("thm_nil_coeff", named_presentation("swap_ore"), b);
  CHECK(rep.verdict == Verdict::hypothesis_failed);
  bool sigma_witnessed = false;
  for (const auto& h : rep.hypotheses)
    if (h.name == "sigma_compatible" && !h.holds)
      sigma_witnessed = h.witness.find("(1,0)") != std::string::npos;
  CHECK(sigma_witnessed);
  REQUIRE_FALSE(rep.counterexamples.empty());
  CHECK(rep.counterexamples[0].inputs == "[(1,0)]*x");
}

TEST_CASE("verify thm_nil_product on constant Z/4[x]") {
  auto rep = verify("thm_nil_product", named_presentation("constant_z4"),
                    exhaustive_budget(2, 1));
  CHECK(rep.verdict == Verdict::verified_on_domain);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("verify the nil lemmas") {
  auto jd = named_presentation("jordan_trunc");
  CHECK(verify("lemma_nil_words", jd).verdict == Verdict::verified_on_domain);
  CHECK(verify("lemma_sigma_reflect", jd).verdict == Verdict::verified_on_domain);

  auto sw = named_presentation("swap_ore");
  CHECK(verify("lemma_sigma_reflect", sw).verdict == Verdict::hypothesis_failed);
}

TEST_CASE("verify weak symmetry transfer, seeded") {
  Budget b;
  b.mode = Budget::Mode::seeded;
  b.sample_count = 1000;
  b.seed = 42;
  auto rep = verify("thm_weak_sym_transfer", named_presentation("qplane_z4"), b);
  CHECK(rep.verdict == Verdict::verified_on_domain);
  CHECK(rep.seed == 42);

  auto rep2 = verify("thm_weak_sym_transfer", named_presentation("swap_ore"), b);
  CHECK(rep2.verdict == Verdict::hypothesis_failed);
}

TEST_CASE("seeded reports are reproducible") {
  Budget b;
  b.mode = Budget::Mode::seeded;
  b.sample_count = 300;
  b.seed = 7;
  auto P = named_presentation("constant_z4");
  auto r1 = verify("thm_weak_sym_transfer", P, b);
  auto r2 = verify("thm_weak_sym_transfer", P, b);
  CHECK(r1.checks_run == r2.checks_run);
  CHECK(r1.verdict == r2.verdict);
  CHECK(r1.counterexamples.size() == r2.counterexamples.size());
}

TEST_CASE("verify prop_idempotent_split") {
  auto R = ring_of_spec(*builtin_ring_spec("z2xz2"));
  auto P = make_presentation(R, {"x"}, trivial_system(R, 1));
  auto rep = verify("prop_idempotent_split", P);
  CHECK(rep.verdict == Verdict::verified_on_domain);
  CHECK(rep.checks_run == 4);  // four idempotents

  // not abelian: hypothesis failure
  auto rep2 = verify("prop_idempotent_split", named_presentation("ut2_constant"));
  CHECK(rep2.verdict == Verdict::hypothesis_failed);
}

TEST_CASE("verify thm_quotient_transfer") {
  Budget b;
  b.ideal_gens = {"4"};
  auto rep = verify("thm_quotient_transfer", named_presentation("constant_z8"), b);
  CHECK(rep.verdict == Verdict::verified_on_domain);
  bool ia_checked = false;
  for (const auto& n : rep.notes)
    ia_checked = ia_checked || n.find("IA") != std::string::npos;
  CHECK(ia_checked);

  Budget bj;
  bj.ideal_gens = {"t^3"};
  auto repj = verify("thm_quotient_transfer", named_presentation("jordan_trunc"), bj);
  CHECK(repj.verdict == Verdict::verified_on_domain);

  // an ideal not inside nil(R): hypothesis failure
  Budget bb;
  bb.ideal_gens = {"2"};
  auto repb = verify("thm_quotient_transfer", named_presentation("constant_z4"), bb);
  CHECK(repb.verdict == Verdict::verified_on_domain);  // 2 generates {0,2}, inside nil
  Budget bc;
  bc.ideal_gens = {"1"};
  auto repc = verify("thm_quotient_transfer", named_presentation("constant_z4"), bc);
  CHECK(repc.verdict == Verdict::hypothesis_failed);
}

TEST_CASE("verify thm_ext_weak_sigdelta on the Jordan truncation") {
  Budget b;
  b.mode = Budget::Mode::seeded;
  b.sample_count = 400;
  b.seed = 11;
  auto rep = verify("thm_ext_weak_sigdelta", named_presentation("jordan_trunc"), b);
  CHECK(rep.verdict == Verdict::verified_on_domain);
}

TEST_CASE("verify thm_tower_weak_sym") {
  Budget b;
  b.mode = Budget::Mode::seeded;
  b.sample_count = 60;
  b.seed = 3;
  auto rep = verify("thm_tower_weak_sym", named_presentation("threedim_a_z5"), b);
  CHECK((rep.verdict == Verdict::verified_on_domain ||
         rep.verdict == Verdict::inconclusive_cap));
  CHECK(rep.counterexamples.empty());

  // non-rigid coefficient ring: hypothesis failure dominates
  auto rep2 = verify("thm_tower_weak_sym", named_presentation("constant_z4"), b);
  CHECK(rep2.verdict == Verdict::hypothesis_failed);
}

TEST_CASE("unsupported theorem ids and empty budgets are errors") {
  auto P = named_presentation("constant_z4");
  CHECK_THROWS_WITH(verify("thm_unknown", P), Catch::Contains("unsupported theorem"));
  Budget b;
  b.max_terms = 0;
  CHECK_THROWS_WITH(verify("thm_nil_coeff", P, b), Catch::Contains("empty"));
}

TEST_CASE("check_transfer_pair") {
  Budget small = exhaustive_budget(1, 1);
  auto r = check_transfer_pair(named_presentation("constant_z4"), small);
  CHECK(r.ring_weak_symmetric);
  CHECK(r.agree);
  CHECK(r.hypotheses_ok);

  // UT2: ring weak symmetric, but reversibility fails, so any disagreement
  // would be non-refuting; the ledger records the failed hypothesis
  auto rut = check_transfer_pair(named_presentation("ut2_constant"), small);
  CHECK(rut.ring_weak_symmetric);
  CHECK_FALSE(rut.hypotheses_ok);
  CHECK(rut.extension.verdict == Verdict::hypothesis_failed);

  auto rsw = check_transfer_pair(named_presentation("swap_ore"), small);
  CHECK_FALSE(rsw.hypotheses_ok);
}

TEST_CASE("extended maps: hypotheses and the coefficientwise action") {
  auto jd = named_presentation("jordan_trunc");
  auto E = extend_maps(jd);
  CHECK(E.ok);
  Elem t = *jd->ring->element_by_label("t");
  Elem t2 = *jd->ring->element_by_label("t^2");
  SkewPoly f = poly_of(jd, {{{2}, t}, {{0}, jd->ring->one}});  // t y^2 + 1
  SkewPoly sf = sigma_bar(E, 0, f);
  CHECK(sf == f);  // sigma = id
  SkewPoly df = delta_bar(E, 0, f);
  CHECK(df == poly_of(jd, {{{2}, t2}}));  // delta(t) y^2, delta(1) = 0

  // delta_bar is a sigma_bar-derivation on sample pairs
  SkewPoly g = poly_of(jd, {{{1}, t}});
  CHECK(delta_bar(E, 0, mul(f, g)) ==
        add(mul(sigma_bar(E, 0, f), delta_bar(E, 0, g)),
            mul(delta_bar(E, 0, f), g)));

  // negative control: a delta that moves c_{1,2}
  RingSpec spec = RingSpec::trunc_poly(RingSpec::zn(2), 4);
  RingPtr R = ring_of_spec(spec);
  RingEndo id1 = identity_endo(R), id2 = identity_endo(R);
  auto d1 = derivation_from_t_image(R, spec, id1, *R->element_by_label("t^2"));
  auto d2 = zero_derivation(R, id2);
  auto sys = make_system(R, {id1, id2}, {std::move(d1), std::move(d2)});
  auto ctrl = make_presentation(R, {"u", "v"}, std::move(sys),
                                {*R->element_by_label("t+1")}, {}, {}, "ctrl");
  auto Ec = extend_maps(ctrl);
  CHECK_FALSE(Ec.ok);
  bool saw = false;
  for (const auto& h : Ec.hypotheses)
    if (!h.holds) saw = saw || h.name.find("c_{1,2}") != std::string::npos;
  CHECK(saw);
  CHECK_THROWS(sigma_bar(Ec, 0, one_poly(ctrl)));
}

TEST_CASE("quotient extension of the Jordan truncation") {
  auto jd = named_presentation("jordan_trunc");
  auto I = ideal_generated(jd->ring, {*jd->ring->element_by_label("t^3")});
  auto q = quotient_extension(jd, I);
  CHECK(q.pres->ring->order == 8);
  CHECK(check_presentation(q.pres).ok);
  // delta-bar(t) = t^2 survives in the quotient presentation
  Elem tq = q.quotient.projection[*jd->ring->element_by_label("t")];
  Elem t2q = q.quotient.projection[*jd->ring->element_by_label("t^2")];
  CHECK(q.pres->system.deltas[0].image[tq] == t2q);

  CHECK_THROWS_WITH(quotient_extension(jd, ideal_generated(jd->ring, {jd->ring->one})),
                    Catch::Contains("proper"));
  // zero ideal: quotient is the presentation itself up to relabeling
  auto q0 = quotient_extension(jd, ideal_generated(jd->ring, {}));
  CHECK(q0.pres->ring->order == jd->ring->order);
}

TEST_CASE("tower arithmetic and capped nilpotency") {
  auto cz4 = named_presentation("constant_z4");
  auto T = tower_presentation(cz4);
  SkewPoly two_plus_2x = poly_of(cz4, {{{1}, 2}, {{0}, 2}});
  TowerPoly F = tower_term(T, {1}, two_plus_2x);  // (2 + 2x) x'
  auto r = tower_is_nilpotent(T, tower_mul(T, F, F));
  CHECK(r.outcome == TowerNilpotency::nilpotent);
  CHECK(r.exponent == 1);  // F*F is already zero
  auto rf = tower_is_nilpotent(T, F);
  CHECK(rf.outcome == TowerNilpotency::nilpotent);
  CHECK(rf.exponent == 2);

  // sigma_bar keeps monomials: coefficientwise action on the tower
  TowerPoly one_tower = tower_term(T, {0}, one_poly(cz4));
  auto prod = tower_mul(T, one_tower, F);
  CHECK(prod == F);

  // swap Ore cannot form a tower: extended maps hold (delta = 0), so the
  // construction succeeds, but rigidity-based verification stays capped
  auto sw = named_presentation("swap_ore");
  CHECK_NOTHROW(tower_presentation(sw));
}

TEST_CASE("tower embedding consistency with base arithmetic") {
  auto cz4 = named_presentation("constant_z4");
  auto T = tower_presentation(cz4);
  SkewPoly f = poly_of(cz4, {{{1}, 2}, {{0}, 3}});
  SkewPoly g = poly_of(cz4, {{{2}, 1}, {{0}, 2}});
  // x'-degree zero tower polynomials multiply exactly like base polynomials
  TowerPoly F = tower_term(T, {0}, f);
  TowerPoly G = tower_term(T, {0}, g);
  TowerPoly FG = tower_mul(T, F, G);
  REQUIRE(FG.terms.size() == 1);
  CHECK(FG.terms.begin()->second == mul(f, g));

  // and the primed variable stacks degrees
  TowerPoly X = tower_term(T, {1}, one_poly(cz4));
  TowerPoly X2 = tower_mul(T, X, X);
  REQUIRE(X2.terms.size() == 1);
  CHECK(X2.terms.begin()->first == Monomial{2});
}

TEST_CASE("quotient extension projects two-variable relation data") {
  // quantum-plane-style presentation over Z/8 with q = 3; I = {0,4}
  auto R = ring_of_spec(*builtin_ring_spec("z8"));
  auto P = make_presentation(R, {"x", "y"}, trivial_system(R, 2), {3}, {}, {},
                             "qplane_z8");
  REQUIRE(check_presentation(P).ok);
  auto I = ideal_generated(R, {4});
  auto q = quotient_extension(P, I);
  CHECK(q.pres->ring->order == 4);
  CHECK(q.pres->c_of(0, 1) == q.quotient.projection[3]);
  // the projected presentation behaves like the quantum plane over Z/4
  SkewPoly yx = mul(var_poly(q.pres, 1), var_poly(q.pres, 0));
  CHECK(yx == term_poly(q.pres, Monomial{1, 1}, q.quotient.projection[3]));
}

TEST_CASE("nilpotency criterion on further hypothesis-satisfying instances") {
  // jordan: nontrivial delta, hypotheses hold
  auto jd = verify("thm_nil_coeff", named_presentation("jordan_trunc"),
                   exhaustive_budget(2, 2));
  CHECK(jd.verdict == Verdict::verified_on_domain);
  CHECK(jd.counterexamples.empty());
  // reduced coefficient ring: nilpotent polynomials are exactly zero
  auto ei = verify("thm_nil_coeff", named_presentation("threedim_e_i_z2"),
                   exhaustive_budget(1, 1));
  CHECK(ei.verdict == Verdict::verified_on_domain);
  auto words = verify("lemma_nil_words", named_presentation("threedim_a_z5"));
  CHECK(words.verdict == Verdict::verified_on_domain);
}

TEST_CASE("failed hypotheses always carry witnesses") {
  // non-invariant, non-nil ideal for the quotient transfer
  Budget b;
  b.ideal_gens = {"(1,0)"};
  auto rep = verify("thm_quotient_transfer", named_presentation("swap_ore"), b);
  CHECK(rep.verdict == Verdict::hypothesis_failed);
  for (const auto& h : rep.hypotheses)
    if (!h.holds) {
      INFO(h.name);
      CHECK_FALSE(h.witness.empty());
    }

  // a presentation whose c_{1,2} is a non-central unit of UT2(Z/2)
  auto R = ring_of_spec(*builtin_ring_spec("ut2z2"));
  Elem c = *R->element_by_label("[1 1;0 1]");
  REQUIRE(R->is_unit(c));
  REQUIRE_FALSE(R->is_central(c));
  auto P = make_presentation(R, {"x", "y"}, trivial_system(R, 2), {c}, {}, {},
                             "noncentral_control");
  auto hs = nil_theorem_hypotheses(P, default_word_length);
  bool saw = false;
  for (const auto& h : hs)
    if (h.name == "constants_central") {
      CHECK_FALSE(h.holds);
      CHECK(h.witness.find("not central") != std::string::npos);
      saw = true;
    }
  CHECK(saw);
}

#include <catch2/catch.hpp>

#include "skewpbw/catalog.hpp"
#include "skewpbw/nil_theory.hpp"
#include "skewpbw/pbw.hpp"

using namespace skewpbw;

namespace {

SkewPoly mono_poly(PresPtr P, const Monomial& m, Elem c) { return term_poly(P, m, c); }

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned maxdeg) {
  std::vector<Monomial> out;
  detail::for_each_multi_index(n, maxdeg, [&](const std::vector<unsigned>& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("var_times_coeff matches the defining relations") {
  auto qp = named_presentation("qplane_z4");
  auto f = var_times_coeff(qp, 0, 3);  // x * 3 = 3x (sigma = id)
  CHECK(f == mono_poly(qp, var_monomial(2, 0), 3));

  auto jd = named_presentation("jordan_trunc");
  const FiniteRing& R = *jd->ring;
  Elem t = *R.element_by_label("t");
  Elem t2 = *R.element_by_label("t^2");
  auto yt = var_times_coeff(jd, 0, t);  // y t = t y + t^2
  SkewPoly expect = zero_poly(jd);
  add_term(expect, var_monomial(1, 0), t);
  add_term(expect, unit_monomial(1), t2);
  CHECK(yt == expect);

  auto sw = named_presentation("swap_ore");
  Elem e10 = *sw->ring->element_by_label("(1,0)");
  Elem e01 = *sw->ring->element_by_label("(0,1)");
  CHECK(var_times_coeff(sw, 0, e10) == mono_poly(sw, var_monomial(1, 0), e01));
}

TEST_CASE("mono_times_coeff decompositions") {
  auto jd = named_presentation("jordan_trunc");
  const FiniteRing& R = *jd->ring;
  Elem t = *R.element_by_label("t");

  SECTION("empty exponent is the identity decomposition") {
    auto d = mono_times_coeff(jd, unit_monomial(1), t);
    CHECK(d.leading_coeff == t);
    CHECK(d.tail.is_zero());
  }

  SECTION("y^2 t = t y^2 (the two delta terms cancel in char 2)") {
    auto d = mono_times_coeff(jd, {2}, t);
    CHECK(d.leading_coeff == t);
    CHECK(d.tail.is_zero());
  }

  SECTION("y t has the delta tail t^2") {
    auto d = mono_times_coeff(jd, {1}, t);
    CHECK(d.leading_coeff == t);
    CHECK(d.tail == const_poly(jd, *R.element_by_label("t^2")));
  }

  SECTION("decomposition cross-checked against the product engine") {
    for (unsigned a = 0; a <= 3; ++a)
      for (Elem r = 0; r < R.order; ++r) {
        auto d = mono_times_coeff(jd, {a}, r);
        SkewPoly lhs = mul(mono_poly(jd, {a}, R.one), const_poly(jd, r));
        SkewPoly rhs = add(term_poly(jd, {a}, d.leading_coeff), d.tail);
        CHECK(lhs == rhs);
        CHECK((d.tail.is_zero() || poly_degree(d.tail) < a));
      }
  }

  SECTION("swap Ore: x^2 passes a constant through two swaps") {
    auto sw = named_presentation("swap_ore");
    Elem e10 = *sw->ring->element_by_label("(1,0)");
    auto d = mono_times_coeff(sw, {2}, e10);
    CHECK(d.leading_coeff == e10);
    CHECK(d.tail.is_zero());
  }
}

TEST_CASE("mono_times_mono decompositions") {
  auto qp = named_presentation("qplane_z4");
  SECTION("multiplying by 1 on either side") {
    auto d = mono_times_mono(qp, unit_monomial(2), Monomial{1, 1});
    CHECK(d.leading_coeff == qp->ring->one);
    CHECK(d.tail.is_zero());
    d = mono_times_mono(qp, Monomial{1, 1}, unit_monomial(2));
    CHECK(d.leading_coeff == qp->ring->one);
    CHECK(d.tail.is_zero());
  }
  SECTION("quantum plane: y x = 3 x y") {
    auto d = mono_times_mono(qp, Monomial{0, 1}, Monomial{1, 0});
    CHECK(d.leading_coeff == 3);
    CHECK(d.tail.is_zero());
  }
  SECTION("case (e)(i): z y = y z + x") {
    auto ei = named_presentation("threedim_e_i_z2");
    auto d = mono_times_mono(ei, Monomial{0, 0, 1}, Monomial{0, 1, 0});
    CHECK(d.leading_coeff == ei->ring->one);
    CHECK(d.tail == term_poly(ei, Monomial{1, 0, 0}, ei->ring->one));
  }
}

TEST_CASE("mul: unit law, nilpotent squares, swap Ore witness") {
  auto cz4 = named_presentation("constant_z4");
  SkewPoly f = zero_poly(cz4);
  add_term(f, {1}, 2);
  add_term(f, {0}, 2);  // 2x + 2
  CHECK(mul(one_poly(cz4), f) == f);
  CHECK(mul(f, one_poly(cz4)) == f);
  CHECK(mul(f, f).is_zero());
  CHECK(poly_pow(f, 2).is_zero());

  auto sw = named_presentation("swap_ore");
  Elem e10 = *sw->ring->element_by_label("(1,0)");
  SkewPoly g = term_poly(sw, {1}, e10);  // (1,0) x
  CHECK(mul(g, g).is_zero());            // (1,0)(0,1) x^2 = 0

  CHECK_THROWS(mul(f, g));
}

TEST_CASE("leading data and zero conventions") {
  auto cz4 = named_presentation("constant_z4");
  SkewPoly f = zero_poly(cz4);
  add_term(f, {1}, 2);
  add_term(f, {0}, 2);
  auto l = leading(f);
  CHECK_FALSE(l.is_zero);
  CHECK(l.lm == Monomial{1});
  CHECK(l.lc == 2);
  CHECK(l.deg == 1);

  auto qp = named_presentation("qplane_z4");
  SkewPoly g = zero_poly(qp);
  add_term(g, {1, 0}, 1);  // x
  add_term(g, {0, 2}, 1);  // y^2
  auto lg = leading(g);
  CHECK(lg.lm == Monomial{0, 2});
  CHECK(lg.deg == 2);

  auto lz = leading(zero_poly(qp));
  CHECK(lz.is_zero);
  CHECK(lz.lc == qp->ring->zero);
  CHECK(lz.lm == unit_monomial(2));
  CHECK(lz.deg == 0);
}

TEST_CASE("polynomial printing") {
  auto qp = named_presentation("qplane_z4");
  SkewPoly f = zero_poly(qp);
  add_term(f, {1, 1}, 3);
  CHECK(poly_to_string(f) == "[3]*x*y");
  CHECK(poly_to_string(zero_poly(qp)) == "[0]");

  auto ei = named_presentation("threedim_e_i_z2");
  SkewPoly zy = mul(var_poly(ei, 2), var_poly(ei, 1));
  CHECK(poly_to_string(zy) == "y*z + x");

  SkewPoly g = zero_poly(qp);
  add_term(g, {0, 0}, 2);
  add_term(g, {2, 0}, 1);
  CHECK(poly_to_string(g) == "x^2 + [2]");
}

TEST_CASE("check_presentation: positive and negative cases") {
  CHECK(check_presentation(named_presentation("qplane_z4")).ok);
  CHECK(check_presentation(named_presentation("threedim_e_i_z2")).ok);
  CHECK(check_presentation(named_presentation("jordan_trunc")).ok);
  CHECK(check_presentation(named_presentation("swap_ore")).ok);

  // non-invertible q over Z/4 is rejected before overlap checks
  CHECK_THROWS_WITH(instantiate("quantum_plane", {{"ring", "z4"}, {"q", "2"}}),
                    Catch::Contains("not invertible"));

  // inconsistent relation set: a Jordan-style delta against c_{1,2} = t+1
  // breaks the O2 overlap
  RingSpec spec = RingSpec::trunc_poly(RingSpec::zn(2), 4);
  RingPtr R = ring_of_spec(spec);
  RingEndo id1 = identity_endo(R), id2 = identity_endo(R);
  auto d1 = derivation_from_t_image(R, spec, id1, *R->element_by_label("t^2"));
  auto d2 = zero_derivation(R, id2);
  auto sys = make_system(R, {id1, id2}, {std::move(d1), std::move(d2)});
  Elem c12 = *R->element_by_label("t+1");
  auto P = make_presentation(R, {"u", "v"}, std::move(sys), {c12},
                             {{R->zero, R->zero, R->zero}}, {}, "control");
  auto chk = check_presentation(P);
  REQUIRE_FALSE(chk.ok);
  CHECK(chk.overlap_kind == "O2");
}

TEST_CASE("normal form independent of redex strategy") {
  for (const char* name : {"qplane_z4", "jordan_trunc", "swap_ore", "threedim_e_i_z2"}) {
    INFO(name);
    auto P = named_presentation(name);
    const FiniteRing& R = *P->ring;
    // alphabet: every variable plus a few representative coefficients
    std::vector<Letter> alphabet;
    for (std::size_t i = 0; i < P->n; ++i)
      alphabet.push_back({true, static_cast<Elem>(i)});
    alphabet.push_back({false, R.one});
    if (nilpotents(R).size() > 1) alphabet.push_back({false, nilpotents(R)[1]});
    alphabet.push_back({false, static_cast<Elem>(R.order - 1)});

    std::vector<Word> words{{}};
    std::size_t begin = 0;
    for (unsigned len = 1; len <= 4; ++len) {
      std::size_t end = words.size();
      for (std::size_t w = begin; w < end; ++w)
        for (const auto& l : alphabet) {
          Word w2 = words[w];
          w2.push_back(l);
          words.push_back(std::move(w2));
        }
      begin = end;
    }
    for (const auto& w : words)
      CHECK(reduce_word(P, w, RedexStrategy::leftmost) ==
            reduce_word(P, w, RedexStrategy::rightmost));
  }
}

TEST_CASE("associativity of normal form products on monomial triples") {
  for (const char* name : {"qplane_z4", "threedim_e_i_z2", "jordan_trunc", "swap_ore"}) {
    INFO(name);
    auto P = named_presentation(name);
    auto monos = monomials_up_to(P->n, 2);
    for (const auto& a : monos)
      for (const auto& b : monos)
        for (const auto& c : monos) {
          SkewPoly fa = mono_poly(P, a, P->ring->one);
          SkewPoly fb = mono_poly(P, b, P->ring->one);
          SkewPoly fc = mono_poly(P, c, P->ring->one);
          CHECK(mul(mul(fa, fb), fc) == mul(fa, mul(fb, fc)));
        }
  }
}

TEST_CASE("decomposition degree bounds and the sigma-word leading coefficient") {
  for (const char* name : {"jordan_trunc", "swap_ore"}) {
    INFO(name);
    auto P = named_presentation(name);
    const FiniteRing& R = *P->ring;
    auto monos = monomials_up_to(P->n, 3);
    for (const auto& alpha : monos) {
      for (Elem r = 0; r < R.order; ++r) {
        auto d = mono_times_coeff(P, alpha, r);
        CHECK(d.leading_coeff == apply_word(P->system, sigma_word(alpha), r));
        CHECK((d.tail.is_zero() || poly_degree(d.tail) < total_degree(alpha)));
      }
      for (const auto& beta : monos) {
        auto d = mono_times_mono(P, alpha, beta);
        CHECK(R.is_unit(d.leading_coeff));  // left invertible
        CHECK((d.tail.is_zero() ||
               poly_degree(d.tail) < total_degree(alpha) + total_degree(beta)));
      }
    }
  }
}

TEST_CASE("quasi-commutative presentations never produce tails") {
  auto qp = named_presentation("qplane_z4");
  REQUIRE(qp->quasi_commutative);
  auto monos = monomials_up_to(2, 3);
  for (const auto& a : monos)
    for (const auto& b : monos) CHECK(mono_times_mono(qp, a, b).tail.is_zero());
}

TEST_CASE("monomial order axioms on an exponent box") {
  for (auto kind : {MonomialOrder::Kind::deglex, MonomialOrder::Kind::lex}) {
    MonomialOrder ord{kind};
    auto monos = monomials_up_to(2, 6);
    Monomial one = unit_monomial(2);
    for (const auto& a : monos) {
      if (a != one) CHECK(ord.less(one, a));  // 1 minimal
      CHECK_FALSE(ord.less(a, a));
      for (const auto& b : monos) {
        if (a != b) CHECK((ord.less(a, b) || ord.less(b, a)));  // total
        for (const auto& g : monos)
          if (ord.less(a, b))  // monoid compatible
            CHECK(ord.less(mono_sum(a, g), mono_sum(b, g)));
      }
    }
  }
}

TEST_CASE("order only affects term sorting, not products") {
  auto qp = named_presentation("qplane_z4");
  auto qplex = with_order(qp, MonomialOrder{MonomialOrder::Kind::lex});
  SkewPoly f = zero_poly(qplex);
  add_term(f, {1, 0}, 1);
  add_term(f, {0, 2}, 1);
  // lex with x more significant: lm = x, but deg is still 2
  auto l = leading(f);
  CHECK(l.lm == Monomial{1, 0});
  CHECK(l.deg == 2);
  CHECK(check_presentation(qplex).ok);
}

TEST_CASE("closed-form oracle: quantum plane commutation y^b x^a = q^{ab} x^a y^b") {
  auto qp = named_presentation("qplane_z4");
  const FiniteRing& R = *qp->ring;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b) {
      auto d = mono_times_mono(qp, Monomial{0, b}, Monomial{a, 0});
      CHECK(d.tail.is_zero());
      CHECK(d.leading_coeff == R.pow(3, a * b));  // modular exponentiation oracle
    }
}

TEST_CASE("closed-form oracle: Jordan truncation y^m t = t y^m + m t^2 y^{m-1}") {
  // sigma = id, so y^m r expands through binomial delta applications;
  // delta(t) = t^2 and delta(t^2) = 0 kill every term past the first two
  auto jd = named_presentation("jordan_trunc");
  const FiniteRing& R = *jd->ring;
  Elem t = *R.element_by_label("t");
  Elem t2 = *R.element_by_label("t^2");
  for (unsigned m = 0; m <= 6; ++m) {
    SkewPoly expect = zero_poly(jd);
    add_term(expect, {m}, t);
    if (m % 2 == 1 && m >= 1) add_term(expect, {m - 1}, t2);  // m t^2 mod 2
    CHECK(mul(term_poly(jd, {m}, R.one), const_poly(jd, t)) == expect);
  }
}

TEST_CASE("left module and distributivity laws on seeded polynomials") {
  detail::CounterRng rng{314159};
  std::uint64_t counter = 0;
  for (const char* name : {"qplane_z4", "jordan_trunc", "threedim_e_i_z2", "swap_ore"}) {
    INFO(name);
    auto P = named_presentation(name);
    auto monos = [&] {
      std::vector<Monomial> out;
      detail::for_each_multi_index(P->n, 2, [&](const std::vector<unsigned>& a) {
        out.push_back(a);
        return true;
      });
      return out;
    }();
    for (int trial = 0; trial < 50; ++trial) {
      SkewPoly f = detail::sample_poly(P, monos, 2, rng, counter += 64);
      SkewPoly g = detail::sample_poly(P, monos, 2, rng, counter += 64);
      SkewPoly h = detail::sample_poly(P, monos, 2, rng, counter += 64);
      Elem a = static_cast<Elem>(rng.at(counter += 64) % P->ring->order);
      CHECK(mul(add(f, g), h) == add(mul(f, h), mul(g, h)));
      CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
      CHECK(scale_left(a, mul(f, g)) == mul(scale_left(a, f), g));
      CHECK(add(f, negate(f)).is_zero());
    }
  }
}

TEST_CASE("check_presentation reports variable-triple overlap failures") {
  // over Z/2 with zx = xz + x, zy = yz + z, yx = xy the two associations
  // of z*y*x differ by x, so O1 must fail on the triple (x, y, z)
  auto R = ring_of_spec(RingSpec::zn(2));
  std::vector<Elem> none(4, 0), tx = none, tz = none;
  tx[1] = 1;
  tz[3] = 1;
  auto P = make_presentation(R, {"x", "y", "z"}, trivial_system(R, 3), {1, 1, 1},
                             {none, tx, tz}, {}, "o1_control");
  auto chk = check_presentation(P);
  REQUIRE_FALSE(chk.ok);
  CHECK(chk.overlap_kind == "O1");
  CHECK(chk.witness == std::vector<Elem>{0, 1, 2});
  CHECK(chk.nf_left == "x*y*z + x*y + x*z + x");
  CHECK(chk.nf_right == "x*y*z + x*y + x*z");
}

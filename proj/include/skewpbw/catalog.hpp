// catalog.hpp -- named, parameterized presentations: the quantum plane,
// the 3-dimensional skew polynomial algebra classification cases, and the
// single-variable instances used throughout the harness.
//
// Classification relations are given as
//   y z - alpha z y = lambda,  z x - beta x z = mu,  x y - gamma y x = nu
// with lambda, mu, nu linear (constant + x + y + z). They are stored in
// x_j x_i form:  z y = alpha^{-1} (y z - lambda),  z x = beta x z + mu,
// y x = gamma^{-1} (x y - nu), which requires alpha and gamma invertible.

#pragma once

#include "skewpbw/pbw.hpp"

#include <functional>

namespace skewpbw {

using Params = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string name;
  std::string summary;
  // (parameter, default); "ring" values are built-in ring spec names
  std::vector<std::pair<std::string, std::string>> param_schema;
  std::function<PresPtr(const Params&)> builder;
};

namespace detail {

inline Elem resolve_label(const FiniteRing& R, const std::string& label,
                          const std::string& param) {
  auto e = R.element_by_label(label);
  if (!e)
    throw Error("parameter " + param + " = " + label + " does not name an element of " +
                R.name);
  return *e;
}

inline Elem resolve_unit(const FiniteRing& R, const std::string& label,
                         const std::string& param) {
  Elem e = resolve_label(R, label, param);
  if (!R.is_unit(e))
    throw Error("parameter " + param + " = " + label + " is not invertible in " + R.name);
  return e;
}

// lambda/mu/nu as coefficient 4-vectors (1, x, y, z)
struct LinearCombo {
  Elem c0, cx, cy, cz;
};

inline PresPtr build_threedim(RingPtr R, Elem alpha, Elem beta, Elem gamma,
                              const LinearCombo& lambda, const LinearCombo& mu,
                              const LinearCombo& nu, std::string name) {
  auto sys = trivial_system(R, 3);
  Elem ia = R->inverse(alpha), ig = R->inverse(gamma);
  auto scaled_neg = [&](Elem unit_inv, const LinearCombo& l) {
    // tail row (r0, r1, r2, r3) = -unit_inv * (c0, cx, cy, cz)
    return std::vector<Elem>{
        R->neg(R->mul(unit_inv, l.c0)), R->neg(R->mul(unit_inv, l.cx)),
        R->neg(R->mul(unit_inv, l.cy)), R->neg(R->mul(unit_inv, l.cz))};
  };
  // pair order: (x,y), (x,z), (y,z)
  std::vector<Elem> c{ig, beta, ia};
  std::vector<std::vector<Elem>> tail{
      scaled_neg(ig, nu),
      {mu.c0, mu.cx, mu.cy, mu.cz},
      scaled_neg(ia, lambda)};
  return make_presentation(std::move(R), {"x", "y", "z"}, std::move(sys), std::move(c),
                           std::move(tail), {}, std::move(name));
}

inline RingPtr catalog_ring(const Params& p) {
  auto it = p.find("ring");
  if (it == p.end()) throw Error("catalog entry needs a ring parameter");
  auto spec = builtin_ring_spec(it->second);
  if (!spec) throw Error("unknown built-in ring spec: " + it->second);
  return ring_of_spec(*spec);
}

inline LinearCombo combo_zero(const FiniteRing& R) {
  return {R.zero, R.zero, R.zero, R.zero};
}

// builders for the classification cases; each case fixes which of the
// lambda/mu/nu slots carry parameters
inline CatalogEntry threedim_entry(
    std::string name, std::string summary,
    std::vector<std::pair<std::string, std::string>> schema,
    std::function<PresPtr(RingPtr, const Params&)> build) {
  CatalogEntry e;
  e.name = std::move(name);
  e.summary = std::move(summary);
  e.param_schema = std::move(schema);
  e.builder = [build = std::move(build)](const Params& p) {
    return build(catalog_ring(p), p);
  };
  return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& list_entries() {
  using detail::build_threedim;
  using detail::catalog_ring;
  using detail::combo_zero;
  using detail::resolve_label;
  using detail::resolve_unit;
  using detail::LinearCombo;

  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;

    v.push_back(CatalogEntry{
        "quantum_plane",
        "two q-commuting variables: y x = q x y",
        {{"ring", "z4"}, {"q", "3"}},
        [](const Params& p) {
          RingPtr R = catalog_ring(p);
          Elem q = resolve_unit(*R, p.at("q"), "q");
          return make_presentation(R, {"x", "y"}, trivial_system(R, 2), {q}, {},
                                   {}, "quantum_plane");
        }});

    v.push_back(CatalogEntry{
        "constant_poly",
        "one central variable over the coefficient ring",
        {{"ring", "z4"}},
        [](const Params& p) {
          RingPtr R = catalog_ring(p);
          return make_presentation(R, {"x"}, trivial_system(R, 1), {}, {}, {},
                                   "constant_poly");
        }});

    v.push_back(CatalogEntry{
        "jordan_trunc",
        "(Z/2[t]/(t^4))[y; id, t^2 d/dt]",
        {},
        [](const Params&) {
          RingSpec spec = RingSpec::trunc_poly(RingSpec::zn(2), 4);
          RingPtr R = ring_of_spec(spec);
          RingEndo id = identity_endo(R);
          auto d = derivation_from_t_image(R, spec, id,
                                           *R->element_by_label("t^2"));
          auto sys = make_system(R, {id}, {std::move(d)});
          return make_presentation(R, {"y"}, std::move(sys), {}, {}, {},
                                   "jordan_trunc");
        }});

    v.push_back(CatalogEntry{
        "swap_ore",
        "(Z/2 x Z/2)[x; swap]",
        {},
        [](const Params&) {
          RingSpec spec = RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)});
          RingPtr R = ring_of_spec(spec);
          auto swap = endo_from_permutation(R, spec, {1, 0});
          auto d = zero_derivation(R, swap);
          auto sys = make_system(R, {swap}, {std::move(d)});
          return make_presentation(R, {"x"}, std::move(sys), {}, {}, {}, "swap_ore");
        }});

    v.push_back(CatalogEntry{
        "ut2_constant",
        "one central variable over UT2(Z/2)",
        {},
        [](const Params&) {
          RingPtr R = ring_of_spec(RingSpec::ut2(RingSpec::zn(2)));
          return make_presentation(R, {"x"}, trivial_system(R, 1), {}, {}, {},
                                   "ut2_constant");
        }});

    v.push_back(detail::threedim_entry(
        "threedim_a", "case (a): three distinct units, zero tails",
        {{"ring", "z5"}, {"alpha", "2"}, {"beta", "3"}, {"gamma", "4"}},
        [](RingPtr R, const Params& p) {
          Elem a = resolve_unit(*R, p.at("alpha"), "alpha");
          Elem b = resolve_unit(*R, p.at("beta"), "beta");
          Elem g = resolve_unit(*R, p.at("gamma"), "gamma");
          auto z = combo_zero(*R);
          return build_threedim(R, a, b, g, z, z, z, "threedim_a");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_b_i", "case (b)(i): yz-zy=z, zx-bxz=y, xy-yx=x",
        {{"ring", "z5"}, {"beta", "2"}},
        [](RingPtr R, const Params& p) {
          Elem b = resolve_unit(*R, p.at("beta"), "beta");
          LinearCombo lam{R->zero, R->zero, R->zero, R->one};
          LinearCombo mu{R->zero, R->zero, R->one, R->zero};
          LinearCombo nu{R->zero, R->one, R->zero, R->zero};
          return build_threedim(R, R->one, b, R->one, lam, mu, nu, "threedim_b_i");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_b_ii", "case (b)(ii): yz-zy=z, zx-bxz=const, xy-yx=x",
        {{"ring", "z5"}, {"beta", "2"}, {"b", "1"}},
        [](RingPtr R, const Params& p) {
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          Elem b = resolve_label(*R, p.at("b"), "b");
          LinearCombo lam{R->zero, R->zero, R->zero, R->one};
          LinearCombo mu{b, R->zero, R->zero, R->zero};
          LinearCombo nu{R->zero, R->one, R->zero, R->zero};
          return build_threedim(R, R->one, be, R->one, lam, mu, nu, "threedim_b_ii");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_b_iii", "case (b)(iii): zx-bxz=y only",
        {{"ring", "z5"}, {"beta", "2"}},
        [](RingPtr R, const Params& p) {
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          LinearCombo mu{R->zero, R->zero, R->one, R->zero};
          return build_threedim(R, R->one, be, R->one, combo_zero(*R), mu,
                                combo_zero(*R), "threedim_b_iii");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_b_iv", "case (b)(iv): zx-bxz=const only",
        {{"ring", "z5"}, {"beta", "2"}, {"b", "1"}},
        [](RingPtr R, const Params& p) {
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          Elem b = resolve_label(*R, p.at("b"), "b");
          LinearCombo mu{b, R->zero, R->zero, R->zero};
          return build_threedim(R, R->one, be, R->one, combo_zero(*R), mu,
                                combo_zero(*R), "threedim_b_iv");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_b_v", "case (b)(v): yz-zy=az, xy-yx=x",
        {{"ring", "z5"}, {"beta", "2"}, {"a", "1"}},
        [](RingPtr R, const Params& p) {
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          Elem a = resolve_label(*R, p.at("a"), "a");
          LinearCombo lam{R->zero, R->zero, R->zero, a};
          LinearCombo nu{R->zero, R->one, R->zero, R->zero};
          return build_threedim(R, R->one, be, R->one, lam, combo_zero(*R), nu,
                                "threedim_b_v");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_b_vi", "case (b)(vi): yz-zy=z only",
        {{"ring", "z5"}, {"beta", "2"}},
        [](RingPtr R, const Params& p) {
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          LinearCombo lam{R->zero, R->zero, R->zero, R->one};
          return build_threedim(R, R->one, be, R->one, lam, combo_zero(*R),
                                combo_zero(*R), "threedim_b_vi");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_c_i", "case (c)(i): zx-bxz=y+const, alpha=gamma",
        {{"ring", "z5"}, {"alpha", "2"}, {"beta", "3"}, {"b", "1"}},
        [](RingPtr R, const Params& p) {
          Elem al = resolve_unit(*R, p.at("alpha"), "alpha");
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          Elem b = resolve_label(*R, p.at("b"), "b");
          LinearCombo mu{b, R->zero, R->one, R->zero};
          return build_threedim(R, al, be, al, combo_zero(*R), mu, combo_zero(*R),
                                "threedim_c_i");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_c_ii", "case (c)(ii): zx-bxz=const, alpha=gamma",
        {{"ring", "z5"}, {"alpha", "2"}, {"beta", "3"}, {"b", "1"}},
        [](RingPtr R, const Params& p) {
          Elem al = resolve_unit(*R, p.at("alpha"), "alpha");
          Elem be = resolve_unit(*R, p.at("beta"), "beta");
          Elem b = resolve_label(*R, p.at("b"), "b");
          LinearCombo mu{b, R->zero, R->zero, R->zero};
          return build_threedim(R, al, be, al, combo_zero(*R), mu, combo_zero(*R),
                                "threedim_c_ii");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_d", "case (d): equal unit, linear tails a_i + b_i",
        {{"ring", "z5"},
         {"alpha", "2"},
         {"a1", "0"},
         {"b1", "0"},
         {"a2", "0"},
         {"b2", "0"},
         {"a3", "0"},
         {"b3", "0"}},
        [](RingPtr R, const Params& p) {
          Elem al = resolve_unit(*R, p.at("alpha"), "alpha");
          auto lab = [&](const char* k) { return resolve_label(*R, p.at(k), k); };
          LinearCombo lam{lab("b1"), lab("a1"), R->zero, R->zero};
          LinearCombo mu{lab("b2"), R->zero, lab("a2"), R->zero};
          LinearCombo nu{lab("b3"), R->zero, R->zero, lab("a3")};
          return build_threedim(R, al, al, al, lam, mu, nu, "threedim_d");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_e_i", "case (e)(i): yz-zy=x, zx-xz=y, xy-yx=z",
        {{"ring", "z2"}},
        [](RingPtr R, const Params&) {
          LinearCombo lam{R->zero, R->one, R->zero, R->zero};
          LinearCombo mu{R->zero, R->zero, R->one, R->zero};
          LinearCombo nu{R->zero, R->zero, R->zero, R->one};
          return build_threedim(R, R->one, R->one, R->one, lam, mu, nu,
                                "threedim_e_i");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_e_ii", "case (e)(ii): xy-yx=z only",
        {{"ring", "z2"}},
        [](RingPtr R, const Params&) {
          LinearCombo nu{R->zero, R->zero, R->zero, R->one};
          return build_threedim(R, R->one, R->one, R->one, combo_zero(*R),
                                combo_zero(*R), nu, "threedim_e_ii");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_e_iii", "case (e)(iii): xy-yx=const only",
        {{"ring", "z2"}, {"b", "1"}},
        [](RingPtr R, const Params& p) {
          Elem b = resolve_label(*R, p.at("b"), "b");
          LinearCombo nu{b, R->zero, R->zero, R->zero};
          return build_threedim(R, R->one, R->one, R->one, combo_zero(*R),
                                combo_zero(*R), nu, "threedim_e_iii");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_e_iv", "case (e)(iv): yz-zy=-y, zx-xz=x+y",
        {{"ring", "z2"}},
        [](RingPtr R, const Params&) {
          LinearCombo lam{R->zero, R->zero, R->neg(R->one), R->zero};
          LinearCombo mu{R->zero, R->one, R->one, R->zero};
          return build_threedim(R, R->one, R->one, R->one, lam, mu, combo_zero(*R),
                                "threedim_e_iv");
        }));

    v.push_back(detail::threedim_entry(
        "threedim_e_v", "case (e)(v): yz-zy=az, zx-xz=z",
        {{"ring", "z2"}, {"a", "1"}},
        [](RingPtr R, const Params& p) {
          Elem a = resolve_label(*R, p.at("a"), "a");
          LinearCombo lam{R->zero, R->zero, R->zero, a};
          LinearCombo mu{R->zero, R->zero, R->zero, R->one};
          return build_threedim(R, R->one, R->one, R->one, lam, mu, combo_zero(*R),
                                "threedim_e_v");
        }));

    return v;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : list_entries())
    if (e.name == name) return &e;
  return nullptr;
}

/// Instantiates a catalog entry with defaults merged in and runs the
/// diamond check. Parameter regions failing the PBW basis condition
/// (possible for user-chosen case (d) data) are reported as errors.
inline PresPtr instantiate(std::string_view name, const Params& params = {}) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw Error("unknown catalog entry: " + std::string(name));
  Params merged;
  for (const auto& [k, def] : e->param_schema) merged[k] = def;
  for (const auto& [k, val] : params) {
    if (!merged.count(k))
      throw Error("entry " + e->name + " has no parameter named " + k);
    merged[k] = val;
  }
  PresPtr P = e->builder(merged);
  PresentationCheck chk = check_presentation(P);
  if (!chk.ok)
    throw Error("catalog entry " + e->name + " fails its diamond check: " + chk.error);
  return P;
}

/// Fixed instances used by the harness and CLI; `name` may also be a
/// catalog entry name (instantiated with defaults).
inline PresPtr named_presentation(std::string_view name) {
  if (name == "qplane_z4") return instantiate("quantum_plane", {{"ring", "z4"}, {"q", "3"}});
  if (name == "constant_z4") return instantiate("constant_poly", {{"ring", "z4"}});
  if (name == "constant_z8") return instantiate("constant_poly", {{"ring", "z8"}});
  if (name == "threedim_a_z5") return instantiate("threedim_a");
  if (name == "threedim_e_i_z2") return instantiate("threedim_e_i");
  if (find_entry(name)) return instantiate(name);
  throw Error("unknown presentation name: " + std::string(name));
}

}  // namespace skewpbw

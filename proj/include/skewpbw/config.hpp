// config.hpp -- the structured text format for rings, map systems and
// presentations, plus the loaders and the writer used by `catalog emit`.
//
// Syntax: one binding or block per line.
//   key = value-to-end-of-line
//   key words {            (block header may be several words)
//     ...
//   }
//   # comment to end of line
//
// Example presentation file:
//   presentation {
//     name = qplane_z4
//     order = deglex
//     ring = z4            # built-in name, or a nested ring { ... } block
//     var x {
//       sigma = identity
//       delta = zero
//     }
//     var y {
//       sigma = identity
//       delta = zero
//     }
//     rel y x {            # x2 x1 = c x1 x2 + r0 + sum r_k x_k
//       c = [3]
//     }
//   }
//
// Map value forms: identity | zero | images: [l0] [l1] ... |
//   t_image: [l] (trunc_poly rings) | permute: 2 1 (product rings).
// Element values are labels in brackets; brackets nest for matrix labels.

#pragma once

#include "skewpbw/catalog.hpp"
#include "skewpbw/pbw.hpp"

#include <cctype>

namespace skewpbw {

struct ConfigNode {
  std::vector<std::string> key;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::vector<ConfigNode> children;

  const std::string* get(std::string_view k) const {
    for (const auto& [key_, val] : bindings)
      if (key_ == k) return &val;
    return nullptr;
  }
  const std::string& require(std::string_view k) const {
    const std::string* v = get(k);
    if (!v)
      throw Error("config block '" + (key.empty() ? "<root>" : key[0]) +
                  "' is missing the key '" + std::string(k) + "'");
    return *v;
  }
  const ConfigNode* child(std::string_view k) const {
    for (const auto& c : children)
      if (!c.key.empty() && c.key[0] == k) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string strip(std::string s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

/// Bracketed element labels: [3] [(1,0)] [[0 1;0 0]] -- brackets nest.
inline std::vector<std::string> parse_bracketed_labels(const std::string& s,
                                                       const std::string& context) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '[') throw Error(context + ": expected '[' in '" + s + "'");
    int depth = 0;
    std::size_t j = i;
    for (; j < s.size(); ++j) {
      if (s[j] == '[') ++depth;
      if (s[j] == ']' && --depth == 0) break;
    }
    if (depth != 0) throw Error(context + ": unbalanced brackets in '" + s + "'");
    out.push_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  return out;
}

}  // namespace detail

inline ConfigNode parse_config(const std::string& text) {
  ConfigNode root;
  std::vector<ConfigNode*> stack{&root};
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = detail::strip(line);
    if (line.empty()) continue;
    if (line == "}") {
      if (stack.size() == 1)
        throw Error("config line " + std::to_string(lineno) + ": unmatched '}'");
      stack.pop_back();
      continue;
    }
    if (line.back() == '{') {
      std::string header = detail::strip(line.substr(0, line.size() - 1));
      ConfigNode node;
      node.key = detail::split_words(header);
      if (node.key.empty())
        throw Error("config line " + std::to_string(lineno) + ": block without a name");
      stack.back()->children.push_back(std::move(node));
      stack.push_back(&stack.back()->children.back());
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) +
                  ": expected 'key = value' or a block");
    std::string k = detail::strip(line.substr(0, eq));
    std::string v = detail::strip(line.substr(eq + 1));
    if (k.empty())
      throw Error("config line " + std::to_string(lineno) + ": empty key");
    stack.back()->bindings.emplace_back(std::move(k), std::move(v));
  }
  if (stack.size() != 1) throw Error("config: unclosed block at end of file");
  return root;
}

// ---- ring specs ----

inline RingSpec ring_spec_from_node(const ConfigNode& node) {
  const std::string& kind = node.require("kind");
  if (kind == "zn") {
    return RingSpec::zn(static_cast<unsigned>(std::stoul(node.require("n"))));
  }
  if (kind == "trunc_poly") {
    const ConfigNode* base = node.child("base");
    if (!base) throw Error("trunc_poly ring needs a base block");
    return RingSpec::trunc_poly(ring_spec_from_node(*base),
                                static_cast<unsigned>(std::stoul(node.require("d"))));
  }
  if (kind == "product") {
    std::vector<RingSpec> fs;
    for (const auto& c : node.children)
      if (!c.key.empty() && c.key[0] == "factor") fs.push_back(ring_spec_from_node(c));
    if (fs.empty()) throw Error("product ring needs factor blocks");
    return RingSpec::product(std::move(fs));
  }
  if (kind == "ut2") {
    const ConfigNode* base = node.child("base");
    if (!base) throw Error("ut2 ring needs a base block");
    return RingSpec::ut2(ring_spec_from_node(*base));
  }
  if (kind == "table") {
    RingSpec s;
    s.kind = RingSpec::Kind::table;
    s.table_order = static_cast<unsigned>(std::stoul(node.require("order")));
    auto read_table = [&](const std::string& key) {
      std::vector<Elem> t;
      for (const auto& w : detail::split_words(node.require(key)))
        t.push_back(static_cast<Elem>(std::stoul(w)));
      return t;
    };
    s.add_table = read_table("add");
    s.mul_table = read_table("mul");
    if (const std::string* labels = node.get("labels")) {
      std::string cur;
      for (char ch : *labels) {
        if (ch == ',') {
          s.table_labels.push_back(detail::strip(cur));
          cur.clear();
        } else
          cur += ch;
      }
      s.table_labels.push_back(detail::strip(cur));
    }
    return s;
  }
  throw Error("unknown ring kind: " + kind);
}

/// A ring reference is either a built-in spec name or a ring block.
inline RingSpec ring_spec_from_config(const ConfigNode& parent) {
  if (const std::string* name = parent.get("ring")) {
    auto spec = builtin_ring_spec(*name);
    if (!spec) throw Error("unknown built-in ring spec: " + *name);
    return *spec;
  }
  const ConfigNode* block = parent.child("ring");
  if (!block) throw Error("config needs 'ring = <name>' or a ring block");
  return ring_spec_from_node(*block);
}

// ---- maps ----

inline RingEndo endo_from_config(RingPtr R, const RingSpec& spec,
                                 const std::string& value, const std::string& who) {
  if (value == "identity") return identity_endo(std::move(R));
  if (value.rfind("images:", 0) == 0) {
    auto labels = detail::parse_bracketed_labels(value.substr(7), who);
    std::vector<Elem> img;
    for (const auto& l : labels) {
      auto e = R->element_by_label(l);
      if (!e) throw Error(who + ": image label " + l + " not in " + R->name);
      img.push_back(*e);
    }
    if (img.size() != R->order)
      throw Error(who + ": image list must cover every element exactly once");
    return endo_from_images(std::move(R), std::move(img));
  }
  if (value.rfind("t_image:", 0) == 0) {
    auto labels = detail::parse_bracketed_labels(value.substr(8), who);
    if (labels.size() != 1) throw Error(who + ": t_image takes a single label");
    auto e = R->element_by_label(labels[0]);
    if (!e) throw Error(who + ": label " + labels[0] + " not in " + R->name);
    return endo_from_t_image(std::move(R), spec, *e);
  }
  if (value.rfind("permute:", 0) == 0) {
    std::vector<std::size_t> perm;
    for (const auto& w : detail::split_words(value.substr(8)))
      perm.push_back(std::stoul(w) - 1);  // 1-based in config
    return endo_from_permutation(std::move(R), spec, perm);
  }
  throw Error(who + ": unknown endomorphism form '" + value + "'");
}

inline SigmaDerivation derivation_from_config(RingPtr R, const RingSpec& spec,
                                              RingEndo sigma, const std::string& value,
                                              const std::string& who) {
  if (value == "zero") return zero_derivation(std::move(R), std::move(sigma));
  if (value.rfind("images:", 0) == 0) {
    auto labels = detail::parse_bracketed_labels(value.substr(7), who);
    std::vector<Elem> img;
    for (const auto& l : labels) {
      auto e = R->element_by_label(l);
      if (!e) throw Error(who + ": image label " + l + " not in " + R->name);
      img.push_back(*e);
    }
    if (img.size() != R->order)
      throw Error(who + ": image list must cover every element exactly once");
    return derivation_from_images(std::move(R), std::move(sigma), std::move(img));
  }
  if (value.rfind("t_image:", 0) == 0) {
    auto labels = detail::parse_bracketed_labels(value.substr(8), who);
    if (labels.size() != 1) throw Error(who + ": t_image takes a single label");
    auto e = R->element_by_label(labels[0]);
    if (!e) throw Error(who + ": label " + labels[0] + " not in " + R->name);
    return derivation_from_t_image(std::move(R), spec, std::move(sigma), *e);
  }
  throw Error(who + ": unknown derivation form '" + value + "'");
}

// ---- presentations ----

/// Loads a presentation block: ring reference, ordered var blocks with
/// their sigma/delta, and rel blocks in the x_j x_i convention. Structural
/// and map validation happens here; the diamond check is the caller's.
inline PresPtr load_presentation(const ConfigNode& root) {
  const ConfigNode* node = root.child("presentation");
  if (!node) throw Error("config has no presentation block");

  RingSpec spec = ring_spec_from_config(*node);
  RingPtr R = ring_of_spec(spec);

  std::vector<std::string> var_names;
  std::vector<RingEndo> sigmas;
  std::vector<SigmaDerivation> deltas;
  for (const auto& c : node->children) {
    if (c.key.empty() || c.key[0] != "var") continue;
    if (c.key.size() != 2) throw Error("var block needs exactly one variable name");
    const std::string& vn = c.key[1];
    std::string who = "var " + vn;
    RingEndo s = endo_from_config(R, spec, c.get("sigma") ? *c.get("sigma") : "identity",
                                  who + " sigma");
    SigmaDerivation d = derivation_from_config(
        R, spec, s, c.get("delta") ? *c.get("delta") : "zero", who + " delta");
    var_names.push_back(vn);
    sigmas.push_back(std::move(s));
    deltas.push_back(std::move(d));
  }
  if (var_names.empty()) throw Error("presentation has no var blocks");
  auto system = make_system(R, std::move(sigmas), std::move(deltas));

  const std::size_t n = var_names.size();
  auto var_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < n; ++i)
      if (var_names[i] == name) return i;
    throw Error("rel block names unknown variable " + name);
  };
  auto resolve = [&](const std::string& label, const std::string& ctx) {
    auto labels = detail::parse_bracketed_labels(label, ctx);
    if (labels.size() != 1) throw Error(ctx + ": expected one bracketed label");
    auto e = R->element_by_label(labels[0]);
    if (!e) throw Error(ctx + ": label " + labels[0] + " not in " + R->name);
    return *e;
  };

  std::vector<Elem> c(n * (n - 1) / 2, R->one);
  std::vector<std::vector<Elem>> tail(n * (n - 1) / 2,
                                      std::vector<Elem>(n + 1, R->zero));
  auto pair_index = [&](std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  for (const auto& cnode : node->children) {
    if (cnode.key.empty() || cnode.key[0] != "rel") continue;
    if (cnode.key.size() != 3)
      throw Error("rel block header must be 'rel <higher var> <lower var>'");
    std::size_t j = var_index(cnode.key[1]);
    std::size_t i = var_index(cnode.key[2]);
    if (i >= j)
      throw Error("rel " + cnode.key[1] + " " + cnode.key[2] +
                  ": variables must appear as x_j x_i with j > i");
    std::string ctx = "rel " + cnode.key[1] + " " + cnode.key[2];
    std::size_t p = pair_index(i, j);
    if (!cnode.children.empty()) throw Error(ctx + ": unexpected nested block");
    for (const auto& [k, v] : cnode.bindings) {
      auto words = detail::split_words(k);
      if (k == "c")
        c[p] = resolve(v, ctx + " c");
      else if (k == "r0")
        tail[p][0] = resolve(v, ctx + " r0");
      else if (words.size() == 2 && words[0] == "r")
        tail[p][var_index(words[1]) + 1] = resolve(v, ctx + " " + k);
      else
        throw Error(ctx + ": unknown key " + k);
    }
  }

  MonomialOrder order;
  if (const std::string* o = node->get("order")) {
    auto parsed = MonomialOrder::by_name(*o);
    if (!parsed) throw Error("unknown monomial order: " + *o);
    order = *parsed;
  }
  std::string name = node->get("name") ? *node->get("name") : "presentation";
  return make_presentation(std::move(R), std::move(var_names), std::move(system),
                           std::move(c), std::move(tail), order, std::move(name));
}

inline PresPtr load_presentation_text(const std::string& text) {
  return load_presentation(parse_config(text));
}

// ---- the writer used by `catalog emit` ----

namespace detail {

inline std::string map_to_config(const FiniteRing& R, const std::vector<Elem>& image,
                                 bool is_delta) {
  bool ident = true, zero = true;
  for (Elem a = 0; a < R.order; ++a) {
    ident = ident && image[a] == a;
    zero = zero && image[a] == R.zero;
  }
  if (!is_delta && ident) return "identity";
  if (is_delta && zero) return "zero";
  std::string out = "images:";
  for (Elem a = 0; a < R.order; ++a) out += " [" + R.label(image[a]) + "]";
  return out;
}

}  // namespace detail

/// Renders a catalog entry instantiation as a presentation config file
/// that load_presentation reads back to an identical presentation.
inline std::string emit_presentation_config(const std::string& entry_name,
                                            const Params& params = {}) {
  const CatalogEntry* entry = find_entry(entry_name);
  if (!entry) throw Error("unknown catalog entry: " + entry_name);
  Params merged;
  for (const auto& [k, def] : entry->param_schema) merged[k] = def;
  for (const auto& [k, v] : params) {
    if (!merged.count(k))
      throw Error("entry " + entry_name + " has no parameter named " + k);
    merged[k] = v;
  }
  PresPtr P = instantiate(entry_name, merged);
  const FiniteRing& R = *P->ring;

  std::string ring_name;
  if (merged.count("ring"))
    ring_name = merged.at("ring");
  else if (entry_name == "jordan_trunc")
    ring_name = "z2t4";
  else if (entry_name == "swap_ore")
    ring_name = "z2xz2";
  else if (entry_name == "ut2_constant")
    ring_name = "ut2z2";
  else
    throw Error("entry " + entry_name + " has no emittable ring reference");

  std::ostringstream os;
  os << "# emitted from catalog entry " << entry_name << "\n";
  os << "presentation {\n";
  os << "  name = " << P->name << "\n";
  os << "  order = " << P->order.name() << "\n";
  os << "  ring = " << ring_name << "\n";
  for (std::size_t i = 0; i < P->n; ++i) {
    os << "  var " << P->var_names[i] << " {\n";
    os << "    sigma = " << detail::map_to_config(R, P->system.sigmas[i].image, false)
       << "\n";
    os << "    delta = " << detail::map_to_config(R, P->system.deltas[i].image, true)
       << "\n";
    os << "  }\n";
  }
  for (std::size_t i = 0; i < P->n; ++i)
    for (std::size_t j = i + 1; j < P->n; ++j) {
      const auto& t = P->tail_of(i, j);
      os << "  rel " << P->var_names[j] << " " << P->var_names[i] << " {\n";
      os << "    c = [" << R.label(P->c_of(i, j)) << "]\n";
      if (t[0] != R.zero) os << "    r0 = [" << R.label(t[0]) << "]\n";
      for (std::size_t k = 0; k < P->n; ++k)
        if (t[k + 1] != R.zero)
          os << "    r " << P->var_names[k] << " = [" << R.label(t[k + 1]) << "]\n";
      os << "  }\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace skewpbw

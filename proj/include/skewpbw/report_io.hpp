// report_io.hpp -- machine-readable (schema 1) and human-readable renderings
// of verification reports. Both renderers consume the same report value.

#pragma once

#include "skewpbw/nil_theory.hpp"

#include "json.hpp"

namespace skewpbw {

inline nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["schema"] = 1;
  j["theorem"] = rep.theorem;
  j["domain"] = rep.domain;
  j["checks_run"] = rep.checks_run;
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.seed) j["seed"] = *rep.seed;
  j["hypotheses"] = nlohmann::json::array();
  for (const auto& h : rep.hypotheses) {
    nlohmann::json hj{{"name", h.name}, {"holds", h.holds}};
    if (!h.witness.empty()) hj["witness"] = h.witness;
    j["hypotheses"].push_back(std::move(hj));
  }
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : rep.counterexamples)
    j["counterexamples"].push_back(
        {{"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}});
  j["notes"] = rep.notes;
  return j;
}

inline std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "theorem: " << rep.theorem << "\n";
  os << "domain: " << rep.domain << "\n";
  if (rep.seed) os << "seed: " << *rep.seed << "\n";
  os << "hypotheses:\n";
  for (const auto& h : rep.hypotheses) {
    os << "  [" << (h.holds ? " ok " : "FAIL") << "] " << h.name;
    if (!h.witness.empty()) os << " -- " << h.witness;
    os << "\n";
  }
  os << "checks_run: " << rep.checks_run << "\n";
  if (rep.counterexamples.empty()) {
    os << "counterexamples: none\n";
  } else {
    os << "counterexamples:\n";
    for (const auto& c : rep.counterexamples)
      os << "  - inputs: " << c.inputs << "\n    expected: " << c.expected
         << "\n    got: " << c.got << "\n";
  }
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << "verdict: " << verdict_name(rep.verdict) << "\n";
  return os.str();
}

inline int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::verified_on_domain: return 0;
    case Verdict::refuted: return 1;
    case Verdict::hypothesis_failed: return 2;
    case Verdict::inconclusive_cap: return 4;
  }
  return 3;
}

}  // namespace skewpbw

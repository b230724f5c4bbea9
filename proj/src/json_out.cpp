#include "blowup/json_out.hpp"

#include <stdexcept>

namespace blowup::json {

namespace {

using json = nlohmann::ordered_json;

std::string str(const Int& v) { return v.get_str(); }

json mult_strings(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(str(x));
  return a;
}

}  // namespace

std::string property_name(criteria::Property p) {
  switch (p) {
    case criteria::Property::Ample: return "ample";
    case criteria::Property::GloballyGenerated: return "globally-generated";
    case criteria::Property::VeryAmple: return "very-ample";
  }
  throw std::logic_error("property_name: bad value");
}

std::string outcome_name(criteria::Outcome o) {
  switch (o) {
    case criteria::Outcome::Certified: return "certified";
    case criteria::Outcome::NotCertified: return "not-certified";
    case criteria::Outcome::Conditional: return "conditional";
    case criteria::Outcome::NotApplicable: return "not-applicable";
  }
  throw std::logic_error("outcome_name: bad value");
}

nlohmann::ordered_json to_json(const DivisorClass& c) {
  return json{{"degree", str(c.degree)},
              {"mults", mult_strings(c.mults)},
              {"display", to_string(c)}};
}

nlohmann::ordered_json to_json(const NumericalProfile& p) {
  return json{{"self_intersection", str(p.self_intersection)},
              {"k_degree", str(p.k_degree)},
              {"chi", str(p.chi)},
              {"raw_virtual_dim", str(p.raw_virtual_dim)},
              {"expected_dim", str(p.expected_dim)}};
}

nlohmann::ordered_json to_json(const weyl::ReductionTrace& t) {
  return json{{"start", to_json(t.start)},
              {"end", to_json(t.end)},
              {"steps", t.steps},
              {"terminal",
               t.terminal == weyl::Terminal::Fundamental ? "fundamental" : "non-effective"}};
}

nlohmann::ordered_json to_json(const weyl::NefStatus& s) {
  json j;
  switch (s.outcome) {
    case weyl::NefOutcome::Nef: j["outcome"] = "nef"; break;
    case weyl::NefOutcome::NotNef: j["outcome"] = "not-nef"; break;
    case weyl::NefOutcome::Unknown: j["outcome"] = "unknown"; break;
  }
  if (s.witness) j["witness"] = to_json(*s.witness);
  return j;
}

nlohmann::ordered_json to_json(const criteria::HypothesisRecord& h) {
  return json{{"label", h.label},
              {"lhs", str(h.lhs)},
              {"rhs", str(h.rhs)},
              {"relation", h.relation},
              {"pass", h.pass}};
}

nlohmann::ordered_json to_json(const criteria::Verdict& v) {
  json j;
  j["property"] = property_name(v.property);
  j["outcome"] = outcome_name(v.outcome);
  j["criterion"] = v.criterion_id;
  if (!v.conjecture.empty()) j["conjecture"] = v.conjecture;
  json hs = json::array();
  for (const auto& h : v.hypotheses) hs.push_back(to_json(h));
  j["hypotheses"] = std::move(hs);
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

nlohmann::ordered_json to_json(const interpolation::SystemDimensionReport& r) {
  return json{{"degree", r.degree},
              {"mults", r.mults},
              {"rows", r.rows},
              {"cols", r.cols},
              {"rank", r.rank},
              {"actual_dim", r.actual_dim},
              {"expected_dim", r.expected_dim},
              {"is_special", r.is_special},
              {"prime", r.prime},
              {"seed", r.seed},
              {"trials", r.trials}};
}

nlohmann::ordered_json to_json(const ineq::SweepReport& r) {
  json eq = json::array();
  for (const auto& [m, n] : r.equality_cases)
    eq.push_back(json{{"m", mult_strings(m)}, {"n", mult_strings(n)}});
  return json{{"cases", r.cases}, {"violations", r.violations}, {"equality_cases", std::move(eq)}};
}

nlohmann::ordered_json obstructions_json(const std::vector<std::pair<DivisorClass, Int>>& obs) {
  json a = json::array();
  for (const auto& [cls, value] : obs)
    a.push_back(json{{"curve", to_json(cls)}, {"value", str(value)}});
  return a;
}

}  // namespace blowup::json

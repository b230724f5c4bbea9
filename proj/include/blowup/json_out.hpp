#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blowup/criteria.hpp"
#include "blowup/divisor_class.hpp"
#include "blowup/inequalities.hpp"
#include "blowup/interpolation.hpp"
#include "blowup/weyl.hpp"
#include "json.hpp"

namespace blowup::json {

// Arbitrary-precision integers are serialized as decimal strings so output
// round-trips through any JSON parser; machine-width counters stay numeric.

std::string property_name(criteria::Property p);
std::string outcome_name(criteria::Outcome o);

nlohmann::ordered_json to_json(const DivisorClass& c);
nlohmann::ordered_json to_json(const NumericalProfile& p);
nlohmann::ordered_json to_json(const weyl::ReductionTrace& t);
nlohmann::ordered_json to_json(const weyl::NefStatus& s);
nlohmann::ordered_json to_json(const criteria::HypothesisRecord& h);
nlohmann::ordered_json to_json(const criteria::Verdict& v);
nlohmann::ordered_json to_json(const interpolation::SystemDimensionReport& r);
nlohmann::ordered_json to_json(const ineq::SweepReport& r);
nlohmann::ordered_json obstructions_json(const std::vector<std::pair<DivisorClass, Int>>& obs);

}  // namespace blowup::json

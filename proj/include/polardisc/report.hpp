#pragma once

#include <string>

#include "json.hpp"
#include "polardisc/classifier.hpp"
#include "polardisc/invariants.hpp"

namespace polardisc {

using Json = nlohmann::ordered_json;

Json to_json(const CharExponents& c);
Json to_json(const Semigroup& s);
Json to_json(const EquisingularityType& t);
Json to_json(const NewtonPolygon& p);
Json to_json(const Classification& c);
Json to_json(const VerificationReport& r);

std::string polygon_to_string(const NewtonPolygon& p);
std::string report_to_text(const VerificationReport& r);

}  // namespace polardisc

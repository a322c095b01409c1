#pragma once

#include <string>
#include <string_view>

#include "hpq/verifier.hpp"

namespace hpq::verify {

// JSON document with the report's field names. Extended values are written
// as doubles in shortest round-trip form.
std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(std::string_view text);

std::string counterexamples_to_json(const CounterexamplePair& pair, int indent = 2);

}  // namespace hpq::verify

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "steerkit/engine.hpp"
#include "steerkit/lsi.hpp"
#include "steerkit/scan.hpp"
#include "steerkit/states.hpp"

namespace steerkit {

using Json = nlohmann::json;

/// Complex numbers serialize as [re, im]; matrices as row-major nested arrays.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path);

Json spec_to_json(const LsiSpec& spec);
Json spec_to_json(const FullOperatorSpec& spec);

/// Parse a spec document ("type": "lsi" | "full"). Structural problems raise
/// SchemaError with a JSON-pointer path; model violations raise InvariantError.
std::variant<LsiSpec, FullOperatorSpec> parse_spec_json(const std::string& text);
std::variant<LsiSpec, FullOperatorSpec> parse_spec_json(const Json& doc);

Json to_json(const DeterministicStrategy& s);
Json to_json(const DirectionalThreshold& t);
Json to_json(const ThresholdReport& r);
Json to_json(const CertificationVerdict& v);
Json to_json(const ScanPoint& p);
Json to_json(const ScanResult& r);
Json to_json(const HaarEstimate& e);
Json to_json(const StateSpec& s);

StateSpec state_spec_from_json(const Json& j, const std::string& path);

}  // namespace steerkit

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "steerkit/json_io.hpp"

namespace steerkit {

inline constexpr const char* kVersion = "steerkit 0.1.0";

/// One front-end invocation. Parameter keys are shared between the entry and
/// the state; each consumer picks the keys it understands and run() rejects
/// keys nobody consumed.
struct RunRequest {
    std::string command;    // threshold | certify | scan | haar | list
    std::string entry;      // catalog name, or empty
    std::string spec_path;  // JSON spec path, or empty
    std::map<std::string, double> parameters;
    std::string state_family;  // empty when absent
    std::string output = "text";
    std::optional<std::uint64_t> seed;
    std::optional<std::pair<double, double>> range;
    std::size_t points = 41;
    std::size_t samples = 100000;
    bool expect_violation = false;
    std::string scan_parameter;       // override of the entry default
    std::string constraint = "plain"; // haar: plain | conjugate
};

struct RunReport {
    Json document;    // full machine-readable report
    std::string text; // human-readable rendering
    int exit_code = 0;
};

/// Execute a request. Exit codes: 0 ok, 1 error (thrown as steerkit::Error by
/// this function, mapped by the caller), 2 when --expect-violation was set and
/// the certification did not violate.
RunReport run(const RunRequest& request);

}  // namespace steerkit

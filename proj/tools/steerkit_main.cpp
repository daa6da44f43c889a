#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steerkit/run.hpp"

namespace {

// "k=v" pairs from repeated --param flags; keys are lowercased so V=0.7 and
// v=0.7 mean the same thing.
void apply_params(const std::vector<std::string>& raw, steerkit::RunRequest& req) {
    for (const std::string& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        try {
            req.parameters[key] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--param", "value of '" + key + "' is not a number");
        }
    }
}

void apply_range(const std::string& raw, steerkit::RunRequest& req) {
    const auto colon = raw.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--range", "expected lo:hi, got '" + raw + "'");
    try {
        req.range = {std::stod(raw.substr(0, colon)), std::stod(raw.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range", "bounds of '" + raw + "' are not numbers");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear steering inequality thresholds, certifications and scans"};
    app.set_version_flag("--version", steerkit::kVersion);
    app.require_subcommand(1);

    steerkit::RunRequest req;
    std::vector<std::string> raw_params;
    std::string raw_range;
    std::uint64_t seed_value = 0;
    std::vector<CLI::Option*> seed_options;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--entry", req.entry, "Catalog entry name (see `list`)");
        cmd->add_option("--param", raw_params, "Named parameter key=value (repeatable)");
        cmd->add_option("--state", req.state_family,
                        "State family: werner | isotropic | ghz | gen-ghz | noisy-ghz | max-entangled");
        cmd->add_option("--output", req.output, "Report format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        seed_options.push_back(cmd->add_option("--seed", seed_value, "RNG seed"));
    };

    CLI::App* list = app.add_subcommand("list", "List catalog entries");
    list->add_option("--output", req.output)->check(CLI::IsMember({"text", "json"}));

    CLI::App* threshold = app.add_subcommand("threshold", "Compute steering thresholds");
    add_common(threshold);
    threshold->add_option("--spec", req.spec_path, "Path to a JSON operator spec");

    CLI::App* certify = app.add_subcommand("certify", "Check a state against an inequality");
    add_common(certify);
    certify->add_flag("--expect-violation", req.expect_violation,
                      "Exit with code 2 when the state does not violate");

    CLI::App* scan = app.add_subcommand("scan", "Sweep a free parameter and maximize the ratio");
    add_common(scan);
    scan->add_option("--range", raw_range, "Parameter range lo:hi")->required();
    scan->add_option("--points", req.points, "Grid points (default 41)");
    scan->add_option("--scan-param", req.scan_parameter, "Parameter to sweep (entry default otherwise)");

    CLI::App* haar = app.add_subcommand("haar", "Monte-Carlo uniform-setting correlation estimate");
    add_common(haar);
    haar->add_option("--samples", req.samples, "Sample count (default 100000)");
    haar->add_option("--constraint", req.constraint, "plain | conjugate")
        ->check(CLI::IsMember({"plain", "conjugate"}));

    CLI11_PARSE(app, argc, argv);

    try {
        apply_params(raw_params, req);
        if (!raw_range.empty()) apply_range(raw_range, req);
        for (const CLI::Option* opt : seed_options)
            if (opt->count() > 0) req.seed = seed_value;
        if (list->parsed()) req.command = "list";
        if (threshold->parsed()) req.command = "threshold";
        if (certify->parsed()) req.command = "certify";
        if (scan->parsed()) req.command = "scan";
        if (haar->parsed()) req.command = "haar";

        const steerkit::RunReport report = steerkit::run(req);
        if (req.output == "json")
            std::cout << report.document.dump(2) << "\n";
        else
            std::cout << report.text;
        return report.exit_code;
    } catch (const steerkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

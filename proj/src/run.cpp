#include "steerkit/run.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "steerkit/catalog.hpp"

namespace steerkit {

namespace {

std::vector<std::string> state_parameter_names(const std::string& family) {
    if (family == "werner") return {"w", "d"};
    if (family == "isotropic") return {"eta", "d"};
    if (family == "ghz") return {"n"};
    if (family == "gen-ghz") return {"omega"};
    if (family == "noisy-ghz") return {"v", "n"};
    if (family == "max-entangled") return {"d"};
    return {};
}

std::map<std::string, double> pick(const std::map<std::string, double>& pool,
                                   const std::vector<std::string>& keys) {
    std::map<std::string, double> out;
    for (const std::string& k : keys) {
        const auto it = pool.find(k);
        if (it != pool.end()) out.emplace(*it);
    }
    return out;
}

StateSpec state_from_request(const RunRequest& req) {
    const std::string& family = req.state_family;
    const std::map<std::string, double> params = pick(req.parameters, state_parameter_names(family));
    if (family == "werner") {
        const auto it = params.find("w");
        if (it == params.end()) throw InvalidParameterError("state werner: missing parameter 'w'");
        return StateSpec::werner(it->second, static_cast<std::size_t>(params.count("d") ? params.at("d") : 2));
    }
    if (family == "isotropic") {
        const auto it = params.find("eta");
        if (it == params.end()) throw InvalidParameterError("state isotropic: missing parameter 'eta'");
        return StateSpec::isotropic(it->second,
                                    static_cast<std::size_t>(params.count("d") ? params.at("d") : 2));
    }
    if (family == "ghz")
        return StateSpec::ghz(static_cast<std::size_t>(params.count("n") ? params.at("n") : 3));
    if (family == "gen-ghz") {
        const auto it = params.find("omega");
        if (it == params.end()) throw InvalidParameterError("state gen-ghz: missing parameter 'omega'");
        return StateSpec::gen_ghz(it->second);
    }
    if (family == "noisy-ghz") {
        const auto it = params.find("v");
        if (it == params.end()) throw InvalidParameterError("state noisy-ghz: missing parameter 'v'");
        return StateSpec::noisy_ghz(it->second,
                                    static_cast<std::size_t>(params.count("n") ? params.at("n") : 3));
    }
    if (family == "max-entangled")
        return StateSpec::max_entangled(static_cast<std::size_t>(params.count("d") ? params.at("d") : 2));
    throw InvalidParameterError("unknown state family '" + family + "'");
}

void reject_unconsumed(const RunRequest& req, const std::set<std::string>& consumed) {
    for (const auto& [key, value] : req.parameters) {
        (void)value;
        if (!consumed.count(key))
            throw InvalidParameterError("parameter '" + key + "' is not used by this command");
    }
}

std::set<std::string> consumed_keys(const RunRequest& req) {
    std::set<std::string> keys;
    if (!req.entry.empty())
        for (const std::string& k : entry_parameter_names(req.entry)) keys.insert(k);
    if (!req.state_family.empty())
        for (const std::string& k : state_parameter_names(req.state_family)) keys.insert(k);
    if (!req.scan_parameter.empty()) keys.insert(req.scan_parameter);
    return keys;
}

Json request_to_json(const RunRequest& req) {
    Json j;
    j["command"] = req.command;
    j["entry"] = req.entry;
    j["spec"] = req.spec_path;
    j["parameters"] = req.parameters;
    if (req.state_family.empty())
        j["state"] = nullptr;
    else
        j["state"] = to_json(state_from_request(req));
    j["seed"] = req.seed ? Json(*req.seed) : Json(nullptr);
    j["range"] = req.range ? Json::array({req.range->first, req.range->second}) : Json(nullptr);
    j["points"] = req.points;
    j["samples"] = req.samples;
    j["expect_violation"] = req.expect_violation;
    j["scan_parameter"] = req.scan_parameter;
    j["constraint"] = req.constraint;
    j["output"] = req.output;
    return j;
}

CatalogEntry entry_from_request(const RunRequest& req) {
    return make_entry(req.entry, pick(req.parameters, entry_parameter_names(req.entry)));
}

std::string render_strategy(const DeterministicStrategy& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, value] : s.assignment) {
        if (!first) os << ", ";
        os << label << "=" << (value > 0 ? "+" : "") << value;
        first = false;
    }
    return os.str();
}

void render_threshold_text(std::ostringstream& os, const ThresholdReport& report,
                           const CatalogEntry* entry) {
    os.precision(12);
    os << "beta_overall:  " << report.beta_overall;
    if (entry && entry->reference_beta) os << "  [reference " << *entry->reference_beta << "]";
    os << "\n";
    os << "gamma_overall: " << report.gamma_overall;
    if (entry && entry->reference_gamma) os << "  [reference " << *entry->reference_gamma << "]";
    os << "\n";
    for (const auto& [label, dir] : report.per_direction) {
        os << "  " << label << ": beta=" << dir.beta << " gamma=" << dir.gamma;
        if (!dir.argmax_strategy.assignment.empty())
            os << "  argmax{" << render_strategy(dir.argmax_strategy) << "}";
        os << "\n";
    }
    if (entry && !entry->notes.empty()) os << "reference: " << entry->notes << "\n";
}

struct CommandOutput {
    Json results;
    std::string text;
    int exit_code = 0;
};

CommandOutput run_list() {
    CommandOutput out;
    out.results["entries"] = catalog_names();
    std::ostringstream os;
    for (const std::string& name : catalog_names()) os << name << "\n";
    out.text = os.str();
    return out;
}

CommandOutput run_threshold(const RunRequest& req) {
    CommandOutput out;
    std::ostringstream os;
    if (!req.spec_path.empty()) {
        std::ifstream in(req.spec_path);
        if (!in) throw InvalidParameterError("cannot open spec file '" + req.spec_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        const auto spec = parse_spec_json(buffer.str());
        ThresholdReport report;
        if (const auto* lsi = std::get_if<LsiSpec>(&spec)) {
            DirectionalThreshold dir = one_way_threshold(*lsi);
            report.beta_overall = dir.beta;
            report.gamma_overall = dir.gamma;
            report.per_direction.emplace("A->B", std::move(dir));
        } else {
            const auto& full = std::get<FullOperatorSpec>(spec);
            report = full.layout.n_parties() == 2 ? two_way_threshold(full) : gmst_threshold(full);
        }
        out.results["threshold"] = to_json(report);
        render_threshold_text(os, report, nullptr);
    } else {
        const CatalogEntry entry = entry_from_request(req);
        const ThresholdReport report = compute_threshold(entry);
        out.results["threshold"] = to_json(report);
        out.results["reference"] = Json{
            {"beta", entry.reference_beta ? Json(*entry.reference_beta) : Json(nullptr)},
            {"gamma", entry.reference_gamma ? Json(*entry.reference_gamma) : Json(nullptr)},
            {"notes", entry.notes}};
        os << "entry: " << entry.name << "\n";
        render_threshold_text(os, report, &entry);
    }
    out.text = os.str();
    return out;
}

CommandOutput run_certify(const RunRequest& req) {
    const CatalogEntry entry = entry_from_request(req);
    if (!entry.full)
        throw InvalidParameterError("certify: entry '" + entry.name + "' has no realizable operator");

    StateSpec state_spec;
    if (!req.state_family.empty())
        state_spec = state_from_request(req);
    else if (entry.optimal_state)
        state_spec = *entry.optimal_state;
    else
        throw InvalidParameterError("certify: no state given and entry has no optimal state");

    const ThresholdReport report = compute_threshold(entry);
    const CertificationVerdict verdict = certify(*entry.full, make_state(state_spec), report);

    CommandOutput out;
    out.results["certify"] = to_json(verdict);
    out.results["threshold"] = to_json(report);
    out.results["reference"] = Json{
        {"beta", entry.reference_beta ? Json(*entry.reference_beta) : Json(nullptr)},
        {"gamma", entry.reference_gamma ? Json(*entry.reference_gamma) : Json(nullptr)},
        {"optimal_expectation",
         entry.optimal_expectation ? Json(*entry.optimal_expectation) : Json(nullptr)},
        {"notes", entry.notes}};

    std::ostringstream os;
    os.precision(12);
    os << "entry: " << entry.name << "\n";
    os << "expectation: " << verdict.expectation;
    if (entry.optimal_expectation) os << "  [optimum " << *entry.optimal_expectation << "]";
    os << "\n";
    os << "bounds: [" << verdict.gamma << ", " << verdict.beta << "]\n";
    os << "violated: " << (verdict.violated ? "yes" : "no") << " (margin " << verdict.margin << ")\n";
    if (!entry.notes.empty()) os << "reference: " << entry.notes << "\n";
    out.text = os.str();

    if (req.expect_violation && !verdict.violated) out.exit_code = 2;
    return out;
}

CommandOutput run_scan(const RunRequest& req) {
    const CatalogEntry probe = entry_from_request(req);
    std::string parameter = req.scan_parameter.empty() ? probe.scan_parameter : req.scan_parameter;
    if (parameter.empty())
        throw InvalidParameterError("scan: entry '" + req.entry + "' has no scan parameter");
    if (!req.range) throw InvalidParameterError("scan: missing --range lo:hi");
    if (req.state_family.empty()) throw InvalidParameterError("scan: missing --state");

    const StateSpec state = state_from_request(req);
    const std::map<std::string, double> base = pick(req.parameters, entry_parameter_names(req.entry));
    EntryBuilder builder = [&](double value) {
        std::map<std::string, double> params = base;
        params[parameter] = value;
        return make_entry(req.entry, params);
    };
    const ScanResult result = scan_ratio(builder, state, req.range->first, req.range->second, req.points);

    CommandOutput out;
    out.results["scan"] = to_json(result);
    out.results["scan"]["parameter"] = parameter;

    std::ostringstream os;
    os.precision(12);
    os << "entry: " << req.entry << ", scanning '" << parameter << "' over [" << req.range->first
       << ", " << req.range->second << "] with " << req.points << " points\n";
    os << "best grid point:  " << parameter << "=" << result.best.parameter << " ratio=" << result.best.ratio
       << "\n";
    os << "refined optimum:  " << parameter << "=" << result.refined_best.parameter
       << " ratio=" << result.refined_best.ratio << " (expectation " << result.refined_best.expectation
       << ", threshold " << result.refined_best.threshold << ")\n";
    out.text = os.str();
    return out;
}

CommandOutput run_haar(const RunRequest& req) {
    if (req.state_family.empty()) throw InvalidParameterError("haar: missing --state");
    const StateSpec state = state_from_request(req);
    const ComplexMatrix rho = make_state(state);
    const std::size_t d = static_cast<std::size_t>(std::llround(std::sqrt(double(rho.dim()))));

    HaarConstraint constraint;
    if (req.constraint == "plain") constraint = HaarConstraint::Plain;
    else if (req.constraint == "conjugate") constraint = HaarConstraint::Conjugate;
    else throw InvalidParameterError("haar: constraint must be 'plain' or 'conjugate'");

    const std::uint64_t seed = req.seed.value_or(0);
    const HaarEstimate est = haar_expectation_mc(rho, d, constraint, req.samples, seed);

    std::optional<double> analytic;
    if (state.family == StateFamily::Werner && constraint == HaarConstraint::Plain)
        analytic = haar_werner_expectation(d, state.params.at("w"));
    if (state.family == StateFamily::Isotropic && constraint == HaarConstraint::Conjugate)
        analytic = haar_isotropic_expectation(d, state.params.at("eta"));

    CommandOutput out;
    out.results["haar"] = to_json(est);
    out.results["haar"]["constraint"] = req.constraint;
    out.results["haar"]["analytic"] = analytic ? Json(*analytic) : Json(nullptr);
    out.results["haar"]["bounds"] =
        Json{{"beta", harmonic_number(d) / double(d)}, {"gamma", 1.0 / double(d * d)}};

    std::ostringstream os;
    os.precision(12);
    os << "mean: " << est.mean << " +/- " << est.std_error << " (" << est.samples << " samples, seed "
       << est.seed << ")\n";
    if (analytic) os << "analytic: " << *analytic << "\n";
    os << "bounds: gamma=" << 1.0 / double(d * d) << " beta=" << harmonic_number(d) / double(d) << "\n";
    out.text = os.str();
    return out;
}

}  // namespace

RunReport run(const RunRequest& req) {
    const auto start = std::chrono::steady_clock::now();

    CommandOutput out;
    std::set<std::string> consumed = consumed_keys(req);
    if (req.command == "list") {
        out = run_list();
    } else if (req.command == "threshold") {
        if (req.spec_path.empty() && req.entry.empty())
            throw InvalidParameterError("threshold: needs --entry or --spec");
        reject_unconsumed(req, consumed);
        out = run_threshold(req);
    } else if (req.command == "certify") {
        if (req.entry.empty()) throw InvalidParameterError("certify: needs --entry");
        reject_unconsumed(req, consumed);
        out = run_certify(req);
    } else if (req.command == "scan") {
        if (req.entry.empty()) throw InvalidParameterError("scan: needs --entry");
        reject_unconsumed(req, consumed);
        out = run_scan(req);
    } else if (req.command == "haar") {
        reject_unconsumed(req, consumed);
        out = run_haar(req);
    } else {
        throw InvalidParameterError("unknown command '" + req.command + "'");
    }

    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

    RunReport report;
    report.document = Json{{"version", kVersion},
                           {"timing_ms", ms},
                           {"request", request_to_json(req)},
                           {"results", std::move(out.results)}};
    report.text = std::move(out.text);
    report.exit_code = out.exit_code;
    return report;
}

}  // namespace steerkit

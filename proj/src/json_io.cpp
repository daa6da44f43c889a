#include "steerkit/json_io.hpp"

#include <algorithm>

namespace steerkit {

namespace {

const Json& require_field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError("expected an object", path);
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'", path);
    return *it;
}

double require_number(const Json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError("expected a number", path);
    return j.get<double>();
}

std::size_t require_index(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) throw SchemaError("expected a nonnegative integer", path);
    return j.get<std::size_t>();
}

std::string require_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError("expected a string", path);
    return j.get<std::string>();
}

Complex complex_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("expected a [re, im] pair", path);
    return Complex{require_number(j[0], path + "/0"), require_number(j[1], path + "/1")};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

PartyLayout layout_from_json(const Json& j, const std::string& path) {
    const Json& dims = require_field(j, "dims", path);
    if (!dims.is_array() || dims.empty()) throw SchemaError("expected a nonempty array", path + "/dims");
    PartyLayout layout;
    for (std::size_t i = 0; i < dims.size(); ++i)
        layout.dims.push_back(require_index(dims[i], path + "/dims/" + std::to_string(i)));
    return layout;
}

Json layout_to_json(const PartyLayout& layout) { return Json{{"dims", layout.dims}}; }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError("expected a nonempty array of rows", path);
    const std::size_t dim = j.size();
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string row_path = path + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != dim)
            throw SchemaError("expected a row of length " + std::to_string(dim), row_path);
        for (std::size_t k = 0; k < dim; ++k)
            m(i, k) = complex_from_json(j[i][k], row_path + "/" + std::to_string(k));
    }
    return m;
}

Json spec_to_json(const LsiSpec& spec) {
    Json j;
    j["type"] = "lsi";
    j["layout"] = layout_to_json(spec.layout);
    j["trusted_parties"] = spec.trusted_parties;
    Json settings = Json::array();
    for (const UntrustedSetting& s : spec.settings) {
        Json js{{"label", s.label}};
        if (s.kind == SettingKind::TwoValue) {
            js["kind"] = "two-value";
        } else {
            js["kind"] = "outcomes";
            js["outcomes"] = s.outcomes;
        }
        settings.push_back(std::move(js));
    }
    j["settings"] = std::move(settings);
    Json terms = Json::array();
    for (const LsiTerm& t : spec.terms)
        terms.push_back(Json{{"setting", spec.settings[t.setting].label},
                             {"outcome", t.outcome_index},
                             {"weight", t.weight},
                             {"trusted_op", matrix_to_json(t.trusted_op)}});
    j["terms"] = std::move(terms);
    j["constant_term"] = spec.constant_term;
    if (!spec.constant_op.empty()) j["constant_op"] = matrix_to_json(spec.constant_op);
    return j;
}

Json spec_to_json(const FullOperatorSpec& spec) {
    Json j;
    j["type"] = "full";
    j["layout"] = layout_to_json(spec.layout);
    Json parties = Json::array();
    for (const auto& list : spec.measurements) {
        Json settings = Json::array();
        for (const PartyMeasurement& m : list) {
            if (const auto* obs = std::get_if<Observable>(&m)) {
                settings.push_back(Json{{"label", obs->label},
                                        {"kind", "observable"},
                                        {"matrix", matrix_to_json(obs->matrix)}});
            } else {
                const Povm& p = std::get<Povm>(m);
                Json effects = Json::array();
                for (const ComplexMatrix& e : p.effects) effects.push_back(matrix_to_json(e));
                settings.push_back(Json{{"label", p.label}, {"kind", "povm"}, {"effects", std::move(effects)}});
            }
        }
        parties.push_back(std::move(settings));
    }
    j["measurements"] = std::move(parties);
    Json terms = Json::array();
    for (const OperatorTerm& t : spec.terms) {
        Json factors = Json::array();
        for (const auto& f : t.factors) {
            if (!f) {
                factors.push_back(nullptr);
            } else if (f->outcome) {
                factors.push_back(Json{{"setting", f->setting}, {"outcome", *f->outcome}});
            } else {
                factors.push_back(Json{{"setting", f->setting}});
            }
        }
        terms.push_back(Json{{"weight", t.weight}, {"factors", std::move(factors)}});
    }
    j["terms"] = std::move(terms);
    return j;
}

namespace {

LsiSpec lsi_from_json(const Json& j) {
    LsiSpec spec;
    spec.layout = layout_from_json(require_field(j, "layout", ""), "/layout");

    const Json& trusted = require_field(j, "trusted_parties", "");
    if (!trusted.is_array()) throw SchemaError("expected an array", "/trusted_parties");
    for (std::size_t i = 0; i < trusted.size(); ++i)
        spec.trusted_parties.push_back(require_index(trusted[i], "/trusted_parties/" + std::to_string(i)));

    const Json& settings = require_field(j, "settings", "");
    if (!settings.is_array()) throw SchemaError("expected an array", "/settings");
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const std::string path = "/settings/" + std::to_string(i);
        UntrustedSetting s;
        s.label = require_string(require_field(settings[i], "label", path), path + "/label");
        const std::string kind = require_string(require_field(settings[i], "kind", path), path + "/kind");
        if (kind == "two-value") {
            s.kind = SettingKind::TwoValue;
            s.outcomes = 2;
        } else if (kind == "outcomes") {
            s.kind = SettingKind::Outcomes;
            s.outcomes = require_index(require_field(settings[i], "outcomes", path), path + "/outcomes");
        } else {
            throw SchemaError("kind must be 'two-value' or 'outcomes'", path + "/kind");
        }
        spec.settings.push_back(std::move(s));
    }

    const Json& terms = require_field(j, "terms", "");
    if (!terms.is_array()) throw SchemaError("expected an array", "/terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string path = "/terms/" + std::to_string(i);
        LsiTerm t;
        const std::string label =
            require_string(require_field(terms[i], "setting", path), path + "/setting");
        const auto idx = spec.setting_index(label);
        if (!idx) throw SchemaError("term references undeclared setting '" + label + "'", path + "/setting");
        t.setting = *idx;
        if (terms[i].contains("outcome"))
            t.outcome_index = require_index(terms[i]["outcome"], path + "/outcome");
        t.weight = require_number(require_field(terms[i], "weight", path), path + "/weight");
        t.trusted_op = matrix_from_json(require_field(terms[i], "trusted_op", path), path + "/trusted_op");
        spec.terms.push_back(std::move(t));
    }

    if (j.contains("constant_term"))
        spec.constant_term = require_number(j["constant_term"], "/constant_term");
    if (j.contains("constant_op") && !j["constant_op"].is_null())
        spec.constant_op = matrix_from_json(j["constant_op"], "/constant_op");

    spec.validate();
    return spec;
}

FullOperatorSpec full_from_json(const Json& j) {
    FullOperatorSpec spec;
    spec.layout = layout_from_json(require_field(j, "layout", ""), "/layout");

    const Json& parties = require_field(j, "measurements", "");
    if (!parties.is_array()) throw SchemaError("expected an array", "/measurements");
    for (std::size_t p = 0; p < parties.size(); ++p) {
        const std::string ppath = "/measurements/" + std::to_string(p);
        if (!parties[p].is_array()) throw SchemaError("expected an array", ppath);
        std::vector<PartyMeasurement> list;
        for (std::size_t s = 0; s < parties[p].size(); ++s) {
            const std::string path = ppath + "/" + std::to_string(s);
            const Json& m = parties[p][s];
            const std::string label = require_string(require_field(m, "label", path), path + "/label");
            const std::string kind = require_string(require_field(m, "kind", path), path + "/kind");
            if (kind == "observable") {
                ComplexMatrix mat = matrix_from_json(require_field(m, "matrix", path), path + "/matrix");
                try {
                    list.push_back(Observable::make_two_valued(std::move(mat), label));
                } catch (const Error& e) {
                    throw InvariantError(std::string(e.what()) + " (at " + path + ")");
                }
            } else if (kind == "povm") {
                const Json& effects = require_field(m, "effects", path);
                if (!effects.is_array()) throw SchemaError("expected an array", path + "/effects");
                std::vector<ComplexMatrix> mats;
                for (std::size_t a = 0; a < effects.size(); ++a)
                    mats.push_back(matrix_from_json(effects[a], path + "/effects/" + std::to_string(a)));
                try {
                    list.push_back(Povm::make(std::move(mats), label));
                } catch (const Error& e) {
                    throw InvariantError(std::string(e.what()) + " (at " + path + ")");
                }
            } else {
                throw SchemaError("kind must be 'observable' or 'povm'", path + "/kind");
            }
        }
        spec.measurements.push_back(std::move(list));
    }

    const Json& terms = require_field(j, "terms", "");
    if (!terms.is_array()) throw SchemaError("expected an array", "/terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string path = "/terms/" + std::to_string(i);
        OperatorTerm t;
        t.weight = require_number(require_field(terms[i], "weight", path), path + "/weight");
        const Json& factors = require_field(terms[i], "factors", path);
        if (!factors.is_array()) throw SchemaError("expected an array", path + "/factors");
        for (std::size_t p = 0; p < factors.size(); ++p) {
            const std::string fpath = path + "/factors/" + std::to_string(p);
            if (factors[p].is_null()) {
                t.factors.push_back(std::nullopt);
                continue;
            }
            TermFactor f;
            f.setting = require_index(require_field(factors[p], "setting", fpath), fpath + "/setting");
            if (factors[p].contains("outcome"))
                f.outcome = require_index(factors[p]["outcome"], fpath + "/outcome");
            t.factors.push_back(f);
        }
        spec.terms.push_back(std::move(t));
    }

    spec.validate();
    return spec;
}

}  // namespace

std::variant<LsiSpec, FullOperatorSpec> parse_spec_json(const Json& doc) {
    const std::string type = require_string(require_field(doc, "type", ""), "/type");
    if (type == "lsi") return lsi_from_json(doc);
    if (type == "full") return full_from_json(doc);
    throw SchemaError("type must be 'lsi' or 'full'", "/type");
}

std::variant<LsiSpec, FullOperatorSpec> parse_spec_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), "");
    }
    return parse_spec_json(doc);
}

Json to_json(const DeterministicStrategy& s) {
    Json j = Json::object();
    for (const auto& [label, value] : s.assignment) j[label] = value;
    return j;
}

Json to_json(const DirectionalThreshold& t) {
    return Json{{"beta", t.beta},
                {"gamma", t.gamma},
                {"argmax_strategy", to_json(t.argmax_strategy)},
                {"argmin_strategy", to_json(t.argmin_strategy)}};
}

Json to_json(const ThresholdReport& r) {
    Json dirs = Json::object();
    for (const auto& [label, value] : r.per_direction) dirs[label] = to_json(value);
    return Json{{"beta_overall", r.beta_overall},
                {"gamma_overall", r.gamma_overall},
                {"per_direction", std::move(dirs)}};
}

Json to_json(const CertificationVerdict& v) {
    return Json{{"expectation", v.expectation},
                {"beta", v.beta},
                {"gamma", v.gamma},
                {"violated", v.violated},
                {"margin", v.margin}};
}

Json to_json(const ScanPoint& p) {
    return Json{{"parameter", p.parameter},
                {"expectation", p.expectation},
                {"threshold", p.threshold},
                {"ratio", p.ratio}};
}

Json to_json(const ScanResult& r) {
    Json grid = Json::array();
    for (const ScanPoint& p : r.grid) grid.push_back(to_json(p));
    return Json{{"grid", std::move(grid)}, {"best", to_json(r.best)}, {"refined_best", to_json(r.refined_best)}};
}

Json to_json(const HaarEstimate& e) {
    return Json{{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

namespace {

std::string family_name(StateFamily f) {
    switch (f) {
        case StateFamily::Werner: return "werner";
        case StateFamily::Isotropic: return "isotropic";
        case StateFamily::Ghz: return "ghz";
        case StateFamily::GenGhz: return "gen-ghz";
        case StateFamily::NoisyGhz: return "noisy-ghz";
        case StateFamily::MaxEntangled: return "max-entangled";
        case StateFamily::Custom: return "custom";
    }
    return "custom";
}

}  // namespace

Json to_json(const StateSpec& s) {
    Json j{{"family", family_name(s.family)}, {"params", s.params}};
    if (s.family == StateFamily::Custom) j["matrix"] = matrix_to_json(s.custom);
    return j;
}

StateSpec state_spec_from_json(const Json& j, const std::string& path) {
    StateSpec spec;
    const std::string family = require_string(require_field(j, "family", path), path + "/family");
    if (family == "werner") spec.family = StateFamily::Werner;
    else if (family == "isotropic") spec.family = StateFamily::Isotropic;
    else if (family == "ghz") spec.family = StateFamily::Ghz;
    else if (family == "gen-ghz") spec.family = StateFamily::GenGhz;
    else if (family == "noisy-ghz") spec.family = StateFamily::NoisyGhz;
    else if (family == "max-entangled") spec.family = StateFamily::MaxEntangled;
    else if (family == "custom") spec.family = StateFamily::Custom;
    else throw SchemaError("unknown state family '" + family + "'", path + "/family");

    if (j.contains("params")) {
        if (!j["params"].is_object()) throw SchemaError("expected an object", path + "/params");
        for (const auto& [key, value] : j["params"].items())
            spec.params[key] = require_number(value, path + "/params/" + key);
    }
    if (spec.family == StateFamily::Custom)
        spec.custom = matrix_from_json(require_field(j, "matrix", path), path + "/matrix");
    return spec;
}

}  // namespace steerkit

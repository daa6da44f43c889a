#include "steerkit/lsi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace steerkit {

std::size_t PartyLayout::total_dim() const {
    std::size_t d = 1;
    for (std::size_t x : dims) d *= x;
    return d;
}

std::size_t PartyLayout::subset_dim(const std::vector<std::size_t>& parties) const {
    std::size_t d = 1;
    for (std::size_t p : parties) d *= dims.at(p);
    return d;
}

void PartyLayout::validate() const {
    if (dims.empty()) throw InvariantError("layout: no parties");
    for (std::size_t d : dims)
        if (d < 2) throw InvariantError("layout: party dimension below 2");
}

std::optional<std::size_t> LsiSpec::setting_index(const std::string& label) const {
    for (std::size_t i = 0; i < settings.size(); ++i)
        if (settings[i].label == label) return i;
    return std::nullopt;
}

void LsiSpec::validate() const {
    layout.validate();
    if (trusted_parties.empty()) throw InvariantError("lsi: no trusted party");
    for (std::size_t i = 0; i < trusted_parties.size(); ++i) {
        if (trusted_parties[i] >= layout.n_parties())
            throw InvariantError("lsi: trusted party index out of range");
        if (i > 0 && trusted_parties[i] <= trusted_parties[i - 1])
            throw InvariantError("lsi: trusted parties must be sorted and unique");
    }
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const UntrustedSetting& s = settings[i];
        if (s.kind == SettingKind::TwoValue && s.outcomes != 2)
            throw InvariantError("lsi: two-value setting '" + s.label + "' must have 2 outcomes");
        if (s.kind == SettingKind::Outcomes && s.outcomes < 2)
            throw InvariantError("lsi: setting '" + s.label + "' needs at least 2 outcomes");
        for (std::size_t j = i + 1; j < settings.size(); ++j)
            if (settings[j].label == s.label)
                throw InvariantError("lsi: duplicate setting label '" + s.label + "'");
    }
    const std::size_t td = trusted_dim();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const LsiTerm& t = terms[i];
        if (t.setting >= settings.size())
            throw InvariantError("lsi: term " + std::to_string(i) + " references undeclared setting");
        const UntrustedSetting& s = settings[t.setting];
        if (s.kind == SettingKind::TwoValue && t.outcome_index != 0)
            throw InvariantError("lsi: term " + std::to_string(i) +
                                 " has nonzero outcome index on a two-value setting");
        if (s.kind == SettingKind::Outcomes && t.outcome_index >= s.outcomes)
            throw InvariantError("lsi: term " + std::to_string(i) + " outcome index out of range");
        if (!std::isfinite(t.weight))
            throw InvariantError("lsi: term " + std::to_string(i) + " weight is not finite");
        if (t.trusted_op.dim() != td)
            throw InvariantError("lsi: term " + std::to_string(i) +
                                 " trusted operator dim does not match trusted subsystem");
        t.trusted_op.require_hermitian(kHermitianTol, "lsi term " + std::to_string(i));
    }
    if (!constant_op.empty()) {
        if (constant_op.dim() != td) throw InvariantError("lsi: constant operator dim mismatch");
        constant_op.require_hermitian(kHermitianTol, "lsi constant operator");
    }
    if (!std::isfinite(constant_term)) throw InvariantError("lsi: constant term is not finite");
}

std::size_t measurement_outcomes(const PartyMeasurement& m) {
    return std::holds_alternative<Observable>(m) ? 2 : std::get<Povm>(m).outcomes();
}

std::size_t measurement_dim(const PartyMeasurement& m) {
    if (const auto* obs = std::get_if<Observable>(&m)) return obs->matrix.dim();
    return std::get<Povm>(m).dim();
}

const std::string& measurement_label(const PartyMeasurement& m) {
    if (const auto* obs = std::get_if<Observable>(&m)) return obs->label;
    return std::get<Povm>(m).label;
}

void FullOperatorSpec::validate() const {
    layout.validate();
    if (measurements.size() != layout.n_parties())
        throw InvariantError("full spec: one measurement list required per party");
    for (std::size_t p = 0; p < measurements.size(); ++p)
        for (std::size_t s = 0; s < measurements[p].size(); ++s) {
            if (measurement_dim(measurements[p][s]) != layout.dims[p])
                throw InvariantError("full spec: measurement dim mismatch on party " + std::to_string(p));
            if (const auto* obs = std::get_if<Observable>(&measurements[p][s]); obs && !obs->two_valued)
                throw InvariantError("full spec: observable '" + obs->label +
                                     "' on party " + std::to_string(p) + " is not two-valued");
            for (std::size_t other = s + 1; other < measurements[p].size(); ++other)
                if (measurement_label(measurements[p][s]) == measurement_label(measurements[p][other]))
                    throw InvariantError("full spec: duplicate measurement label '" +
                                         measurement_label(measurements[p][s]) + "' on party " +
                                         std::to_string(p));
        }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const OperatorTerm& t = terms[i];
        if (!std::isfinite(t.weight))
            throw NonHermitianCoefficientsError("full spec: term " + std::to_string(i) + " weight not finite");
        if (t.factors.size() != layout.n_parties())
            throw InvariantError("full spec: term " + std::to_string(i) + " needs one factor slot per party");
        for (std::size_t p = 0; p < t.factors.size(); ++p) {
            if (!t.factors[p]) continue;
            const TermFactor& f = *t.factors[p];
            if (f.setting >= measurements[p].size())
                throw InvariantError("full spec: term " + std::to_string(i) +
                                     " references undeclared setting on party " + std::to_string(p));
            const PartyMeasurement& m = measurements[p][f.setting];
            if (f.outcome) {
                if (!std::holds_alternative<Povm>(m))
                    throw InvariantError("full spec: term " + std::to_string(i) +
                                         " uses an outcome on an observable setting");
                if (*f.outcome >= measurement_outcomes(m))
                    throw InvariantError("full spec: term " + std::to_string(i) + " outcome out of range");
            } else if (!std::holds_alternative<Observable>(m)) {
                throw InvariantError("full spec: term " + std::to_string(i) +
                                     " uses a POVM setting without an outcome");
            }
        }
    }
}

namespace {

const ComplexMatrix& factor_matrix(const FullOperatorSpec& spec, std::size_t party, const TermFactor& f) {
    const PartyMeasurement& m = spec.measurements[party][f.setting];
    if (f.outcome) return std::get<Povm>(m).effects[*f.outcome];
    return std::get<Observable>(m).matrix;
}

// (party, setting) pairs of the non-identity untrusted factors of a term,
// ascending by party. This tuple is the joint deterministic degree of freedom.
using JointKey = std::vector<std::pair<std::size_t, std::size_t>>;

std::string joint_label(const FullOperatorSpec& spec, const JointKey& key) {
    std::string label;
    for (const auto& [party, setting] : key) {
        if (!label.empty()) label += "*";
        label += measurement_label(spec.measurements[party][setting]);
        label += "@" + std::to_string(party + 1);
    }
    return label;
}

}  // namespace

ComplexMatrix realize_full_operator(const FullOperatorSpec& spec) {
    spec.validate();
    ComplexMatrix out(spec.layout.total_dim());
    for (const OperatorTerm& t : spec.terms) {
        std::vector<ComplexMatrix> factors;
        factors.reserve(spec.layout.n_parties());
        for (std::size_t p = 0; p < spec.layout.n_parties(); ++p) {
            if (t.factors[p])
                factors.push_back(factor_matrix(spec, p, *t.factors[p]));
            else
                factors.push_back(ComplexMatrix::identity(spec.layout.dims[p]));
        }
        out += Complex{t.weight, 0.0} * kron(factors);
    }
    out.require_hermitian(kHermitianTol, "realized operator");
    return out;
}

LsiSpec restrict_to_direction(const FullOperatorSpec& spec, const std::vector<std::size_t>& untrusted) {
    spec.validate();
    if (untrusted.empty() || untrusted.size() >= spec.layout.n_parties())
        throw InvariantError("restrict: untrusted set must be a nonempty proper subset of the parties");
    for (std::size_t i = 0; i < untrusted.size(); ++i) {
        if (untrusted[i] >= spec.layout.n_parties())
            throw InvariantError("restrict: untrusted party index out of range");
        if (i > 0 && untrusted[i] <= untrusted[i - 1])
            throw InvariantError("restrict: untrusted parties must be sorted and unique");
    }

    LsiSpec out;
    out.layout = spec.layout;
    for (std::size_t p = 0; p < spec.layout.n_parties(); ++p)
        if (!std::binary_search(untrusted.begin(), untrusted.end(), p)) out.trusted_parties.push_back(p);

    const std::size_t trusted_dim = out.trusted_dim();

    auto trusted_part = [&](const OperatorTerm& t) {
        std::vector<ComplexMatrix> factors;
        for (std::size_t k = 0; k < out.trusted_parties.size(); ++k) {
            const std::size_t p = out.trusted_parties[k];
            if (t.factors[p])
                factors.push_back(factor_matrix(spec, p, *t.factors[p]));
            else
                factors.push_back(ComplexMatrix::identity(spec.layout.dims[p]));
        }
        return kron(factors);
    };

    // Pass 1: joint setting keys and their kind. A key stays TwoValue only if
    // every factor at it, in every term, is an observable used by value.
    std::map<JointKey, SettingKind> kinds;
    for (const OperatorTerm& t : spec.terms) {
        JointKey key;
        bool has_outcome = false;
        for (std::size_t p : untrusted)
            if (t.factors[p]) {
                key.emplace_back(p, t.factors[p]->setting);
                has_outcome |= t.factors[p]->outcome.has_value();
            }
        if (key.empty()) continue;
        auto [it, inserted] = kinds.emplace(key, has_outcome ? SettingKind::Outcomes : SettingKind::TwoValue);
        if (!inserted && has_outcome) it->second = SettingKind::Outcomes;
    }

    std::map<JointKey, std::size_t> setting_of;
    for (const auto& [key, kind] : kinds) {
        UntrustedSetting s;
        s.label = joint_label(spec, key);
        s.kind = kind;
        if (kind == SettingKind::TwoValue) {
            s.outcomes = 2;
        } else {
            std::size_t outcomes = 1;
            for (const auto& [party, setting] : key)
                outcomes *= measurement_outcomes(spec.measurements[party][setting]);
            s.outcomes = outcomes;
        }
        setting_of.emplace(key, out.settings.size());
        out.settings.push_back(std::move(s));
    }

    ComplexMatrix constant(trusted_dim);
    bool has_constant = false;

    for (const OperatorTerm& t : spec.terms) {
        JointKey key;
        for (std::size_t p : untrusted)
            if (t.factors[p]) key.emplace_back(p, t.factors[p]->setting);

        const ComplexMatrix trusted_op = trusted_part(t);
        if (key.empty()) {
            // All-identity untrusted part carries the predetermined value +1.
            constant += Complex{t.weight, 0.0} * trusted_op;
            has_constant = true;
            continue;
        }

        const std::size_t setting = setting_of.at(key);
        if (out.settings[setting].kind == SettingKind::TwoValue) {
            out.terms.push_back(LsiTerm{setting, 0, t.weight, trusted_op});
            continue;
        }

        // Outcomes setting: mixed radix over the key's factors, most
        // significant first. Observable factors contribute radix 2 with the
        // digit mapping 0 -> +1, 1 -> -1; their value usages expand over both
        // digits with signed weights. POVM factors pin their digit.
        std::vector<std::size_t> radix;
        for (const auto& [party, setting_idx] : key)
            radix.push_back(measurement_outcomes(spec.measurements[party][setting_idx]));

        struct Partial {
            std::size_t index = 0;  // accumulated mixed-radix outcome
            double sign = 1.0;
        };
        std::vector<Partial> expansion{Partial{}};
        for (std::size_t k = 0; k < key.size(); ++k) {
            const auto& [party, setting_idx] = key[k];
            const std::optional<std::size_t> outcome = t.factors[party]->outcome;
            std::vector<Partial> next;
            for (const Partial& part : expansion) {
                if (outcome) {
                    next.push_back(Partial{part.index * radix[k] + *outcome, part.sign});
                } else {
                    next.push_back(Partial{part.index * radix[k] + 0, part.sign});
                    next.push_back(Partial{part.index * radix[k] + 1, -part.sign});
                }
            }
            expansion = std::move(next);
        }
        for (const Partial& part : expansion)
            out.terms.push_back(LsiTerm{setting, part.index, t.weight * part.sign, trusted_op});
    }

    if (has_constant) out.constant_op = std::move(constant);
    out.validate();
    return out;
}

}  // namespace steerkit

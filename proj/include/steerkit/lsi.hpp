#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steerkit/matrix.hpp"
#include "steerkit/observables.hpp"

namespace steerkit {

struct PartyLayout {
    std::vector<std::size_t> dims;

    std::size_t n_parties() const { return dims.size(); }
    std::size_t total_dim() const;
    std::size_t subset_dim(const std::vector<std::size_t>& parties) const;
    void validate() const;  // all dims >= 2
};

enum class SettingKind { TwoValue, Outcomes };

/// One deterministic degree of freedom on the untrusted side: a +/-1 value
/// for TwoValue, an outcome index in {0..outcomes-1} for Outcomes.
struct UntrustedSetting {
    std::string label;
    SettingKind kind = SettingKind::TwoValue;
    std::size_t outcomes = 2;
};

/// weight * (selector) * trusted_op, where the selector is the setting's
/// +/-1 value itself (TwoValue, outcome_index must be 0) or the indicator
/// of `outcome_index` (Outcomes).
struct LsiTerm {
    std::size_t setting = 0;  // index into LsiSpec::settings
    std::size_t outcome_index = 0;
    double weight = 0.0;
    ComplexMatrix trusted_op;
};

/// Declarative one-direction inequality: H(xi) = constant_term * I
/// + constant_op + sum of terms selected by a deterministic strategy.
struct LsiSpec {
    PartyLayout layout;
    std::vector<std::size_t> trusted_parties;  // ascending
    std::vector<UntrustedSetting> settings;
    std::vector<LsiTerm> terms;
    double constant_term = 0.0;
    ComplexMatrix constant_op;  // optional, empty when absent

    std::size_t trusted_dim() const { return layout.subset_dim(trusted_parties); }
    std::optional<std::size_t> setting_index(const std::string& label) const;
    void validate() const;
};

/// A measurement setting on one party: a +/-1-valued observable used by its
/// deterministic value, or a general POVM used outcome-by-outcome.
using PartyMeasurement = std::variant<Observable, Povm>;

std::size_t measurement_outcomes(const PartyMeasurement& m);
std::size_t measurement_dim(const PartyMeasurement& m);
const std::string& measurement_label(const PartyMeasurement& m);

/// How one party enters a product term. `outcome` set: that POVM effect;
/// unset: the observable enters by its +/-1 value.
struct TermFactor {
    std::size_t setting = 0;
    std::optional<std::size_t> outcome;

    bool operator==(const TermFactor&) const = default;
};

/// weight * tensor product over parties of the factor operators
/// (identity on parties whose factor is absent).
struct OperatorTerm {
    double weight = 0.0;
    std::vector<std::optional<TermFactor>> factors;  // one slot per party
};

/// Fully concrete multi-party operator: per-party measurement lists plus a
/// sparse real coefficient list over (setting, outcome) tuples.
struct FullOperatorSpec {
    PartyLayout layout;
    std::vector<std::vector<PartyMeasurement>> measurements;  // [party][setting]
    std::vector<OperatorTerm> terms;

    void validate() const;
};

/// The Hermitian matrix on the full tensor space.
ComplexMatrix realize_full_operator(const FullOperatorSpec& spec);

/// Reduce a full operator to the one-direction model in which the listed
/// parties are untrusted. Every distinct joint tuple of non-identity factors
/// on the untrusted side becomes one deterministic degree of freedom;
/// identity-only tuples fold into the constant trusted-side operator.
LsiSpec restrict_to_direction(const FullOperatorSpec& spec, const std::vector<std::size_t>& untrusted);

}  // namespace steerkit

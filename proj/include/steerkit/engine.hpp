#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steerkit/lsi.hpp"
#include "steerkit/spectral.hpp"

namespace steerkit {

/// Enumeration refuses beyond this many deterministic strategies; sampled
/// maxima would be invalid lower bounds.
inline constexpr std::uint64_t kDefaultStrategyCap = std::uint64_t{1} << 24;

/// Absolute margin before an expectation counts as violating a bound.
inline constexpr double kViolationMargin = 1e-9;

/// Assignment of one value per untrusted setting: +/-1 for TwoValue
/// settings, an outcome index for Outcomes settings.
struct DeterministicStrategy {
    std::map<std::string, int> assignment;
};

struct DirectionalThreshold {
    double beta = 0.0;
    double gamma = 0.0;
    DeterministicStrategy argmax_strategy;
    DeterministicStrategy argmin_strategy;
};

struct ThresholdReport {
    std::map<std::string, DirectionalThreshold> per_direction;
    double beta_overall = 0.0;
    double gamma_overall = 0.0;
};

struct CertificationVerdict {
    double expectation = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    bool violated = false;
    /// Signed distance past the nearer bound; positive iff violated.
    double margin = 0.0;
};

struct EnumerationOptions {
    std::uint64_t cap = kDefaultStrategyCap;
    std::size_t threads = 0;  // 0: use worker_count()
};

/// Worker count for strategy enumeration; honors STEERKIT_THREADS (0 = auto).
std::size_t worker_count();

/// The trusted-side operator selected by a deterministic strategy.
/// Throws IncompleteStrategyError unless every setting is assigned.
ComplexMatrix h_of_strategy(const LsiSpec& spec, const DeterministicStrategy& strategy);

/// Exhaustive max/min of the extremal eigenvalues over all deterministic
/// strategies. Ties break toward the smallest strategy index (lexicographic
/// in declared setting order).
DirectionalThreshold one_way_threshold(const LsiSpec& spec, const EnumerationOptions& opts = {});

/// Bipartite thresholds for directions "A->B" (party 0 untrusted) and
/// "A<-B" (party 1 untrusted).
ThresholdReport two_way_threshold(const FullOperatorSpec& spec, const EnumerationOptions& opts = {});

/// All nontrivial bipartitions of an N >= 3 party system, both directions.
ThresholdReport gmst_threshold(const FullOperatorSpec& spec, const EnumerationOptions& opts = {});

/// Shortcut for operators invariant under relabelling the parties: only the
/// leading splits {1..m} vs {m+1..N} are enumerated. Symmetry is checked
/// numerically; throws NotSymmetricError when conjugation by a party swap
/// moves the realized operator by more than 1e-10.
ThresholdReport symmetric_gmst_threshold(const FullOperatorSpec& spec, const EnumerationOptions& opts = {});

/// Whether the realized operator is invariant under every party swap.
bool is_permutation_symmetric(const FullOperatorSpec& spec, double tol = 1e-10);

/// Expectation of the realized operator against the thresholds in `report`.
CertificationVerdict certify(const FullOperatorSpec& spec, const ComplexMatrix& state,
                             const ThresholdReport& report);
CertificationVerdict certify_expectation(double expectation_value, const ThresholdReport& report);

/// Label helpers shared with reporting ("A->B", "12->3", ...).
std::string direction_label(std::size_t n_parties, const std::vector<std::size_t>& untrusted);

}  // namespace steerkit

#pragma once

#include <cstdint>
#include <functional>

#include "steerkit/catalog.hpp"
#include "steerkit/random.hpp"

namespace steerkit {

struct ScanPoint {
    double parameter = 0.0;
    double expectation = 0.0;
    double threshold = 0.0;
    double ratio = 0.0;  // expectation / threshold
};

struct ScanResult {
    std::vector<ScanPoint> grid;     // sorted by parameter
    ScanPoint best;                  // grid point maximizing the ratio
    ScanPoint refined_best;          // golden-section refinement around best
};

using EntryBuilder = std::function<CatalogEntry(double)>;

/// Sweep the builder's parameter over a uniform grid on [lo, hi], computing
/// expectation, threshold and their ratio per point, then refine the best
/// grid point by golden-section search to |delta parameter| <= 1e-6.
ScanResult scan_ratio(const EntryBuilder& builder, const StateSpec& state, double lo, double hi,
                      std::size_t points, const EnumerationOptions& opts = {});

/// Smallest visibility v in [0,1] with refined ratio >= 1, by bisection to
/// `tol`; the ratio is parameter-optimized at every probe.
double critical_visibility(const EntryBuilder& builder,
                           const std::function<StateSpec(double)>& state_of_visibility, double lo,
                           double hi, std::size_t points, double tol = 1e-4,
                           const EnumerationOptions& opts = {});

enum class HaarConstraint { Conjugate, Plain };

struct HaarEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Monte-Carlo estimate of the uniform-measurement correlation
/// sum_a <Pi^a x Phi^a> averaged over Haar-random settings, where
/// Phi^a = U|a><a|U^dag and Pi^a is its complex conjugate (Conjugate) or the
/// same projector (Plain). Deterministic for a fixed seed regardless of the
/// worker count.
HaarEstimate haar_expectation_mc(const ComplexMatrix& state, std::size_t d, HaarConstraint constraint,
                                 std::size_t samples, std::uint64_t seed);

}  // namespace steerkit

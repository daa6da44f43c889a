#include <doctest.h>

#include <cmath>

#include "steerkit/scan.hpp"

#include "oracles.hpp"

using namespace steerkit;

namespace {
const EntryBuilder kWeightedGhz = [](double alpha) { return ghz_type_weighted(alpha); };
}

TEST_CASE("weighted-ghz scan finds the known optimum") {
    const ScanResult r = scan_ratio(kWeightedGhz, StateSpec::noisy_ghz(1.0), 0.0, 2.0, 41);
    CHECK(r.refined_best.parameter == doctest::Approx(0.709).epsilon(0.003));
    // R(alpha*) = (4 + 3 alpha*) / beta(alpha*) at full visibility.
    CHECK(r.refined_best.ratio == doctest::Approx(1.0 / 0.632).epsilon(0.004));
    CHECK(r.grid.size() == 41);
    for (std::size_t i = 1; i < r.grid.size(); ++i)
        CHECK(r.grid[i - 1].parameter < r.grid[i].parameter);
}

TEST_CASE("scan refinement never loses to the grid") {
    for (std::size_t points : {11u, 21u}) {
        const ScanResult r = scan_ratio(kWeightedGhz, StateSpec::noisy_ghz(0.8), 0.0, 2.0, points);
        CHECK(r.refined_best.ratio >= r.best.ratio - 1e-12);
    }
}

TEST_CASE("nested grids never lower the best grid ratio") {
    const std::size_t points = 11;
    const ScanResult coarse = scan_ratio(kWeightedGhz, StateSpec::noisy_ghz(0.9), 0.0, 2.0, points);
    const ScanResult fine =
        scan_ratio(kWeightedGhz, StateSpec::noisy_ghz(0.9), 0.0, 2.0, 2 * points - 1);
    CHECK(fine.best.ratio >= coarse.best.ratio - 1e-12);
}

TEST_CASE("parameter-independent builders scan flat") {
    const EntryBuilder constant = [](double) { return ghz_type_weighted(1.0); };
    const ScanResult r = scan_ratio(constant, StateSpec::noisy_ghz(1.0), 0.0, 1.0, 5);
    for (const ScanPoint& p : r.grid) CHECK(p.ratio == doctest::Approx(r.best.ratio).epsilon(1e-12));
    CHECK(r.refined_best.ratio == doctest::Approx(r.best.ratio).epsilon(1e-12));
}

TEST_CASE("critical visibility of the weighted-ghz family") {
    const double v = critical_visibility(
        kWeightedGhz, [](double vis) { return StateSpec::noisy_ghz(vis); }, 0.0, 2.0, 21, 1e-4);
    CHECK(v == doctest::Approx(0.632).epsilon(0.003));
}

TEST_CASE("haar mc matches the closed forms for werner and isotropic states") {
    // Degenerate cases have zero sampling variance, so keep a rounding floor.
    const std::size_t samples = 20000;
    for (double w : {0.0, 0.5, 1.0}) {
        const HaarEstimate est = haar_expectation_mc(make_state(StateSpec::werner(w, 2)), 2,
                                                     HaarConstraint::Plain, samples, 11);
        CHECK(std::abs(est.mean - haar_werner_expectation(2, w)) <=
              std::max(3.0 * est.std_error, 1e-12));
    }
    for (double eta : {0.0, 0.5, 1.0}) {
        const HaarEstimate est = haar_expectation_mc(make_state(StateSpec::isotropic(eta, 2)), 2,
                                                     HaarConstraint::Conjugate, samples, 13);
        CHECK(std::abs(est.mean - haar_isotropic_expectation(2, eta)) <=
              std::max(3.0 * est.std_error, 1e-12));
    }
}

TEST_CASE("haar mc on the maximally mixed state is exact sample by sample") {
    // Every sample contributes sum_a Tr(Pi)Tr(Phi)/d^2 = 1/d, so the variance
    // collapses.
    for (std::size_t d : {2u, 3u}) {
        const ComplexMatrix mixed =
            Complex{1.0 / double(d * d), 0.0} * ComplexMatrix::identity(d * d);
        for (HaarConstraint c : {HaarConstraint::Plain, HaarConstraint::Conjugate}) {
            const HaarEstimate est = haar_expectation_mc(mixed, d, c, 500, 17);
            CHECK(est.mean == doctest::Approx(1.0 / double(d)).epsilon(1e-10));
            CHECK(est.std_error <= 1e-10);
        }
    }
}

TEST_CASE("haar mc is deterministic for a fixed seed and stable across seeds") {
    const ComplexMatrix rho = make_state(StateSpec::isotropic(0.7, 2));
    const HaarEstimate a = haar_expectation_mc(rho, 2, HaarConstraint::Conjugate, 5000, 101);
    const HaarEstimate b = haar_expectation_mc(rho, 2, HaarConstraint::Conjugate, 5000, 101);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    const HaarEstimate c = haar_expectation_mc(rho, 2, HaarConstraint::Conjugate, 5000, 202);
    const double combined = std::hypot(a.std_error, c.std_error);
    CHECK(std::abs(a.mean - c.mean) <= 5.0 * combined);
}

TEST_CASE("haar mc fourth-moment check on a product state") {
    // For |0><0| x |0><0| under the plain constraint each sample is
    // sum_a |U_0a|^4, whose Haar mean is 2/(d+1) — a genuinely fluctuating
    // estimate, unlike the group-invariant families.
    for (std::size_t d : {2u, 3u}) {
        std::vector<Complex> zero(d);
        zero[0] = 1.0;
        const ComplexMatrix rho = kron(projector(zero), projector(zero));
        const HaarEstimate est =
            haar_expectation_mc(rho, d, HaarConstraint::Plain, 20000, 23);
        CHECK(est.std_error > 1e-6);
        CHECK(std::abs(est.mean - 2.0 / double(d + 1)) <= 3.0 * est.std_error);
    }
}

TEST_CASE("haar sampler uniformity proxy: E[|U00|^2] = 1/d") {
    for (std::size_t d : {2u, 3u}) {
        double mean = 0.0, m2 = 0.0;
        const std::size_t samples = 10000;
        for (std::size_t i = 0; i < samples; ++i) {
            std::mt19937_64 rng = rng_for_sample(31, i);
            const ComplexMatrix u = random_unitary(d, rng);
            const double v = std::norm(u(0, 0));
            const double delta = v - mean;
            mean += delta / double(i + 1);
            m2 += delta * (v - mean);
        }
        const double se = std::sqrt(m2 / double(samples - 1) / double(samples));
        CHECK(std::abs(mean - 1.0 / double(d)) <= 3.0 * se);
    }
}

TEST_CASE("haar mc input validation") {
    const ComplexMatrix rho = make_state(StateSpec::max_entangled(2));
    CHECK_THROWS_AS(haar_expectation_mc(rho, 3, HaarConstraint::Plain, 1000, 1),
                    DimensionMismatchError);
    CHECK_THROWS_AS(haar_expectation_mc(rho, 2, HaarConstraint::Plain, 10, 1), InvalidParameterError);
}

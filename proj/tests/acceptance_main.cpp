// Acceptance suite: every release criterion runs at its pinned tolerance and
// prints one pass/fail line. The process exits with the number of failures.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "steerkit/catalog.hpp"
#include "steerkit/engine.hpp"
#include "steerkit/random.hpp"
#include "steerkit/scan.hpp"

#include "oracles.hpp"

using namespace steerkit;
namespace oracle = steerkit::testing;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot2 = std::sqrt(2.0);
const double kRoot3 = std::sqrt(3.0);

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void near(const std::string& what, double value, double expected, double tol) {
        if (std::abs(value - expected) > tol) {
            pass = false;
            detail << "  " << what << ": got " << value << ", expected " << expected << " (tol " << tol
                   << ")\n";
        }
    }
    void holds(const std::string& what, bool condition) {
        if (!condition) {
            pass = false;
            detail << "  " << what << " failed\n";
        }
    }
};

ComplexMatrix sigma(char axis) { return pauli(axis).matrix; }

// ---------------------------------------------------------------------------

Check criterion_1_chsh() {
    Check c;
    const CatalogEntry entry = chsh_accompanied();
    const ThresholdReport report = compute_threshold(entry);
    c.near("beta_ST", report.beta_overall, 2.0, 1e-9);
    const CertificationVerdict v = certify(*entry.full, make_state(StateSpec::max_entangled(2)), report);
    c.near("quantum value", v.expectation, 2.0 * kRoot2, 1e-9);
    c.holds("violation verdict", v.violated);
    return c;
}

Check criterion_2_constrained_pauli() {
    Check c;
    std::mt19937_64 rng(20240001);
    // Two settings, unit weights, conjugated-Pauli constraint: beta = sqrt(2).
    for (int trial = 0; trial < 50; ++trial) {
        const CatalogEntry entry = pauli_two_setting(kPi / 4.0, kRoot2, random_unitary(2, rng));
        const ThresholdReport r = two_way_threshold(*entry.full);
        c.near("two-setting beta (U #" + std::to_string(trial) + ")", r.per_direction.at("A<-B").beta,
               kRoot2, 1e-9);
        c.near("two-setting overall", r.beta_overall, kRoot2, 1e-9);
    }
    // Normalized one- and two-parameter forms: beta(A->B) = 1.
    std::uniform_real_distribution<double> angle(0.0, kPi / 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const CatalogEntry two = pauli_two_setting(angle(rng), 1.0, random_unitary(2, rng));
        c.near("normalized two-setting", two_way_threshold(*two.full).per_direction.at("A->B").beta,
               1.0, 1e-9);
        const CatalogEntry three =
            pauli_three_setting(angle(rng), angle(rng), 1.0, random_unitary(2, rng));
        c.near("normalized three-setting", two_way_threshold(*three.full).per_direction.at("A->B").beta,
               1.0, 1e-9);
    }
    return c;
}

Check criterion_3_mub() {
    Check c;
    for (std::size_t d : {2u, 3u, 5u}) {
        const ThresholdReport r = compute_threshold(mub_lsi(d));
        c.near("beta(A->B), d=" + std::to_string(d), r.per_direction.at("A->B").beta,
               1.0 + 1.0 / std::sqrt(double(d)), 1e-9);
    }
    std::mt19937_64 rng(20240003);
    for (std::size_t d : {2u, 3u, 5u}) {
        for (int pair = 0; pair < 3; ++pair) {
            const ComplexMatrix u1 = random_unitary(d, rng);
            const ComplexMatrix u2 = random_unitary(d, rng);
            const LsiSpec restricted = restrict_to_direction(*mub_lsi(d, u1, u2).full, {1});
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    DeterministicStrategy s;
                    s.assignment[restricted.settings[0].label] = int(a);
                    s.assignment[restricted.settings[1].label] = int(b);
                    Complex uab{};
                    for (std::size_t i = 0; i < d; ++i) uab += std::conj(u1(i, a)) * u2(i, b);
                    c.near("strategy operator extremum", eig_extremal(h_of_strategy(restricted, s)).lambda_max,
                           1.0 + std::abs(uab), 1e-9);
                }
        }
    }
    return c;
}

Check criterion_4_haar() {
    Check c;
    for (std::size_t d = 2; d <= 6; ++d) {
        const CatalogEntry entry = haar_lsi(d);
        c.near("gamma, d=" + std::to_string(d), *entry.reference_gamma, 1.0 / double(d * d), 1e-12);
        c.near("beta, d=" + std::to_string(d), *entry.reference_beta, harmonic_number(d) / double(d),
               1e-12);
    }
    // Verdict flips: bisection on the analytic expectations against the bounds.
    for (std::size_t d : {2u, 3u, 4u}) {
        const double gamma = 1.0 / double(d * d);
        double lo = 0.0, hi = 1.0;  // smallest w that violates <H> >= gamma
        while (hi - lo > 1e-8) {
            const double mid = 0.5 * (lo + hi);
            (haar_werner_expectation(d, mid) < gamma ? hi : lo) = mid;
        }
        c.near("werner flip, d=" + std::to_string(d), 0.5 * (lo + hi), 1.0 - 1.0 / double(d), 1e-6);

        const double beta = harmonic_number(d) / double(d);
        lo = 0.0;
        hi = 1.0;  // smallest eta that violates <H> <= beta
        while (hi - lo > 1e-8) {
            const double mid = 0.5 * (lo + hi);
            (haar_isotropic_expectation(d, mid) > beta ? hi : lo) = mid;
        }
        c.near("isotropic flip, d=" + std::to_string(d), 0.5 * (lo + hi),
               (harmonic_number(d) - 1.0) / (double(d) - 1.0), 1e-6);
    }
    // Monte-Carlo oracle against the analytic expectations, 1e5 samples.
    const std::size_t samples = 100000;
    for (std::size_t d : {2u, 3u}) {
        for (double w : {0.25, 0.75}) {
            const HaarEstimate est = haar_expectation_mc(make_state(StateSpec::werner(w, d)), d,
                                                         HaarConstraint::Plain, samples, 42);
            c.holds("werner mc within 3 sigma (d=" + std::to_string(d) + ")",
                    std::abs(est.mean - haar_werner_expectation(d, w)) <=
                        std::max(3.0 * est.std_error, 1e-12));
        }
        for (double eta : {0.25, 0.75}) {
            const HaarEstimate est = haar_expectation_mc(make_state(StateSpec::isotropic(eta, d)), d,
                                                         HaarConstraint::Conjugate, samples, 43);
            c.holds("isotropic mc within 3 sigma (d=" + std::to_string(d) + ")",
                    std::abs(est.mean - haar_isotropic_expectation(d, eta)) <=
                        std::max(3.0 * est.std_error, 1e-12));
        }
    }
    return c;
}

Check criterion_5_tilted() {
    Check c;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double delta = 0.5 * i;
            const double alpha = 1.0 + 0.5 * j;
            const ThresholdReport r = compute_threshold(tilted_chsh(delta, alpha));
            c.near("beta(A->B) at delta=" + std::to_string(delta) + ", alpha=" + std::to_string(alpha),
                   r.per_direction.at("A->B").beta, delta + std::sqrt(2.0 * (alpha * alpha + 1.0)),
                   1e-9);
            if (j == 0)
                c.near("alpha=1 equals the nonlocal bound", r.per_direction.at("A->B").beta,
                       delta + 2.0, 1e-9);
        }
    }
    return c;
}

Check criterion_6_pironio() {
    Check c;
    for (std::size_t d : {3u, 4u})
        c.near("beta, d=" + std::to_string(d), compute_threshold(pironio(d)).beta_overall, 0.0, 1e-9);

    std::mt19937_64 rng(20240006);
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 3;
        auto random_two_outcome = [&](const std::string& label) {
            const ComplexMatrix g = oracle::random_hermitian(d, rng);
            const ComplexMatrix sq = g * g;
            const ComplexMatrix e0 = Complex{unif(rng) / eig_extremal(sq).lambda_max, 0.0} * sq;
            return Povm::make({e0, ComplexMatrix::identity(d) - e0}, label);
        };
        std::vector<Povm> alice;
        for (std::size_t i = 0; i < d; ++i) alice.push_back(random_two_outcome("P" + std::to_string(i)));
        const ComplexMatrix u = random_unitary(d, rng);
        std::vector<ComplexMatrix> effects;
        for (std::size_t a = 0; a < d; ++a) {
            std::vector<Complex> col(d);
            for (std::size_t i = 0; i < d; ++i) col[i] = u(i, a);
            effects.push_back(projector(col));
        }
        std::vector<Povm> bob = {Povm::make(std::move(effects), "M0"), random_two_outcome("M1")};
        if (compute_threshold(pironio_with(d, alice, bob)).beta_overall <= 1e-9) ++ok;
    }
    c.holds("100 random POVM realizations stay below zero", ok == 100);
    return c;
}

Check criterion_7_witness() {
    Check c;
    const ThresholdReport r = compute_threshold(witness_lsi());
    c.near("gamma", r.gamma_overall, (1.0 - kRoot3) / 4.0, 1e-9);
    c.near("beta", r.beta_overall, (1.0 + kRoot3) / 4.0, 1e-9);
    return c;
}

Check criterion_8_gmst() {
    Check c;
    const CatalogEntry sve = svetlichny(), mer = mermin(), ghz = ghz_type();
    c.near("svetlichny", gmst_threshold(*sve.full).beta_overall, 4.0, 1e-9);
    c.near("mermin", gmst_threshold(*mer.full).beta_overall, 2.0 * kRoot2, 1e-9);
    c.near("ghz-type", gmst_threshold(*ghz.full).beta_overall, 1.0 + 2.0 * kRoot3, 1e-9);
    const ComplexMatrix rho = make_state(StateSpec::ghz(3));
    c.near("svetlichny ghz expectation", expectation(realize_full_operator(*sve.full), rho),
           4.0 * kRoot2, 1e-9);
    c.near("mermin ghz expectation", expectation(realize_full_operator(*mer.full), rho), 4.0, 1e-9);
    c.near("ghz-type ghz expectation", expectation(realize_full_operator(*ghz.full), rho), 7.0, 1e-9);
    return c;
}

Check criterion_9_lhs_attainable() {
    Check c;
    const double eta = 1.0 / kRoot2;
    const ComplexMatrix ax = depolarize(sigma('x'), eta);
    const ComplexMatrix ay = depolarize(sigma('y'), eta);
    const ComplexMatrix az = depolarize(sigma('z'), eta);

    const ComplexMatrix b_plus = Complex{eta, 0.0} * (sigma('x') + sigma('z'));
    const ComplexMatrix b_minus = Complex{eta, 0.0} * (sigma('x') - sigma('z'));
    const ComplexMatrix chsh_compat = kron(ax, b_plus + b_minus) + kron(az, b_plus - b_minus);
    c.near("chsh compatible-measurement value",
           expectation(chsh_compat, make_state(StateSpec::max_entangled(2))), 2.0, 1e-9);

    const ComplexMatrix b1 = Complex{eta, 0.0} * (sigma('x') - sigma('y'));
    const ComplexMatrix b2 = Complex{eta, 0.0} * (sigma('x') + sigma('y'));
    const ComplexMatrix sve_compat =
        kron(ax, kron(b1, sigma('x'))) + kron(ax, kron(b1, sigma('y'))) +
        kron(ay, kron(b1, sigma('x'))) - kron(ay, kron(b1, sigma('y'))) +
        kron(ax, kron(b2, sigma('x'))) - kron(ax, kron(b2, sigma('y'))) -
        kron(ay, kron(b2, sigma('x'))) - kron(ay, kron(b2, sigma('y')));
    c.near("svetlichny compatible-measurement value",
           expectation(sve_compat, make_state(StateSpec::ghz(3))), 4.0, 1e-9);

    const ComplexMatrix mer_compat =
        kron(ax, kron(sigma('x'), sigma('x'))) - kron(ax, kron(sigma('y'), sigma('y'))) -
        kron(ay, kron(sigma('x'), sigma('y'))) - kron(ay, kron(sigma('y'), sigma('x')));
    c.near("mermin compatible-measurement value",
           expectation(mer_compat, make_state(StateSpec::ghz(3))), 2.0 * kRoot2, 1e-9);
    return c;
}

Check criterion_10_scans() {
    Check c;
    const EntryBuilder weighted = [](double alpha) { return ghz_type_weighted(alpha); };
    const ScanResult scan = scan_ratio(weighted, StateSpec::noisy_ghz(1.0), 0.0, 2.0, 41);
    c.near("optimal alpha", scan.refined_best.parameter, 0.709, 0.002);
    const double v_crit = critical_visibility(
        weighted, [](double v) { return StateSpec::noisy_ghz(v); }, 0.0, 2.0, 41, 1e-4);
    c.near("critical visibility", v_crit, 0.632, 0.002);

    // Generalized-ghz sweep: fixed expectation 7, threshold below 7 on the
    // whole open range, maximum 7 attained only at omega = 0.
    bool strict = true;
    double beta_max = -1e300;
    for (int k = 1; k <= 1570; ++k) {
        const double omega = 1e-3 * k;
        if (omega > kPi / 2.0) break;
        const CatalogEntry entry = ghz_type_gamma_delta(std::cos(omega), std::sin(omega));
        const double beta = compute_threshold(entry).beta_overall;
        const double value =
            expectation(realize_full_operator(*entry.full), make_state(StateSpec::gen_ghz(omega)));
        if (std::abs(value - 7.0) > 1e-9 || !(value > beta)) strict = false;
        beta_max = std::max(beta_max, beta);
    }
    c.holds("expectation pinned at 7 and strictly above beta on (0, pi/2]", strict);
    c.holds("beta stays below 7 away from omega = 0", beta_max < 7.0);
    c.near("beta at omega = 0", compute_threshold(ghz_type_gamma_delta(1.0, 0.0)).beta_overall, 7.0,
           1e-9);
    return c;
}

Check criterion_11_nghz() {
    Check c;
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
        const ThresholdReport r = symmetric_gmst_threshold(*nghz(n).full);
        c.near("beta, n=" + std::to_string(n), r.beta_overall, kRoot2 / 2.0, 1e-9);
    }
    c.holds("mermin operator equals four times the three-party ladder",
            approx_equal(Complex{4.0, 0.0} * realize_full_operator(*nghz(3).full),
                         realize_full_operator(*mermin().full), 1e-12));
    return c;
}

Check criterion_12_global() {
    Check c;
    const CatalogEntry table_entry = nghz_global(3, 2);
    const LsiSpec& table = *table_entry.lsi;
    std::vector<double> values;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            DeterministicStrategy s;
            s.assignment = {{"A1", a}, {"A2", b}};
            values.push_back(eig_extremal(h_of_strategy(table, s)).lambda_max);
        }
    std::sort(values.begin(), values.end());
    c.near("table minimum", values[0], 0.0, 1e-12);
    for (int k = 1; k <= 4; ++k) c.near("table half values", values[k], 0.5, 1e-12);
    for (int k = 5; k <= 8; ++k) c.near("table sqrt(2)/2 values", values[k], kRoot2 / 2.0, 1e-12);

    for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 2}, {4, 3}})
        c.near("beta, (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")",
               compute_threshold(nghz_global(n, m)).beta_overall, kRoot2 / 2.0, 1e-9);
    return c;
}

Check criterion_13_properties() {
    Check c;
    std::mt19937_64 rng(20240013);
    std::uniform_int_distribution<std::size_t> n_settings(1, 3), outcomes(2, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> weight(-2.0, 2.0), unif(0.0, 1.0);

    auto random_spec = [&]() {
        LsiSpec spec;
        const std::size_t trusted_dim = coin(rng) ? 2 : 4;
        spec.layout.dims = {2, trusted_dim};
        spec.trusted_parties = {1};
        const std::size_t count = n_settings(rng);
        for (std::size_t s = 0; s < count; ++s) {
            UntrustedSetting u;
            u.label = "S" + std::to_string(s);
            if (coin(rng)) {
                u.kind = SettingKind::TwoValue;
            } else {
                u.kind = SettingKind::Outcomes;
                u.outcomes = outcomes(rng);
            }
            spec.settings.push_back(u);
            LsiTerm term;
            term.setting = s;
            term.outcome_index = u.kind == SettingKind::TwoValue
                                     ? 0
                                     : std::uniform_int_distribution<std::size_t>(0, u.outcomes - 1)(rng);
            term.weight = weight(rng);
            term.trusted_op = oracle::random_hermitian(trusted_dim, rng);
            spec.terms.push_back(std::move(term));
        }
        return spec;
    };

    // (a) Probabilistic responses never exceed the deterministic maximum.
    bool dominated = true;
    for (int spec_trial = 0; spec_trial < 50 && dominated; ++spec_trial) {
        const LsiSpec spec = random_spec();
        const double beta = one_way_threshold(spec).beta;
        for (int i = 0; i < 10000; ++i) {
            ComplexMatrix h(spec.trusted_dim());
            for (const LsiTerm& t : spec.terms) {
                double sel;
                if (spec.settings[t.setting].kind == SettingKind::TwoValue) {
                    sel = 2.0 * unif(rng) - 1.0;
                } else {
                    std::vector<double> p(spec.settings[t.setting].outcomes);
                    double total = 0.0;
                    for (double& x : p) total += (x = -std::log(unif(rng) + 1e-12));
                    sel = p[t.outcome_index] / total;
                }
                h += Complex{t.weight * sel, 0.0} * t.trusted_op;
            }
            if (eig_extremal(h).lambda_max > beta + 1e-9) {
                dominated = false;
                break;
            }
        }
    }
    c.holds("probabilistic strategies dominated by deterministic enumeration", dominated);

    // (b) Sign-flip symmetry for all-two-value specs without constants.
    for (int trial = 0; trial < 10; ++trial) {
        LsiSpec spec = random_spec();
        for (auto& s : spec.settings) {
            s.kind = SettingKind::TwoValue;
            s.outcomes = 2;
        }
        for (auto& t : spec.terms) t.outcome_index = 0;
        const DirectionalThreshold dir = one_way_threshold(spec);
        c.near("gamma == -beta", dir.gamma, -dir.beta, 1e-10);
    }

    // (c) Unitary conjugation invariance of the catalog thresholds.
    for (int trial = 0; trial < 5; ++trial) {
        FullOperatorSpec rotated = *mermin().full;
        for (std::size_t p = 0; p < 3; ++p) {
            const ComplexMatrix u = random_unitary(2, rng);
            for (PartyMeasurement& m : rotated.measurements[p]) {
                Observable& obs = std::get<Observable>(m);
                obs = Observable::make_two_valued(u * obs.matrix * u.adjoint(), obs.label);
            }
        }
        c.near("mermin threshold under local unitaries", gmst_threshold(rotated).beta_overall,
               2.0 * kRoot2, 1e-9);
    }
    for (int trial = 0; trial < 5; ++trial) {
        FullOperatorSpec rotated = *chsh_accompanied().full;
        for (std::size_t p = 0; p < 2; ++p) {
            const ComplexMatrix u = random_unitary(2, rng);
            for (PartyMeasurement& m : rotated.measurements[p]) {
                Observable& obs = std::get<Observable>(m);
                obs = Observable::make_two_valued(u * obs.matrix * u.adjoint(), obs.label);
            }
        }
        c.near("chsh threshold under local unitaries", two_way_threshold(rotated).beta_overall, 2.0,
               1e-9);
    }
    for (int trial = 0; trial < 5; ++trial) {
        FullOperatorSpec rotated = *witness_lsi().full;
        for (std::size_t p = 0; p < 2; ++p) {
            const ComplexMatrix u = random_unitary(2, rng);
            for (PartyMeasurement& m : rotated.measurements[p]) {
                Observable& obs = std::get<Observable>(m);
                obs = Observable::make_two_valued(u * obs.matrix * u.adjoint(), obs.label);
            }
        }
        const ThresholdReport r = two_way_threshold(rotated);
        c.near("witness beta under local unitaries", r.beta_overall, (1.0 + kRoot3) / 4.0, 1e-9);
        c.near("witness gamma under local unitaries", r.gamma_overall, (1.0 - kRoot3) / 4.0, 1e-9);
    }

    // (d) Eigensolver equivalence against the characteristic-polynomial oracle.
    for (std::size_t dim = 2; dim <= 6; ++dim)
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix h = oracle::random_hermitian(dim, rng, 1.5);
            const EigenResult r = eig_extremal(h);
            const auto [omax, omin] = oracle::eig_extremal_charpoly(h);
            c.near("eigensolver vs charpoly (max)", r.lambda_max, omax, 1e-9);
            c.near("eigensolver vs charpoly (min)", r.lambda_min, omin, 1e-9);
        }
    return c;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Check()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "chsh-accompanied threshold and quantum violation", criterion_1_chsh},
        {2, "constrained pauli thresholds (sqrt(2) and normalized forms)", criterion_2_constrained_pauli},
        {3, "unbiased-basis thresholds 1 + 1/sqrt(d) and strategy extrema", criterion_3_mub},
        {4, "uniform-setting constants, tight flips and the mc oracle", criterion_4_haar},
        {5, "tilted chsh steering direction on the (delta, alpha) grid", criterion_5_tilted},
        {6, "pironio zero threshold and random POVM sweep", criterion_6_pironio},
        {7, "entanglement-witness bounds", criterion_7_witness},
        {8, "multipartite thresholds 4, 2*sqrt(2), 1+2*sqrt(3) and ghz values", criterion_8_gmst},
        {9, "compatible measurements attain the thresholds", criterion_9_lhs_attainable},
        {10, "weighted-family optimizer and generalized-ghz sweep", criterion_10_scans},
        {11, "n-party ladder thresholds sqrt(2)/2 and the mermin identity", criterion_11_nghz},
        {12, "global-measurement variant: strategy table and thresholds", criterion_12_global},
        {13, "property suites (dominance, symmetry, invariance, oracle)", criterion_13_properties},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const Check result = criterion.fn();
        std::printf("[%s] criterion %2d: %s\n", result.pass ? "PASS" : "FAIL", criterion.number,
                    criterion.title);
        if (!result.pass) {
            ++failures;
            std::fputs(result.detail.str().c_str(), stdout);
        }
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}

#include "steerkit/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

namespace steerkit {

namespace {

// Per-setting, per-digit aggregated contribution: for TwoValue settings the
// digit 0/1 selects +/-F with F the summed term operators; for Outcomes
// settings digit g selects the sum of terms pinned to outcome g.
struct SettingTable {
    std::size_t radix = 2;
    std::vector<ComplexMatrix> by_digit;
};

struct CompiledSpec {
    ComplexMatrix base;  // constant_term * I + constant_op
    std::vector<SettingTable> settings;
    std::uint64_t total = 1;
};

CompiledSpec compile(const LsiSpec& spec, std::uint64_t cap) {
    spec.validate();
    const std::size_t dim = spec.trusted_dim();

    CompiledSpec c;
    c.base = ComplexMatrix(dim);
    if (spec.constant_term != 0.0)
        c.base += Complex{spec.constant_term, 0.0} * ComplexMatrix::identity(dim);
    if (!spec.constant_op.empty()) c.base += spec.constant_op;

    long double count = 1.0L;
    for (const UntrustedSetting& s : spec.settings) count *= static_cast<long double>(s.outcomes);
    if (count > static_cast<long double>(cap)) {
        const std::string rendered =
            count < 1e18L ? std::to_string(static_cast<unsigned long long>(count))
                          : std::to_string(static_cast<double>(count));
        throw StrategySpaceTooLargeError(
            "strategy space has " + rendered + " strategies, exceeding the enumeration cap (" +
            std::to_string(cap) +
            "); for permutation-symmetric operators use the symmetric threshold path");
    }

    c.settings.resize(spec.settings.size());
    for (std::size_t s = 0; s < spec.settings.size(); ++s) {
        const std::size_t radix = spec.settings[s].outcomes;
        c.settings[s].radix = radix;
        c.settings[s].by_digit.assign(radix, ComplexMatrix(dim));
        c.total *= radix;
    }
    for (const LsiTerm& t : spec.terms) {
        SettingTable& table = c.settings[t.setting];
        if (spec.settings[t.setting].kind == SettingKind::TwoValue) {
            table.by_digit[0] += Complex{t.weight, 0.0} * t.trusted_op;
            table.by_digit[1] += Complex{-t.weight, 0.0} * t.trusted_op;
        } else {
            table.by_digit[t.outcome_index] += Complex{t.weight, 0.0} * t.trusted_op;
        }
    }
    return c;
}

ComplexMatrix strategy_operator(const CompiledSpec& c, const std::vector<std::size_t>& digits) {
    ComplexMatrix h = c.base;
    for (std::size_t s = 0; s < c.settings.size(); ++s) h += c.settings[s].by_digit[digits[s]];
    return h;
}

std::vector<std::size_t> decode(const CompiledSpec& c, std::uint64_t index) {
    std::vector<std::size_t> digits(c.settings.size());
    for (std::size_t s = c.settings.size(); s-- > 0;) {
        digits[s] = index % c.settings[s].radix;
        index /= c.settings[s].radix;
    }
    return digits;
}

DeterministicStrategy strategy_from_digits(const LsiSpec& spec, const std::vector<std::size_t>& digits) {
    DeterministicStrategy out;
    for (std::size_t s = 0; s < spec.settings.size(); ++s) {
        const int value = spec.settings[s].kind == SettingKind::TwoValue
                              ? (digits[s] == 0 ? +1 : -1)
                              : static_cast<int>(digits[s]);
        out.assignment.emplace(spec.settings[s].label, value);
    }
    return out;
}

struct ChunkResult {
    double beta = -std::numeric_limits<double>::infinity();
    double gamma = std::numeric_limits<double>::infinity();
    std::uint64_t argmax = 0;
    std::uint64_t argmin = 0;
};

ChunkResult scan_range(const CompiledSpec& c, std::uint64_t begin, std::uint64_t end) {
    ChunkResult r;
    std::vector<std::size_t> digits = decode(c, begin);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const EigenResult eig = eig_extremal(strategy_operator(c, digits));
        if (eig.lambda_max > r.beta) {
            r.beta = eig.lambda_max;
            r.argmax = idx;
        }
        if (eig.lambda_min < r.gamma) {
            r.gamma = eig.lambda_min;
            r.argmin = idx;
        }
        // Increment the mixed-radix counter in place.
        for (std::size_t s = c.settings.size(); s-- > 0;) {
            if (++digits[s] < c.settings[s].radix) break;
            digits[s] = 0;
        }
    }
    return r;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < n; ++p)
        if (std::find(subset.begin(), subset.end(), p) == subset.end()) rest.push_back(p);
    return rest;
}

void fold_direction(ThresholdReport& report, std::string label, DirectionalThreshold value) {
    if (report.per_direction.empty()) {
        report.beta_overall = value.beta;
        report.gamma_overall = value.gamma;
    } else {
        report.beta_overall = std::max(report.beta_overall, value.beta);
        report.gamma_overall = std::min(report.gamma_overall, value.gamma);
    }
    report.per_direction.emplace(std::move(label), std::move(value));
}

}  // namespace

std::size_t worker_count() {
    if (const char* env = std::getenv("STEERKIT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

ComplexMatrix h_of_strategy(const LsiSpec& spec, const DeterministicStrategy& strategy) {
    const CompiledSpec c = compile(spec, std::numeric_limits<std::uint64_t>::max());
    std::vector<std::size_t> digits(spec.settings.size());
    for (std::size_t s = 0; s < spec.settings.size(); ++s) {
        const auto it = strategy.assignment.find(spec.settings[s].label);
        if (it == strategy.assignment.end())
            throw IncompleteStrategyError("strategy does not assign setting '" + spec.settings[s].label + "'");
        if (spec.settings[s].kind == SettingKind::TwoValue) {
            if (it->second != 1 && it->second != -1)
                throw IncompleteStrategyError("setting '" + spec.settings[s].label + "' needs a +/-1 value");
            digits[s] = it->second == 1 ? 0 : 1;
        } else {
            if (it->second < 0 || static_cast<std::size_t>(it->second) >= spec.settings[s].outcomes)
                throw IncompleteStrategyError("setting '" + spec.settings[s].label + "' outcome out of range");
            digits[s] = static_cast<std::size_t>(it->second);
        }
    }
    return strategy_operator(c, digits);
}

DirectionalThreshold one_way_threshold(const LsiSpec& spec, const EnumerationOptions& opts) {
    const CompiledSpec c = compile(spec, opts.cap);

    const std::size_t want = opts.threads == 0 ? worker_count() : opts.threads;
    // Thread spawn overhead dwarfs the work below a few hundred strategies.
    const std::size_t n_threads =
        c.total < 512 ? 1
                      : static_cast<std::size_t>(std::min<std::uint64_t>(
                            c.total, static_cast<std::uint64_t>(std::max<std::size_t>(want, 1))));

    std::vector<ChunkResult> results(n_threads);
    if (n_threads <= 1) {
        results[0] = scan_range(c, 0, c.total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (c.total + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            const std::uint64_t begin = t * chunk;
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, c.total);
            pool.emplace_back([&, t, begin, end] { results[t] = scan_range(c, begin, end); });
        }
        for (std::thread& th : pool) th.join();
    }

    // Merge in ascending chunk order; strict comparisons keep the smallest
    // strategy index on ties.
    ChunkResult best;
    for (const ChunkResult& r : results) {
        if (r.beta > best.beta) {
            best.beta = r.beta;
            best.argmax = r.argmax;
        }
        if (r.gamma < best.gamma) {
            best.gamma = r.gamma;
            best.argmin = r.argmin;
        }
    }

    DirectionalThreshold out;
    out.beta = best.beta;
    out.gamma = best.gamma;
    out.argmax_strategy = strategy_from_digits(spec, decode(c, best.argmax));
    out.argmin_strategy = strategy_from_digits(spec, decode(c, best.argmin));
    return out;
}

std::string direction_label(std::size_t n_parties, const std::vector<std::size_t>& untrusted) {
    if (n_parties == 2) return untrusted == std::vector<std::size_t>{0} ? "A->B" : "A<-B";
    const std::vector<std::size_t> trusted = complement(n_parties, untrusted);
    auto render = [n_parties](const std::vector<std::size_t>& parties) {
        std::string s;
        for (std::size_t p : parties) {
            if (!s.empty() && n_parties > 9) s += ",";
            s += std::to_string(p + 1);
        }
        return s;
    };
    return render(untrusted) + "->" + render(trusted);
}

ThresholdReport two_way_threshold(const FullOperatorSpec& spec, const EnumerationOptions& opts) {
    if (spec.layout.n_parties() != 2)
        throw InvariantError("two_way_threshold: expected exactly 2 parties");
    ThresholdReport report;
    for (const std::vector<std::size_t>& untrusted : {std::vector<std::size_t>{0}, std::vector<std::size_t>{1}})
        fold_direction(report, direction_label(2, untrusted),
                       one_way_threshold(restrict_to_direction(spec, untrusted), opts));
    return report;
}

ThresholdReport gmst_threshold(const FullOperatorSpec& spec, const EnumerationOptions& opts) {
    const std::size_t n = spec.layout.n_parties();
    if (n < 3) throw InvariantError("gmst_threshold: expected at least 3 parties");

    ThresholdReport report;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> untrusted;
        for (std::size_t p = 0; p < n; ++p)
            if (mask & (std::size_t{1} << p)) untrusted.push_back(p);
        fold_direction(report, direction_label(n, untrusted),
                       one_way_threshold(restrict_to_direction(spec, untrusted), opts));
    }
    return report;
}

bool is_permutation_symmetric(const FullOperatorSpec& spec, double tol) {
    const std::size_t n = spec.layout.n_parties();
    for (std::size_t p = 0; p + 1 < n; ++p)
        if (spec.layout.dims[p] != spec.layout.dims[p + 1]) return false;
    const ComplexMatrix h = realize_full_operator(spec);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const ComplexMatrix perm = party_swap(spec.layout.dims, p, p + 1);
        if (!approx_equal(perm.adjoint() * h * perm, h, tol)) return false;
    }
    return true;
}

ThresholdReport symmetric_gmst_threshold(const FullOperatorSpec& spec, const EnumerationOptions& opts) {
    const std::size_t n = spec.layout.n_parties();
    if (n < 2) throw InvariantError("symmetric_gmst_threshold: expected at least 2 parties");
    if (!is_permutation_symmetric(spec))
        throw NotSymmetricError("symmetric_gmst_threshold: operator is not invariant under party swaps");

    ThresholdReport report;
    for (std::size_t m = 1; m < n; ++m) {
        std::vector<std::size_t> untrusted(m);
        for (std::size_t p = 0; p < m; ++p) untrusted[p] = p;
        fold_direction(report, direction_label(n, untrusted),
                       one_way_threshold(restrict_to_direction(spec, untrusted), opts));
    }
    return report;
}

CertificationVerdict certify_expectation(double expectation_value, const ThresholdReport& report) {
    CertificationVerdict v;
    v.expectation = expectation_value;
    v.beta = report.beta_overall;
    v.gamma = report.gamma_overall;
    v.violated = expectation_value > v.beta + kViolationMargin ||
                 expectation_value < v.gamma - kViolationMargin;
    v.margin = std::max(expectation_value - v.beta, v.gamma - expectation_value);
    return v;
}

CertificationVerdict certify(const FullOperatorSpec& spec, const ComplexMatrix& state,
                             const ThresholdReport& report) {
    return certify_expectation(expectation(realize_full_operator(spec), state), report);
}

}  // namespace steerkit

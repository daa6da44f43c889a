#include "steerkit/scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "steerkit/engine.hpp"

namespace steerkit {

namespace {

ScanPoint evaluate_point(const EntryBuilder& builder, const ComplexMatrix& state, double parameter,
                         const EnumerationOptions& opts) {
    const CatalogEntry entry = builder(parameter);
    const ThresholdReport report = compute_threshold(entry, opts);
    ScanPoint p;
    p.parameter = parameter;
    if (entry.full)
        p.expectation = expectation(realize_full_operator(*entry.full), state);
    else
        throw InvalidParameterError("scan: entry '" + entry.name + "' has no realizable operator");
    p.threshold = report.beta_overall;
    p.ratio = p.expectation / p.threshold;
    return p;
}

}  // namespace

ScanResult scan_ratio(const EntryBuilder& builder, const StateSpec& state, double lo, double hi,
                      std::size_t points, const EnumerationOptions& opts) {
    if (points < 3) throw InvalidParameterError("scan: needs at least 3 grid points");
    if (!(lo < hi)) throw InvalidParameterError("scan: empty parameter range");
    const ComplexMatrix rho = make_state(state);

    ScanResult out;
    out.grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        out.grid.push_back(evaluate_point(builder, rho, lo + t * (hi - lo), opts));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < points; ++i)
        if (out.grid[i].ratio > out.grid[best].ratio) best = i;
    out.best = out.grid[best];

    // Golden-section maximization of the ratio between the neighbors of the
    // best grid point; works through kinks, no derivatives involved.
    double a = out.grid[best == 0 ? 0 : best - 1].parameter;
    double b = out.grid[std::min(best + 1, points - 1)].parameter;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    ScanPoint p1 = evaluate_point(builder, rho, x1, opts);
    ScanPoint p2 = evaluate_point(builder, rho, x2, opts);
    while (b - a > 1e-6) {
        if (p1.ratio >= p2.ratio) {
            b = x2;
            x2 = x1;
            p2 = p1;
            x1 = b - kInvPhi * (b - a);
            p1 = evaluate_point(builder, rho, x1, opts);
        } else {
            a = x1;
            x1 = x2;
            p1 = p2;
            x2 = a + kInvPhi * (b - a);
            p2 = evaluate_point(builder, rho, x2, opts);
        }
    }
    out.refined_best = p1.ratio >= p2.ratio ? p1 : p2;
    if (out.refined_best.ratio < out.best.ratio) out.refined_best = out.best;
    return out;
}

double critical_visibility(const EntryBuilder& builder,
                           const std::function<StateSpec(double)>& state_of_visibility, double lo,
                           double hi, std::size_t points, double tol,
                           const EnumerationOptions& opts) {
    auto refined_ratio = [&](double v) {
        return scan_ratio(builder, state_of_visibility(v), lo, hi, points, opts).refined_best.ratio;
    };
    double low = 0.0, high = 1.0;
    if (refined_ratio(high) < 1.0)
        throw InvalidParameterError("critical_visibility: no violation even at full visibility");
    while (high - low > tol) {
        const double mid = 0.5 * (low + high);
        (refined_ratio(mid) >= 1.0 ? high : low) = mid;
    }
    return 0.5 * (low + high);
}

HaarEstimate haar_expectation_mc(const ComplexMatrix& state, std::size_t d, HaarConstraint constraint,
                                 std::size_t samples, std::uint64_t seed) {
    if (d < 2) throw InvalidParameterError("haar mc: d must be >= 2");
    if (state.dim() != d * d)
        throw DimensionMismatchError("haar mc: state must live on a d x d bipartite space");
    if (samples < 100) throw InvalidParameterError("haar mc: needs at least 100 samples");
    if (std::abs(state.trace() - Complex{1.0, 0.0}) > 1e-9)
        throw InvalidStateError("haar mc: state trace differs from 1");

    std::vector<double> values(samples);
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 rng = rng_for_sample(seed, i);
            const ComplexMatrix u = random_unitary(d, rng);
            double total = 0.0;
            for (std::size_t a = 0; a < d; ++a) {
                std::vector<Complex> col(d);
                for (std::size_t r = 0; r < d; ++r) col[r] = u(r, a);
                const ComplexMatrix phi = projector(col);
                const ComplexMatrix pi =
                    constraint == HaarConstraint::Conjugate ? phi.conjugate() : phi;
                total += trace_product(kron(pi, phi), state).real();
            }
            values[i] = total;
        }
    };

    const std::size_t n_threads = std::min<std::size_t>(worker_count(), samples);
    if (n_threads <= 1) {
        run_range(0, samples);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (samples + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(begin + chunk, samples);
            if (begin < end) pool.emplace_back([&, begin, end] { run_range(begin, end); });
        }
        for (std::thread& th : pool) th.join();
    }

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(samples);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(samples - 1);

    HaarEstimate est;
    est.mean = mean;
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

}  // namespace steerkit

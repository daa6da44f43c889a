#include "steerkit/random.hpp"

#include <cmath>

namespace steerkit {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 rng_for_sample(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0xd1342543de82ef95ULL * (index + 1));
    const std::uint64_t a = splitmix64(state);
    const std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)} / std::sqrt(2.0);

    // Modified Gram-Schmidt QR on the columns, with a second orthogonalization
    // pass. MGS normalization makes every R_jj real and positive, which is
    // precisely the phase-fixed QR convention that renders Q Haar-distributed.
    ComplexMatrix q = g;
    for (std::size_t j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj{};
                for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < d; ++i) q(i, j) -= proj * q(i, k);
            }
        double nrm = 0.0;
        for (std::size_t i = 0; i < d; ++i) nrm += std::norm(q(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < d; ++i) q(i, j) /= nrm;
    }
    return q;
}

}  // namespace steerkit

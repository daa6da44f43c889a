#pragma once

#include <cstdint>
#include <random>

#include "steerkit/matrix.hpp"

namespace steerkit {

/// SplitMix64 step; used to derive independent per-index seed streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Generator for sample `index` of a seeded stream. Deterministic and
/// independent of how samples are distributed over workers.
std::mt19937_64 rng_for_sample(std::uint64_t seed, std::uint64_t index);

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phase correction.
ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng);

}  // namespace steerkit

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "steerkit/matrix.hpp"
#include "steerkit/observables.hpp"

namespace steerkit {

enum class StateFamily { Werner, Isotropic, Ghz, GenGhz, NoisyGhz, MaxEntangled, Custom };

/// Named parametric state family. Parameter keys by family:
///   Werner:       w in [0,1], d >= 2
///   Isotropic:    eta in [0,1], d >= 2
///   Ghz:          n >= 2
///   GenGhz:       omega in (0, pi/2]   (three qubits)
///   NoisyGhz:     v in [0,1], n >= 2 (default 3)
///   MaxEntangled: d >= 2
struct StateSpec {
    StateFamily family = StateFamily::MaxEntangled;
    std::map<std::string, double> params;
    ComplexMatrix custom;  // used only by Custom

    static StateSpec werner(double w, std::size_t d);
    static StateSpec isotropic(double eta, std::size_t d);
    static StateSpec ghz(std::size_t n);
    static StateSpec gen_ghz(double omega);
    static StateSpec noisy_ghz(double v, std::size_t n = 3);
    static StateSpec max_entangled(std::size_t d);
    static StateSpec custom_state(ComplexMatrix m);
};

/// Realize the density matrix. Throws InvalidParameterError when parameters
/// are missing or out of range; the result is PSD with unit trace to 1e-10.
ComplexMatrix make_state(const StateSpec& spec);

ComplexMatrix ghz_state(std::size_t n);

/// Swap operator V |phi>|psi> = |psi>|phi| on a d x d bipartite space.
ComplexMatrix flip_operator(std::size_t d);

/// Unnormalized conditional states on the trusted side, keyed by
/// (setting index, outcome index).
struct Assemblage {
    std::map<std::pair<std::size_t, std::size_t>, ComplexMatrix> members;
};

/// Conditional states prepared on the kept (trusted) parties when the listed
/// untrusted parties measure `povms` jointly. `untrusted` is an ascending
/// party list; each POVM acts on the tensor product of those parties.
Assemblage assemblage_of(const ComplexMatrix& state, const std::vector<std::size_t>& dims,
                         const std::vector<std::size_t>& untrusted, const std::vector<Povm>& povms);

}  // namespace steerkit

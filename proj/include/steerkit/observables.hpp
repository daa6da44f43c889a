#pragma once

#include <string>
#include <vector>

#include "steerkit/matrix.hpp"

namespace steerkit {

/// A labeled Hermitian measurement operator on one party. When `two_valued`
/// is set the spectrum is {+1, -1} (checked via matrix^2 == I to 1e-10).
struct Observable {
    ComplexMatrix matrix;
    std::string label;
    bool two_valued = false;

    /// Validating factory for a +/-1-valued observable.
    static Observable make_two_valued(ComplexMatrix m, std::string label);
    /// General Hermitian observable (no spectrum constraint).
    static Observable make_hermitian(ComplexMatrix m, std::string label);
};

/// Positive effects summing to the identity.
struct Povm {
    std::vector<ComplexMatrix> effects;
    std::string label;

    std::size_t dim() const { return effects.empty() ? 0 : effects.front().dim(); }
    std::size_t outcomes() const { return effects.size(); }

    /// Validating factory: every effect PSD (min eigenvalue >= -1e-10) and
    /// the effects sum to I within 1e-10 entrywise.
    static Povm make(std::vector<ComplexMatrix> effects, std::string label);
    /// Rank-one projective POVM from an orthonormal basis (vectors as rows of `basis`).
    static Povm projective(const std::vector<std::vector<Complex>>& basis, std::string label);
};

/// Pauli observable for axis 'x', 'y' or 'z'.
Observable pauli(char axis);

/// Observable p_plus - p_minus from a two-projector resolution of identity.
/// Throws NotProjectorError / NotAResolutionError on contract violations.
Observable two_value_from_projectors(const ComplexMatrix& p_plus, const ComplexMatrix& p_minus);

/// d+1 mutually unbiased orthonormal bases in prime dimension d.
/// bases[x][a] is the a-th vector of the x-th basis; the computational basis
/// comes first. Cross-basis overlaps satisfy |<phi^a_x|phi^b_y>|^2 = 1/d.
struct MubFamily {
    std::size_t d = 0;
    std::vector<std::vector<std::vector<Complex>>> bases;

    std::size_t count() const { return bases.size(); }
    ComplexMatrix basis_projector(std::size_t x, std::size_t a) const;
    Povm basis_povm(std::size_t x, std::string label) const;
};

/// Throws UnsupportedDimensionError for non-prime d.
MubFamily mub_family(std::size_t d);

/// Depolarizing map applied to every effect:
/// E -> eta*E + (1-eta)*Tr(E)*I/d. eta must lie in [0, 1].
Povm depolarize(const Povm& povm, double eta);

/// Same map on a single Hermitian operator.
ComplexMatrix depolarize(const ComplexMatrix& op, double eta);

}  // namespace steerkit

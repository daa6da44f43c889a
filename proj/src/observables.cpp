#include "steerkit/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steerkit/spectral.hpp"

namespace steerkit {

namespace {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

}  // namespace

Observable Observable::make_two_valued(ComplexMatrix m, std::string label) {
    m.require_hermitian(kHermitianTol, "observable " + label);
    const ComplexMatrix sq = m * m;
    if (!approx_equal(sq, ComplexMatrix::identity(m.dim()), 1e-10))
        throw InvalidParameterError("observable " + label + ": square differs from identity, spectrum is not {+1,-1}");
    return Observable{std::move(m), std::move(label), true};
}

Observable Observable::make_hermitian(ComplexMatrix m, std::string label) {
    m.require_hermitian(kHermitianTol, "observable " + label);
    return Observable{std::move(m), std::move(label), false};
}

Povm Povm::make(std::vector<ComplexMatrix> effects, std::string label) {
    if (effects.empty()) throw InvalidParameterError("povm " + label + ": no effects");
    const std::size_t d = effects.front().dim();
    ComplexMatrix sum(d);
    for (std::size_t a = 0; a < effects.size(); ++a) {
        if (effects[a].dim() != d) throw DimensionMismatchError("povm " + label + ": effect dims differ");
        effects[a].require_hermitian(kHermitianTol, "povm " + label + " effect " + std::to_string(a));
        if (eig_extremal(effects[a]).lambda_min < -1e-10)
            throw InvalidParameterError("povm " + label + ": effect " + std::to_string(a) + " is not PSD");
        sum += effects[a];
    }
    if (!approx_equal(sum, ComplexMatrix::identity(d), 1e-10))
        throw NotAResolutionError("povm " + label + ": effects do not sum to identity");
    return Povm{std::move(effects), std::move(label)};
}

Povm Povm::projective(const std::vector<std::vector<Complex>>& basis, std::string label) {
    std::vector<ComplexMatrix> effects;
    effects.reserve(basis.size());
    for (const auto& vec : basis) effects.push_back(projector(vec));
    return make(std::move(effects), std::move(label));
}

Observable pauli(char axis) {
    ComplexMatrix m(2);
    switch (axis) {
        case 'x':
            m(0, 1) = m(1, 0) = 1.0;
            break;
        case 'y':
            m(0, 1) = Complex{0.0, -1.0};
            m(1, 0) = Complex{0.0, 1.0};
            break;
        case 'z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw InvalidParameterError(std::string("pauli: unknown axis '") + axis + "'");
    }
    return Observable{std::move(m), std::string(1, axis == 'x' ? 'X' : axis == 'y' ? 'Y' : 'Z'), true};
}

Observable two_value_from_projectors(const ComplexMatrix& p_plus, const ComplexMatrix& p_minus) {
    if (p_plus.dim() != p_minus.dim()) throw DimensionMismatchError("two_value_from_projectors: dims differ");
    for (const ComplexMatrix* p : {&p_plus, &p_minus}) {
        p->require_hermitian(kHermitianTol, "projector");
        if (!approx_equal((*p) * (*p), *p, 1e-10))
            throw NotProjectorError("two_value_from_projectors: input is not idempotent");
    }
    if (!approx_equal(p_plus + p_minus, ComplexMatrix::identity(p_plus.dim()), 1e-10))
        throw NotAResolutionError("two_value_from_projectors: projectors do not sum to identity");
    return Observable{p_plus - p_minus, "P+ - P-", true};
}

MubFamily mub_family(std::size_t d) {
    if (!is_prime(d))
        throw UnsupportedDimensionError("mub_family: d = " + std::to_string(d) + " is not prime");

    MubFamily fam;
    fam.d = d;

    std::vector<std::vector<Complex>> computational(d, std::vector<Complex>(d));
    for (std::size_t a = 0; a < d; ++a) computational[a][a] = 1.0;
    fam.bases.push_back(std::move(computational));

    if (d == 2) {
        const double r = 1.0 / std::sqrt(2.0);
        fam.bases.push_back({{r, r}, {r, -r}});                                      // X eigenbasis
        fam.bases.push_back({{r, Complex{0.0, r}}, {r, Complex{0.0, -r}}});          // Y eigenbasis
        return fam;
    }

    // Odd prime: d Fourier-type bases with quadratic phases,
    // |phi^j_k>_m = omega^(j m^2 + k m) / sqrt(d).
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<Complex>> basis(d, std::vector<Complex>(d));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t m = 0; m < d; ++m) {
                const std::size_t e = (j * m * m + k * m) % d;
                const double phi = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d);
                basis[k][m] = norm * Complex{std::cos(phi), std::sin(phi)};
            }
        fam.bases.push_back(std::move(basis));
    }
    return fam;
}

ComplexMatrix MubFamily::basis_projector(std::size_t x, std::size_t a) const {
    return projector(bases.at(x).at(a));
}

Povm MubFamily::basis_povm(std::size_t x, std::string label) const {
    return Povm::projective(bases.at(x), std::move(label));
}

ComplexMatrix depolarize(const ComplexMatrix& op, double eta) {
    if (eta < 0.0 || eta > 1.0) throw InvalidParameterError("depolarize: eta outside [0,1]");
    const double d = static_cast<double>(op.dim());
    ComplexMatrix out = Complex{eta, 0.0} * op;
    out += Complex{(1.0 - eta) * op.trace().real() / d, 0.0} * ComplexMatrix::identity(op.dim());
    return out;
}

Povm depolarize(const Povm& povm, double eta) {
    std::vector<ComplexMatrix> effects;
    effects.reserve(povm.effects.size());
    for (const ComplexMatrix& e : povm.effects) effects.push_back(depolarize(e, eta));
    return Povm::make(std::move(effects), povm.label + "@eta=" + std::to_string(eta));
}

}  // namespace steerkit

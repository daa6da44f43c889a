#include "steerkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steerkit {

namespace {

struct JacobiResult {
    std::vector<double> values;    // unsorted, values[i] pairs with column i of vectors
    ComplexMatrix vectors;
};

// Cyclic Jacobi for complex Hermitian matrices. Each rotation zeroes one
// off-diagonal pair (p,q) with a phased Givens rotation; sweeps repeat until
// the off-diagonal mass is at machine-noise level relative to the input.
JacobiResult jacobi_diagonalize(const ComplexMatrix& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    const double target = 1e-15 * scale;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) {
                    a(p, q) = a(q, p) = Complex{};
                    continue;
                }
                const Complex phase = apq / r;  // a(p,q) = r * phase
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();

                // Rotation angle from cot(2*theta) = (alpha - beta) / (2r),
                // |theta| <= pi/4 for stability.
                const double tau = (alpha - beta) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p,q of A and V: right-multiplication by the rotation.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    v(k, q) = -s * phase * vkp + c * vkq;
                }
                // Rows p,q of A: left-multiplication by the adjoint rotation.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = a(q, p) = Complex{};
                a(p, p) = Complex{a(p, p).real(), 0.0};
                a(q, q) = Complex{a(q, q).real(), 0.0};
            }
        }
    }

    JacobiResult out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
    out.vectors = std::move(v);
    return out;
}

}  // namespace

EigenResult eig_extremal(const ComplexMatrix& h) {
    if (h.dim() == 0) throw DimensionMismatchError("eig_extremal: empty matrix");
    h.require_hermitian(kHermitianTol, "eig_extremal input");

    const JacobiResult d = jacobi_diagonalize(h);
    std::size_t imax = 0, imin = 0;
    for (std::size_t i = 1; i < d.values.size(); ++i) {
        if (d.values[i] > d.values[imax]) imax = i;
        if (d.values[i] < d.values[imin]) imin = i;
    }

    EigenResult out;
    out.lambda_max = d.values[imax];
    out.lambda_min = d.values[imin];
    out.vec_max.resize(h.dim());
    double nrm = 0.0;
    for (std::size_t k = 0; k < h.dim(); ++k) {
        out.vec_max[k] = d.vectors(k, imax);
        nrm += std::norm(out.vec_max[k]);
    }
    nrm = std::sqrt(nrm);
    for (Complex& z : out.vec_max) z /= nrm;
    return out;
}

std::vector<double> eig_all(const ComplexMatrix& h) {
    if (h.dim() == 0) throw DimensionMismatchError("eig_all: empty matrix");
    h.require_hermitian(kHermitianTol, "eig_all input");
    std::vector<double> values = jacobi_diagonalize(h).values;
    std::sort(values.begin(), values.end());
    return values;
}

double expectation(const ComplexMatrix& op, const ComplexMatrix& state) {
    if (op.dim() != state.dim()) throw DimensionMismatchError("expectation: operator and state dims differ");
    op.require_hermitian(kHermitianTol, "expectation operator");
    if (std::abs(state.trace() - Complex{1.0, 0.0}) > 1e-9)
        throw InvalidStateError("expectation: state trace differs from 1 beyond 1e-9");
    if (state.hermiticity_residual() > 1e-9)
        throw InvalidStateError("expectation: state is not Hermitian");
    ComplexMatrix sym = state;
    if (state.hermiticity_residual() > kHermitianTol) {
        // Symmetrize floating noise so the eigensolver contract holds.
        sym = Complex{0.5, 0.0} * (state + state.adjoint());
    }
    if (eig_extremal(sym).lambda_min < -1e-9)
        throw InvalidStateError("expectation: state has an eigenvalue below -1e-9");

    const Complex t = trace_product(op, state);
    if (std::abs(t.imag()) > 1e-10)
        throw InvalidStateError("expectation: imaginary residue exceeds 1e-10");
    return t.real();
}

}  // namespace steerkit

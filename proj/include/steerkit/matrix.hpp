#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "steerkit/errors.hpp"

namespace steerkit {

using Complex = std::complex<double>;

/// Entrywise symmetry tolerance below which a matrix counts as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Dense square complex matrix, stored row-major. Operations never mutate
/// their inputs; everything returns a fresh value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    /// max_ij |a(i,j) - conj(a(j,i))|
    double hermiticity_residual() const;
    bool is_hermitian(double tol = kHermitianTol) const { return hermiticity_residual() <= tol; }
    /// Throws NotHermitianError naming `what` if the residual exceeds `tol`.
    void require_hermitian(double tol, std::string_view what) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
    friend ComplexMatrix operator-(ComplexMatrix m) { return m *= Complex{-1.0, 0.0}; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// max_ij |a(i,j) - b(i,j)| <= tol
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// Tensor (Kronecker) product; result(i*b.dim+k, j*b.dim+l) = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::span<const ComplexMatrix> factors);

/// |v><v| for a (not necessarily normalized) vector.
ComplexMatrix projector(std::span<const Complex> vec);

/// Trace out every party not listed in `keep`. `dims` are the per-party local
/// dimensions in tensor order (party 0 most significant); their product must
/// equal w.dim(). `keep` must be nonempty, sorted, unique and in range.
ComplexMatrix partial_trace(const ComplexMatrix& w, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

/// Tr(op * state) for a Hermitian op and a unit-trace PSD state.
/// The imaginary residue must be <= 1e-10 and is discarded.
double expectation(const ComplexMatrix& op, const ComplexMatrix& state);

/// Tr(a * b) without validation; callers own the preconditions.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Embed an operator acting on the listed parties (ascending order) into the
/// full tensor space described by `dims`, acting as identity elsewhere.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& parties);

/// Permutation matrix that swaps the tensor factors `a` and `b` (equal dims).
ComplexMatrix party_swap(const std::vector<std::size_t>& dims, std::size_t a, std::size_t b);

}  // namespace steerkit

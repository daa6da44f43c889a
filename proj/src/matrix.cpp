#include "steerkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace steerkit {

namespace {

std::vector<std::size_t> tensor_strides(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t p = dims.size(); p-- > 1;) strides[p - 1] = strides[p] * dims[p];
    return strides;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t dim = rows.size();
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim)
            throw DimensionMismatchError("from_rows: row " + std::to_string(i) + " has length " +
                                         std::to_string(rows[i].size()) + ", expected " + std::to_string(dim));
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) out.entries_[i] = std::conj(entries_[i]);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
}

void ComplexMatrix::require_hermitian(double tol, std::string_view what) const {
    const double r = hermiticity_residual();
    if (r > tol)
        throw NotHermitianError(std::string(what) + ": hermiticity residual " + std::to_string(r) +
                                " exceeds tolerance " + std::to_string(tol));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw DimensionMismatchError("matrix add: dims differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw DimensionMismatchError("matrix subtract: dims differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : entries_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("matrix multiply: dims differ");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (std::abs(a.entries_[i] - b.entries_[i]) > tol) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (const ComplexMatrix& f : factors) out = kron(out, f);
    return out;
}

ComplexMatrix projector(std::span<const Complex> vec) {
    ComplexMatrix out(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i)
        for (std::size_t j = 0; j < vec.size(); ++j) out(i, j) = vec[i] * std::conj(vec[j]);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& w, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (total != w.dim())
        throw DimensionMismatchError("partial_trace: product of dims " + std::to_string(total) +
                                     " != matrix dim " + std::to_string(w.dim()));
    if (keep.empty()) throw DimensionMismatchError("partial_trace: keep set is empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= dims.size()) throw DimensionMismatchError("partial_trace: keep index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw DimensionMismatchError("partial_trace: keep must be sorted and unique");
    }

    std::vector<std::size_t> traced;
    for (std::size_t p = 0; p < dims.size(); ++p)
        if (!std::binary_search(keep.begin(), keep.end(), p)) traced.push_back(p);

    const auto strides = tensor_strides(dims);
    std::size_t keep_dim = 1, traced_dim = 1;
    for (std::size_t p : keep) keep_dim *= dims[p];
    for (std::size_t p : traced) traced_dim *= dims[p];

    // Offset of a flat sub-index within the full index, for a given party list.
    auto offset_of = [&](const std::vector<std::size_t>& parties, std::size_t flat) {
        std::size_t off = 0;
        for (std::size_t k = parties.size(); k-- > 0;) {
            const std::size_t p = parties[k];
            off += (flat % dims[p]) * strides[p];
            flat /= dims[p];
        }
        return off;
    };

    std::vector<std::size_t> keep_offsets(keep_dim), traced_offsets(traced_dim);
    for (std::size_t i = 0; i < keep_dim; ++i) keep_offsets[i] = offset_of(keep, i);
    for (std::size_t t = 0; t < traced_dim; ++t) traced_offsets[t] = offset_of(traced, t);

    ComplexMatrix out(keep_dim);
    for (std::size_t i = 0; i < keep_dim; ++i)
        for (std::size_t j = 0; j < keep_dim; ++j) {
            Complex sum{};
            for (std::size_t t = 0; t < traced_dim; ++t)
                sum += w(keep_offsets[i] + traced_offsets[t], keep_offsets[j] + traced_offsets[t]);
            out(i, j) = sum;
        }
    return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("trace_product: dims differ");
    Complex t{};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
    return t;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& parties) {
    std::size_t total = 1, sub = 1;
    for (std::size_t d : dims) total *= d;
    for (std::size_t p : parties) {
        if (p >= dims.size()) throw DimensionMismatchError("embed_operator: party index out of range");
        sub *= dims[p];
    }
    if (sub != op.dim())
        throw DimensionMismatchError("embed_operator: operator dim " + std::to_string(op.dim()) +
                                     " != product of listed party dims " + std::to_string(sub));

    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < dims.size(); ++p)
        if (std::find(parties.begin(), parties.end(), p) == parties.end()) rest.push_back(p);

    const auto strides = tensor_strides(dims);
    auto offset_of = [&](const std::vector<std::size_t>& plist, std::size_t flat) {
        std::size_t off = 0;
        for (std::size_t k = plist.size(); k-- > 0;) {
            const std::size_t p = plist[k];
            off += (flat % dims[p]) * strides[p];
            flat /= dims[p];
        }
        return off;
    };

    std::size_t rest_dim = 1;
    for (std::size_t p : rest) rest_dim *= dims[p];

    ComplexMatrix out(total);
    for (std::size_t a = 0; a < op.dim(); ++a)
        for (std::size_t b = 0; b < op.dim(); ++b) {
            const Complex v = op(a, b);
            if (v == Complex{}) continue;
            const std::size_t ra = offset_of(parties, a), rb = offset_of(parties, b);
            for (std::size_t r = 0; r < rest_dim; ++r) {
                const std::size_t ro = offset_of(rest, r);
                out(ra + ro, rb + ro) = v;
            }
        }
    return out;
}

ComplexMatrix party_swap(const std::vector<std::size_t>& dims, std::size_t a, std::size_t b) {
    if (a >= dims.size() || b >= dims.size()) throw DimensionMismatchError("party_swap: index out of range");
    if (dims[a] != dims[b]) throw DimensionMismatchError("party_swap: parties have different dims");
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    const auto strides = tensor_strides(dims);

    ComplexMatrix out(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        std::vector<std::size_t> digits(dims.size());
        for (std::size_t p = 0; p < dims.size(); ++p) {
            digits[p] = rem / strides[p];
            rem %= strides[p];
        }
        std::swap(digits[a], digits[b]);
        std::size_t j = 0;
        for (std::size_t p = 0; p < dims.size(); ++p) j += digits[p] * strides[p];
        out(j, i) = 1.0;
    }
    return out;
}

}  // namespace steerkit

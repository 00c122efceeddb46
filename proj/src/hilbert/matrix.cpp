#include "potentia/hilbert/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace potentia::hilbert {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

double CMatrix::frobenius() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> v) const {
    if (v.size() != dim_) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<cplx> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

bool CMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
}

bool CMatrix::is_idempotent(double tol) const {
    return distance(*this * *this, *this) <= tol;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    CMatrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    CMatrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    CMatrix m(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            cplx arK = a.at(r, k);
            if (arK == cplx{}) continue;
            for (std::size_t c = 0; c < a.dim_; ++c) m.at(r, c) += arK * b.at(k, c);
        }
    return m;
}

CMatrix operator*(cplx s, const CMatrix& a) {
    CMatrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = s * a.data_[i];
    return m;
}

double distance(const CMatrix& a, const CMatrix& b) {
    return (a - b).frobenius();
}

}  // namespace potentia::hilbert

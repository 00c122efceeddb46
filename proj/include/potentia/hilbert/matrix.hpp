#ifndef POTENTIA_HILBERT_MATRIX_HPP
#define POTENTIA_HILBERT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace potentia::hilbert {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for state spaces of a
/// handful of dimensions; nothing here is tuned beyond that.
class CMatrix {
  public:
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static CMatrix identity(std::size_t dim);
    static CMatrix zero(std::size_t dim) { return CMatrix(dim); }

    std::size_t dim() const { return dim_; }

    cplx& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    CMatrix adjoint() const;
    cplx trace() const;
    double frobenius() const;

    std::vector<cplx> apply(std::span<const cplx> v) const;

    bool is_hermitian(double tol) const;
    bool is_idempotent(double tol) const;

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(cplx s, const CMatrix& a);

  private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

/// Frobenius distance, the matrix metric used for every approximate
/// comparison in the project.
double distance(const CMatrix& a, const CMatrix& b);

}  // namespace potentia::hilbert

#endif

#include "potentia/hilbert/state.hpp"

#include "potentia/caps.hpp"
#include "potentia/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace potentia::hilbert {

StateVector StateVector::create(std::vector<cplx> amplitudes) {
    return create(std::move(amplitudes), default_dim_cap());
}

StateVector StateVector::create(std::vector<cplx> amplitudes, std::size_t dim_cap) {
    if (amplitudes.size() < 2) throw std::invalid_argument("state vector needs dimension >= 2");
    if (amplitudes.size() > dim_cap)
        throw ResourceLimitError("state dimension", amplitudes.size(), dim_cap);
    StateVector v(std::move(amplitudes));
    double n = v.norm();
    if (std::abs(n - 1.0) > kNormTol)
        throw std::invalid_argument("state vector norm is " + std::to_string(n) + ", expected 1");
    return v;
}

StateVector StateVector::standard(std::size_t dim, std::size_t index) {
    std::vector<cplx> amps(dim);
    amps.at(index) = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& z : amplitudes_) s += std::norm(z);
    return std::sqrt(s);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner product dimension mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

cplx inner(const StateVector& a, const StateVector& b) {
    return inner(std::span<const cplx>(a.amplitudes()), std::span<const cplx>(b.amplitudes()));
}

Basis Basis::create(std::string label, std::vector<StateVector> vectors) {
    if (vectors.empty()) throw std::invalid_argument("basis '" + label + "' has no vectors");
    std::size_t dim = vectors[0].dim();
    if (vectors.size() != dim)
        throw std::invalid_argument("basis '" + label + "' has " +
                                    std::to_string(vectors.size()) + " vectors for dimension " +
                                    std::to_string(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (vectors[i].dim() != dim)
            throw std::invalid_argument("basis '" + label + "' mixes dimensions");
        for (std::size_t j = i; j < dim; ++j) {
            cplx g = inner(vectors[i], vectors[j]);
            cplx want = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - want) > kNormTol)
                throw std::invalid_argument("basis '" + label + "' is not orthonormal (vectors " +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return Basis(std::move(label), std::move(vectors));
}

Basis Basis::standard(std::string label, std::size_t dim) {
    std::vector<StateVector> vs;
    vs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) vs.push_back(StateVector::standard(dim, i));
    return Basis(std::move(label), std::move(vs));
}

std::vector<cplx> change_of_basis(const StateVector& psi, const Basis& b) {
    if (psi.dim() != b.dim()) throw std::invalid_argument("state/basis dimension mismatch");
    std::vector<cplx> coords;
    coords.reserve(b.dim());
    for (const StateVector& v : b.vectors()) coords.push_back(inner(v, psi));
    return coords;
}

}  // namespace potentia::hilbert

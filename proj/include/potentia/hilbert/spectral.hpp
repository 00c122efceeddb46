#ifndef POTENTIA_HILBERT_SPECTRAL_HPP
#define POTENTIA_HILBERT_SPECTRAL_HPP

#include "potentia/hilbert/operators.hpp"

#include <utility>
#include <vector>

namespace potentia::hilbert {

inline constexpr double kDegeneracyTol = 1e-8;

/// Eigenvalues ascending; eigenvectors are the matching columns of a
/// unitary matrix, each with its first non-negligible component made
/// real-positive.
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors;
};

/// Cyclic complex Jacobi rotations. Off-diagonal mass is driven below
/// 1e-12 relative to max(1, Frobenius norm); at most 100 sweeps (plenty
/// for the dimensions this project allows).
EigenSystem eigen_decomposition(const CMatrix& hermitian);

/// Eigenvalue/eigenprojector pairs, ascending, with eigenvalues closer
/// than 1e-8 merged into one projector of rank = multiplicity (reported
/// eigenvalue: group mean).
std::vector<std::pair<double, Projector>> spectral_decompose(const HermitianOperator& h);

/// Sum of the eigenprojectors whose eigenvalue lies in delta; the zero
/// projector when none does.
Projector event_projector(const HermitianOperator& a, const BorelSet& delta);

/// U(t)·psi with U = sum_k exp(-i*lambda_k*t/hbar) P_k from the spectral
/// decomposition of h. Throws on dimension mismatch, non-finite t, or
/// hbar = 0.
StateVector evolve(const StateVector& psi, const HermitianOperator& h, double t,
                   double hbar = 1.0);

}  // namespace potentia::hilbert

#endif

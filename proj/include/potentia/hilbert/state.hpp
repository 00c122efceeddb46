#ifndef POTENTIA_HILBERT_STATE_HPP
#define POTENTIA_HILBERT_STATE_HPP

#include "potentia/hilbert/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace potentia::hilbert {

inline constexpr double kNormTol = 1e-9;

/// Unit vector in C^dim. Construction validates the norm; amplitudes are
/// stored exactly as given (never silently renormalized).
class StateVector {
  public:
    /// Throws std::invalid_argument when the norm is off by more than 1e-9
    /// or dim < 2, ResourceLimitError when dim exceeds the cap.
    static StateVector create(std::vector<cplx> amplitudes);
    static StateVector create(std::vector<cplx> amplitudes, std::size_t dim_cap);

    /// Standard basis vector e_index.
    static StateVector standard(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

  private:
    explicit StateVector(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {}

    std::vector<cplx> amplitudes_;
};

/// Inner product, conjugate-linear in the first argument.
cplx inner(const StateVector& a, const StateVector& b);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);

/// Orthonormal basis of C^dim with a human-readable label.
class Basis {
  public:
    /// Throws std::invalid_argument unless the vectors are pairwise
    /// orthonormal within 1e-9 and there are exactly dim of them.
    static Basis create(std::string label, std::vector<StateVector> vectors);

    /// The standard basis {e_0, ..., e_{dim-1}}.
    static Basis standard(std::string label, std::size_t dim);

    const std::string& label() const { return label_; }
    std::size_t dim() const { return vectors_.size(); }
    const std::vector<StateVector>& vectors() const { return vectors_; }
    const StateVector& vector(std::size_t i) const { return vectors_[i]; }

  private:
    Basis(std::string label, std::vector<StateVector> vectors)
        : label_(std::move(label)), vectors_(std::move(vectors)) {}

    std::string label_;
    std::vector<StateVector> vectors_;
};

/// Coordinates of psi in basis b: coordinate i = inner(b_i, psi).
std::vector<cplx> change_of_basis(const StateVector& psi, const Basis& b);

}  // namespace potentia::hilbert

#endif

#ifndef POTENTIA_LATTICE_SUBSPACE_HPP
#define POTENTIA_LATTICE_SUBSPACE_HPP

#include "potentia/hilbert/operators.hpp"
#include "potentia/hilbert/spectral.hpp"
#include "potentia/rng.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace potentia::lattice {

using hilbert::cplx;

inline constexpr double kLatticeTol = 1e-8;

/// Closed subspace of C^dim, held as an orthonormal spanning set together
/// with the projector onto it. The zero subspace has an empty span.
class Subspace {
  public:
    static Subspace zero(std::size_t dim);
    static Subspace full(std::size_t dim);

    /// Span of arbitrary vectors of length dim. The set is
    /// orthonormalized; directions whose residual drops below 1e-8 are
    /// discarded as dependent.
    static Subspace span(std::size_t dim, const std::vector<std::vector<cplx>>& vectors);

    /// Range of a projector.
    static Subspace range(const hilbert::Projector& p);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::vector<cplx>>& basis() const { return basis_; }
    const hilbert::CMatrix& projector() const { return projector_; }

  private:
    Subspace(std::size_t dim, std::vector<std::vector<cplx>> basis);

    std::size_t dim_;
    std::vector<std::vector<cplx>> basis_;
    hilbert::CMatrix projector_;
};

/// Subspaces are compared through their projectors.
bool same_subspace(const Subspace& a, const Subspace& b, double tol = kLatticeTol);

/// a is contained in b exactly when P_b P_a = P_a.
bool leq(const Subspace& a, const Subspace& b, double tol = kLatticeTol);

/// Intersection: the eigenvalue-2 eigenspace of P_a + P_b.
Subspace meet(const Subspace& a, const Subspace& b);

/// Closed linear hull of the union of spans.
Subspace join(const Subspace& a, const Subspace& b);

/// Orthogonal complement.
Subspace ortho(const Subspace& a);

/// For a contained in b: whether b = a v (b ^ a_perp). Throws
/// std::invalid_argument when a is not contained in b.
bool orthomodular_holds(const Subspace& a, const Subspace& b);

/// Fixed counterexample to distributivity: a, b orthogonal lines and c a
/// diagonal line in their plane, so c ^ (a v b) = c while
/// (c ^ a) v (c ^ b) = 0. Requires dim >= 2.
struct DistributivityWitness {
    Subspace a, b, c;
    Subspace lhs;  // c ^ (a v b)
    Subspace rhs;  // (c ^ a) v (c ^ b)
    bool distributive;
};
DistributivityWitness distributivity_witness(std::size_t dim);

/// Lattice element assigned to the event "a takes a value in delta".
Subspace event_to_element(const hilbert::HermitianOperator& a, const hilbert::BorelSet& delta);

/// Haar-ish random subspace: uniform rank in [0, dim], Gaussian spanning
/// vectors.
Subspace random_subspace(SplitMix64& rng, std::size_t dim);

/// Random pair (a, b) with a contained in b.
std::pair<Subspace, Subspace> random_comparable_pair(SplitMix64& rng, std::size_t dim);

}  // namespace potentia::lattice

#endif

#include "potentia/lattice/subspace.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>

namespace potentia::lattice {

using hilbert::CMatrix;

namespace {

constexpr double kDropTol = 1e-8;

double norm_of(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

void project_out(std::vector<cplx>& v, const std::vector<cplx>& unit) {
    cplx coeff = hilbert::inner(std::span<const cplx>(unit), std::span<const cplx>(v));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * unit[i];
}

/// Modified Gram-Schmidt with a second pass for stability; vectors whose
/// residual falls below drop_tol are treated as dependent and skipped.
std::vector<std::vector<cplx>> orthonormalize(const std::vector<std::vector<cplx>>& vectors,
                                              double drop_tol) {
    std::vector<std::vector<cplx>> accepted;
    for (const auto& candidate : vectors) {
        std::vector<cplx> v = candidate;
        for (const auto& u : accepted) project_out(v, u);
        for (const auto& u : accepted) project_out(v, u);
        double n = norm_of(v);
        if (n < drop_tol) continue;
        for (cplx& z : v) z /= n;
        accepted.push_back(std::move(v));
    }
    return accepted;
}

}  // namespace

Subspace::Subspace(std::size_t dim, std::vector<std::vector<cplx>> basis)
    : dim_(dim), basis_(std::move(basis)), projector_(dim) {
    for (const auto& v : basis_)
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) projector_.at(r, c) += v[r] * std::conj(v[c]);
}

Subspace Subspace::zero(std::size_t dim) { return Subspace(dim, {}); }

Subspace Subspace::full(std::size_t dim) {
    std::vector<std::vector<cplx>> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<cplx> e(dim, cplx(0.0));
        e[i] = 1.0;
        basis.push_back(std::move(e));
    }
    return Subspace(dim, std::move(basis));
}

Subspace Subspace::span(std::size_t dim, const std::vector<std::vector<cplx>>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != dim)
            throw std::invalid_argument("spanning vector length does not match the dimension");
    return Subspace(dim, orthonormalize(vectors, kDropTol));
}

Subspace Subspace::range(const hilbert::Projector& p) {
    hilbert::EigenSystem es = hilbert::eigen_decomposition(p.matrix());
    std::size_t dim = p.dim();
    std::vector<std::vector<cplx>> basis;
    for (std::size_t k = 0; k < dim; ++k) {
        if (es.values[k] < 0.5) continue;
        std::vector<cplx> v(dim);
        for (std::size_t r = 0; r < dim; ++r) v[r] = es.vectors.at(r, k);
        basis.push_back(std::move(v));
    }
    return Subspace(dim, std::move(basis));
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return hilbert::distance(a.projector(), b.projector()) < tol;
}

bool leq(const Subspace& a, const Subspace& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return hilbert::distance(b.projector() * a.projector(), a.projector()) < tol;
}

Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("meet of subspaces of different spaces");
    std::size_t dim = a.dim();
    if (a.rank() == 0 || b.rank() == 0) return Subspace::zero(dim);

    hilbert::EigenSystem es = hilbert::eigen_decomposition(a.projector() + b.projector());
    std::vector<std::vector<cplx>> basis;
    for (std::size_t k = 0; k < dim; ++k) {
        if (es.values[k] < 2.0 - kLatticeTol) continue;
        std::vector<cplx> v(dim);
        for (std::size_t r = 0; r < dim; ++r) v[r] = es.vectors.at(r, k);
        basis.push_back(std::move(v));
    }
    return Subspace::span(dim, basis);
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("join of subspaces of different spaces");
    std::vector<std::vector<cplx>> combined = a.basis();
    combined.insert(combined.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.dim(), combined);
}

Subspace ortho(const Subspace& a) {
    std::size_t dim = a.dim();
    std::vector<std::vector<cplx>> accepted = a.basis();

    // Pivoted completion: greedily take the standard vector with the
    // largest residual, so every accepted residual is at least 1/sqrt(dim).
    std::vector<std::vector<cplx>> complement;
    while (accepted.size() < dim) {
        std::vector<cplx> best;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<cplx> e(dim, cplx(0.0));
            e[i] = 1.0;
            for (const auto& u : accepted) project_out(e, u);
            double n = norm_of(e);
            if (n > best_norm) {
                best_norm = n;
                best = std::move(e);
            }
        }
        for (const auto& u : accepted) project_out(best, u);
        double n = norm_of(best);
        for (cplx& z : best) z /= n;
        accepted.push_back(best);
        complement.push_back(std::move(best));
    }
    return Subspace::span(dim, complement);
}

bool orthomodular_holds(const Subspace& a, const Subspace& b) {
    if (!leq(a, b))
        throw std::invalid_argument("orthomodular law applies to a contained pair only");
    return same_subspace(b, join(a, meet(b, ortho(a))));
}

DistributivityWitness distributivity_witness(std::size_t dim) {
    if (dim < 2)
        throw std::invalid_argument("a distributivity counterexample needs dimension >= 2");

    std::vector<cplx> e0(dim, cplx(0.0)), e1(dim, cplx(0.0)), diag(dim, cplx(0.0));
    e0[0] = 1.0;
    e1[1] = 1.0;
    diag[0] = diag[1] = 1.0 / std::sqrt(2.0);

    Subspace a = Subspace::span(dim, {e0});
    Subspace b = Subspace::span(dim, {e1});
    Subspace c = Subspace::span(dim, {diag});

    Subspace lhs = meet(c, join(a, b));
    Subspace rhs = join(meet(c, a), meet(c, b));
    bool distributive = same_subspace(lhs, rhs);
    return {std::move(a), std::move(b), std::move(c), std::move(lhs), std::move(rhs),
            distributive};
}

Subspace event_to_element(const hilbert::HermitianOperator& a, const hilbert::BorelSet& delta) {
    return Subspace::range(hilbert::event_projector(a, delta));
}

Subspace random_subspace(SplitMix64& rng, std::size_t dim) {
    std::size_t rank = static_cast<std::size_t>(rng.next_below(dim + 1));
    std::vector<std::vector<cplx>> basis;
    while (basis.size() < rank) {
        std::vector<cplx> v(dim);
        for (cplx& z : v) z = cplx(rng.next_gaussian(), rng.next_gaussian());
        std::vector<std::vector<cplx>> trial = basis;
        trial.push_back(std::move(v));
        auto ortho_set = orthonormalize(trial, kDropTol);
        if (ortho_set.size() == basis.size() + 1) basis = std::move(ortho_set);
    }
    return Subspace::span(dim, basis);
}

std::pair<Subspace, Subspace> random_comparable_pair(SplitMix64& rng, std::size_t dim) {
    Subspace b = random_subspace(rng, dim);
    std::size_t take = static_cast<std::size_t>(rng.next_below(b.rank() + 1));
    std::vector<std::vector<cplx>> prefix(b.basis().begin(),
                                          b.basis().begin() + static_cast<std::ptrdiff_t>(take));
    return {Subspace::span(dim, prefix), std::move(b)};
}

}  // namespace potentia::lattice

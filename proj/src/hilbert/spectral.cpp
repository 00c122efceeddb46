#include "potentia/hilbert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace potentia::hilbert {

namespace {

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a.at(r, c));
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q). With a(p,q) = beta*e^{i*phi} the
// rotation is R = [[c, -s*e^{i*phi}], [s*e^{-i*phi}, c]] on the (p,q)
// plane, where tan(2*theta) solves cot(2*theta) = (a_pp - a_qq)/(2*beta).
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const double beta = std::abs(a.at(p, q));
    const double alpha = a.at(p, p).real();
    const double gamma = a.at(q, q).real();
    const cplx e = a.at(p, q) / beta;  // e^{i*phi}
    const cplx ec = std::conj(e);

    const double tau = (alpha - gamma) / (2.0 * beta);
    double t;
    if (tau == 0.0) {
        t = 1.0;
    } else {
        t = (tau > 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < n; ++r) {  // A <- A*R
        cplx arp = a.at(r, p), arq = a.at(r, q);
        a.at(r, p) = c * arp + s * ec * arq;
        a.at(r, q) = -s * e * arp + c * arq;
    }
    for (std::size_t r = 0; r < n; ++r) {  // A <- R^dagger * A
        cplx apr = a.at(p, r), aqr = a.at(q, r);
        a.at(p, r) = c * apr + s * e * aqr;
        a.at(q, r) = -s * ec * apr + c * aqr;
    }
    for (std::size_t r = 0; r < n; ++r) {  // V <- V*R
        cplx vrp = v.at(r, p), vrq = v.at(r, q);
        v.at(r, p) = c * vrp + s * ec * vrq;
        v.at(r, q) = -s * e * vrp + c * vrq;
    }

    // restore the exactly-Hermitian form the rotation guarantees
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    a.at(p, p) = a.at(p, p).real();
    a.at(q, q) = a.at(q, q).real();
}

void canonicalize_phase(CMatrix& v, std::size_t col) {
    for (std::size_t r = 0; r < v.dim(); ++r) {
        double mag = std::abs(v.at(r, col));
        if (mag > 1e-12) {
            cplx rot = std::conj(v.at(r, col)) / mag;
            for (std::size_t k = 0; k < v.dim(); ++k) v.at(k, col) *= rot;
            return;
        }
    }
}

}  // namespace

EigenSystem eigen_decomposition(const CMatrix& hermitian) {
    const std::size_t n = hermitian.dim();
    CMatrix a = hermitian;
    CMatrix v = CMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius());
    const double threshold = 1e-12 * scale;
    const double skip = 1e-15 * scale;

    bool converged = off_diagonal_norm(a) <= threshold;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a.at(p, q)) > skip) rotate(a, v, p, q);
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged) throw std::runtime_error("eigensolver failed to converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a.at(i, i).real() < a.at(j, j).real(); });

    EigenSystem out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a.at(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors.at(r, k) = v.at(r, order[k]);
        canonicalize_phase(out.vectors, k);
    }
    return out;
}

std::vector<std::pair<double, Projector>> spectral_decompose(const HermitianOperator& h) {
    EigenSystem es = eigen_decomposition(h.matrix());
    const std::size_t n = h.dim();

    std::vector<std::pair<double, Projector>> out;
    std::size_t start = 0;
    while (start < n) {
        std::size_t stop = start + 1;
        while (stop < n && es.values[stop] - es.values[stop - 1] <= kDegeneracyTol) ++stop;

        double mean = 0.0;
        CMatrix proj(n);
        for (std::size_t k = start; k < stop; ++k) {
            mean += es.values[k];
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    proj.at(r, c) += es.vectors.at(r, k) * std::conj(es.vectors.at(c, k));
        }
        mean /= static_cast<double>(stop - start);
        out.emplace_back(mean, Projector::create(std::move(proj)));
        start = stop;
    }
    return out;
}

Projector event_projector(const HermitianOperator& a, const BorelSet& delta) {
    CMatrix sum(a.dim());
    for (const auto& [value, proj] : spectral_decompose(a))
        if (delta.contains(value)) sum = sum + proj.matrix();
    return Projector::create(std::move(sum));
}

StateVector evolve(const StateVector& psi, const HermitianOperator& h, double t, double hbar) {
    if (psi.dim() != h.dim()) throw std::invalid_argument("state/operator dimension mismatch");
    if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
    if (hbar == 0.0 || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be finite and nonzero");

    EigenSystem es = eigen_decomposition(h.matrix());
    const std::size_t n = psi.dim();

    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx coord = 0.0;  // <v_k | psi>
        for (std::size_t r = 0; r < n; ++r) coord += std::conj(es.vectors.at(r, k)) * psi[r];
        cplx phase = std::exp(cplx(0.0, -es.values[k] * t / hbar));
        for (std::size_t r = 0; r < n; ++r) out[r] += phase * coord * es.vectors.at(r, k);
    }
    return StateVector::create(std::move(out), n);
}

}  // namespace potentia::hilbert

#include "potentia/hilbert/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace potentia::hilbert {

HermitianOperator HermitianOperator::create(CMatrix m) {
    if (!m.is_hermitian(kHermitianTol))
        throw std::invalid_argument("operator matrix is not Hermitian");
    return HermitianOperator(std::move(m));
}

Projector Projector::create(CMatrix m) {
    if (!m.is_hermitian(kHermitianTol))
        throw std::invalid_argument("projector matrix is not Hermitian");
    if (!m.is_idempotent(kHermitianTol))
        throw std::invalid_argument("projector matrix is not idempotent");
    return Projector(std::move(m));
}

std::size_t Projector::rank() const {
    return static_cast<std::size_t>(std::llround(matrix_.trace().real()));
}

Projector rank1_projector(const StateVector& v) {
    CMatrix m(v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.dim(); ++c) m.at(r, c) = v[r] * std::conj(v[c]);
    return Projector::create(std::move(m));
}

double born_weight(const StateVector& psi, const Projector& p) {
    if (psi.dim() != p.dim()) throw std::invalid_argument("state/projector dimension mismatch");

    cplx braket = inner(std::span<const cplx>(psi.amplitudes()), p.matrix().apply(psi.amplitudes()));
    if (std::abs(braket.imag()) > 1e-9)
        throw std::runtime_error("Born weight has a non-real component");

    double tr = (rank1_projector(psi).matrix() * p.matrix()).trace().real();
    if (std::abs(braket.real() - tr) > 1e-9)
        throw std::runtime_error("Born weight routes disagree");

    return std::clamp(braket.real(), 0.0, 1.0);
}

namespace {

bool interval_empty(const BorelSet::Interval& iv) {
    if (iv.lo > iv.hi) return true;
    return iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed);
}

bool contains_exact(const BorelSet::Interval& iv, double x) {
    if (x == iv.lo && iv.lo_closed) return true;
    if (x == iv.hi && iv.hi_closed) return true;
    return iv.lo < x && x < iv.hi;
}

}  // namespace

BorelSet::BorelSet(std::vector<Interval> intervals, std::vector<double> points) {
    std::erase_if(intervals, interval_empty);
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });

    for (Interval iv : intervals) {
        if (iv.lo == iv.hi) {
            points.push_back(iv.lo);
            continue;
        }
        if (!intervals_.empty()) {
            Interval& prev = intervals_.back();
            bool overlaps = iv.lo < prev.hi ||
                            (iv.lo == prev.hi && (iv.lo_closed || prev.hi_closed));
            if (overlaps) {
                if (iv.hi > prev.hi) {
                    prev.hi = iv.hi;
                    prev.hi_closed = iv.hi_closed;
                } else if (iv.hi == prev.hi) {
                    prev.hi_closed = prev.hi_closed || iv.hi_closed;
                }
                continue;
            }
        }
        intervals_.push_back(iv);
    }

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (double p : points) {
        bool covered = false;
        for (const Interval& iv : intervals_)
            if (contains_exact(iv, p)) {
                covered = true;
                break;
            }
        if (!covered) points_.push_back(p);
    }
}

BorelSet BorelSet::real_line() {
    double inf = std::numeric_limits<double>::infinity();
    return BorelSet({{-inf, inf, false, false}}, {});
}

bool BorelSet::contains(double x, double tol) const {
    for (double p : points_)
        if (std::abs(x - p) <= tol) return true;
    for (const Interval& iv : intervals_) {
        bool above = iv.lo_closed ? x >= iv.lo - tol : x > iv.lo + tol;
        bool below = iv.hi_closed ? x <= iv.hi + tol : x < iv.hi - tol;
        if (above && below) return true;
    }
    return false;
}

}  // namespace potentia::hilbert

#include "potentia/hilbert/operators.hpp"
#include "potentia/hilbert/serialize.hpp"
#include "potentia/hilbert/spectral.hpp"
#include "potentia/errors.hpp"
#include "support/random_fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace potentia::hilbert;
using potentia::ResourceLimitError;
using potentia::SplitMix64;
using potentia::hilbert::testing::random_basis;
using potentia::hilbert::testing::random_hermitian;
using potentia::hilbert::testing::random_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool close(const cplx& a, const cplx& b, double tol) { return std::abs(a - b) <= tol; }

StateVector sv(std::vector<cplx> amps) { return StateVector::create(std::move(amps)); }

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
    CMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

HermitianOperator sigma_x() { return HermitianOperator::create(mat2(0, 1, 1, 0)); }
HermitianOperator sigma_y() { return HermitianOperator::create(mat2(0, cplx(0, -1), cplx(0, 1), 0)); }
HermitianOperator sigma_z() { return HermitianOperator::create(mat2(1, 0, 0, -1)); }

double vec_distance(const StateVector& a, const StateVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("state construction validates norm, dimension and cap") {
    CHECK_NOTHROW(sv({1.0, 0.0}));
    CHECK_NOTHROW(sv({kInvSqrt2, kInvSqrt2}));
    CHECK_THROWS_AS(sv({0.9, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(sv({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::create(std::vector<cplx>(9, 0.0)), ResourceLimitError);
    CHECK_THROWS_AS(StateVector::create({0.5, 0.5, 0.5, 0.5, 0.0}, 4), ResourceLimitError);
}

TEST_CASE("inner product is conjugate-linear in its first argument") {
    auto e1 = StateVector::standard(2, 0);
    auto e2 = StateVector::standard(2, 1);
    CHECK(close(inner(e1, e1), 1.0, 1e-12));
    CHECK(close(inner(e1, e2), 0.0, 1e-12));
    CHECK(close(inner(sv({kInvSqrt2, kInvSqrt2}), e1), kInvSqrt2, 1e-12));

    auto i_e1 = sv({cplx(0, 1), 0.0});
    CHECK(close(inner(i_e1, e1), cplx(0, -1), 1e-12));
    CHECK(close(inner(e1, i_e1), cplx(0, 1), 1e-12));
}

TEST_CASE("rank-1 projectors are outer products") {
    auto p1 = rank1_projector(StateVector::standard(2, 0));
    CHECK(distance(p1.matrix(), mat2(1, 0, 0, 0)) < 1e-12);

    auto p2 = rank1_projector(sv({kInvSqrt2, kInvSqrt2}));
    CHECK(distance(p2.matrix(), mat2(0.5, 0.5, 0.5, 0.5)) < 1e-12);

    auto p3 = rank1_projector(sv({kInvSqrt2, cplx(0, kInvSqrt2)}));
    CHECK(distance(p3.matrix(), mat2(0.5, cplx(0, -0.5), cplx(0, 0.5), 0.5)) < 1e-12);

    auto v = sv({0.6, 0.8});
    auto pv = rank1_projector(v);
    CHECK(close(pv.matrix().trace(), 1.0, 1e-12));
    CHECK(pv.rank() == 1);
    auto applied = pv.matrix().apply(v.amplitudes());
    CHECK(close(applied[0], v[0], 1e-12));
    CHECK(close(applied[1], v[1], 1e-12));
}

TEST_CASE("Born weights match the pinned cases") {
    auto e1 = StateVector::standard(2, 0);
    CHECK(close(born_weight(e1, rank1_projector(e1)), 1.0, 1e-12));
    CHECK(close(born_weight(sv({kInvSqrt2, kInvSqrt2}), rank1_projector(e1)), 0.5, 1e-12));
    CHECK(close(born_weight(sv({std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)}),
                         rank1_projector(StateVector::standard(2, 1))),
                2.0 / 3.0, 1e-9));
}

TEST_CASE("Born weight routes agree on random pairs") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t dim = 2 + trial % 7;
        auto psi = random_state(rng, dim);
        auto p = rank1_projector(random_state(rng, dim));
        double w = born_weight(psi, p);  // throws if the two routes disagree
        CHECK(w >= 0.0);
        CHECK(w <= 1.0);
    }
}

TEST_CASE("Born weights over any basis sum to one") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t dim = 2 + trial % 5;
        auto psi = random_state(rng, dim);
        auto basis = random_basis(rng, "b", dim);
        double sum = 0.0;
        for (const auto& v : basis.vectors()) sum += born_weight(psi, rank1_projector(v));
        CHECK(close(sum, 1.0, 1e-8));
    }
}

TEST_CASE("spectral decomposition of the Pauli matrices") {
    auto z = spectral_decompose(sigma_z());
    REQUIRE(z.size() == 2);
    CHECK(close(z[0].first, -1.0, 1e-12));
    CHECK(close(z[1].first, 1.0, 1e-12));
    CHECK(distance(z[0].second.matrix(), mat2(0, 0, 0, 1)) < 1e-9);
    CHECK(distance(z[1].second.matrix(), mat2(1, 0, 0, 0)) < 1e-9);

    auto x = spectral_decompose(sigma_x());
    REQUIRE(x.size() == 2);
    CHECK(close(x[0].first, -1.0, 1e-9));
    CHECK(close(x[1].first, 1.0, 1e-9));
    CHECK(distance(x[0].second.matrix(), mat2(0.5, -0.5, -0.5, 0.5)) < 1e-9);
    CHECK(distance(x[1].second.matrix(), mat2(0.5, 0.5, 0.5, 0.5)) < 1e-9);

    auto y = spectral_decompose(sigma_y());
    REQUIRE(y.size() == 2);
    CHECK(close(y[0].first, -1.0, 1e-9));
    CHECK(close(y[1].first, 1.0, 1e-9));
    CHECK(distance(y[0].second.matrix(), mat2(0.5, cplx(0, 0.5), cplx(0, -0.5), 0.5)) < 1e-9);
}

TEST_CASE("identity collapses to one degenerate eigenpair") {
    auto pairs = spectral_decompose(HermitianOperator::create(CMatrix::identity(2)));
    REQUIRE(pairs.size() == 1);
    CHECK(close(pairs[0].first, 1.0, 1e-12));
    CHECK(pairs[0].second.rank() == 2);
    CHECK(distance(pairs[0].second.matrix(), CMatrix::identity(2)) < 1e-9);
}

TEST_CASE("nearly equal eigenvalues merge into one projector") {
    CMatrix m(3);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0 + 5e-9;
    m.at(2, 2) = 2.0;
    auto pairs = spectral_decompose(HermitianOperator::create(std::move(m)));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].second.rank() == 2);
    CHECK(close(pairs[0].first, 1.0 + 2.5e-9, 1e-12));
    CHECK(pairs[1].second.rank() == 1);
}

TEST_CASE("spectral decomposition reconstructs random Hermitian matrices") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t dim = 2 + trial % 5;
        auto h = HermitianOperator::create(random_hermitian(rng, dim));
        auto pairs = spectral_decompose(h);

        CMatrix sum(dim);
        CMatrix weighted(dim);
        for (const auto& [value, proj] : pairs) {
            sum = sum + proj.matrix();
            weighted = weighted + cplx(value) * proj.matrix();
        }
        CHECK(distance(sum, CMatrix::identity(dim)) < 1e-8);
        CHECK(distance(weighted, h.matrix()) < 1e-8);

        for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
            CHECK(pairs[i].first < pairs[i + 1].first);
            for (std::size_t j = i + 1; j < pairs.size(); ++j)
                CHECK((pairs[i].second.matrix() * pairs[j].second.matrix()).frobenius() < 1e-8);
        }
    }
}

TEST_CASE("eigenvector phases are canonical") {
    auto es = eigen_decomposition(sigma_x().matrix());
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(es.vectors.at(0, k).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(es.vectors.at(0, k).real() > 0.0);
    }
}

TEST_CASE("event projectors select spectral parts by Borel membership") {
    auto z = sigma_z();
    CHECK(distance(event_projector(z, BorelSet::point(1.0)).matrix(), mat2(1, 0, 0, 0)) < 1e-9);
    CHECK(distance(event_projector(z, BorelSet::closed(-2.0, 2.0)).matrix(),
                   CMatrix::identity(2)) < 1e-9);
    CHECK(event_projector(z, BorelSet::point(5.0)).rank() == 0);
    CHECK(distance(event_projector(z, BorelSet::real_line()).matrix(), CMatrix::identity(2)) <
          1e-9);

    auto both = BorelSet({{-1.5, -0.5, true, true}}, {1.0});
    CHECK(distance(event_projector(z, both).matrix(), CMatrix::identity(2)) < 1e-9);
}

TEST_CASE("Borel sets normalize and answer membership with tolerance") {
    BorelSet s({{0.0, 1.0, true, false}, {0.5, 2.0, true, true}, {5.0, 4.0, true, true}}, {1.0, 7.0, 7.0});
    REQUIRE(s.intervals().size() == 1);
    CHECK(s.intervals()[0].lo == 0.0);
    CHECK(s.intervals()[0].hi == 2.0);
    REQUIRE(s.points().size() == 1);
    CHECK(s.points()[0] == 7.0);

    CHECK(s.contains(0.0));
    CHECK(s.contains(2.0 + 1e-10));
    CHECK_FALSE(s.contains(2.1));
    CHECK(s.contains(7.0 + 1e-10));
    CHECK_FALSE(s.contains(6.9));

    BorelSet open({{0.0, 1.0, false, false}}, {});
    CHECK_FALSE(open.contains(0.0));
    CHECK_FALSE(open.contains(1e-12));
    CHECK(open.contains(0.5));
    CHECK_FALSE(open.contains(1.0));

    CHECK_FALSE(BorelSet().contains(0.0));
}

TEST_CASE("zero Hamiltonian leaves states untouched") {
    auto psi = sv({0.6, cplx(0, 0.8)});
    auto h0 = HermitianOperator::create(CMatrix(2));
    auto out = evolve(psi, h0, 3.7);
    CHECK(vec_distance(out, psi) < 1e-12);
}

TEST_CASE("diagonal evolution only shifts phases") {
    auto e1 = StateVector::standard(2, 0);
    auto out = evolve(e1, sigma_z(), 1.3);
    CHECK(close(born_weight(out, rank1_projector(e1)), 1.0, 1e-9));
    CHECK(close(out[0], std::exp(cplx(0, -1.3)), 1e-9));
}

TEST_CASE("a transverse field drives Rabi oscillations") {
    double omega = 1.0;
    CMatrix hx = cplx(omega / 2.0) * sigma_x().matrix();
    auto h = HermitianOperator::create(std::move(hx));
    auto e1 = StateVector::standard(2, 0);
    auto p2 = rank1_projector(StateVector::standard(2, 1));

    for (int i = 0; i <= 50; ++i) {
        double t = 0.17 * i;
        auto out = evolve(e1, h, t);
        double expected = std::pow(std::sin(omega * t / 2.0), 2);
        CHECK(close(born_weight(out, p2), expected, 1e-8));
        CHECK(close(out.norm(), 1.0, 1e-9));
    }
}

TEST_CASE("evolution is unitary and a semigroup on random inputs") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t dim = 2 + trial % 5;
        auto psi = random_state(rng, dim);
        auto h = HermitianOperator::create(random_hermitian(rng, dim));
        double t1 = 4.0 * rng.next_unit() - 2.0;
        double t2 = 4.0 * rng.next_unit() - 2.0;

        auto once = evolve(psi, h, t1);
        CHECK(close(once.norm(), 1.0, 1e-9));

        auto twice = evolve(once, h, t2);
        auto direct = evolve(psi, h, t1 + t2);
        CHECK(vec_distance(twice, direct) < 1e-8);
    }
}

TEST_CASE("evolution respects hbar and rejects bad arguments") {
    auto psi = sv({0.6, 0.8});
    auto h = sigma_x();
    CHECK(vec_distance(evolve(psi, h, 1.0, 2.0), evolve(psi, h, 0.5)) < 1e-12);
    CHECK(vec_distance(evolve(psi, h, 0.0), psi) < 1e-12);
    CHECK_THROWS_AS(evolve(psi, h, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve(psi, h, 1.0, 0.0), std::invalid_argument);

    SplitMix64 rng(1);
    CHECK_THROWS_AS(evolve(random_state(rng, 3), h, 1.0), std::invalid_argument);
}

TEST_CASE("change of basis gives coordinates in the chosen basis") {
    auto e1 = StateVector::standard(2, 0);
    auto identity = Basis::standard("z", 2);
    auto coords = change_of_basis(e1, identity);
    CHECK(close(coords[0], 1.0, 1e-12));
    CHECK(close(coords[1], 0.0, 1e-12));

    auto x_basis = Basis::create("x", {sv({kInvSqrt2, kInvSqrt2}), sv({kInvSqrt2, -kInvSqrt2})});
    auto xc = change_of_basis(e1, x_basis);
    CHECK(close(xc[0], kInvSqrt2, 1e-12));
    CHECK(close(xc[1], kInvSqrt2, 1e-12));

    auto psi = sv({0.6, cplx(0, 0.8)});
    auto same = change_of_basis(psi, identity);
    CHECK(close(same[0], psi[0], 1e-12));
    CHECK(close(same[1], psi[1], 1e-12));

    double total = 0.0;
    for (const cplx& c : xc) total += std::norm(c);
    CHECK(close(total, 1.0, 1e-9));
}

TEST_CASE("bases validate orthonormality") {
    CHECK_THROWS_AS(Basis::create("bad", {sv({1.0, 0.0}), sv({kInvSqrt2, kInvSqrt2})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Basis::create("short", {sv({1.0, 0.0})}), std::invalid_argument);
}

TEST_CASE("serialization is stable and round-rounded") {
    auto psi = sv({0.6, 0.8});
    CHECK(canonical_state_json(psi) == "[[0.6,0.0],[0.8,0.0]]");
    CHECK(state_fingerprint(psi) == state_fingerprint(sv({0.6, 0.8})));
    CHECK(state_fingerprint(psi) != state_fingerprint(sv({0.8, 0.6})));
}

#include <doctest.h>

#include "potentia/lattice/laws.hpp"
#include "potentia/lattice/subspace.hpp"

#include <cmath>
#include <complex>
#include <vector>

using potentia::SplitMix64;
using potentia::hilbert::BorelSet;
using potentia::hilbert::CMatrix;
using potentia::hilbert::cplx;
using potentia::hilbert::HermitianOperator;
using namespace potentia::lattice;

namespace {

std::vector<cplx> e(std::size_t dim, std::size_t i) {
    std::vector<cplx> v(dim, cplx(0.0));
    v[i] = 1.0;
    return v;
}

std::vector<cplx> mix(std::size_t dim, std::size_t i, std::size_t j, cplx wi, cplx wj) {
    std::vector<cplx> v(dim, cplx(0.0));
    v[i] = wi;
    v[j] = wj;
    return v;
}

constexpr double kInvSqrt2 = 0.70710678118654752;

HermitianOperator sigma_z() {
    CMatrix m(2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return HermitianOperator::create(m);
}

}  // namespace

TEST_CASE("trivial subspaces and spans") {
    Subspace z = Subspace::zero(3);
    CHECK(z.rank() == 0);
    CHECK(z.dim() == 3);
    CHECK(std::abs(z.projector().trace()) < 1e-14);

    Subspace f = Subspace::full(3);
    CHECK(f.rank() == 3);
    CHECK(potentia::hilbert::distance(f.projector(), CMatrix::identity(3)) < 1e-14);

    Subspace dependent = Subspace::span(2, {e(2, 0), e(2, 0), mix(2, 0, 1, 1.0, 1.0)});
    CHECK(dependent.rank() == 2);

    CHECK_THROWS_AS(Subspace::span(2, {e(3, 0)}), std::invalid_argument);
}

TEST_CASE("projectors pin the span") {
    Subspace line = Subspace::span(2, {e(2, 0)});
    CHECK(line.projector().at(0, 0) == cplx(1.0));
    CHECK(std::abs(line.projector().at(1, 1)) < 1e-14);

    Subspace diag = Subspace::span(2, {mix(2, 0, 1, 1.0, 1.0)});
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            CHECK(std::abs(diag.projector().at(r, c) - cplx(0.5)) < 1e-12);
}

TEST_CASE("subspace identity ignores the spanning set") {
    Subspace plane_a = Subspace::span(3, {e(3, 0), e(3, 1)});
    Subspace plane_b =
        Subspace::span(3, {mix(3, 0, 1, kInvSqrt2, kInvSqrt2), mix(3, 0, 1, kInvSqrt2, -kInvSqrt2)});
    CHECK(same_subspace(plane_a, plane_b));
    CHECK(same_subspace(Subspace::span(2, {e(2, 0), e(2, 1)}), Subspace::full(2)));
    CHECK_FALSE(same_subspace(plane_a, Subspace::span(3, {e(3, 0), e(3, 2)})));
    CHECK_FALSE(same_subspace(Subspace::zero(2), Subspace::zero(3)));
}

TEST_CASE("containment order") {
    Subspace line = Subspace::span(3, {e(3, 1)});
    Subspace plane = Subspace::span(3, {e(3, 0), e(3, 1)});
    CHECK(leq(line, plane));
    CHECK_FALSE(leq(plane, line));
    CHECK(leq(Subspace::zero(3), line));
    CHECK(leq(plane, Subspace::full(3)));
    CHECK(leq(plane, plane));
    CHECK_FALSE(leq(Subspace::span(3, {e(3, 2)}), plane));
    CHECK_FALSE(leq(Subspace::zero(2), Subspace::zero(3)));
}

TEST_CASE("meet picks out the intersection") {
    Subspace xz = Subspace::span(3, {e(3, 0), e(3, 2)});
    Subspace yz = Subspace::span(3, {e(3, 1), e(3, 2)});
    Subspace z_line = Subspace::span(3, {e(3, 2)});
    CHECK(same_subspace(meet(xz, yz), z_line));

    Subspace a_line = Subspace::span(2, {e(2, 0)});
    Subspace diag = Subspace::span(2, {mix(2, 0, 1, 1.0, 1.0)});
    CHECK(meet(a_line, diag).rank() == 0);

    CHECK(same_subspace(meet(xz, Subspace::full(3)), xz));
    CHECK(meet(xz, Subspace::zero(3)).rank() == 0);
    CHECK_THROWS_AS(meet(a_line, xz), std::invalid_argument);
}

TEST_CASE("join closes the union") {
    Subspace a_line = Subspace::span(2, {e(2, 0)});
    Subspace diag = Subspace::span(2, {mix(2, 0, 1, 1.0, 1.0)});
    CHECK(same_subspace(join(a_line, diag), Subspace::full(2)));

    Subspace x_line = Subspace::span(3, {e(3, 0)});
    Subspace y_line = Subspace::span(3, {e(3, 1)});
    CHECK(same_subspace(join(x_line, y_line), Subspace::span(3, {e(3, 0), e(3, 1)})));
    CHECK(same_subspace(join(x_line, Subspace::zero(3)), x_line));
    CHECK_THROWS_AS(join(a_line, x_line), std::invalid_argument);
}

TEST_CASE("orthocomplement") {
    Subspace x_line = Subspace::span(2, {e(2, 0)});
    CHECK(same_subspace(ortho(x_line), Subspace::span(2, {e(2, 1)})));
    CHECK(same_subspace(ortho(Subspace::zero(3)), Subspace::full(3)));
    CHECK(same_subspace(ortho(Subspace::full(3)), Subspace::zero(3)));

    Subspace diag = Subspace::span(2, {mix(2, 0, 1, kInvSqrt2, kInvSqrt2)});
    Subspace anti = Subspace::span(2, {mix(2, 0, 1, kInvSqrt2, -kInvSqrt2)});
    CHECK(same_subspace(ortho(diag), anti));

    Subspace plane = Subspace::span(4, {e(4, 0), e(4, 2)});
    Subspace comp = ortho(plane);
    CHECK(comp.rank() == 2);
    CHECK(meet(plane, comp).rank() == 0);
    CHECK(same_subspace(join(plane, comp), Subspace::full(4)));
}

TEST_CASE("orthomodular identity on contained pairs") {
    Subspace line = Subspace::span(3, {e(3, 0)});
    Subspace plane = Subspace::span(3, {e(3, 0), e(3, 1)});
    CHECK(orthomodular_holds(line, plane));
    CHECK(orthomodular_holds(Subspace::zero(3), plane));
    CHECK(orthomodular_holds(plane, plane));
    CHECK(orthomodular_holds(plane, Subspace::full(3)));
    CHECK_THROWS_AS(orthomodular_holds(plane, line), std::invalid_argument);
}

TEST_CASE("distributivity fails on the witness triple") {
    for (std::size_t dim : {2u, 3u, 4u}) {
        DistributivityWitness w = distributivity_witness(dim);
        CHECK_FALSE(w.distributive);
        CHECK(same_subspace(w.lhs, w.c));
        CHECK(w.lhs.rank() == 1);
        CHECK(w.rhs.rank() == 0);
        CHECK(same_subspace(w.rhs, Subspace::zero(dim)));
    }
    CHECK_THROWS_AS(distributivity_witness(1), std::invalid_argument);
}

TEST_CASE("events map to lattice elements") {
    HermitianOperator sz = sigma_z();
    Subspace up = event_to_element(sz, BorelSet::point(1.0));
    CHECK(same_subspace(up, Subspace::span(2, {e(2, 0)})));

    Subspace down = event_to_element(sz, BorelSet::closed(-2.0, 0.0));
    CHECK(same_subspace(down, Subspace::span(2, {e(2, 1)})));

    CHECK(same_subspace(event_to_element(sz, BorelSet::real_line()), Subspace::full(2)));
    CHECK(event_to_element(sz, BorelSet::point(5.0)).rank() == 0);

    // the complement event yields the orthocomplement element
    CHECK(same_subspace(ortho(up), down));
}

TEST_CASE("random subspaces are well formed") {
    SplitMix64 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t dim = 2 + rng.next_below(3);
        Subspace s = random_subspace(rng, dim);
        CHECK(s.rank() <= dim);
        CHECK(s.projector().is_hermitian(1e-10));
        CHECK(s.projector().is_idempotent(1e-10));

        auto [a, b] = random_comparable_pair(rng, dim);
        CHECK(leq(a, b));
    }
}

TEST_CASE("the lattice laws hold across dimensions") {
    for (std::size_t dim : {2u, 3u, 4u}) {
        LawReport report = verify_laws(dim, 30, 777 + dim);
        CHECK(report.ok());
        CHECK(report.checks.size() == 13);
        CHECK(report.total_trials() == 13 * 30);
        CHECK(report.total_failures() == 0);
    }
    CHECK_THROWS_AS(verify_laws(1, 5, 1), std::invalid_argument);
}

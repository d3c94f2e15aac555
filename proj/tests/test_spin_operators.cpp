#include <doctest.h>

#include <cmath>

#include "spinent/spin_operators.hpp"

using namespace spinent;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("half operators") {
    const SpinOperatorSet ops = build_operators(SpinSystem::Half);
    CHECK(ops.sz(0, 0) == Complex(0.5));
    CHECK(ops.sz(1, 1) == Complex(-0.5));
    CHECK(ops.sx(0, 1) == Complex(0.5));
    CHECK(ops.sy(0, 1) == -0.5 * kI);
    CHECK(max_abs(ops.s2 - Complex(0.75) * CMatrix::identity(2)) == 0.0);
}

TEST_CASE("spin-1 operators match the tabulated entries") {
    const SpinOperatorSet ops = build_operators(SpinSystem::One);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(ops.sx(0, 1) == Complex(r));
    CHECK(ops.sx(1, 2) == Complex(r));
    CHECK(ops.sy(1, 0) == r * kI);
    CHECK(ops.sy(2, 1) == r * kI);
    CHECK(max_abs(ops.s2 - Complex(2.0) * CMatrix::identity(3)) == 0.0);
    CHECK(max_abs(ops.s2 - (ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz)) <= 1e-12);
}

TEST_CASE("two-fermion operators match the tabulated 4x4 matrices entrywise") {
    const SpinOperatorSet ops = build_operators(SpinSystem::TwoFermion);

    const CMatrix sx = Complex(0.5) * CMatrix::from_rows(
                           {{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});
    const CMatrix sy = Complex(0.5) * CMatrix::from_rows({{0, -kI, -kI, 0},
                                                          {kI, 0, 0, -kI},
                                                          {kI, 0, 0, -kI},
                                                          {0, kI, kI, 0}});
    const CMatrix sz = CMatrix::from_rows(
        {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
    const CMatrix s2 = CMatrix::from_rows(
        {{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}});

    CHECK(max_abs(ops.sx - sx) == 0.0);
    CHECK(max_abs(ops.sy - sy) == 0.0);
    CHECK(max_abs(ops.sz - sz) == 0.0);
    CHECK(max_abs(ops.s2 - s2) == 0.0);
    CHECK(max_abs(ops.s2 - (ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz)) == 0.0);
}

TEST_CASE("spin algebra holds for every system") {
    for (const SpinSystem s : {SpinSystem::Half, SpinSystem::One, SpinSystem::TwoFermion}) {
        CAPTURE(system_name(s));
        const AlgebraReport rep = check_commutations(build_operators(s));
        CHECK(rep.pass);
        CHECK(rep.commutator_residual <= 1e-12);
        CHECK(rep.casimir_residual <= 1e-12);
        CHECK(rep.sum_of_squares_residual <= 1e-12);
    }
}

TEST_CASE("half commutators are exact") {
    const AlgebraReport rep = check_commutations(build_operators(SpinSystem::Half));
    CHECK(rep.commutator_residual == 0.0);
    CHECK(rep.casimir_residual == 0.0);
}

TEST_CASE("S^2 commutes exactly with each component for spin 1") {
    const SpinOperatorSet ops = build_operators(SpinSystem::One);
    CHECK(max_abs(commutator(ops.s2, ops.sx)) == 0.0);
    CHECK(max_abs(commutator(ops.s2, ops.sy)) == 0.0);
    CHECK(max_abs(commutator(ops.s2, ops.sz)) == 0.0);
}

TEST_CASE("check_commutations reports a corrupted operator without throwing") {
    SpinOperatorSet ops = build_operators(SpinSystem::TwoFermion);
    ops.sx(0, 1) += 0.05;
    const AlgebraReport rep = check_commutations(ops);
    CHECK_FALSE(rep.pass);
    CHECK(rep.commutator_residual > 1e-3);
}

TEST_CASE("spin components are traceless and S_z spectra are as expected") {
    const struct {
        SpinSystem system;
        std::vector<double> spectrum;
    } cases[] = {{SpinSystem::Half, {0.5, -0.5}},
                 {SpinSystem::One, {1.0, 0.0, -1.0}},
                 {SpinSystem::TwoFermion, {1.0, 0.0, 0.0, -1.0}}};
    for (const auto& c : cases) {
        const SpinOperatorSet ops = build_operators(c.system);
        CHECK(std::abs(trace_real(ops.sx)) <= 1e-12);
        CHECK(std::abs(trace_real(ops.sy)) <= 1e-12);
        CHECK(std::abs(trace_real(ops.sz)) <= 1e-12);
        const EigenDecomposition eig = hermitian_eigen(ops.sz);
        REQUIRE(eig.eigenvalues.size() == c.spectrum.size());
        for (std::size_t i = 0; i < c.spectrum.size(); ++i)
            CHECK(eig.eigenvalues[i] == doctest::Approx(c.spectrum[i]).epsilon(1e-12));
    }
}

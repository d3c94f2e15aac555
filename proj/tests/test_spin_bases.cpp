#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinent/entropy.hpp"
#include "spinent/rng.hpp"
#include "spinent/spin_bases.hpp"

using namespace spinent;

namespace {

constexpr double kPi = std::numbers::pi;

/// |<built column | tabulated column>| should be 1 when they span the same ray.
double column_overlap(const CMatrix& a, const CMatrix& b, int j) {
    Complex dot = 0.0;
    for (int i = 0; i < a.rows(); ++i) dot += std::conj(a(i, j)) * b(i, j);
    return std::abs(dot);
}

}  // namespace

TEST_CASE("half X basis columns") {
    const MeasurementBasis b = build_basis(build_operators(SpinSystem::Half), Axis::X);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b.columns(0, 0) - r) <= 1e-12);
    CHECK(std::abs(b.columns(1, 0) - r) <= 1e-12);
    CHECK(std::abs(b.columns(0, 1) - r) <= 1e-12);
    CHECK(std::abs(b.columns(1, 1) + r) <= 1e-12);
    CHECK(b.sa_eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.sa_eigenvalues[1] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("two-fermion Z basis reproduces the tabulated column order") {
    const MeasurementBasis built = build_basis(build_operators(SpinSystem::TwoFermion), Axis::Z);
    const MeasurementBasis tab = tabulated_basis(SpinSystem::TwoFermion, Axis::Z);
    CHECK(max_abs(built.columns - tab.columns) <= 1e-12);
    CHECK(built.sa_eigenvalues == std::vector<double>{1.0, 0.0, 0.0, -1.0});
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(built.s2_eigenvalues[j] ==
              doctest::Approx(tab.s2_eigenvalues[j]).epsilon(1e-10));
}

TEST_CASE("half and one Z bases are the identity") {
    CHECK(max_abs(build_basis(build_operators(SpinSystem::Half), Axis::Z).columns -
                  CMatrix::identity(2)) <= 1e-12);
    CHECK(max_abs(build_basis(build_operators(SpinSystem::One), Axis::Z).columns -
                  CMatrix::identity(3)) <= 1e-12);
}

TEST_CASE("constructed columns span the tabulated rays") {
    for (const SpinSystem s : {SpinSystem::Half, SpinSystem::One, SpinSystem::TwoFermion}) {
        const SpinOperatorSet ops = build_operators(s);
        for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            CAPTURE(system_name(s));
            CAPTURE(axis_name(axis));
            const MeasurementBasis built = build_basis(ops, axis);
            const MeasurementBasis tab = tabulated_basis(s, axis);
            for (int j = 0; j < built.columns.cols(); ++j)
                CHECK(column_overlap(built.columns, tab.columns, j) ==
                      doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("tabulated literal spot checks") {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};

    const MeasurementBasis hy = tabulated_basis(SpinSystem::Half, Axis::Y);
    CHECK(hy.columns(0, 0) == -i * r);
    CHECK(hy.columns(0, 1) == i * r);
    CHECK(hy.columns(1, 0) == Complex(r));

    const MeasurementBasis tx = tabulated_basis(SpinSystem::TwoFermion, Axis::X);
    CHECK(tx.columns(0, 1) == Complex(std::sqrt(2.0) / 2.0));
    CHECK(tx.columns(0, 3) == Complex(-0.5));
    CHECK(tx.columns(3, 1) == Complex(-std::sqrt(2.0) / 2.0));

    const MeasurementBasis oy = tabulated_basis(SpinSystem::One, Axis::Y);
    CHECK(oy.columns(0, 0) == Complex(-0.5));
    CHECK(oy.columns(1, 0) == -std::sqrt(2.0) / 2.0 * i);
    CHECK(oy.columns(2, 2) == Complex(0.5));
}

TEST_CASE("bases are unitary with valid eigen pairs and ordering") {
    for (const SpinSystem s : {SpinSystem::Half, SpinSystem::One, SpinSystem::TwoFermion}) {
        const SpinOperatorSet ops = build_operators(s);
        for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const MeasurementBasis b = build_basis(ops, axis);
            const int n = b.columns.rows();
            CHECK(max_abs(adjoint(b.columns) * b.columns - CMatrix::identity(n)) <= 1e-10);

            for (std::size_t j = 1; j < b.sa_eigenvalues.size(); ++j) {
                CHECK(b.sa_eigenvalues[j - 1] >= b.sa_eigenvalues[j] - 1e-12);
                if (std::abs(b.sa_eigenvalues[j - 1] - b.sa_eigenvalues[j]) < 1e-6)
                    CHECK(b.s2_eigenvalues[j - 1] >= b.s2_eigenvalues[j] - 1e-12);
            }
        }
    }
}

TEST_CASE("probabilities agree between constructed and tabulated bases") {
    Rng64 rng(37);
    for (const SpinSystem s : {SpinSystem::Half, SpinSystem::One, SpinSystem::TwoFermion}) {
        const SpinOperatorSet ops = build_operators(s);
        for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const MeasurementBasis built = build_basis(ops, axis);
            const MeasurementBasis tab = tabulated_basis(s, axis);
            for (int trial = 0; trial < 300; ++trial) {
                const CVector psi = random_state(rng, system_dim(s));
                const auto pa = probabilities(psi, built).probs;
                const auto pb = probabilities(psi, tab).probs;
                for (std::size_t k = 0; k < pa.size(); ++k)
                    CHECK(std::abs(pa[k] - pb[k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("unsplittable degeneracy is reported") {
    // Fake operator set where S_axis and S^2 are both the identity: the
    // (eigenvalue, casimir) pairs cannot distinguish the columns.
    SpinOperatorSet fake;
    fake.system = SpinSystem::Half;
    fake.sx = CMatrix::identity(2);
    fake.sy = CMatrix::identity(2);
    fake.sz = CMatrix::identity(2);
    fake.s2 = CMatrix::identity(2);
    CHECK_THROWS_AS(build_basis(fake, Axis::X), DegeneracyUnresolved);
}

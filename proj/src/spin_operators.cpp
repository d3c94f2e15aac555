#include "spinent/spin_operators.hpp"

#include <algorithm>
#include <cmath>

namespace spinent {

int system_dim(SpinSystem s) {
    switch (s) {
        case SpinSystem::Half: return 2;
        case SpinSystem::One: return 3;
        case SpinSystem::TwoFermion: return 4;
    }
    throw Error("unknown spin system");
}

std::string system_name(SpinSystem s) {
    switch (s) {
        case SpinSystem::Half: return "half";
        case SpinSystem::One: return "one";
        case SpinSystem::TwoFermion: return "two-fermion";
    }
    throw Error("unknown spin system");
}

namespace {

const Complex kI{0.0, 1.0};

CMatrix pauli_x() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }
CMatrix pauli_y() { return CMatrix::from_rows({{0, -kI}, {kI, 0}}); }
CMatrix pauli_z() { return CMatrix::from_rows({{1, 0}, {0, -1}}); }

CMatrix two_fermion_component(const CMatrix& sigma) {
    const CMatrix half_sigma = Complex(0.5) * sigma;
    const CMatrix id = CMatrix::identity(2);
    return kron(half_sigma, id) + kron(id, half_sigma);
}

}  // namespace

SpinOperatorSet build_operators(SpinSystem system) {
    SpinOperatorSet ops;
    ops.system = system;
    switch (system) {
        case SpinSystem::Half:
            ops.sx = Complex(0.5) * pauli_x();
            ops.sy = Complex(0.5) * pauli_y();
            ops.sz = Complex(0.5) * pauli_z();
            // s(s+1) = 3/4; no conventional literal to transcribe here.
            ops.s2 = ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz;
            break;
        case SpinSystem::One: {
            const double r = 1.0 / std::sqrt(2.0);
            ops.sx = Complex(r) * CMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
            ops.sy = Complex(r) * CMatrix::from_rows({{0, -kI, 0}, {kI, 0, -kI}, {0, kI, 0}});
            ops.sz = CMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}});
            ops.s2 = Complex(2.0) * CMatrix::identity(3);
            break;
        }
        case SpinSystem::TwoFermion:
            ops.sx = two_fermion_component(pauli_x());
            ops.sy = two_fermion_component(pauli_y());
            ops.sz = two_fermion_component(pauli_z());
            ops.s2 = CMatrix::from_rows(
                {{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}});
            break;
    }
    return ops;
}

AlgebraReport check_commutations(const SpinOperatorSet& ops) {
    const CMatrix* s[3] = {&ops.sx, &ops.sy, &ops.sz};

    double comm = 0.0;
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int c = (a + 2) % 3;
        comm = std::max(comm, max_abs(commutator(*s[a], *s[b]) - kI * *s[c]));
    }

    double casimir = 0.0;
    for (int a = 0; a < 3; ++a) casimir = std::max(casimir, max_abs(commutator(ops.s2, *s[a])));

    const double sum_sq =
        max_abs(ops.s2 - (ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz));

    constexpr double kTol = 1e-12;
    return AlgebraReport{comm, casimir, sum_sq,
                         comm <= kTol && casimir <= kTol && sum_sq <= kTol};
}

}  // namespace spinent

#pragma once

#include <string>

#include "spinent/linalg.hpp"

namespace spinent {

/// The three spin systems handled by the toolkit: one spin-1/2 particle,
/// one spin-1 particle, and two spin-1/2 fermions.
enum class SpinSystem { Half, One, TwoFermion };

int system_dim(SpinSystem s);
std::string system_name(SpinSystem s);

/// S_x, S_y, S_z and S^2 for a system, in units of hbar (hbar = 1).
struct SpinOperatorSet {
    SpinSystem system;
    CMatrix sx, sy, sz, s2;
};

/// Builds the operator set. Half: S_a = sigma_a / 2. One: the standard 3x3
/// spin-1 matrices. TwoFermion: S_a = sigma_a/2 (x) I + I (x) sigma_a/2.
/// S^2 is stored in its conventional exact form (2I for spin 1, the
/// triplet/singlet block matrix for two fermions, 3/4 I for spin 1/2) and
/// must match Sx^2 + Sy^2 + Sz^2 entrywise to 1e-12.
SpinOperatorSet build_operators(SpinSystem system);

/// Residuals of the spin algebra. Failures are reported, never thrown.
struct AlgebraReport {
    double commutator_residual;      // max over cyclic (a,b,c) of ||[S_a,S_b] - i S_c||_max
    double casimir_residual;         // max over a of ||[S^2, S_a]||_max
    double sum_of_squares_residual;  // ||S^2 - (Sx^2 + Sy^2 + Sz^2)||_max
    bool pass;                       // all residuals <= 1e-12
};

AlgebraReport check_commutations(const SpinOperatorSet& ops);

}  // namespace spinent

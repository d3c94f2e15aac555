#pragma once

// Test-only reference values and independent computation routes. Expected
// numbers were frozen from 40-digit arbitrary-precision evaluations of the
// closed forms / definitions named next to each constant; the helpers below
// re-derive quantities with plain loops so they cannot share a bug with the
// library code they check.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "spinent/linalg.hpp"

namespace oracle {

inline constexpr double kLn2 = 0.6931471805599453;
inline constexpr double kTwoLn2 = 1.3862943611198906;
inline constexpr double kThreeLn2 = 2.0794415416798357;
inline constexpr double kFourLn2 = 2.7725887222397812;

// Spin-1/2 closed form at (theta_alpha, nu) = (pi/4, pi/4):
// P_x = P_y = ((2 ± sqrt 2)/4, ...), P_z = (1/2, 1/2).
inline constexpr double kHalfEntropyAtQuarterQuarter = 1.5261382419593202;

// Same closed form at (0.3, 2.1).
inline constexpr double kHalfEntropyAt03_21 = 1.5174196406967586;

// Entangled-family closed forms at theta_ab = 0.3.
inline constexpr double kXiEntropyAt03 = 1.8736297739453779;
inline constexpr double kChiEntropyAt03 = 2.0373774490808733;

// -3/4 ln(3/4) - 1/4 ln(1/4): traced entropy of xi(pi/6).
inline constexpr double kVonNeumannAtPiSixth = 0.5623351446188084;

// Spin-1 state (0.4, 0.7, 1.1, 0.0, 2.3): probabilities through the
// tabulated reference bases, then the triple-sum entropy.
inline constexpr double kOneEntropyGeneric = 3.0535327111002123;

// Two-fermion state (0.2+0.3i, -0.4+0.1i, 0.5-0.2i, 0.1)/sqrt(0.6):
// spin entropy and traced von Neumann entropy.
inline constexpr double kTwoFermionEntropyGeneric = 2.2962410664879499;
inline constexpr double kTwoFermionVonNeumannGeneric = 0.4505612088663047;

inline std::array<spinent::Complex, 4> generic_two_fermion_coeffs() {
    const double s = 1.0 / std::sqrt(0.6);
    return {spinent::Complex(0.2 * s, 0.3 * s), spinent::Complex(-0.4 * s, 0.1 * s),
            spinent::Complex(0.5 * s, -0.2 * s), spinent::Complex(0.1 * s, 0.0)};
}

/// Brute-force partial traces over the outer product psi psi†, written as
/// bare index loops on std::complex values.
inline std::array<std::array<std::complex<double>, 2>, 2> brute_trace_out_first(
    const spinent::CVector& psi) {
    std::array<std::array<std::complex<double>, 2>, 2> out{};
    for (int ib = 0; ib < 2; ++ib)
        for (int jb = 0; jb < 2; ++jb)
            for (int a = 0; a < 2; ++a)
                out[static_cast<std::size_t>(ib)][static_cast<std::size_t>(jb)] +=
                    psi[2 * a + ib] * std::conj(psi[2 * a + jb]);
    return out;
}

inline std::array<std::array<std::complex<double>, 2>, 2> brute_trace_out_second(
    const spinent::CVector& psi) {
    std::array<std::array<std::complex<double>, 2>, 2> out{};
    for (int ia = 0; ia < 2; ++ia)
        for (int ja = 0; ja < 2; ++ja)
            for (int b = 0; b < 2; ++b)
                out[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ja)] +=
                    psi[2 * ia + b] * std::conj(psi[2 * ja + b]);
    return out;
}

/// Naive |<column|psi>|^2 against an explicit column list.
inline std::vector<double> naive_probabilities(
    const std::vector<std::vector<std::complex<double>>>& basis_columns,
    const spinent::CVector& psi) {
    std::vector<double> probs;
    for (const auto& col : basis_columns) {
        std::complex<double> amp = 0.0;
        for (std::size_t i = 0; i < col.size(); ++i)
            amp += std::conj(col[i]) * psi[static_cast<int>(i)];
        probs.push_back(std::norm(amp));
    }
    return probs;
}

/// Plain-loop Shannon entropy of a triple product distribution.
inline double naive_triple_entropy(const std::vector<double>& px, const std::vector<double>& py,
                                   const std::vector<double>& pz) {
    double s = 0.0;
    for (double a : px)
        for (double b : py)
            for (double c : pz) {
                const double p = a * b * c;
                if (p > 0.0) s -= p * std::log(p);
            }
    return s;
}

}  // namespace oracle

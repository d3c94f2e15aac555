#pragma once

#include <array>

#include "spinent/linalg.hpp"

namespace spinent {

/// Spin-1/2 pure state e^{i phi} (e^{i nu} cos(theta_alpha), sin(theta_alpha)).
struct HalfParams {
    double theta_alpha = 0.0;  // [0, pi/2]
    double nu = 0.0;           // [0, 2pi)
    double phi = 0.0;          // [0, 2pi), global phase
};

/// Two-fermion entangled family parameter; alpha is a global phase.
struct EntangledParams {
    double theta_ab = 0.0;  // [0, 2pi)
    double alpha = 0.0;     // [0, 2pi)
};

/// Spin-1 pure state; phi_y is a global phase.
struct OneParams {
    double theta_alpha = 0.0;  // [0, pi/2]
    double theta_beta = 0.0;   // [0, pi/2]
    double phi_x = 0.0;        // [0, 2pi)
    double phi_y = 0.0;        // [0, 2pi)
    double phi_z = 0.0;        // [0, 2pi)
};

enum class Bell { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

const char* bell_name(Bell b);

CVector half_state(const HalfParams& p);

/// xi = e^{i alpha} (0, cos, -sin, 0), chi = e^{i alpha} (cos, 0, 0, -sin)
/// in the product z-basis |++>, |+->, |-+>, |-->.
CVector xi_state(const EntangledParams& p);
CVector chi_state(const EntangledParams& p);

CVector bell_state(Bell which);

CVector one_state(const OneParams& p);

/// General two-fermion state from raw coefficients (c++, c+-, c-+, c--).
/// Throws NotNormalized unless sum |c|^2 = 1 within 1e-8; coefficients are
/// stored as given.
CVector two_fermion_state(const std::array<Complex, 4>& coeffs);

}  // namespace spinent

#include "spinent/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "param_range.hpp"

namespace spinent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using detail::checked_angle;

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

const char* bell_name(Bell b) {
    switch (b) {
        case Bell::PsiPlus: return "psi_plus";
        case Bell::PsiMinus: return "psi_minus";
        case Bell::PhiPlus: return "phi_plus";
        case Bell::PhiMinus: return "phi_minus";
    }
    throw Error("unknown Bell state");
}

CVector half_state(const HalfParams& p) {
    const double theta = checked_angle(p.theta_alpha, 0.0, kPi / 2.0, false, "theta_alpha");
    const double nu = checked_angle(p.nu, 0.0, kTwoPi, true, "nu");
    const double phi = checked_angle(p.phi, 0.0, kTwoPi, true, "phi");
    return phase(phi) * CVector{phase(nu) * std::cos(theta), std::sin(theta)};
}

CVector xi_state(const EntangledParams& p) {
    const double theta = checked_angle(p.theta_ab, 0.0, kTwoPi, true, "theta_ab");
    const double alpha = checked_angle(p.alpha, 0.0, kTwoPi, true, "alpha");
    return phase(alpha) * CVector{0.0, std::cos(theta), -std::sin(theta), 0.0};
}

CVector chi_state(const EntangledParams& p) {
    const double theta = checked_angle(p.theta_ab, 0.0, kTwoPi, true, "theta_ab");
    const double alpha = checked_angle(p.alpha, 0.0, kTwoPi, true, "alpha");
    return phase(alpha) * CVector{std::cos(theta), 0.0, 0.0, -std::sin(theta)};
}

CVector bell_state(Bell which) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (which) {
        case Bell::PsiPlus: return {0.0, r, r, 0.0};
        case Bell::PsiMinus: return {0.0, r, -r, 0.0};
        case Bell::PhiPlus: return {r, 0.0, 0.0, r};
        case Bell::PhiMinus: return {r, 0.0, 0.0, -r};
    }
    throw Error("unknown Bell state");
}

CVector one_state(const OneParams& p) {
    const double ta = checked_angle(p.theta_alpha, 0.0, kPi / 2.0, false, "theta_alpha");
    const double tb = checked_angle(p.theta_beta, 0.0, kPi / 2.0, false, "theta_beta");
    const double px = checked_angle(p.phi_x, 0.0, kTwoPi, true, "phi_x");
    const double py = checked_angle(p.phi_y, 0.0, kTwoPi, true, "phi_y");
    const double pz = checked_angle(p.phi_z, 0.0, kTwoPi, true, "phi_z");
    const double ca = std::cos(ta);
    return phase(py) * CVector{ca * std::cos(tb) * phase(px), std::sin(ta),
                               ca * std::sin(tb) * phase(pz)};
}

CVector two_fermion_state(const std::array<Complex, 4>& coeffs) {
    double norm_sq = 0.0;
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw NotNormalized("non-finite coefficient");
        }
        norm_sq += std::norm(c);
    }
    if (std::abs(norm_sq - 1.0) > 1e-8) {
        throw NotNormalized("coefficient norm^2 = " + std::to_string(norm_sq) +
                            ", expected 1 within 1e-8");
    }
    return {coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
}

}  // namespace spinent

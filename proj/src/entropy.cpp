#include "spinent/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "param_range.hpp"

namespace spinent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

using detail::checked_angle;

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

ProbabilityDistribution sanitize_probabilities(std::vector<double> raw) {
    double sum = 0.0;
    for (double& p : raw) {
        if (!std::isfinite(p) || p < -1e-9) {
            throw Error("probability entry " + std::to_string(p) +
                        " below the roundoff floor");
        }
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (sum <= 0.0) throw Error("probability mass vanished");
    for (double& p : raw) p /= sum;
    return ProbabilityDistribution{std::move(raw)};
}

ProbabilityDistribution probabilities(const CVector& psi, const MeasurementBasis& basis) {
    if (psi.dim() != basis.columns.rows()) {
        throw DimensionMismatch("state dimension does not match basis");
    }
    const CVector amps = adjoint(basis.columns) * psi;
    std::vector<double> p(static_cast<std::size_t>(amps.dim()));
    for (int i = 0; i < amps.dim(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amps[i]);
    return sanitize_probabilities(std::move(p));
}

double shannon_entropy(const ProbabilityDistribution& p) {
    double s = 0.0;
    for (double q : p.probs) s -= xlnx(q);
    return s;
}

double product_distribution_entropy(const ProbabilityDistribution& px,
                                    const ProbabilityDistribution& py,
                                    const ProbabilityDistribution& pz) {
    double s = 0.0;
    for (double a : px.probs)
        for (double b : py.probs)
            for (double c : pz.probs) s -= xlnx(a * b * c);
    return s;
}

EntropyReport spin_entropy(const CVector& psi, const std::array<MeasurementBasis, 3>& bases) {
    if (bases[0].axis != Axis::X || bases[1].axis != Axis::Y || bases[2].axis != Axis::Z) {
        throw Error("bases must be ordered X, Y, Z");
    }

    EntropyReport r;
    r.px = probabilities(psi, bases[0]);
    r.py = probabilities(psi, bases[1]);
    r.pz = probabilities(psi, bases[2]);
    r.s_x = shannon_entropy(r.px);
    r.s_y = shannon_entropy(r.py);
    r.s_z = shannon_entropy(r.pz);
    r.total = r.s_x + r.s_y + r.s_z;

    const double triple = product_distribution_entropy(r.px, r.py, r.pz);
    if (std::abs(triple - r.total) > 1e-10) {
        throw ConsistencyError("product-distribution entropy disagrees with per-axis sum");
    }
    return r;
}

double closed_form_half(double theta_alpha, double nu) {
    theta_alpha = checked_angle(theta_alpha, 0.0, kPi / 2.0, false, "theta_alpha");
    nu = checked_angle(nu, 0.0, kTwoPi, true, "nu");
    const double s2t = std::sin(2.0 * theta_alpha);
    const double cx = s2t * std::cos(nu);
    const double cy = s2t * std::sin(nu);
    const double c2 = std::cos(theta_alpha) * std::cos(theta_alpha);
    const double s2 = std::sin(theta_alpha) * std::sin(theta_alpha);
    double total = 0.0;
    total -= xlnx((1.0 + cx) / 2.0) + xlnx((1.0 - cx) / 2.0);
    total -= xlnx((1.0 + cy) / 2.0) + xlnx((1.0 - cy) / 2.0);
    total -= xlnx(c2) + xlnx(s2);
    return total;
}

double closed_form_xi(double theta_ab) {
    theta_ab = checked_angle(theta_ab, 0.0, kTwoPi, true, "theta_ab");
    const double s = std::sin(2.0 * theta_ab);
    return (4.0 - s) * kLn2 - 1.5 * (xlnx(1.0 - s) + xlnx(1.0 + s));
}

double closed_form_chi(double theta_ab) {
    theta_ab = checked_angle(theta_ab, 0.0, kTwoPi, true, "theta_ab");
    const double s = std::sin(2.0 * theta_ab);
    const double c2 = std::cos(theta_ab) * std::cos(theta_ab);
    const double s2 = std::sin(theta_ab) * std::sin(theta_ab);
    return 3.0 * kLn2 - xlnx(c2) - xlnx(s2) - (xlnx(1.0 - s) + xlnx(1.0 + s));
}

namespace {

double reduced_entropy(const CMatrix& reduced) {
    const EigenDecomposition eig = hermitian_eigen(reduced);
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -1e-10) throw BadDensityMatrix("negative reduced eigenvalue");
        s -= xlnx(std::max(lambda, 0.0));
    }
    return s;
}

}  // namespace

double von_neumann_traced(const CVector& psi4) {
    if (psi4.dim() != 4) throw DimensionMismatch("expected a two-fermion state (dim 4)");
    const double n = psi4.norm();
    if (std::abs(n * n - 1.0) > 1e-8) throw NotNormalized("state norm differs from 1");

    const CVector unit = Complex(1.0 / n, 0.0) * psi4;
    const CMatrix rho = outer(unit, unit);

    const double s_first = reduced_entropy(partial_trace_second(rho));
    const double s_second = reduced_entropy(partial_trace_first(rho));
    if (std::abs(s_first - s_second) > 1e-9) {
        throw ConsistencyError("the two reduced entropies disagree");
    }
    return s_first;
}

}  // namespace spinent

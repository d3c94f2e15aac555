#pragma once

#include <array>
#include <vector>

#include "spinent/spin_bases.hpp"

namespace spinent {

/// Measurement-outcome distribution along one axis. Entries are clamped to
/// [0, 1] and renormalized on construction (see sanitize_probabilities).
struct ProbabilityDistribution {
    std::vector<double> probs;
};

/// Per-axis distributions and Shannon entropies plus their sum, in nats.
struct EntropyReport {
    ProbabilityDistribution px, py, pz;
    double s_x = 0.0, s_y = 0.0, s_z = 0.0;
    double total = 0.0;
};

/// Clamps negative roundoff (above -1e-9) to zero, renormalizes by the sum.
/// Anything below -1e-9 signals an upstream bug and throws.
ProbabilityDistribution sanitize_probabilities(std::vector<double> raw);

/// probs[i] = |(B† psi)_i|^2.
ProbabilityDistribution probabilities(const CVector& psi, const MeasurementBasis& basis);

/// -sum p ln p with 0 ln 0 = 0, in nats.
double shannon_entropy(const ProbabilityDistribution& p);

/// Entropy of the product distribution P(i,j,k) = Px(i) Py(j) Pz(k),
/// evaluated as the explicit triple sum. Equals the sum of the per-axis
/// entropies up to roundoff; kept as an independent route for cross-checks.
double product_distribution_entropy(const ProbabilityDistribution& px,
                                    const ProbabilityDistribution& py,
                                    const ProbabilityDistribution& pz);

/// Full spin-entropy report for a state against the X, Y, Z bases of its
/// system. Internally verifies the triple-sum route against the per-axis
/// sum to 1e-10 and throws ConsistencyError on disagreement.
EntropyReport spin_entropy(const CVector& psi, const std::array<MeasurementBasis, 3>& bases);

/// Closed form for the spin-1/2 entropy:
///   P_x± = (1 ± sin 2θ cos ν)/2, P_y± = (1 ± sin 2θ sin ν)/2,
///   P_z = (cos²θ, sin²θ).
double closed_form_half(double theta_alpha, double nu);

/// Closed forms for the entangled families, s = sin 2θ:
///   S_xi  = (4 - s) ln 2 - 3/2 [(1-s) ln(1-s) + (1+s) ln(1+s)]
///   S_chi = 3 ln 2 - cos²θ ln cos²θ - sin²θ ln sin²θ
///           - [(1-s) ln(1-s) + (1+s) ln(1+s)]
double closed_form_xi(double theta_ab);
double closed_form_chi(double theta_ab);

/// Von Neumann entropy of the reduced density matrix after tracing out one
/// particle of a two-fermion pure state. Both reductions are computed and
/// must agree to 1e-9 (they do for pure states).
double von_neumann_traced(const CVector& psi4);

}  // namespace spinent

#pragma once

#include <functional>
#include <vector>

namespace spinent {

struct OptResult {
    std::vector<double> params;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Derivative-free Nelder-Mead minimization with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). Converged means
/// both the simplex diameter fell below tol_x and the value spread below
/// tol_f before max_iter ran out. Throws NonFiniteObjective if the objective
/// ever returns NaN/Inf.
OptResult nelder_mead(const Objective& objective, std::vector<double> x0, double tol_x,
                      double tol_f, int max_iter);

/// State families whose entropy can be scanned for extrema. Global-phase
/// parameters are excluded from the search space (they cannot move the
/// entropy): Half -> (theta_alpha, nu), One -> (theta_alpha, theta_beta,
/// phi_x, phi_z), Xi/Chi -> (theta_ab).
enum class Family { Half, One, Xi, Chi };

const char* family_name(Family f);

/// Deterministic multistart search for entropy extrema of a family:
///   1. scan a grid_per_dim^dims grid over the parameter box,
///   2. keep grid points no worse than any axis neighbor (wrap-aware in
///      periodic dimensions), collapsing connected equal-value plateaus
///      to one representative,
///   3. refine the refine_starts best candidates with Nelder-Mead
///      (closed dimensions clamped, periodic ones wrapped),
///   4. cluster refined minima (1e-4 in value, 1e-3 in wrapped parameter
///      distance) and return them sorted by value.
std::vector<OptResult> find_extrema(Family family, int grid_per_dim, int refine_starts,
                                    double tol);

/// Entropy of the family state at the given (reduced) parameters, after
/// clamping/wrapping into the box. This is the objective find_extrema uses.
double family_entropy(Family family, const std::vector<double>& params);

/// Number of reduced parameters of a family.
int family_dims(Family family);

}  // namespace spinent

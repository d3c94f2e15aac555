#pragma once

#include <array>
#include <vector>

#include "spinent/spin_operators.hpp"

namespace spinent {

enum class Axis { X, Y, Z };

inline const char* axis_name(Axis a) { return a == Axis::X ? "x" : (a == Axis::Y ? "y" : "z"); }

/// Measurement basis along one axis: unitary matrix of simultaneous
/// (S_axis, S^2) eigenvector columns plus their eigenvalue labels.
/// Columns are ordered by S_axis eigenvalue descending, ties by S^2
/// eigenvalue descending; each column's global phase makes its first
/// component above 1e-9 in magnitude real and positive.
struct MeasurementBasis {
    Axis axis;
    SpinSystem system;
    CMatrix columns;
    std::vector<double> sa_eigenvalues;
    std::vector<double> s2_eigenvalues;
};

/// Constructs the basis numerically: diagonalize S_axis, then split each
/// degenerate S_axis eigenspace by diagonalizing the restriction of S^2.
/// Throws DegeneracyUnresolved if any two columns end up with the same
/// (S_axis, S^2) eigenvalue pair.
MeasurementBasis build_basis(const SpinOperatorSet& ops, Axis axis);

/// Hard-coded reference bases for every (system, axis), used to
/// cross-validate build_basis. Probabilities computed through either route
/// must agree; individual columns may differ by a phase.
MeasurementBasis tabulated_basis(SpinSystem system, Axis axis);

/// The X, Y, Z bases of one system, in that order.
std::array<MeasurementBasis, 3> build_all_bases(const SpinOperatorSet& ops);
std::array<MeasurementBasis, 3> tabulated_all_bases(SpinSystem system);

}  // namespace spinent

#include "spinent/spin_bases.hpp"

#include <cmath>
#include <string>

namespace spinent {

namespace {

constexpr double kDegenerateTol = 1e-6;   // eigenvalue grouping
constexpr double kResidualTol = 1e-9;     // eigenvector quality gate
constexpr double kPhasePivotTol = 1e-9;   // first-nonzero scan threshold

CVector column(const CMatrix& m, int j) {
    CVector v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

/// Rotates the columns of a degenerate S_axis eigenspace so they also
/// diagonalize S^2, and returns the resulting S^2 eigenvalues (descending).
std::vector<double> split_by_casimir(CMatrix& vectors, int first, int count,
                                     const CMatrix& s2) {
    const int n = vectors.rows();

    // Restriction W† S^2 W on the subspace.
    CMatrix w(n, count);
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < n; ++i) w(i, j) = vectors(i, first + j);
    const CMatrix restricted = adjoint(w) * (s2 * w);

    if (count == 1) return {restricted(0, 0).real()};

    const EigenDecomposition sub = hermitian_eigen(restricted);
    const CMatrix rotated = w * sub.eigenvectors;
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < n; ++i) vectors(i, first + j) = rotated(i, j);
    return sub.eigenvalues;
}

void fix_column_phase(CMatrix& m, int j) {
    for (int i = 0; i < m.rows(); ++i) {
        const double mag = std::abs(m(i, j));
        if (mag > kPhasePivotTol) {
            const Complex rot = std::conj(m(i, j)) / mag;
            for (int k = 0; k < m.rows(); ++k) m(k, j) *= rot;
            return;
        }
    }
}

const CMatrix& axis_operator(const SpinOperatorSet& ops, Axis axis) {
    switch (axis) {
        case Axis::X: return ops.sx;
        case Axis::Y: return ops.sy;
        case Axis::Z: return ops.sz;
    }
    throw Error("unknown axis");
}

void validate_basis(const MeasurementBasis& basis, const SpinOperatorSet& ops) {
    const int n = basis.columns.rows();

    const CMatrix gram = adjoint(basis.columns) * basis.columns;
    if (max_abs(gram - CMatrix::identity(n)) > 1e-10) {
        throw ConsistencyError("basis columns are not unitary");
    }

    const CMatrix& sa = axis_operator(ops, basis.axis);
    for (int j = 0; j < n; ++j) {
        const CVector v = column(basis.columns, j);
        CVector ra = sa * v;
        CVector r2 = ops.s2 * v;
        for (int i = 0; i < n; ++i) {
            ra[i] -= basis.sa_eigenvalues[static_cast<std::size_t>(j)] * v[i];
            r2[i] -= basis.s2_eigenvalues[static_cast<std::size_t>(j)] * v[i];
        }
        if (ra.norm() > kResidualTol || r2.norm() > kResidualTol) {
            throw ConsistencyError("basis eigen-residual exceeds tolerance");
        }
    }

    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const bool same_sa = std::abs(basis.sa_eigenvalues[static_cast<std::size_t>(j)] -
                                          basis.sa_eigenvalues[static_cast<std::size_t>(k)]) <
                                 kDegenerateTol;
            const bool same_s2 = std::abs(basis.s2_eigenvalues[static_cast<std::size_t>(j)] -
                                          basis.s2_eigenvalues[static_cast<std::size_t>(k)]) <
                                 kDegenerateTol;
            if (same_sa && same_s2) {
                throw DegeneracyUnresolved(
                    "columns " + std::to_string(j) + " and " + std::to_string(k) +
                    " share the same (S_axis, S^2) eigenvalue pair");
            }
        }
    }
}

}  // namespace

MeasurementBasis build_basis(const SpinOperatorSet& ops, Axis axis) {
    const CMatrix& sa = axis_operator(ops, axis);
    EigenDecomposition eig = hermitian_eigen(sa);
    const int n = static_cast<int>(eig.eigenvalues.size());

    MeasurementBasis basis;
    basis.axis = axis;
    basis.system = ops.system;
    basis.sa_eigenvalues = eig.eigenvalues;
    basis.s2_eigenvalues.resize(static_cast<std::size_t>(n));

    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n &&
               std::abs(eig.eigenvalues[static_cast<std::size_t>(end)] -
                        eig.eigenvalues[static_cast<std::size_t>(start)]) < kDegenerateTol) {
            ++end;
        }
        const std::vector<double> s2_vals =
            split_by_casimir(eig.eigenvectors, start, end - start, ops.s2);
        for (int j = start; j < end; ++j)
            basis.s2_eigenvalues[static_cast<std::size_t>(j)] =
                s2_vals[static_cast<std::size_t>(j - start)];
        start = end;
    }

    for (int j = 0; j < n; ++j) fix_column_phase(eig.eigenvectors, j);
    basis.columns = std::move(eig.eigenvectors);

    validate_basis(basis, ops);
    return basis;
}

namespace {

const Complex kI{0.0, 1.0};

MeasurementBasis make_tabulated(SpinSystem system, Axis axis, CMatrix cols,
                                std::vector<double> sa, std::vector<double> s2) {
    MeasurementBasis b;
    b.axis = axis;
    b.system = system;
    b.columns = std::move(cols);
    b.sa_eigenvalues = std::move(sa);
    b.s2_eigenvalues = std::move(s2);
    return b;
}

}  // namespace

MeasurementBasis tabulated_basis(SpinSystem system, Axis axis) {
    const double r = 1.0 / std::sqrt(2.0);
    const double h = 0.5;

    switch (system) {
        case SpinSystem::Half: {
            const std::vector<double> sa{0.5, -0.5};
            const std::vector<double> s2{0.75, 0.75};
            switch (axis) {
                case Axis::X:
                    return make_tabulated(system, axis,
                                          Complex(r) * CMatrix::from_rows({{1, 1}, {1, -1}}),
                                          sa, s2);
                case Axis::Y:
                    return make_tabulated(system, axis,
                                          Complex(r) * CMatrix::from_rows({{-kI, kI}, {1, 1}}),
                                          sa, s2);
                case Axis::Z:
                    return make_tabulated(system, axis, CMatrix::identity(2), sa, s2);
            }
            break;
        }
        case SpinSystem::One: {
            const std::vector<double> sa{1.0, 0.0, -1.0};
            const std::vector<double> s2{2.0, 2.0, 2.0};
            const double q = std::sqrt(2.0);
            switch (axis) {
                case Axis::X:
                    return make_tabulated(
                        system, axis,
                        Complex(h) * CMatrix::from_rows({{1, q, 1}, {q, 0, -q}, {1, -q, 1}}),
                        sa, s2);
                case Axis::Y:
                    return make_tabulated(
                        system, axis,
                        Complex(h) * CMatrix::from_rows(
                                         {{-1, q, -1}, {-q * kI, 0, q * kI}, {1, q, 1}}),
                        sa, s2);
                case Axis::Z:
                    return make_tabulated(system, axis, CMatrix::identity(3), sa, s2);
            }
            break;
        }
        case SpinSystem::TwoFermion: {
            const std::vector<double> sa{1.0, 0.0, 0.0, -1.0};
            const std::vector<double> s2{2.0, 2.0, 0.0, 2.0};
            const double q = std::sqrt(2.0);
            switch (axis) {
                case Axis::X:
                    return make_tabulated(system, axis,
                                          Complex(h) * CMatrix::from_rows({{1, q, 0, -1},
                                                                           {1, 0, q, 1},
                                                                           {1, 0, -q, 1},
                                                                           {1, -q, 0, -1}}),
                                          sa, s2);
                case Axis::Y:
                    return make_tabulated(system, axis,
                                          Complex(h) * CMatrix::from_rows({{-kI, q, 0, kI},
                                                                           {1, 0, q, 1},
                                                                           {1, 0, -q, 1},
                                                                           {kI, q, 0, -kI}}),
                                          sa, s2);
                case Axis::Z:
                    return make_tabulated(system, axis,
                                          CMatrix::from_rows({{1, 0, 0, 0},
                                                              {0, r, r, 0},
                                                              {0, r, -r, 0},
                                                              {0, 0, 0, 1}}),
                                          sa, s2);
            }
            break;
        }
    }
    throw Error("unknown system/axis");
}

std::array<MeasurementBasis, 3> build_all_bases(const SpinOperatorSet& ops) {
    return {build_basis(ops, Axis::X), build_basis(ops, Axis::Y), build_basis(ops, Axis::Z)};
}

std::array<MeasurementBasis, 3> tabulated_all_bases(SpinSystem system) {
    return {tabulated_basis(system, Axis::X), tabulated_basis(system, Axis::Y),
            tabulated_basis(system, Axis::Z)};
}

}  // namespace spinent

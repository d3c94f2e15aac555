#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "spinent/errors.hpp"

namespace spinent {

using Complex = std::complex<double>;

/// Small dense complex matrix, row-major. Sized for spin systems (dim <= 4),
/// but nothing below hard-codes the dimension.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols);

    static CMatrix identity(int n);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex s);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> a_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(Complex s, CMatrix m);

/// Complex column vector.
class CVector {
public:
    CVector() = default;
    explicit CVector(int dim);
    CVector(std::initializer_list<Complex> entries);

    int dim() const { return static_cast<int>(v_.size()); }
    Complex& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const Complex& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

    double norm() const;

private:
    std::vector<Complex> v_;
};

CVector operator*(const CMatrix& m, const CVector& v);
CVector operator*(Complex s, CVector v);

CMatrix adjoint(const CMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// [A, B] = AB - BA.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Outer product v w†.
CMatrix outer(const CVector& v, const CVector& w);

double max_abs(const CMatrix& m);
double trace_real(const CMatrix& m);

/// Entrywise Hermiticity check, |A(i,j) - conj(A(j,i))| <= tol.
bool is_hermitian(const CMatrix& m, double tol = 1e-12);

/// Throws on any NaN/Inf entry.
void ensure_finite(const CMatrix& m);
void ensure_finite(const CVector& v);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    CMatrix eigenvectors;             // orthonormal columns, same order
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations,
/// swept until the off-diagonal Frobenius norm falls below 1e-13.
/// Eigenvalues come back descending; ties keep the rotation order
/// (callers that need a finer rule split degenerate subspaces themselves).
/// Throws NotHermitian if the input fails the Hermiticity check.
EigenDecomposition hermitian_eigen(const CMatrix& h);

/// Reduced density matrix of the second subsystem (the first is traced out).
/// rho must be 4x4, Hermitian, trace 1 within 1e-10; throws BadDensityMatrix.
CMatrix partial_trace_first(const CMatrix& rho);

/// Reduced density matrix of the first subsystem.
CMatrix partial_trace_second(const CMatrix& rho);

}  // namespace spinent

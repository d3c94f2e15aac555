#include "spinent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinent {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrix shapes differ");
    }
}

}  // namespace

CMatrix::CMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    CMatrix m(nr, nc);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc) {
            throw DimensionMismatch("ragged initializer rows");
        }
        int j = 0;
        for (Complex z : row) m(i, j++) = z;
        ++i;
    }
    ensure_finite(m);
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(Complex s, CMatrix m) { return m *= s; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw DimensionMismatch("matrix product shapes");
    CMatrix out(lhs.rows(), rhs.cols());
    for (int i = 0; i < lhs.rows(); ++i) {
        for (int k = 0; k < lhs.cols(); ++k) {
            const Complex l = lhs(i, k);
            if (l == 0.0) continue;
            for (int j = 0; j < rhs.cols(); ++j) out(i, j) += l * rhs(k, j);
        }
    }
    return out;
}

CVector::CVector(int dim) : v_(static_cast<std::size_t>(dim)) {}

CVector::CVector(std::initializer_list<Complex> entries) : v_(entries) {
    ensure_finite(*this);
}

double CVector::norm() const {
    double s = 0.0;
    for (const auto& z : v_) s += std::norm(z);
    return std::sqrt(s);
}

CVector operator*(const CMatrix& m, const CVector& v) {
    if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector shapes");
    CVector out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

CVector operator*(Complex s, CVector v) {
    for (int i = 0; i < v.dim(); ++i) v[i] *= s;
    return v;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix outer(const CVector& v, const CVector& w) {
    CMatrix out(v.dim(), w.dim());
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j) out(i, j) = v[i] * std::conj(w[j]);
    return out;
}

double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

double trace_real(const CMatrix& m) {
    double t = 0.0;
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i).real();
    return t;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

void ensure_finite(const CMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                throw Error("non-finite matrix entry");
}

void ensure_finite(const CVector& v) {
    for (int i = 0; i < v.dim(); ++i)
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
            throw Error("non-finite vector entry");
}

namespace {

double off_diagonal_norm(const CMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const CMatrix& h) {
    if (h.rows() != h.cols()) throw NotHermitian("eigendecomposition needs a square matrix");
    if (!is_hermitian(h)) throw NotHermitian("matrix fails the Hermiticity check");

    const int n = h.rows();
    CMatrix a = h;
    CMatrix v = CMatrix::identity(n);

    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > kOffTol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq < 1e-300) continue;

                // Phase-rotate column q so a(p,q) becomes real, then apply a
                // real Jacobi rotation annihilating it.
                const Complex phase = a(p, q) / apq;
                for (int i = 0; i < n; ++i) {
                    a(i, q) *= std::conj(phase);
                    v(i, q) *= std::conj(phase);
                }
                for (int j = 0; j < n; ++j) a(q, j) *= phase;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.eigenvectors = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues.push_back(a(order[static_cast<std::size_t>(j)],
                                    order[static_cast<std::size_t>(j)])
                                      .real());
        for (int i = 0; i < n; ++i)
            out.eigenvectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

namespace {

void check_density_matrix(const CMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw BadDensityMatrix("partial trace expects a 4x4 density matrix");
    }
    if (!is_hermitian(rho, 1e-10)) throw BadDensityMatrix("density matrix is not Hermitian");
    if (std::abs(trace_real(rho) - 1.0) > 1e-10) throw BadDensityMatrix("trace differs from 1");
}

}  // namespace

CMatrix partial_trace_first(const CMatrix& rho) {
    check_density_matrix(rho);
    CMatrix out(2, 2);
    for (int ib = 0; ib < 2; ++ib)
        for (int jb = 0; jb < 2; ++jb)
            for (int a = 0; a < 2; ++a) out(ib, jb) += rho(2 * a + ib, 2 * a + jb);
    return out;
}

CMatrix partial_trace_second(const CMatrix& rho) {
    check_density_matrix(rho);
    CMatrix out(2, 2);
    for (int ia = 0; ia < 2; ++ia)
        for (int ja = 0; ja < 2; ++ja)
            for (int b = 0; b < 2; ++b) out(ia, ja) += rho(2 * ia + b, 2 * ja + b);
    return out;
}

}  // namespace spinent

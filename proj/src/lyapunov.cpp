#include "omm/lyapunov.hpp"

#include <complex>

#include <Eigen/Eigenvalues>

namespace omm {

namespace {

using Mat64 = Eigen::Matrix<double, 64, 64>;
using Vec64 = Eigen::Matrix<double, 64, 1>;

Vec64 vectorize(const Mat8& M) {
    Vec64 v;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) v(8 * j + i) = M(i, j);
    return v;
}

Mat8 unvectorize(const Vec64& v) {
    Mat8 M;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) M(i, j) = v(8 * j + i);
    return M;
}

// I (x) A + A (x) I, acting on column-stacked vec(V).
Mat64 kron_sum(const Mat8& A) {
    Mat64 K = Mat64::Zero();
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) {
                K(8 * j + i, 8 * j + k) += A(i, k);  // I (x) A
                K(8 * k + i, 8 * j + i) += A(k, j);  // A (x) I: block (k,j) gets A(k,j) I
            }
        }
    return K;
}

Mat8 solve_kron(const Mat8& A, const Mat8& D) {
    const Mat64 K = kron_sum(A);
    Eigen::PartialPivLU<Mat64> lu(K);
    Mat8 V = unvectorize(lu.solve(-vectorize(D)));

    // One round of iterative refinement with the factored system; keeps the
    // residual near machine precision even close to the stability boundary.
    for (int round = 0; round < 2; ++round) {
        const Mat8 R = A * V + V * A.transpose() + D;
        const double rnorm = R.norm();
        if (rnorm <= 1e-13 * std::max(1.0, D.norm())) break;
        V -= unvectorize(lu.solve(vectorize(R)));
    }
    return V;
}

// Triangular solve of T Y + Y T^H = -Q for upper-triangular complex T,
// column by column from the last.
Mat8 solve_schur(const Mat8& A, const Mat8& D) {
    using MatC = Eigen::Matrix<std::complex<double>, 8, 8>;
    using VecC = Eigen::Matrix<std::complex<double>, 8, 1>;

    Eigen::ComplexSchur<MatC> schur(A.cast<std::complex<double>>());
    if (schur.info() != Eigen::Success)
        throw std::runtime_error("solve_lyapunov: Schur decomposition failed");
    const MatC T = schur.matrixT();
    const MatC U = schur.matrixU();

    MatC Q = -(U.adjoint() * D.cast<std::complex<double>>() * U);
    MatC Y = MatC::Zero();
    for (int k = 7; k >= 0; --k) {
        VecC rhs = Q.col(k);
        for (int j = k + 1; j < 8; ++j) rhs -= Y.col(j) * std::conj(T(k, j));
        // Back-substitute (T + conj(T_kk) I) y = rhs.
        const std::complex<double> shift = std::conj(T(k, k));
        for (int i = 7; i >= 0; --i) {
            std::complex<double> acc = rhs(i);
            for (int j = i + 1; j < 8; ++j) acc -= T(i, j) * Y(j, k);
            Y(i, k) = acc / (T(i, i) + shift);
        }
    }
    return (U * Y * U.adjoint()).real();
}

}  // namespace

double lyapunov_residual(const Mat8& A, const Mat8& D, const Mat8& V) {
    return (A * V + V * A.transpose() + D).norm() / std::max(1.0, D.norm());
}

CovarianceSolution solve_lyapunov(const Mat8& A, const Mat8& D, const StabilityReport& rep,
                                  LyapunovMethod method) {
    if (!rep.stable) throw UnstableSystemError(rep.max_real_eig);
    if ((D - D.transpose()).norm() > 1e-9 * std::max(1.0, D.norm()))
        throw std::invalid_argument("solve_lyapunov: D must be symmetric");

    // Rescaling A and D by a common factor leaves V unchanged; solve near
    // unit scale for conditioning.
    const double s = A.cwiseAbs().maxCoeff();
    const double scale = (s > 0.0) ? s : 1.0;
    const Mat8 As = A / scale;
    const Mat8 Ds = D / scale;

    Mat8 V = (method == LyapunovMethod::KroneckerLU) ? solve_kron(As, Ds) : solve_schur(As, Ds);
    if (!V.allFinite()) throw std::runtime_error("solve_lyapunov: singular solve");

    const double vnorm = V.norm();
    if (vnorm > 0.0 && (V - V.transpose()).norm() > 1e-9 * vnorm)
        throw std::runtime_error("solve_lyapunov: solution asymmetry exceeds tolerance");
    V = 0.5 * (V + V.transpose()).eval();

    CovarianceSolution sol;
    sol.V = V;
    sol.residual = lyapunov_residual(A, D, V);
    sol.marginal_warning = rep.marginal;
    return sol;
}

CovarianceSolution solve_lyapunov(const Mat8& A, const Mat8& D, LyapunovMethod method) {
    return solve_lyapunov(A, D, stability(A), method);
}

}  // namespace omm

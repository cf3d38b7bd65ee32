#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "omm/dynamics.hpp"

namespace omm {

/// Thrown when a Lyapunov solve is requested for a drift matrix that is not
/// strictly stable.
class UnstableSystemError : public std::runtime_error {
public:
    explicit UnstableSystemError(double max_real_eig)
        : std::runtime_error("Lyapunov solve requires a strictly stable drift matrix "
                             "(max eigenvalue real part = " + std::to_string(max_real_eig) +
                             " rad/s)"),
          max_real_eig(max_real_eig) {}
    double max_real_eig;
};

enum class LyapunovMethod {
    KroneckerLU,   // vectorize to a 64x64 dense system; exact at this size
    ComplexSchur,  // triangular back-substitution; generalizes to any mode count
};

struct CovarianceSolution {
    Mat8 V;                        // symmetric steady covariance, vacuum variance 1/2
    double residual = 0.0;         // ||AV + VA^T + D||_F / max(1, ||D||_F)
    bool marginal_warning = false; // drift margin thinner than the marginal threshold
};

/// Steady-state covariance from A V + V A^T = -D.
/// Pre: A strictly stable (checked internally), D symmetric PSD.
/// Post: residual <= 1e-10, V symmetrized.
/// Throws UnstableSystemError / std::runtime_error on singular or asymmetric solves.
CovarianceSolution solve_lyapunov(const Mat8& A, const Mat8& D,
                                  LyapunovMethod method = LyapunovMethod::KroneckerLU);

/// Variant that reuses an existing stability report instead of recomputing it.
CovarianceSolution solve_lyapunov(const Mat8& A, const Mat8& D, const StabilityReport& rep,
                                  LyapunovMethod method = LyapunovMethod::KroneckerLU);

/// Normalized defect of a candidate solution: ||AV + VA^T + D||_F / max(1, ||D||_F).
double lyapunov_residual(const Mat8& A, const Mat8& D, const Mat8& V);

}  // namespace omm

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "omm/params.hpp"

namespace omm {

using Mat8 = Eigen::Matrix<double, 8, 8>;

// Quadrature ordering everywhere: (X_a, Y_a, X_c, Y_c, X_m, Y_m, q, p).

/// Drift matrix of the linearized fluctuation dynamics, du/dt = A u + n(t).
Mat8 build_drift(const EffectiveParams& p);

/// Diagonal diffusion matrix of the steady-state Lyapunov equation:
/// diag(ka, ka, kc, kc, km(2nm+1), km(2nm+1), 0, gb(2nb+1)).
Mat8 build_diffusion(const EffectiveParams& p);

/// Stable points with a margin thinner than this (rad/s) are flagged marginal:
/// the steady covariance blows up as the margin vanishes.
inline constexpr double marginal_stability_threshold = 1e3;

struct StabilityReport {
    bool stable = false;
    bool marginal = false;                       // stable but max_real_eig > -threshold
    double max_real_eig = 0.0;                   // rad/s
    std::array<std::complex<double>, 8> eigenvalues{};
};

/// Full spectrum of the drift matrix; stable iff every real part is
/// strictly negative. The matrix is balanced (diagonal power-of-two
/// similarity scaling) before the eigensolve, which leaves the spectrum
/// unchanged. Throws std::runtime_error if the eigensolver fails.
StabilityReport stability(const Mat8& A);

/// Balancing used by stability(); exposed for tests.
Mat8 balance(const Mat8& A);

}  // namespace omm

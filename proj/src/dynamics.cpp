#include "omm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace omm {

Mat8 build_drift(const EffectiveParams& p) {
    p.validate();
    Mat8 A = Mat8::Zero();

    A(0, 0) = -p.kappa_a;
    A(0, 1) = p.Delta_a;
    A(1, 0) = -p.Delta_a;
    A(1, 1) = -p.kappa_a;

    A(2, 2) = -p.kappa_c;
    A(2, 3) = p.Delta_c;
    A(3, 2) = -p.Delta_c;
    A(3, 3) = -p.kappa_c;

    A(4, 4) = -p.kappa_m;
    A(4, 5) = p.Delta_m;
    A(5, 4) = -p.Delta_m;
    A(5, 5) = -p.kappa_m;

    A(6, 7) = p.omega_b;
    A(7, 6) = -p.omega_b;
    A(7, 7) = -p.gamma_b;

    if (p.convention == DriftConvention::XRow) {
        // Couplings into the X rows; momentum row driven by the Y quadratures.
        A(0, 6) = p.G_a;
        A(2, 6) = -p.G_c;
        A(4, 6) = -p.G_m;
        A(7, 1) = -p.G_a;
        A(7, 3) = p.G_c;
        A(7, 5) = p.G_m;
    } else {
        // Couplings into the Y rows; momentum row driven by the X quadratures.
        // Related to XRow by rotating each optical/magnon mode by pi/2.
        A(1, 6) = p.G_a;
        A(3, 6) = -p.G_c;
        A(5, 6) = -p.G_m;
        A(7, 0) = p.G_a;
        A(7, 2) = -p.G_c;
        A(7, 4) = -p.G_m;
    }
    return A;
}

Mat8 build_diffusion(const EffectiveParams& p) {
    p.validate();
    const double nbar_m =
        p.nbar_m_override ? *p.nbar_m_override : thermal_occupation(p.omega_m, p.T);
    const double nbar_b =
        p.nbar_b_override ? *p.nbar_b_override : thermal_occupation(p.omega_b, p.T);

    Mat8 D = Mat8::Zero();
    D(0, 0) = D(1, 1) = p.kappa_a;
    D(2, 2) = D(3, 3) = p.kappa_c;
    D(4, 4) = D(5, 5) = p.kappa_m * (2.0 * nbar_m + 1.0);
    D(6, 6) = 0.0;  // position row is noise-free
    D(7, 7) = p.gamma_b * (2.0 * nbar_b + 1.0);
    return D;
}

Mat8 balance(const Mat8& A) {
    // Parlett-Reinsch balancing restricted to power-of-two factors, so the
    // similarity transform is exact in floating point.
    Mat8 B = A;
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < 8; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < 8; ++j) {
                if (j == i) continue;
                r += std::abs(B(i, j));
                c += std::abs(B(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            double f = 1.0;
            const double s = r + c;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r < 0.95 * s && f != 1.0) {
                converged = false;
                B.row(i) /= f;
                B.col(i) *= f;
            }
        }
    }
    return B;
}

StabilityReport stability(const Mat8& A) {
    if (!A.allFinite()) throw std::invalid_argument("stability: drift matrix has non-finite entries");

    Eigen::EigenSolver<Mat8> solver(balance(A), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("stability: eigensolver failed to converge");

    StabilityReport rep;
    double max_re = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i) {
        rep.eigenvalues[i] = solver.eigenvalues()(i);
        max_re = std::max(max_re, rep.eigenvalues[i].real());
    }
    rep.max_real_eig = max_re;
    rep.stable = max_re < 0.0;
    rep.marginal = rep.stable && max_re > -marginal_stability_threshold;
    return rep;
}

}  // namespace omm

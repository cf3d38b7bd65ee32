#pragma once

#include <complex>

#include "omm/params.hpp"

namespace omm {

/// Classical operating point of the driven system. Amplitudes are
/// dimensionless, q_s is the dimensionless mechanical displacement.
struct SteadyState {
    std::complex<double> a_s{0.0, 0.0};
    std::complex<double> c_s{0.0, 0.0};
    std::complex<double> m_s{0.0, 0.0};
    double q_s = 0.0;

    // Effective detunings at the operating point (bare detunings shifted by
    // the static displacement) and effective couplings G_o = sqrt(2) g_o |o_s|.
    double Delta_a = 0.0;
    double Delta_c = 0.0;
    double Delta_m = 0.0;
    double G_a = 0.0;
    double G_c = 0.0;
    double G_m = 0.0;

    bool converged = false;
    int iterations = 0;
    double residual = 0.0;  // |q - q(modes(q))| / max(1, |q|)

    // Carried through so the effective parameter record is self-contained.
    double omega_b = 0.0;
    double omega_m = 0.0;
    double kappa_a = 0.0;
    double kappa_c = 0.0;
    double kappa_m = 0.0;
    double gamma_b = 0.0;
    double T = 0.0;
};

struct SteadyStateOptions {
    double damping = 0.5;       // q <- (1 - beta) q + beta q_new
    double tolerance = 1e-12;
    int max_iterations = 10000;
};

/// Damped fixed-point solve of the static displacement, starting from q = 0.
/// Only the branch continuously connected to q = 0 is reported. A
/// non-convergent iteration returns converged = false (possible bistability),
/// never a silent answer.
SteadyState solve_steady_state(const PhysicalDriveParams& phys,
                               const SteadyStateOptions& opts = {});

/// Effective parameter record at a converged operating point; the magnon
/// frequency for thermal occupation is omega_0 + Delta_m0 unless overridden
/// downstream. Throws std::invalid_argument on unconverged input.
EffectiveParams effective_from_steady(const SteadyState& ss);

/// Single update of the displacement map: recomputes the mode amplitudes at
/// fixed q and returns the displacement they source. Exposed for the
/// root-bracketing oracle in the tests.
double displacement_map(const PhysicalDriveParams& phys, double q);

}  // namespace omm

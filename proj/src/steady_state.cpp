#include "omm/steady_state.hpp"

#include <cmath>
#include <stdexcept>

namespace omm {

namespace {

struct ModeAmplitudes {
    std::complex<double> a_s, c_s, m_s;
    double Delta_a, Delta_c, Delta_m;
};

ModeAmplitudes amplitudes_at(const PhysicalDriveParams& p, double q) {
    using namespace std::complex_literals;
    ModeAmplitudes amp;
    // Displacement shifts the detunings with the same sign pattern as the
    // couplings enter the Hamiltonian: -g_a, +g_c, +g_m.
    amp.Delta_a = p.Delta_a0 - p.g_a * q;
    amp.Delta_c = p.Delta_c0 + p.g_c * q;
    amp.Delta_m = p.Delta_m0 + p.g_m * q;

    const double eta_a = drive_amplitude_cavity(p.P_a, p.kappa_a, p.omega_L + p.Delta_a0);
    const double eta_c = drive_amplitude_cavity(p.P_c, p.kappa_c, p.omega_L + p.Delta_c0);
    const double Omega =
        drive_amplitude_magnon(p.B_d, p.N_d, PhysicalConstants::gyromagnetic_ratio);

    amp.a_s = eta_a / (p.kappa_a + 1i * amp.Delta_a);
    amp.c_s = eta_c / (p.kappa_c + 1i * amp.Delta_c);
    amp.m_s = Omega / (p.kappa_m + 1i * amp.Delta_m);
    return amp;
}

double displacement_from(const PhysicalDriveParams& p, const ModeAmplitudes& amp) {
    return (-p.g_a * std::norm(amp.a_s) + p.g_c * std::norm(amp.c_s) +
            p.g_m * std::norm(amp.m_s)) /
           p.omega_b;
}

}  // namespace

double displacement_map(const PhysicalDriveParams& phys, double q) {
    return displacement_from(phys, amplitudes_at(phys, q));
}

SteadyState solve_steady_state(const PhysicalDriveParams& phys, const SteadyStateOptions& opts) {
    phys.validate();
    if (!(opts.damping > 0.0 && opts.damping <= 1.0))
        throw std::invalid_argument("solve_steady_state: damping must be in (0, 1]");

    double q = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        const double q_new = displacement_map(phys, q);
        residual = std::abs(q - q_new) / std::max(1.0, std::abs(q));
        if (residual <= opts.tolerance) {
            q = q_new;
            break;
        }
        q = (1.0 - opts.damping) * q + opts.damping * q_new;
    }

    const ModeAmplitudes amp = amplitudes_at(phys, q);
    SteadyState ss;
    ss.a_s = amp.a_s;
    ss.c_s = amp.c_s;
    ss.m_s = amp.m_s;
    ss.q_s = q;
    ss.Delta_a = amp.Delta_a;
    ss.Delta_c = amp.Delta_c;
    ss.Delta_m = amp.Delta_m;
    ss.G_a = std::sqrt(2.0) * phys.g_a * std::abs(amp.a_s);
    ss.G_c = std::sqrt(2.0) * phys.g_c * std::abs(amp.c_s);
    ss.G_m = std::sqrt(2.0) * phys.g_m * std::abs(amp.m_s);
    ss.converged = residual <= opts.tolerance;
    ss.iterations = iter;
    ss.residual = residual;

    ss.omega_b = phys.omega_b;
    ss.omega_m = phys.omega_0 + phys.Delta_m0;
    ss.kappa_a = phys.kappa_a;
    ss.kappa_c = phys.kappa_c;
    ss.kappa_m = phys.kappa_m;
    ss.gamma_b = phys.gamma_b;
    ss.T = phys.T;
    return ss;
}

EffectiveParams effective_from_steady(const SteadyState& ss) {
    if (!ss.converged)
        throw std::invalid_argument("effective_from_steady: steady state did not converge");
    EffectiveParams p;
    p.Delta_a = ss.Delta_a;
    p.Delta_c = ss.Delta_c;
    p.Delta_m = ss.Delta_m;
    p.G_a = ss.G_a;
    p.G_c = ss.G_c;
    p.G_m = ss.G_m;
    p.omega_b = ss.omega_b;
    p.omega_m = ss.omega_m;
    p.kappa_a = ss.kappa_a;
    p.kappa_c = ss.kappa_c;
    p.kappa_m = ss.kappa_m;
    p.gamma_b = ss.gamma_b;
    p.T = ss.T;
    p.validate();
    return p;
}

}  // namespace omm

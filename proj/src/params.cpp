#include "omm/params.hpp"

#include <cmath>
#include <stdexcept>

namespace omm {

DriftConvention drift_convention_from_string(const std::string& s) {
    if (s == "paper") return DriftConvention::XRow;
    if (s == "symmetric") return DriftConvention::YRow;
    throw std::invalid_argument("drift_convention must be 'paper' or 'symmetric', got '" + s + "'");
}

std::string to_string(DriftConvention c) {
    return c == DriftConvention::XRow ? "paper" : "symmetric";
}

void EffectiveParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("invalid parameters: ") + what);
    };
    require(std::isfinite(Delta_a) && std::isfinite(Delta_c) && std::isfinite(Delta_m),
            "detunings must be finite");
    require(G_a >= 0.0 && G_c >= 0.0 && G_m >= 0.0, "couplings must be >= 0");
    require(kappa_a >= 0.0 && kappa_c >= 0.0 && kappa_m >= 0.0 && gamma_b >= 0.0,
            "decay rates must be >= 0");
    require(T >= 0.0, "temperature must be >= 0");
    require(omega_b > 0.0, "omega_b must be > 0");
    require(omega_m > 0.0, "omega_m must be > 0");
    if (nbar_m_override) require(*nbar_m_override >= 0.0, "nbar_m_override must be >= 0");
    if (nbar_b_override) require(*nbar_b_override >= 0.0, "nbar_b_override must be >= 0");
}

void PhysicalDriveParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("invalid physical parameters: ") + what);
    };
    require(P_a >= 0.0 && P_c >= 0.0, "powers must be >= 0");
    require(omega_L > 0.0, "omega_L must be > 0");
    require(omega_0 > 0.0, "omega_0 must be > 0");
    require(B_d >= 0.0, "B_d must be >= 0");
    require(N_d >= 1.0, "N_d must be >= 1");
    require(g_a >= 0.0 && g_c >= 0.0 && g_m >= 0.0, "single-photon couplings must be >= 0");
    require(kappa_a >= 0.0 && kappa_c >= 0.0 && kappa_m >= 0.0 && gamma_b >= 0.0,
            "decay rates must be >= 0");
    require(T >= 0.0, "temperature must be >= 0");
    require(omega_b > 0.0, "omega_b must be > 0");
}

double thermal_occupation(double omega, double T) {
    if (omega <= 0.0) throw std::invalid_argument("thermal_occupation: omega must be > 0");
    if (T < 0.0) throw std::invalid_argument("thermal_occupation: T must be >= 0");
    if (T == 0.0) return 0.0;
    const double x = PhysicalConstants::hbar * omega / (PhysicalConstants::k_B * T);
    // expm1 keeps precision for x << 1 (high-T limit).
    return 1.0 / std::expm1(x);
}

double drive_amplitude_cavity(double P, double kappa, double omega_drive) {
    if (P < 0.0 || kappa < 0.0) throw std::invalid_argument("drive_amplitude_cavity: P, kappa must be >= 0");
    if (omega_drive <= 0.0) throw std::invalid_argument("drive_amplitude_cavity: omega_drive must be > 0");
    return std::sqrt(2.0 * P * kappa / (PhysicalConstants::hbar * omega_drive));
}

double drive_amplitude_magnon(double B_d, double N_d, double gamma) {
    if (B_d < 0.0 || N_d < 0.0 || gamma < 0.0)
        throw std::invalid_argument("drive_amplitude_magnon: arguments must be >= 0");
    return std::sqrt(5.0) / 4.0 * gamma * std::sqrt(N_d) * B_d;
}

namespace {

EffectiveParams common_preset_block() {
    EffectiveParams p;
    p.omega_b = hz_to_rad(25e6);
    p.kappa_a = hz_to_rad(1e6);
    p.kappa_c = hz_to_rad(2e6);
    p.kappa_m = hz_to_rad(1e6);
    p.gamma_b = hz_to_rad(100.0);
    p.T = 10e-3;
    p.G_a = hz_to_rad(1.5e6);
    p.G_c = hz_to_rad(8e6);
    p.Delta_a = -p.omega_b;
    p.Delta_c = +p.omega_b;
    p.omega_m = hz_to_rad(10e9);  // typical Kittel-mode frequency; config-overridable
    return p;
}

}  // namespace

EffectiveParams load_preset(const std::string& name) {
    EffectiveParams p = common_preset_block();
    if (name == "scheme_i") {
        p.Delta_m = +p.omega_b;
        p.G_m = hz_to_rad(6e6);
    } else if (name == "scheme_ii") {
        p.Delta_m = -p.omega_b;
        p.G_m = hz_to_rad(1.5e6);
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (expected scheme_i or scheme_ii)");
    }
    return p;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"scheme_i", "scheme_ii"};
    return names;
}

}  // namespace omm

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omm/constants.hpp"

namespace omm {

// Which rows of the drift matrix carry the phonon-coupling terms.
//   XRow: couplings enter the X-quadrature rows (config token "paper", default)
//   YRow: couplings enter the Y-quadrature rows (config token "symmetric")
// The two differ by a local pi/2 phase rotation per mode, so spectra and all
// entanglement measures coincide; the flag exists for convention studies.
enum class DriftConvention { XRow, YRow };

DriftConvention drift_convention_from_string(const std::string& s);
std::string to_string(DriftConvention c);

/// Effective (linearized) parameter set of the four-mode system.
/// All rates in rad/s, temperature in K.
struct EffectiveParams {
    double Delta_a = 0.0;   // effective cavity-a detuning
    double Delta_c = 0.0;   // effective cavity-c detuning
    double Delta_m = 0.0;   // effective magnon detuning
    double G_a = 0.0;       // effective optomechanical coupling, cavity a
    double G_c = 0.0;       // effective optomechanical coupling, cavity c
    double G_m = 0.0;       // effective magnomechanical coupling
    double omega_b = 0.0;   // phonon frequency
    double omega_m = 0.0;   // magnon frequency (thermal occupation only)
    double kappa_a = 0.0;
    double kappa_c = 0.0;
    double kappa_m = 0.0;
    double gamma_b = 0.0;
    double T = 0.0;

    // Test knobs: when set they replace the computed thermal occupations.
    std::optional<double> nbar_m_override;
    std::optional<double> nbar_b_override;

    DriftConvention convention = DriftConvention::XRow;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Physical drive-level parameters; the steady-state solver maps these to
/// EffectiveParams. Rates in rad/s, powers in W, fields in T.
struct PhysicalDriveParams {
    double P_a = 0.0;        // laser input power, cavity a
    double P_c = 0.0;        // laser input power, cavity c
    double omega_L = 0.0;    // laser frequency
    double omega_0 = 0.0;    // microwave drive frequency
    double B_d = 0.0;        // microwave magnetic field amplitude
    double N_d = 1.0;        // total spin count
    double g_a = 0.0;        // single-photon optomechanical coupling, cavity a
    double g_c = 0.0;        // single-photon optomechanical coupling, cavity c
    double g_m = 0.0;        // single-magnon magnomechanical coupling
    double Delta_a0 = 0.0;   // bare detunings omega_o - omega_drive
    double Delta_c0 = 0.0;
    double Delta_m0 = 0.0;

    double omega_b = 0.0;
    double kappa_a = 0.0;
    double kappa_c = 0.0;
    double kappa_m = 0.0;
    double gamma_b = 0.0;
    double T = 0.0;

    void validate() const;
};

/// Mean occupation of a bosonic mode in thermal equilibrium.
/// T = 0 is handled as the limit (returns exactly 0).
double thermal_occupation(double omega, double T);

/// Cavity-laser coupling rate eta = sqrt(2 P kappa / (hbar omega_drive)).
double drive_amplitude_cavity(double P, double kappa, double omega_drive);

/// Magnon Rabi rate Omega = (sqrt(5)/4) gamma sqrt(N_d) B_d.
double drive_amplitude_magnon(double B_d, double N_d, double gamma);

/// Named operating points. Both share the common parameter block; they differ
/// in the sign of Delta_m and the strength of G_m.
///   scheme_i : Delta_m = +omega_b, G_m/2pi = 6 MHz  (state-transfer magnon drive)
///   scheme_ii: Delta_m = -omega_b, G_m/2pi = 1.5 MHz (entanglement-creation drive)
/// Throws std::invalid_argument for unknown names.
EffectiveParams load_preset(const std::string& name);

/// Names accepted by load_preset, in listing order.
const std::vector<std::string>& preset_names();

}  // namespace omm

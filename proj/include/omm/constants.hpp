#pragma once

namespace omm {

// CODATA 2018 values. Fixed at compile time, never user-configurable.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;          // J s
    static constexpr double k_B = 1.380649e-23;              // J/K (exact)
    static constexpr double gyromagnetic_ratio = 1.76085963023e11;  // rad/(s T), electron
    static constexpr double c_light = 299792458.0;           // m/s (exact)
};

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Config files and the CLI speak ordinary frequencies f = omega/2pi in Hz;
// everything internal is angular frequency in rad/s.
inline constexpr double hz_to_rad(double f_hz) { return two_pi * f_hz; }
inline constexpr double rad_to_hz(double omega) { return omega / two_pi; }

}  // namespace omm

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "omm/dynamics.hpp"

namespace omm {

enum class Mode { a = 0, c = 1, m = 2, b = 3 };

std::string to_string(Mode mode);

/// Real symmetric covariance matrix over quadratures (X1,Y1,...,Xn,Yn) with
/// vacuum variance 1/2, plus the identity of the modes each block belongs to.
struct CovarianceMatrix {
    Eigen::MatrixXd V;
    std::vector<Mode> modes;  // canonical order (a, c, m, b)

    int n_modes() const { return static_cast<int>(modes.size()); }
};

/// Wraps the full 8x8 steady covariance with mode labels (a, c, m, b).
CovarianceMatrix full_covariance(const Mat8& V);

/// Reduced state of the chosen modes: keeps their X,Y rows/columns in
/// canonical order. Throws std::invalid_argument on empty/duplicate selection.
CovarianceMatrix partial_trace(const CovarianceMatrix& cm, const std::vector<Mode>& keep);

/// Momentum-sign flip of the selected modes, V -> P V P.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, const std::vector<Mode>& transposed);

struct SymplecticSpectrum {
    std::vector<double> values;  // n positive reals, ascending
    double min() const { return values.front(); }
};

/// Moduli of the eigenvalues of i Omega V, deduplicated from the +/- pairs
/// into n ascending values. Physical (non-transposed) states satisfy
/// nu >= 1/2 in this convention.
SymplecticSpectrum symplectic_spectrum(const Eigen::MatrixXd& V);

/// Two-mode closed form: nu^2 = (Dtilde -/+ sqrt(Dtilde^2 - 4 det V)) / 2 with
/// Dtilde = det A + det B + 2 det C for block form [[A, C], [C^T, B]].
/// Returns {nu_minus, nu_plus}. Used as an algebraic cross-check of the
/// general spectrum.
std::pair<double, double> symplectic_spectrum_two_mode_closed(const Eigen::Matrix4d& V);

/// Logarithmic negativity of a two-mode state: E_N = max(0, -ln 2 nu_minus)
/// where nu_minus is the minimum symplectic eigenvalue after partial
/// transposition of the second listed mode. Natural logarithm.
double log_negativity(const CovarianceMatrix& two_mode);

/// One-versus-two log negativity of a three-mode state: partial-transposes
/// the singled mode and takes the minimum of the three symplectic eigenvalues.
double one_vs_two_log_negativity(const CovarianceMatrix& three_mode, Mode singled);

struct ContangleReport {
    double R_min = 0.0;
    // Residuals keyed by the singled mode, in the order of three_mode.modes.
    std::array<double, 3> residuals{};
    bool monogamy_violated = false;  // any residual below -1e-6
};

/// Minimum residual contangle over the three one-vs-two splits, with the
/// contangle taken as squared log negativity. Negative residuals are reported
/// (and flagged), never clamped.
ContangleReport min_residual_contangle(const CovarianceMatrix& three_mode);

/// von Neumann entropy kernel F(x) = ((x+1)/2) log2((x+1)/2)
///                                 - ((x-1)/2) log2((x-1)/2), F(1) = 0.
/// Domain x >= 1; inputs within 1e-9 below 1 are snapped to 1.
double entropy_kernel(double x);

/// Coherence of a one-mode Gaussian state, in the vacuum-variance-1
/// convention (V = I and zero mean give 0). mean = (X, Y) first moments.
/// Throws std::domain_error when sqrt(det V) < 1 - 1e-9.
double coherence_single_mode(const Eigen::Matrix2d& V_vac1, const Eigen::Vector2d& mean);

/// Coherence difference of a two-mode state: total coherence minus the two
/// marginal coherences, which reduces to
///   F(nu_1) + F(nu_2) - F(nu_minus) - F(nu_plus)
/// over the doubled (vacuum-variance-1) covariance matrix. First moments
/// cancel and are not needed. Input is in the pipeline's vacuum-1/2
/// convention; the doubling happens internally. Result in bits.
double coherence_difference(const CovarianceMatrix& two_mode);

struct BogoliubovDiagnostics {
    double r = 0.0;      // two-mode squeezing parameter arctanh(G_m/G_a)
    double G_eff = 0.0;  // sqrt(G_a^2 - G_m^2)
};

/// Valid for 0 <= G_m < G_a; otherwise throws std::domain_error.
BogoliubovDiagnostics bogoliubov_diagnostics(double G_a, double G_m);

}  // namespace omm

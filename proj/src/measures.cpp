#include "omm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace omm {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::a: return "a";
        case Mode::c: return "c";
        case Mode::m: return "m";
        case Mode::b: return "b";
    }
    return "?";
}

CovarianceMatrix full_covariance(const Mat8& V) {
    return CovarianceMatrix{V, {Mode::a, Mode::c, Mode::m, Mode::b}};
}

CovarianceMatrix partial_trace(const CovarianceMatrix& cm, const std::vector<Mode>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty mode selection");

    std::vector<int> positions;  // positions within cm.modes, canonical order
    for (int pos = 0; pos < cm.n_modes(); ++pos) {
        const Mode mode = cm.modes[pos];
        const auto count = std::count(keep.begin(), keep.end(), mode);
        if (count > 1) throw std::invalid_argument("partial_trace: duplicate mode selection");
        if (count == 1) positions.push_back(pos);
    }
    if (positions.size() != keep.size())
        throw std::invalid_argument("partial_trace: selected mode not present in state");

    const int k = static_cast<int>(positions.size());
    CovarianceMatrix out;
    out.V.resize(2 * k, 2 * k);
    out.modes.reserve(k);
    for (int pos : positions) out.modes.push_back(cm.modes[pos]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out.V.block<2, 2>(2 * i, 2 * j) = cm.V.block<2, 2>(2 * positions[i], 2 * positions[j]);
    return out;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, const std::vector<Mode>& transposed) {
    CovarianceMatrix out = cm;
    for (Mode mode : transposed) {
        const auto it = std::find(out.modes.begin(), out.modes.end(), mode);
        if (it == out.modes.end())
            throw std::invalid_argument("partial_transpose: mode not present in state");
        const int y = 2 * static_cast<int>(it - out.modes.begin()) + 1;
        out.V.row(y) *= -1.0;
        out.V.col(y) *= -1.0;
    }
    return out;
}

namespace {

Eigen::MatrixXd symplectic_form(int n) {
    Eigen::MatrixXd Omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        Omega(2 * k, 2 * k + 1) = 1.0;
        Omega(2 * k + 1, 2 * k) = -1.0;
    }
    return Omega;
}

}  // namespace

SymplecticSpectrum symplectic_spectrum(const Eigen::MatrixXd& V) {
    const int n = static_cast<int>(V.rows()) / 2;
    if (V.rows() != V.cols() || V.rows() != 2 * n || n < 1)
        throw std::invalid_argument("symplectic_spectrum: covariance matrix must be 2n x 2n");

    Eigen::EigenSolver<Eigen::MatrixXd> solver(symplectic_form(n) * V, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symplectic_spectrum: eigensolver failed to converge");

    std::vector<double> moduli(2 * n);
    for (int i = 0; i < 2 * n; ++i) moduli[i] = std::abs(solver.eigenvalues()(i));
    std::sort(moduli.begin(), moduli.end());

    SymplecticSpectrum spec;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = 0.5 * (moduli[2 * i] + moduli[2 * i + 1]);
    return spec;
}

std::pair<double, double> symplectic_spectrum_two_mode_closed(const Eigen::Matrix4d& V) {
    const double detA = V.block<2, 2>(0, 0).determinant();
    const double detB = V.block<2, 2>(2, 2).determinant();
    const double detC = V.block<2, 2>(0, 2).determinant();
    const double dtilde = detA + detB + 2.0 * detC;
    const double disc = std::max(0.0, dtilde * dtilde - 4.0 * V.determinant());
    const double root = std::sqrt(disc);
    const double lo = std::sqrt(std::max(0.0, (dtilde - root) / 2.0));
    const double hi = std::sqrt(std::max(0.0, (dtilde + root) / 2.0));
    return {lo, hi};
}

double log_negativity(const CovarianceMatrix& two_mode) {
    if (two_mode.n_modes() != 2)
        throw std::invalid_argument("log_negativity: expected a two-mode state");
    const CovarianceMatrix pt = partial_transpose(two_mode, {two_mode.modes[1]});
    const double nu_min = symplectic_spectrum(pt.V).min();
    return std::max(0.0, -std::log(2.0 * nu_min));
}

double one_vs_two_log_negativity(const CovarianceMatrix& three_mode, Mode singled) {
    if (three_mode.n_modes() != 3)
        throw std::invalid_argument("one_vs_two_log_negativity: expected a three-mode state");
    const CovarianceMatrix pt = partial_transpose(three_mode, {singled});
    const double nu_min = symplectic_spectrum(pt.V).min();
    return std::max(0.0, -std::log(2.0 * nu_min));
}

ContangleReport min_residual_contangle(const CovarianceMatrix& three_mode) {
    if (three_mode.n_modes() != 3)
        throw std::invalid_argument("min_residual_contangle: expected a three-mode state");

    auto contangle_pair = [&](Mode i, Mode j) {
        const double e = log_negativity(partial_trace(three_mode, {i, j}));
        return e * e;
    };

    ContangleReport rep;
    double best = std::numeric_limits<double>::infinity();
    for (int idx = 0; idx < 3; ++idx) {
        const Mode i = three_mode.modes[idx];
        const Mode j = three_mode.modes[(idx + 1) % 3];
        const Mode k = three_mode.modes[(idx + 2) % 3];
        const double e_one_two = one_vs_two_log_negativity(three_mode, i);
        const double residual = e_one_two * e_one_two - contangle_pair(i, j) - contangle_pair(i, k);
        rep.residuals[idx] = residual;
        best = std::min(best, residual);
        if (residual < -1e-6) rep.monogamy_violated = true;
    }
    rep.R_min = best;
    return rep;
}

double entropy_kernel(double x) {
    if (x < 1.0 - 1e-9)
        throw std::domain_error("entropy_kernel: argument below 1 (unphysical symplectic eigenvalue)");
    if (x <= 1.0) return 0.0;  // snap [1 - 1e-9, 1] to the limit value
    const double p = (x + 1.0) / 2.0;
    const double q = (x - 1.0) / 2.0;
    return p * std::log2(p) - q * std::log2(q);
}

double coherence_single_mode(const Eigen::Matrix2d& V_vac1, const Eigen::Vector2d& mean) {
    const double det = V_vac1.determinant();
    if (det < (1.0 - 1e-9) * (1.0 - 1e-9))
        throw std::domain_error("coherence_single_mode: unphysical covariance (det V < 1)");
    const double nu = std::sqrt(det);
    const double nbar =
        (V_vac1(0, 0) + V_vac1(1, 1) + mean(0) * mean(0) + mean(1) * mean(1) - 2.0) / 4.0;
    const double value = entropy_kernel(2.0 * nbar + 1.0) - entropy_kernel(nu);
    if (value < -1e-9)
        throw std::runtime_error("coherence_single_mode: negative coherence indicates an invalid state");
    return std::max(0.0, value);
}

double coherence_difference(const CovarianceMatrix& two_mode) {
    if (two_mode.n_modes() != 2)
        throw std::invalid_argument("coherence_difference: expected a two-mode state");
    // Bridge to the vacuum-variance-1 convention the entropy kernel lives in.
    const Eigen::Matrix4d W = 2.0 * two_mode.V;
    const double nu1 = std::sqrt(std::max(0.0, W.block<2, 2>(0, 0).determinant()));
    const double nu2 = std::sqrt(std::max(0.0, W.block<2, 2>(2, 2).determinant()));
    const SymplecticSpectrum spec = symplectic_spectrum(W);
    return entropy_kernel(nu1) + entropy_kernel(nu2) -
           entropy_kernel(spec.values[0]) - entropy_kernel(spec.values[1]);
}

BogoliubovDiagnostics bogoliubov_diagnostics(double G_a, double G_m) {
    if (G_a <= 0.0 || G_m < 0.0 || G_m >= G_a)
        throw std::domain_error("bogoliubov_diagnostics: requires 0 <= G_m < G_a");
    return {std::atanh(G_m / G_a), std::sqrt(G_a * G_a - G_m * G_m)};
}

}  // namespace omm

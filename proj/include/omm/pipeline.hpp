#pragma once

#include <string>

#include "omm/lyapunov.hpp"
#include "omm/measures.hpp"

namespace omm {

/// Which derived quantities a point evaluation computes. Stability is always
/// computed; the covariance solve is skipped when no quantum measure is on.
struct MeasureSelection {
    bool E_am = true;
    bool E_cm = true;
    bool E_ac = true;
    bool R_min = true;
    bool dC_am = true;
    bool dC_cm = true;

    bool any_quantum() const { return E_am || E_cm || E_ac || R_min || dC_am || dC_cm; }

    static MeasureSelection all() { return {}; }
    static MeasureSelection stability_only() {
        return {false, false, false, false, false, false};
    }
};

struct PipelineOptions {
    MeasureSelection measures;
    LyapunovMethod lyapunov_method = LyapunovMethod::KroneckerLU;
};

/// Everything the pipeline knows about one parameter point. Quantities that
/// were not requested, or not computable because the point is unstable, hold
/// quiet NaN. A nonempty error string marks a captured per-point failure.
struct PointEvaluation {
    bool stable = false;
    bool marginal = false;
    double max_real_eig = 0.0;

    double E_am, E_cm, E_ac;
    double R_min;
    std::array<double, 3> contangle_residuals;  // singled mode a, c, m
    bool monogamy_violated = false;
    double dC_am, dC_cm;
    double lyapunov_residual;

    std::string error;

    PointEvaluation();
};

/// Full pipeline at one effective-parameter point:
/// drift/diffusion -> stability -> covariance -> reduced states -> measures.
/// Precondition violations propagate as exceptions; use the _guarded variant
/// where failures must not escape (sweep workers).
PointEvaluation evaluate_point(const EffectiveParams& params, const PipelineOptions& opts = {});

/// As evaluate_point, but captures any exception into the error field.
PointEvaluation evaluate_point_guarded(const EffectiveParams& params,
                                       const PipelineOptions& opts = {}) noexcept;

}  // namespace omm

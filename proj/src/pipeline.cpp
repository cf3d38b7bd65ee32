#include "omm/pipeline.hpp"

#include <limits>

namespace omm {

namespace {
constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();
}

PointEvaluation::PointEvaluation()
    : E_am(quiet_nan),
      E_cm(quiet_nan),
      E_ac(quiet_nan),
      R_min(quiet_nan),
      contangle_residuals{quiet_nan, quiet_nan, quiet_nan},
      dC_am(quiet_nan),
      dC_cm(quiet_nan),
      lyapunov_residual(quiet_nan) {}

PointEvaluation evaluate_point(const EffectiveParams& params, const PipelineOptions& opts) {
    params.validate();
    PointEvaluation out;

    const Mat8 A = build_drift(params);
    const StabilityReport rep = stability(A);
    out.stable = rep.stable;
    out.marginal = rep.marginal;
    out.max_real_eig = rep.max_real_eig;
    if (!rep.stable || !opts.measures.any_quantum()) return out;

    const Mat8 D = build_diffusion(params);
    const CovarianceSolution sol = solve_lyapunov(A, D, rep, opts.lyapunov_method);
    out.lyapunov_residual = sol.residual;
    const CovarianceMatrix full = full_covariance(sol.V);

    const auto& sel = opts.measures;
    if (sel.E_am) out.E_am = log_negativity(partial_trace(full, {Mode::a, Mode::m}));
    if (sel.E_cm) out.E_cm = log_negativity(partial_trace(full, {Mode::c, Mode::m}));
    if (sel.E_ac) out.E_ac = log_negativity(partial_trace(full, {Mode::a, Mode::c}));
    if (sel.R_min) {
        const ContangleReport rep3 =
            min_residual_contangle(partial_trace(full, {Mode::a, Mode::c, Mode::m}));
        out.R_min = rep3.R_min;
        out.contangle_residuals = rep3.residuals;
        out.monogamy_violated = rep3.monogamy_violated;
    }
    if (sel.dC_am) out.dC_am = coherence_difference(partial_trace(full, {Mode::a, Mode::m}));
    if (sel.dC_cm) out.dC_cm = coherence_difference(partial_trace(full, {Mode::c, Mode::m}));
    return out;
}

PointEvaluation evaluate_point_guarded(const EffectiveParams& params,
                                       const PipelineOptions& opts) noexcept {
    try {
        return evaluate_point(params, opts);
    } catch (const std::exception& e) {
        PointEvaluation out;
        out.error = e.what();
        return out;
    } catch (...) {
        PointEvaluation out;
        out.error = "unknown error";
        return out;
    }
}

}  // namespace omm

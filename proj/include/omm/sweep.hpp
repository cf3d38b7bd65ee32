#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "omm/config.hpp"
#include "omm/pipeline.hpp"

namespace omm {

/// One sweep axis, fully resolved: external-unit bounds (Hz or K) on an
/// effective-parameter key.
struct Axis {
    std::string key;
    double min_value = 0.0;
    double max_value = 0.0;
    int points = 0;
    AxisScale scale = AxisScale::Linear;
};

struct SweepSpec {
    EffectiveParams base;
    std::vector<Axis> axes;  // 1 or 2; 2D grids are row-major over (axes[0], axes[1])
    MeasureSelection measures;
    LyapunovMethod lyapunov_method = LyapunovMethod::KroneckerLU;
    std::string panel;  // optional label used in output naming

    void validate() const;
};

/// Grid of evaluated points. Points are stored row-major: the first axis
/// varies slowest. Unstable (or failed) points carry NaN measures.
struct SweepResult {
    SweepSpec spec;
    std::vector<std::vector<double>> axis_values;  // external units, per axis
    std::vector<PointEvaluation> points;

    int rows() const { return static_cast<int>(axis_values[0].size()); }
    int cols() const {
        return axis_values.size() > 1 ? static_cast<int>(axis_values[1].size()) : 1;
    }
    std::size_t index(int i, int j = 0) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols()) + j;
    }
};

/// Grid coordinates along one axis; exposed so tests can pin the exact
/// point placement (refinement keeps coinciding points bitwise identical).
std::vector<double> axis_grid(const Axis& axis);

/// Reference implementation: evaluates the grid one point at a time on the
/// calling thread. Kept as the comparison baseline for the parallel kernel.
SweepResult run_sweep_serial(const SweepSpec& spec);

/// OpenMP-parallel evaluation over grid points. threads = 0 picks the
/// runtime default. Output is bitwise identical to run_sweep_serial
/// regardless of thread count or schedule.
SweepResult run_sweep(const SweepSpec& spec, int threads = 0);

/// Two-axis stability scan; quantum measures are optional and off by default
/// in the specs the CLI builds for it. Throws unless the spec has two axes.
SweepResult stability_map(const SweepSpec& spec, int threads = 0);

/// CSV: one header line naming axes and columns, then one row per grid point
/// in deterministic row-major order; 2D files start with one comment line
/// stating the ordering. Unstable points leave measure cells empty. All
/// numbers are full-precision scientific.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

/// Self-contained gnuplot script next to the CSV: line plots per measure for
/// 1D grids, a heatmap for 2D grids. The script references "<stem>.csv" of
/// its own path.
void emit_plot_script(const SweepResult& result, const std::filesystem::path& path);

/// Column headers in emission order (axes, stable, max_real_eig, measures).
std::vector<std::string> csv_columns(const SweepSpec& spec);

/// Builds the in-memory spec from a parsed [sweep] section over a base.
SweepSpec sweep_spec_from_section(const EffectiveParams& base, const SweepSection& section);

}  // namespace omm

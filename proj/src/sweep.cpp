#include "omm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omm {

void SweepSpec::validate() const {
    base.validate();
    if (axes.empty() || axes.size() > 2)
        throw std::invalid_argument("sweep: expected one or two axes");
    for (const auto& ax : axes) {
        if (!is_sweepable_key(ax.key))
            throw std::invalid_argument("sweep: '" + ax.key + "' is not a sweepable parameter");
        if (ax.points < 2) throw std::invalid_argument("sweep: axis needs at least 2 points");
        if (!(ax.min_value < ax.max_value))
            throw std::invalid_argument("sweep: axis requires min < max");
        if (ax.scale == AxisScale::Log && ax.min_value <= 0.0)
            throw std::invalid_argument("sweep: log axis requires min > 0");
    }
}

std::vector<double> axis_grid(const Axis& axis) {
    std::vector<double> values(axis.points);
    if (axis.scale == AxisScale::Linear) {
        const double step = (axis.max_value - axis.min_value) / (axis.points - 1);
        for (int k = 0; k < axis.points; ++k) values[k] = axis.min_value + k * step;
    } else {
        const double lmin = std::log(axis.min_value);
        const double step = (std::log(axis.max_value) - lmin) / (axis.points - 1);
        for (int k = 0; k < axis.points; ++k) values[k] = std::exp(lmin + k * step);
    }
    values.back() = axis.max_value;  // endpoint exact under either scale
    return values;
}

namespace {

PointEvaluation evaluate_grid_point(const SweepSpec& spec,
                                    const std::vector<std::vector<double>>& grids,
                                    std::size_t flat, int cols) {
    EffectiveParams p = spec.base;
    const int i = static_cast<int>(flat) / cols;
    const int j = static_cast<int>(flat) % cols;
    try {
        apply_effective_key(p, spec.axes[0].key, grids[0][i]);
        if (spec.axes.size() > 1) apply_effective_key(p, spec.axes[1].key, grids[1][j]);
    } catch (const std::exception& e) {
        PointEvaluation out;
        out.error = e.what();
        return out;
    }
    PipelineOptions opts;
    opts.measures = spec.measures;
    opts.lyapunov_method = spec.lyapunov_method;
    return evaluate_point_guarded(p, opts);
}

SweepResult prepare_result(const SweepSpec& spec) {
    spec.validate();
    SweepResult result;
    result.spec = spec;
    for (const auto& ax : spec.axes) result.axis_values.push_back(axis_grid(ax));
    result.points.resize(static_cast<std::size_t>(result.rows()) *
                         static_cast<std::size_t>(result.cols()));
    return result;
}

}  // namespace

SweepResult run_sweep_serial(const SweepSpec& spec) {
    SweepResult result = prepare_result(spec);
    const int cols = result.cols();
    for (std::size_t flat = 0; flat < result.points.size(); ++flat)
        result.points[flat] = evaluate_grid_point(spec, result.axis_values, flat, cols);
    return result;
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
    SweepResult result = prepare_result(spec);
    const int cols = result.cols();
    const auto total = static_cast<std::ptrdiff_t>(result.points.size());

#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
    // Points are independent and land in distinct slots, so any schedule
    // reproduces the serial result bit for bit. Dynamic scheduling absorbs
    // the stable/unstable cost imbalance.
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t flat = 0; flat < total; ++flat)
        result.points[static_cast<std::size_t>(flat)] =
            evaluate_grid_point(spec, result.axis_values, static_cast<std::size_t>(flat), cols);
#else
    (void)threads;
    for (std::ptrdiff_t flat = 0; flat < total; ++flat)
        result.points[static_cast<std::size_t>(flat)] =
            evaluate_grid_point(spec, result.axis_values, static_cast<std::size_t>(flat), cols);
#endif
    return result;
}

SweepResult stability_map(const SweepSpec& spec, int threads) {
    if (spec.axes.size() != 2)
        throw std::invalid_argument("stability_map: spec must have exactly two axes");
    return run_sweep(spec, threads);
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

struct MeasureColumn {
    const char* name;
    double (*get)(const PointEvaluation&);
    bool MeasureSelection::* selected;
};

const MeasureColumn measure_columns[] = {
    {"E_am", [](const PointEvaluation& p) { return p.E_am; }, &MeasureSelection::E_am},
    {"E_cm", [](const PointEvaluation& p) { return p.E_cm; }, &MeasureSelection::E_cm},
    {"E_ac", [](const PointEvaluation& p) { return p.E_ac; }, &MeasureSelection::E_ac},
    {"R_min", [](const PointEvaluation& p) { return p.R_min; }, &MeasureSelection::R_min},
    {"dC_am", [](const PointEvaluation& p) { return p.dC_am; }, &MeasureSelection::dC_am},
    {"dC_cm", [](const PointEvaluation& p) { return p.dC_cm; }, &MeasureSelection::dC_cm},
};

}  // namespace

std::vector<std::string> csv_columns(const SweepSpec& spec) {
    std::vector<std::string> cols;
    for (const auto& ax : spec.axes) cols.push_back(ax.key);
    cols.push_back("stable");
    cols.push_back("max_real_eig");
    for (const auto& mc : measure_columns)
        if (spec.measures.*(mc.selected)) cols.push_back(mc.name);
    return cols;
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path.string());

    if (result.spec.axes.size() == 2)
        out << "# row-major grid over (" << result.spec.axes[0].key << ", "
            << result.spec.axes[1].key << "); first axis varies slowest\n";

    const auto cols = csv_columns(result.spec);
    for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
    out << "\n";

    for (int i = 0; i < result.rows(); ++i) {
        for (int j = 0; j < result.cols(); ++j) {
            const PointEvaluation& pt = result.points[result.index(i, j)];
            out << format_double(result.axis_values[0][i]);
            if (result.spec.axes.size() == 2) out << "," << format_double(result.axis_values[1][j]);
            out << "," << (pt.stable ? 1 : 0);
            out << ",";
            if (pt.error.empty()) out << format_double(pt.max_real_eig);
            for (const auto& mc : measure_columns) {
                if (!(result.spec.measures.*(mc.selected))) continue;
                const double v = mc.get(pt);
                out << ",";
                if (std::isfinite(v)) out << format_double(v);
            }
            out << "\n";
        }
    }
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path.string());
}

void emit_plot_script(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_plot_script: cannot open " + path.string());

    std::filesystem::path csv = path.filename();
    csv.replace_extension(".csv");
    const std::string csv_name = csv.string();
    const auto cols = csv_columns(result.spec);

    out << "# gnuplot script; renders " << csv_name << "\n";
    out << "set datafile separator comma\n";

    if (result.spec.axes.size() == 1) {
        out << "set xlabel '" << result.spec.axes[0].key << "'\n";
        out << "set grid\n";
        bool first = true;
        for (std::size_t k = 3; k < cols.size(); ++k) {  // skip axis, stable, max_real_eig
            out << (first ? "plot " : ", \\\n     ");
            out << "'" << csv_name << "' using 1:" << (k + 1)
                << " with lines title '" << cols[k] << "'";
            first = false;
        }
        if (first) {
            // Stability-only 1D sweep: plot the flag itself.
            out << "plot '" << csv_name << "' using 1:2 with steps title 'stable'";
        }
        out << "\n";
    } else {
        out << "set xlabel '" << cols[0] << "'\n";
        out << "set ylabel '" << cols[1] << "'\n";
        out << "set view map\n";
        std::size_t z = 2;  // default: the stability flag
        for (std::size_t k = 3; k < cols.size(); ++k) {
            z = k;
            break;
        }
        if (z == 2) {
            out << "set palette defined (0 '#b2182b', 1 '#1a9850')\n";
            out << "set cbrange [0:1]\n";
            out << "set cblabel 'stable'\n";
        } else {
            out << "set cblabel '" << cols[z] << "'\n";
        }
        out << "plot '" << csv_name << "' using 1:2:" << (z + 1)
            << " with image notitle\n";
        for (std::size_t k = z + 1; k < cols.size(); ++k)
            out << "# alternative z column: using 1:2:" << (k + 1) << " -> " << cols[k] << "\n";
    }
    if (!out) throw std::runtime_error("emit_plot_script: write failed for " + path.string());
}

SweepSpec sweep_spec_from_section(const EffectiveParams& base, const SweepSection& section) {
    SweepSpec spec;
    spec.base = base;
    const double omega_b_hz = rad_to_hz(base.omega_b);
    for (const auto& line : section.axes) {
        Axis ax;
        ax.key = line.key;
        ax.min_value = line.min.omega_b_units ? line.min.value * omega_b_hz : line.min.value;
        ax.max_value = line.max.omega_b_units ? line.max.value * omega_b_hz : line.max.value;
        ax.points = line.points;
        ax.scale = line.scale;
        spec.axes.push_back(ax);
    }
    if (!section.measures.empty()) {
        MeasureSelection sel = MeasureSelection::stability_only();
        for (const auto& m : section.measures) {
            if (m == "E_am") sel.E_am = true;
            else if (m == "E_cm") sel.E_cm = true;
            else if (m == "E_ac") sel.E_ac = true;
            else if (m == "R_min") sel.R_min = true;
            else if (m == "dC_am") sel.dC_am = true;
            else if (m == "dC_cm") sel.dC_cm = true;
            else if (m == "stability") { /* always on */ }
            else throw ConfigError("unknown measure '" + m + "'");
        }
        spec.measures = sel;
    }
    spec.panel = section.panel;
    spec.validate();
    return spec;
}

}  // namespace omm

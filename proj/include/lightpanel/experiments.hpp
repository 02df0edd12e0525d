#pragma once

#include "lightpanel/solver.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lightpanel {

/// One row of a sweep: parameter value plus error summaries over the pixels
/// valid in both the estimate and the ground truth.
struct SweepRow {
    double param = 0.0;
    double mean_deg = 0.0;
    double median_deg = 0.0;
    double mean_rel = 0.0;
    double median_rel = 0.0;
};

struct SweepResult {
    std::string parameter_name;       // "phase_angle_deg" or "ambient_mean"
    std::vector<SweepRow> rows;
    /// Parameter value with the smallest mean angular error.
    double argmin_param = 0.0;
    // Metadata for reproducibility.
    int image_size = 0;
    int light_count = 0;
    bool quantized = false;
    std::uint64_t seed = 0;

    const SweepRow& best_row() const;
};

struct PhaseSweepSettings {
    int light_count = 6;
    double g_min_deg = 1.0;
    double g_max_deg = 89.0;
    double g_step_deg = 1.0;
    QuantizeMode quantize = QuantizeMode::truncate;
    double light_intensity = 255.0;
    SolverThresholds thresholds{};
};

/// Renders a light ring at each phase angle, solves the stack, and compares
/// against the analytic sphere normals.
SweepResult phase_angle_sweep(const SphereScene& scene, const PhaseSweepSettings& settings);

struct AmbientSweepSettings {
    int light_count = 6;
    double phase_angle_deg = 30.0;
    /// Ambient levels on the 0..255 scale.
    std::vector<double> ambient_levels;
    bool subtract = true;
    QuantizeMode quantize = QuantizeMode::truncate;
    double light_intensity = 255.0;
    SolverThresholds thresholds{};

    /// 0 to 80 percent of full scale in steps of 5.
    static std::vector<double> default_levels();
};

/// Fixed phase angle, varying uniform ambient light. Each point renders the
/// active frames plus one ambient frame; the row parameter is the measured
/// mean sphere-pixel intensity of the ambient frame.
SweepResult ambient_sweep(const SphereScene& scene, const AmbientSweepSettings& settings);

/// CSV with header `param,mean_deg,median_deg,mean_rel,median_rel` and
/// metadata in leading comment lines.
void emit_sweep_csv(const SweepResult& result, std::ostream& out);
void emit_sweep_csv(const SweepResult& result, const std::string& path);
SweepResult read_sweep_csv(std::istream& in);
SweepResult read_sweep_csv(const std::string& path);

/// Simple SVG line plot of the mean and median angular-error traces.
void emit_sweep_svg(const SweepResult& result, const std::string& path);

} // namespace lightpanel

#pragma once

#include "lightpanel/geometry.hpp"
#include "lightpanel/image.hpp"
#include "lightpanel/render.hpp"

#include <optional>
#include <vector>

namespace lightpanel {

/// f images of the same scene under known light directions, plus an optional
/// frame captured with the active lights off.
struct ImageStack {
    std::vector<GrayImage> images;
    std::vector<UnitVector3> light_directions;
    std::optional<GrayImage> ambient_frame;

    int width() const { return images.empty() ? 0 : images.front().width(); }
    int height() const { return images.empty() ? 0 : images.front().height(); }
    std::size_t light_count() const { return images.size(); }

    void validate() const;
};

/// Per-pixel solver output. Invalid pixels are flagged, never zero-filled.
struct NormalAlbedoMap {
    int width = 0;
    int height = 0;
    std::vector<UnitVector3> normals;      // meaningful only where valid
    std::vector<double> albedo;
    std::vector<bool> valid;
    std::vector<int> used_light_count;

    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x);
    }
};

struct SolverThresholds {
    double low = 2.0;             // shadow / quantization floor
    double high = 250.0;          // saturation ceiling
    double max_condition = 1e8;   // guard on cond(L^T L)
    double albedo_floor = 1e-9;
};

/// Replaces each image by max(0, image - ambient_frame) and clears the frame.
/// Throws when no ambient frame is present.
ImageStack subtract_ambient(const ImageStack& stack);

/// True where low < intensity < high.
std::vector<bool> pixel_measurement_mask(const std::vector<double>& intensities, double low,
                                         double high);

struct PixelSolution {
    UnitVector3 normal;
    double albedo = 0.0;
    double residual = 0.0;   // L2 residual of the linear system
};

/// Least-squares recovery of albedo and normal from k >= 3 measurements.
/// Throws on rank-deficient lights or a near-zero albedo.
PixelSolution solve_pixel(const std::vector<double>& intensities,
                          const std::vector<UnitVector3>& lights,
                          double max_condition = 1e8, double albedo_floor = 1e-9);

/// Per-pixel masked solve over the whole stack. Pixels with fewer than three
/// surviving measurements, degenerate lighting, or near-zero albedo are
/// marked invalid.
NormalAlbedoMap solve_stack(const ImageStack& stack,
                            const SolverThresholds& thresholds = SolverThresholds{});

struct ErrorStats {
    double mean_deg = 0.0;
    double median_deg = 0.0;
    double mean_rel = 0.0;     // mean ||n_est - n_true||
    double median_rel = 0.0;
    std::size_t pixel_count = 0;
};

struct AngularErrorMap {
    GrayImage degrees;             // 0 where not compared
    std::vector<bool> compared;
    ErrorStats stats;
};

/// Per-pixel angular error (degrees) between two maps, restricted to pixels
/// valid in both. Throws when no pixel is valid in both.
AngularErrorMap angular_error_map(const NormalAlbedoMap& estimate,
                                  const NormalAlbedoMap& truth);

/// Ground-truth map for a sphere scene (albedo = scene albedo everywhere on
/// the disc).
NormalAlbedoMap ground_truth_map(const SphereScene& scene);

} // namespace lightpanel

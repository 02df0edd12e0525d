#pragma once

#include "lightpanel/geometry.hpp"
#include "lightpanel/image.hpp"

#include <cstdint>
#include <optional>

namespace lightpanel {

/// Diffuse unit sphere viewed by an orthographic camera centred on it.
struct SphereScene {
    double radius = 1.0;
    double albedo = 0.9;
    int image_size = 128;
    /// Projected sphere radius as a fraction of the image side.
    double radius_fraction = 0.40;
    double background_albedo = 0.0;

    /// Projected radius in pixels.
    double pixel_radius() const { return radius_fraction * image_size; }

    void validate() const;
};

enum class QuantizeMode {
    off,        // real-valued intensities, no clamping
    truncate,   // 8-bit capture: truncate toward zero, clamp to [0, 255]
    round,      // round to nearest, clamp to [0, 255]
};

struct RenderSettings {
    UnitVector3 light_direction{0.0, 0.0, 1.0};
    double light_intensity = 255.0;
    double ambient_level = 0.0;          // [0, 255]
    QuantizeMode quantize = QuantizeMode::truncate;
    double saturation_ceiling = 255.0;
    /// Zero-mean Gaussian pixel noise, applied before quantization. Off by
    /// default; the seed makes renders reproducible.
    double noise_sigma = 0.0;
    std::uint64_t noise_seed = 0;

    void validate() const;
};

/// Eq.-style Lambertian shading: light_intensity * albedo * max(0, n.l).
double lambertian_intensity(const UnitVector3& n, const UnitVector3& l, double albedo,
                            double light_intensity);

/// Analytic surface normal at a pixel centre under orthographic projection,
/// or nullopt for background pixels.
std::optional<UnitVector3> sphere_normal_at(const SphereScene& scene, int px, int py);

double apply_quantization(double value, QuantizeMode mode, double ceiling);

/// Renders one image of the scene: shading plus uniform ambient, optionally
/// noise, then quantization. Background pixels receive ambient only.
GrayImage render(const SphereScene& scene, const RenderSettings& settings);

/// Same scene with the active light switched off (ambient frame).
GrayImage render_ambient_frame(const SphereScene& scene, const RenderSettings& settings);

/// Ground-truth normal map helpers for the experiments.
struct GroundTruth {
    std::vector<std::optional<UnitVector3>> normals;   // row-major
    int width = 0;
    int height = 0;
};

GroundTruth ground_truth_normals(const SphereScene& scene);

} // namespace lightpanel

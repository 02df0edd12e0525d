#include "lightpanel/render.hpp"

#include <cmath>
#include <random>

namespace lightpanel {

void SphereScene::validate() const {
    if (radius <= 0.0)
        throw std::invalid_argument("SphereScene: radius must be positive");
    if (albedo <= 0.0 || albedo > 1.0)
        throw std::invalid_argument("SphereScene: albedo must lie in (0, 1]");
    if (image_size <= 0)
        throw std::invalid_argument("SphereScene: image_size must be positive");
    if (radius_fraction <= 0.0 || radius_fraction > 0.5)
        throw std::invalid_argument("SphereScene: projection must fit inside the image");
    if (background_albedo < 0.0)
        throw std::invalid_argument("SphereScene: background_albedo must be >= 0");
}

void RenderSettings::validate() const {
    if (!is_unit(light_direction))
        throw std::invalid_argument("RenderSettings: light_direction must be unit length");
    if (light_intensity < 0.0)
        throw std::invalid_argument("RenderSettings: light_intensity must be >= 0");
    if (ambient_level < 0.0 || ambient_level > 255.0)
        throw std::invalid_argument("RenderSettings: ambient_level must lie in [0, 255]");
    if (noise_sigma < 0.0)
        throw std::invalid_argument("RenderSettings: noise_sigma must be >= 0");
}

double lambertian_intensity(const UnitVector3& n, const UnitVector3& l, double albedo,
                            double light_intensity) {
    const double cos_i = n.dot(l);
    return cos_i > 0.0 ? light_intensity * albedo * cos_i : 0.0;
}

std::optional<UnitVector3> sphere_normal_at(const SphereScene& scene, int px, int py) {
    const double c = (scene.image_size - 1) / 2.0;
    const double r = scene.pixel_radius();
    const double x = (px - c) / r;
    const double y = (py - c) / r;
    const double rr = x * x + y * y;
    if (rr >= 1.0)
        return std::nullopt;
    return UnitVector3{x, y, std::sqrt(1.0 - rr)};
}

double apply_quantization(double value, QuantizeMode mode, double ceiling) {
    switch (mode) {
    case QuantizeMode::off:
        return value;
    case QuantizeMode::truncate:
        value = std::floor(value);
        break;
    case QuantizeMode::round:
        value = std::nearbyint(value);
        break;
    }
    if (value < 0.0) return 0.0;
    if (value > ceiling) return ceiling;
    return value;
}

namespace {

GrayImage render_impl(const SphereScene& scene, const RenderSettings& settings,
                      bool active_light) {
    scene.validate();
    settings.validate();
    GrayImage img(scene.image_size, scene.image_size);
    std::mt19937_64 rng(settings.noise_seed);
    std::normal_distribution<double> noise(0.0, settings.noise_sigma);
    for (int py = 0; py < scene.image_size; ++py) {
        for (int px = 0; px < scene.image_size; ++px) {
            double v = settings.ambient_level;
            if (active_light) {
                if (auto n = sphere_normal_at(scene, px, py)) {
                    v += lambertian_intensity(*n, settings.light_direction, scene.albedo,
                                              settings.light_intensity);
                } else if (scene.background_albedo > 0.0) {
                    // Flat background facing the camera.
                    v += lambertian_intensity({0.0, 0.0, 1.0}, settings.light_direction,
                                              scene.background_albedo,
                                              settings.light_intensity);
                }
            }
            if (settings.noise_sigma > 0.0)
                v += noise(rng);
            img.at(px, py) = apply_quantization(v, settings.quantize,
                                                settings.saturation_ceiling);
        }
    }
    return img;
}

} // namespace

GrayImage render(const SphereScene& scene, const RenderSettings& settings) {
    return render_impl(scene, settings, true);
}

GrayImage render_ambient_frame(const SphereScene& scene, const RenderSettings& settings) {
    return render_impl(scene, settings, false);
}

GroundTruth ground_truth_normals(const SphereScene& scene) {
    scene.validate();
    GroundTruth gt;
    gt.width = gt.height = scene.image_size;
    gt.normals.resize(static_cast<std::size_t>(scene.image_size) * scene.image_size);
    std::size_t i = 0;
    for (int py = 0; py < scene.image_size; ++py)
        for (int px = 0; px < scene.image_size; ++px)
            gt.normals[i++] = sphere_normal_at(scene, px, py);
    return gt;
}

} // namespace lightpanel

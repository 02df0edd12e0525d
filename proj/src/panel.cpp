#include "lightpanel/panel.hpp"

#include <cmath>
#include <numbers>

namespace lightpanel {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

void LightBlobConfig::validate() const {
    if (led_count <= 0)
        throw std::invalid_argument("LightBlobConfig: led_count must be positive");
    if (inter_led_angle_deg <= 0.0)
        throw std::invalid_argument("LightBlobConfig: inter_led_angle must be positive");
}

std::vector<double> PanelConfig::azimuths_deg() const {
    if (!azimuth_offsets_deg.empty())
        return azimuth_offsets_deg;
    std::vector<double> az(static_cast<std::size_t>(wing_count_f));
    for (int k = 0; k < wing_count_f; ++k)
        az[static_cast<std::size_t>(k)] = 360.0 * k / wing_count_f;
    return az;
}

void PanelConfig::validate() const {
    if (wing_count_f < 3)
        throw std::invalid_argument("PanelConfig: wing_count_f must be >= 3");
    if (wing_count_f > 12)
        throw std::invalid_argument("PanelConfig: wing_count_f must be <= 12");
    if (phase_angle_g_deg < 10.0 || phase_angle_g_deg > 80.0)
        throw std::invalid_argument("PanelConfig: phase_angle_g must be in [10, 80]");
    if (std::abs(std::remainder(phase_angle_g_deg, 10.0)) > 1e-9)
        throw std::invalid_argument("PanelConfig: phase_angle_g must be a multiple of 10");
    if (d1() <= 0.0 || d2() <= 0.0)
        throw std::invalid_argument("PanelConfig: d1 and d2 must be positive");
    if (!azimuth_offsets_deg.empty() &&
        azimuth_offsets_deg.size() != static_cast<std::size_t>(wing_count_f))
        throw std::invalid_argument("PanelConfig: azimuth_offsets size must equal wing_count_f");
}

double operating_distance(double g_deg, double d1, double d2) {
    if (g_deg <= 0.0 || g_deg >= 90.0)
        throw std::domain_error("operating_distance: phase angle must lie in (0, 90) degrees");
    const double g = g_deg * kDegToRad;
    return d1 / std::tan(g) + d2 / std::sin(g);
}

double operating_distance(const PanelConfig& cfg) {
    return operating_distance(cfg.phase_angle_g_deg, cfg.d1(), cfg.d2());
}

UnitVector3 light_direction(double g_deg) {
    if (g_deg < 0.0 || g_deg > 90.0)
        throw std::domain_error("light_direction: phase angle must lie in [0, 90] degrees");
    const double g = g_deg * kDegToRad;
    return {-std::sin(g), 0.0, std::cos(g)};
}

std::vector<UnitVector3> ring_directions(const PanelConfig& cfg) {
    const UnitVector3 base = light_direction(cfg.phase_angle_g_deg);
    std::vector<UnitVector3> out;
    out.reserve(static_cast<std::size_t>(cfg.wing_count_f));
    for (double az_deg : cfg.azimuths_deg()) {
        const double a = az_deg * kDegToRad;
        const double c = std::cos(a), s = std::sin(a);
        out.push_back({c * base.x - s * base.y, s * base.x + c * base.y, base.z});
    }
    return out;
}

std::vector<UnitVector3> ring_directions_at(double g_deg, int count) {
    if (count < 1)
        throw std::invalid_argument("ring_directions_at: count must be >= 1");
    std::vector<UnitVector3> out;
    const UnitVector3 base = light_direction(g_deg);
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double a = (360.0 * k / count) * kDegToRad;
        const double c = std::cos(a), s = std::sin(a);
        out.push_back({c * base.x - s * base.y, s * base.x + c * base.y, base.z});
    }
    return out;
}

HardwareCatalogue HardwareCatalogue::defaults() {
    HardwareCatalogue cat;
    for (int i = 0; i <= 10; ++i) {
        cat.spacer1_options_m.push_back(0.01 * i);
        cat.spacer2_options_m.push_back(0.01 * i);
    }
    for (int g = 10; g <= 80; g += 10)
        cat.joint_angles_deg.push_back(static_cast<double>(g));
    return cat;
}

ConfigurationResult solve_configuration(double target_distance_m,
                                        const HardwareCatalogue& hardware,
                                        const PanelConfig& base) {
    if (target_distance_m <= 0.0)
        throw std::invalid_argument("solve_configuration: target distance must be positive");
    if (hardware.spacer1_options_m.empty() || hardware.spacer2_options_m.empty() ||
        hardware.joint_angles_deg.empty())
        throw std::invalid_argument("solve_configuration: hardware catalogue is empty");

    bool found = false;
    ConfigurationResult best;
    for (double g : hardware.joint_angles_deg) {
        for (double s1 : hardware.spacer1_options_m) {
            for (double s2 : hardware.spacer2_options_m) {
                PanelConfig cand = base;
                cand.phase_angle_g_deg = g;
                cand.spacer1_m = s1;
                cand.spacer2_m = s2;
                const double d = operating_distance(cand);
                const double res = std::abs(d - target_distance_m);
                bool better = false;
                if (!found) {
                    better = true;
                } else if (res < best.residual_m) {
                    better = true;
                } else if (res == best.residual_m) {
                    const double cand_spacers = s1 + s2;
                    const double best_spacers = best.config.spacer1_m + best.config.spacer2_m;
                    if (g < best.config.phase_angle_g_deg ||
                        (g == best.config.phase_angle_g_deg && cand_spacers < best_spacers))
                        better = true;
                }
                if (better) {
                    best = {cand, d, res};
                    found = true;
                }
            }
        }
    }
    return best;
}

} // namespace lightpanel

#pragma once

#include "lightpanel/geometry.hpp"

#include <optional>
#include <vector>

namespace lightpanel {

/// LED arrangement inside one light blob. Layout parameters only; the
/// electrical side (drive current, luminous intensity) is not modelled.
struct LightBlobConfig {
    int led_count = 19;
    double led_viewing_angle_deg = 15.0;
    double inter_led_angle_deg = 11.25;
    bool outer_ring_enabled = true;

    /// 52.5 deg with the outer LED ring on, 30 deg with it off.
    double blob_viewing_angle_deg() const { return outer_ring_enabled ? 52.5 : 30.0; }

    void validate() const;
};

/// Geometric state of the whole panel: one disc holding the camera, f wings
/// each carrying a light blob tilted by the phase angle g.
struct PanelConfig {
    double phase_angle_g_deg = 30.0;   // joint steps: 10..80 in steps of 10
    double disc_radius_m = 0.075;
    double spacer1_m = 0.04;
    double joint_radius_m = 0.012;
    double spacer2_m = 0.03;
    double blob_offset_m = 0.023;
    int wing_count_f = 6;
    /// Wing azimuths in degrees; empty means uniform 360/f spacing.
    std::vector<double> azimuth_offsets_deg;

    double d1() const { return disc_radius_m + spacer1_m + joint_radius_m; }
    double d2() const { return joint_radius_m + spacer2_m + blob_offset_m; }

    std::vector<double> azimuths_deg() const;

    void validate() const;
};

/// Camera-to-focal-point distance: d1/tan(g) + d2/sin(g).
/// Strictly decreasing in g on (0, 90) for fixed d1, d2.
double operating_distance(const PanelConfig& cfg);
double operating_distance(double g_deg, double d1, double d2);

/// Light direction in the camera frame for the reference wing (azimuth 0):
/// [-sin g, 0, cos g]. Continuous g accepted for synthetic sweeps.
UnitVector3 light_direction(double g_deg);

/// One direction per wing: light_direction(g) rotated about the optical axis
/// by each wing azimuth.
std::vector<UnitVector3> ring_directions(const PanelConfig& cfg);

/// Uniform ring of `count` lights at a continuous phase angle (no joint
/// snapping); used by the synthetic sweeps.
std::vector<UnitVector3> ring_directions_at(double g_deg, int count);

/// Discrete hardware options available when assembling the panel.
struct HardwareCatalogue {
    std::vector<double> spacer1_options_m;
    std::vector<double> spacer2_options_m;
    std::vector<double> joint_angles_deg;   // typically 10..80 in steps of 10

    static HardwareCatalogue defaults();
};

struct ConfigurationResult {
    PanelConfig config;
    double achieved_distance_m = 0.0;
    double residual_m = 0.0;
};

/// Picks the admissible (joint angle, spacers) combination minimizing
/// |operating_distance - target|. Ties: smaller g, then smaller total
/// spacer length.
ConfigurationResult solve_configuration(double target_distance_m,
                                        const HardwareCatalogue& hardware,
                                        const PanelConfig& base = PanelConfig{});

} // namespace lightpanel

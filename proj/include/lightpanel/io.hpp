#pragma once

#include "lightpanel/experiments.hpp"
#include "lightpanel/integrate.hpp"
#include "lightpanel/panel.hpp"
#include "lightpanel/render.hpp"
#include "lightpanel/solver.hpp"

#include <map>
#include <string>

namespace lightpanel {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- images ---------------------------------------------------------------

/// Binary PGM (P5), maxval 255 or 65535. Requires integral pixel values in
/// range; use the float-plane format for real-valued images.
void write_pgm(const GrayImage& img, const std::string& path);
GrayImage read_pgm(const std::string& path);

/// Self-describing binary container for real-valued planes: magic "FPM1",
/// plane count, dimensions, endianness tag, float64 data. Lossless for any
/// GrayImage.
void write_float_planes(const std::vector<const GrayImage*>& planes, const std::string& path);
std::vector<GrayImage> read_float_planes(const std::string& path);

void write_gray(const GrayImage& img, const std::string& path);   // picks PGM vs FPM1
GrayImage read_gray(const std::string& path);

// ---- stacks and maps ------------------------------------------------------

/// One line per image: `lx ly lz`; unit norm validated on load.
void write_light_directions(const std::vector<UnitVector3>& lights, const std::string& path);
std::vector<UnitVector3> read_light_directions(const std::string& path);

/// Stack layout inside a directory: img_NNN.(pgm|fpm), lights.txt, and an
/// optional ambient.(pgm|fpm).
void write_image_stack(const ImageStack& stack, const std::string& dir, bool quantized);
ImageStack read_image_stack(const std::string& dir);

/// normals.fpm (3 planes), albedo.fpm, mask.pgm, used.pgm.
void write_normal_albedo_map(const NormalAlbedoMap& map, const std::string& dir);
NormalAlbedoMap read_normal_albedo_map(const std::string& dir);

void write_depth_map(const DepthMap& depth, const std::string& path);
DepthMap read_depth_map(const std::string& path);

/// ASCII PLY: x y z vertices, optional uchar gray, triangle faces.
void write_ply(const TriangleMesh& mesh, const std::string& path);

// ---- configuration --------------------------------------------------------

/// Everything the CLI needs, loaded from a flat `section.key = value` file.
struct ProjectConfig {
    PanelConfig panel;
    HardwareCatalogue hardware = HardwareCatalogue::defaults();
    SphereScene scene;
    RenderSettings render;
    SolverThresholds solver;
    double z_floor = 0.1;
    double phase_angle_deg = 30.0;      // continuous angle used for rendering
    double sweep_g_min = 1.0;
    double sweep_g_max = 89.0;
    double sweep_g_step = 1.0;
    std::vector<double> sweep_ambient_levels;   // empty = default grid
    std::string output_dir = "out";
};

ProjectConfig default_config();

/// Parses and validates; errors name the offending key.
ProjectConfig load_config(const std::string& path);
ProjectConfig parse_config(std::istream& in, const std::string& origin = "<stream>");
void save_config(const ProjectConfig& cfg, const std::string& path);

} // namespace lightpanel

#include "lightpanel/cli.hpp"

#include "lightpanel/experiments.hpp"
#include "lightpanel/integrate.hpp"
#include "lightpanel/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

namespace fs = std::filesystem;

namespace lightpanel {

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out;
};

ProjectConfig load_or_default(const CommonFlags& common) {
    return common.config_path.empty() ? default_config() : load_config(common.config_path);
}

void add_common(CLI::App* cmd, CommonFlags& common) {
    cmd->add_option("--config", common.config_path, "Configuration file");
    cmd->add_option("--out", common.out, "Output path (overrides output.dir)");
}

std::string resolve_out(const CommonFlags& common, const ProjectConfig& cfg,
                        const char* leaf) {
    if (!common.out.empty())
        return common.out;
    return (fs::path(cfg.output_dir) / leaf).string();
}

QuantizeMode quantize_from_flags(const ProjectConfig& cfg, bool on, bool off) {
    if (on && off)
        throw CLI::ValidationError("--quantize conflicts with --no-quantize");
    if (on)
        return QuantizeMode::truncate;
    if (off)
        return QuantizeMode::off;
    return cfg.render.quantize;
}

int run_render(const CommonFlags& common, ProjectConfig cfg, bool quantize, bool no_quantize,
               std::ostream& out) {
    cfg.render.quantize = quantize_from_flags(cfg, quantize, no_quantize);
    const auto lights = ring_directions_at(cfg.phase_angle_deg, cfg.panel.wing_count_f);
    ImageStack stack;
    RenderSettings settings = cfg.render;
    for (const UnitVector3& l : lights) {
        settings.light_direction = l;
        stack.images.push_back(render(cfg.scene, settings));
        stack.light_directions.push_back(l);
    }
    stack.ambient_frame = render_ambient_frame(cfg.scene, settings);
    const std::string dir = resolve_out(common, cfg, "stack");
    write_image_stack(stack, dir, cfg.render.quantize != QuantizeMode::off);
    out << "wrote " << stack.images.size() << " images + ambient frame to " << dir << "\n";
    return 0;
}

int run_solve(const CommonFlags& common, const ProjectConfig& cfg, const std::string& stack_dir,
              bool subtract, std::ostream& out) {
    ImageStack stack = read_image_stack(stack_dir);
    if (subtract)
        stack = subtract_ambient(stack);
    const NormalAlbedoMap map = solve_stack(stack, cfg.solver);
    std::size_t valid = 0;
    for (bool v : map.valid)
        valid += v;
    const std::string dir = resolve_out(common, cfg, "map");
    write_normal_albedo_map(map, dir);
    out << "solved " << valid << " pixels, wrote " << dir << "\n";
    return 0;
}

int run_integrate(const CommonFlags& common, const ProjectConfig& cfg,
                  const std::string& map_dir, std::ostream& out) {
    const NormalAlbedoMap map = read_normal_albedo_map(map_dir);
    const GradientField field = normals_to_gradients(map, cfg.z_floor);
    const DepthMap depth = integrate(field);
    const std::string dir = resolve_out(common, cfg, "surface");
    fs::create_directories(dir);
    write_depth_map(depth, (fs::path(dir) / "depth.fpm").string());
    const TriangleMesh mesh = depth_to_mesh(depth, &map);
    write_ply(mesh, (fs::path(dir) / "mesh.ply").string());
    out << "integrated depth (" << mesh.vertices.size() << " vertices, "
        << mesh.triangles.size() << " triangles), wrote " << dir << "\n";
    return 0;
}

void emit_sweep(const SweepResult& result, const std::string& csv_path, std::ostream& out) {
    if (!csv_path.empty()) {
        fs::create_directories(fs::path(csv_path).parent_path().empty()
                                   ? "."
                                   : fs::path(csv_path).parent_path().string());
        emit_sweep_csv(result, csv_path);
        std::string svg = csv_path;
        if (svg.size() > 4 && svg.compare(svg.size() - 4, 4, ".csv") == 0)
            svg.replace(svg.size() - 4, 4, ".svg");
        else
            svg += ".svg";
        emit_sweep_svg(result, svg);
        out << "wrote " << csv_path << " and " << svg << "\n";
    } else {
        emit_sweep_csv(result, out);
    }
    out << "argmin " << result.parameter_name << " = " << result.argmin_param
        << " (mean " << result.best_row().mean_deg << " deg over " << result.rows.size()
        << " settings)\n";
}

int run_sweep_phase(const CommonFlags& common, const ProjectConfig& cfg, bool quantize,
                    bool no_quantize, int lights, std::ostream& out) {
    PhaseSweepSettings settings;
    settings.light_count = lights > 0 ? lights : cfg.panel.wing_count_f;
    settings.g_min_deg = cfg.sweep_g_min;
    settings.g_max_deg = cfg.sweep_g_max;
    settings.g_step_deg = cfg.sweep_g_step;
    settings.quantize = quantize_from_flags(cfg, quantize, no_quantize);
    settings.light_intensity = cfg.render.light_intensity;
    settings.thresholds = cfg.solver;
    const SweepResult result = phase_angle_sweep(cfg.scene, settings);
    emit_sweep(result, common.out.empty()
                           ? (fs::path(cfg.output_dir) / "sweep_phase.csv").string()
                           : common.out,
               out);
    return 0;
}

int run_sweep_ambient(const CommonFlags& common, const ProjectConfig& cfg, bool quantize,
                      bool no_quantize, bool subtract, bool no_subtract, int lights,
                      double phase_angle, std::ostream& out) {
    AmbientSweepSettings settings;
    settings.light_count = lights > 0 ? lights : cfg.panel.wing_count_f;
    settings.phase_angle_deg = phase_angle >= 0.0 ? phase_angle : cfg.phase_angle_deg;
    settings.ambient_levels = cfg.sweep_ambient_levels;
    if (subtract && no_subtract)
        throw CLI::ValidationError("--subtract-ambient conflicts with --no-subtract-ambient");
    settings.subtract = !no_subtract;
    settings.quantize = quantize_from_flags(cfg, quantize, no_quantize);
    settings.light_intensity = cfg.render.light_intensity;
    settings.thresholds = cfg.solver;
    const SweepResult result = ambient_sweep(cfg.scene, settings);
    emit_sweep(result, common.out.empty()
                           ? (fs::path(cfg.output_dir) / "sweep_ambient.csv").string()
                           : common.out,
               out);
    return 0;
}

int run_panel_config(const ProjectConfig& cfg, double target, std::ostream& out) {
    const ConfigurationResult result = solve_configuration(target, cfg.hardware, cfg.panel);
    out << "target distance: " << target << " m\n";
    out << "joint angle g:   " << result.config.phase_angle_g_deg << " deg\n";
    out << "spacer 1:        " << result.config.spacer1_m << " m\n";
    out << "spacer 2:        " << result.config.spacer2_m << " m\n";
    out << "achieved:        " << result.achieved_distance_m << " m (residual "
        << result.residual_m << " m)\n";
    return 0;
}

} // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"lps - photometric stereo toolkit for ring-light panels"};
    app.require_subcommand(1);

    CommonFlags common;
    bool quantize = false, no_quantize = false;
    bool subtract = false, no_subtract = false;
    int lights = 0;
    int size = 0;
    double phase_angle = -1.0;
    std::uint64_t seed = 0;
    double ambient = -1.0;
    std::string stack_dir, map_dir;
    double target = 0.35;

    auto* c_render = app.add_subcommand("render", "Render a synthetic capture stack");
    add_common(c_render, common);
    c_render->add_flag("--quantize", quantize, "Force 8-bit quantization");
    c_render->add_flag("--no-quantize", no_quantize, "Real-valued output");
    c_render->add_option("--size", size, "Image side in pixels");
    c_render->add_option("--lights", lights, "Number of lights in the ring");
    c_render->add_option("--phase-angle", phase_angle, "Phase angle g in degrees");
    c_render->add_option("--ambient", ambient, "Ambient level on the 0..255 scale");
    auto* seed_opt = c_render->add_option("--seed", seed, "Noise seed");

    auto* c_solve = app.add_subcommand("solve", "Recover normals and albedo from a stack");
    add_common(c_solve, common);
    c_solve->add_option("stack", stack_dir, "Stack directory")->required();
    c_solve->add_flag("--subtract-ambient", subtract, "Subtract the ambient frame (default)");
    c_solve->add_flag("--no-subtract-ambient", no_subtract, "Skip ambient subtraction");

    auto* c_integrate = app.add_subcommand("integrate", "Integrate normals to a surface");
    add_common(c_integrate, common);
    c_integrate->add_option("map", map_dir, "Normal/albedo map directory")->required();

    auto* c_sweep_phase =
        app.add_subcommand("sweep-phase", "Error vs phase angle on the synthetic sphere");
    add_common(c_sweep_phase, common);
    c_sweep_phase->add_flag("--quantize", quantize, "Force 8-bit quantization");
    c_sweep_phase->add_flag("--no-quantize", no_quantize, "Real-valued renders");
    c_sweep_phase->add_option("--lights", lights, "Number of lights in the ring");
    c_sweep_phase->add_option("--size", size, "Image side in pixels");

    auto* c_sweep_ambient =
        app.add_subcommand("sweep-ambient", "Error vs ambient level on the synthetic sphere");
    add_common(c_sweep_ambient, common);
    c_sweep_ambient->add_flag("--quantize", quantize, "Force 8-bit quantization");
    c_sweep_ambient->add_flag("--no-quantize", no_quantize, "Real-valued renders");
    c_sweep_ambient->add_flag("--subtract-ambient", subtract,
                              "Subtract the ambient frame (default)");
    c_sweep_ambient->add_flag("--no-subtract-ambient", no_subtract,
                              "Skip ambient subtraction");
    c_sweep_ambient->add_option("--lights", lights, "Number of lights in the ring");
    c_sweep_ambient->add_option("--size", size, "Image side in pixels");
    c_sweep_ambient->add_option("--phase-angle", phase_angle, "Phase angle g in degrees");

    auto* c_panel = app.add_subcommand("panel-config",
                                       "Pick joint angle and spacers for a target distance");
    add_common(c_panel, common);
    c_panel->add_option("--target", target, "Target operating distance in metres");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
    }

    try {
        ProjectConfig cfg = load_or_default(common);
        if (size > 0)
            cfg.scene.image_size = size;
        if (seed_opt->count() > 0)
            cfg.render.noise_seed = seed;
        if (c_render->parsed()) {
            if (lights > 0)
                cfg.panel.wing_count_f = lights;
            if (phase_angle >= 0.0)
                cfg.phase_angle_deg = phase_angle;
            if (ambient >= 0.0)
                cfg.render.ambient_level = ambient;
            return run_render(common, cfg, quantize, no_quantize, out);
        }
        if (c_solve->parsed()) {
            if (subtract && no_subtract)
                throw std::invalid_argument(
                    "--subtract-ambient conflicts with --no-subtract-ambient");
            return run_solve(common, cfg, stack_dir, !no_subtract, out);
        }
        if (c_integrate->parsed())
            return run_integrate(common, cfg, map_dir, out);
        if (c_sweep_phase->parsed())
            return run_sweep_phase(common, cfg, quantize, no_quantize, lights, out);
        if (c_sweep_ambient->parsed())
            return run_sweep_ambient(common, cfg, quantize, no_quantize, subtract,
                                     no_subtract, lights, phase_angle, out);
        if (c_panel->parsed())
            return run_panel_config(cfg, target, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

} // namespace lightpanel

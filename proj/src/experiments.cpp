#include "lightpanel/experiments.hpp"

#include "lightpanel/panel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lightpanel {

const SweepRow& SweepResult::best_row() const {
    if (rows.empty())
        throw std::domain_error("SweepResult: empty sweep has no best row");
    return *std::min_element(rows.begin(), rows.end(),
                             [](const SweepRow& a, const SweepRow& b) {
                                 return a.mean_deg < b.mean_deg;
                             });
}

namespace {

ImageStack render_stack(const SphereScene& scene, const std::vector<UnitVector3>& lights,
                        double intensity, double ambient, QuantizeMode quantize,
                        bool with_ambient_frame) {
    ImageStack stack;
    RenderSettings settings;
    settings.light_intensity = intensity;
    settings.ambient_level = ambient;
    settings.quantize = quantize;
    for (const UnitVector3& l : lights) {
        settings.light_direction = l;
        stack.images.push_back(render(scene, settings));
        stack.light_directions.push_back(l);
    }
    if (with_ambient_frame)
        stack.ambient_frame = render_ambient_frame(scene, settings);
    return stack;
}

void finish(SweepResult& result) {
    if (!result.rows.empty())
        result.argmin_param = result.best_row().param;
}

} // namespace

SweepResult phase_angle_sweep(const SphereScene& scene, const PhaseSweepSettings& settings) {
    scene.validate();
    if (settings.g_min_deg <= 0.0 || settings.g_max_deg >= 90.0 || settings.g_step_deg <= 0.0)
        throw std::invalid_argument("phase_angle_sweep: g range must lie inside (0, 90)");

    const NormalAlbedoMap truth = ground_truth_map(scene);
    SweepResult result;
    result.parameter_name = "phase_angle_deg";
    result.image_size = scene.image_size;
    result.light_count = settings.light_count;
    result.quantized = settings.quantize != QuantizeMode::off;

    const int steps = static_cast<int>(
        std::floor((settings.g_max_deg - settings.g_min_deg) / settings.g_step_deg + 1e-9));
    for (int k = 0; k <= steps; ++k) {
        const double g = settings.g_min_deg + k * settings.g_step_deg;
        const auto lights = ring_directions_at(g, settings.light_count);
        const ImageStack stack = render_stack(scene, lights, settings.light_intensity, 0.0,
                                              settings.quantize, false);
        const NormalAlbedoMap est = solve_stack(stack, settings.thresholds);
        const ErrorStats stats = angular_error_map(est, truth).stats;
        result.rows.push_back({g, stats.mean_deg, stats.median_deg, stats.mean_rel,
                               stats.median_rel});
    }
    finish(result);
    return result;
}

std::vector<double> AmbientSweepSettings::default_levels() {
    std::vector<double> levels;
    for (int pct = 0; pct <= 80; pct += 5)
        levels.push_back(255.0 * pct / 100.0);
    return levels;
}

SweepResult ambient_sweep(const SphereScene& scene, const AmbientSweepSettings& settings) {
    scene.validate();
    const std::vector<double> levels =
        settings.ambient_levels.empty() ? AmbientSweepSettings::default_levels()
                                        : settings.ambient_levels;
    const auto lights = ring_directions_at(settings.phase_angle_deg, settings.light_count);
    const NormalAlbedoMap truth = ground_truth_map(scene);

    SweepResult result;
    result.parameter_name = "ambient_mean";
    result.image_size = scene.image_size;
    result.light_count = settings.light_count;
    result.quantized = settings.quantize != QuantizeMode::off;

    for (double level : levels) {
        if (level < 0.0 || level > 255.0)
            throw std::invalid_argument("ambient_sweep: ambient levels must lie in [0, 255]");
        ImageStack stack = render_stack(scene, lights, settings.light_intensity, level,
                                        settings.quantize, true);
        // Paper convention: the reported amount of ambient light is the mean
        // sphere-pixel intensity of the ambient frame.
        double measured = 0.0;
        std::size_t count = 0;
        for (std::size_t p = 0; p < truth.valid.size(); ++p) {
            if (truth.valid[p]) {
                measured += stack.ambient_frame->pixels()[p];
                ++count;
            }
        }
        measured /= static_cast<double>(count);

        const ImageStack solvable = settings.subtract ? subtract_ambient(stack) : stack;
        const NormalAlbedoMap est = solve_stack(solvable, settings.thresholds);
        const ErrorStats stats = angular_error_map(est, truth).stats;
        result.rows.push_back({measured, stats.mean_deg, stats.median_deg, stats.mean_rel,
                               stats.median_rel});
    }
    finish(result);
    return result;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void emit_sweep_csv(const SweepResult& result, std::ostream& out) {
    out << "# parameter: " << result.parameter_name << "\n";
    out << "# image_size: " << result.image_size << "\n";
    out << "# light_count: " << result.light_count << "\n";
    out << "# quantized: " << (result.quantized ? 1 : 0) << "\n";
    out << "# seed: " << result.seed << "\n";
    out << "param,mean_deg,median_deg,mean_rel,median_rel\n";
    for (const SweepRow& r : result.rows) {
        out << fmt(r.param) << ',' << fmt(r.mean_deg) << ',' << fmt(r.median_deg) << ','
            << fmt(r.mean_rel) << ',' << fmt(r.median_rel) << "\n";
    }
}

void emit_sweep_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_sweep_csv: cannot open " + path);
    emit_sweep_csv(result, out);
    if (!out.good())
        throw std::runtime_error("emit_sweep_csv: write failed for " + path);
}

SweepResult read_sweep_csv(std::istream& in) {
    SweepResult result;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "parameter:")
                ls >> result.parameter_name;
            else if (key == "image_size:")
                ls >> result.image_size;
            else if (key == "light_count:")
                ls >> result.light_count;
            else if (key == "quantized:") {
                int q = 0;
                ls >> q;
                result.quantized = q != 0;
            } else if (key == "seed:")
                ls >> result.seed;
            continue;
        }
        if (!header_seen) {
            if (line != "param,mean_deg,median_deg,mean_rel,median_rel")
                throw std::runtime_error("read_sweep_csv: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        SweepRow row;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &row.param, &row.mean_deg,
                        &row.median_deg, &row.mean_rel, &row.median_rel) != 5)
            throw std::runtime_error("read_sweep_csv: malformed row: " + line);
        result.rows.push_back(row);
    }
    if (!header_seen)
        throw std::runtime_error("read_sweep_csv: missing header");
    if (!result.rows.empty())
        result.argmin_param = result.best_row().param;
    return result;
}

SweepResult read_sweep_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("read_sweep_csv: cannot open " + path);
    return read_sweep_csv(in);
}

void emit_sweep_svg(const SweepResult& result, const std::string& path) {
    if (result.rows.empty())
        throw std::domain_error("emit_sweep_svg: empty sweep");
    const int w = 640, h = 400, ml = 60, mr = 20, mt = 20, mb = 40;
    double xmin = result.rows.front().param, xmax = result.rows.back().param;
    if (xmax == xmin)
        xmax = xmin + 1.0;
    double ymax = 0.0;
    for (const SweepRow& r : result.rows)
        ymax = std::max({ymax, r.mean_deg, r.median_deg});
    if (ymax == 0.0)
        ymax = 1.0;
    auto sx = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto sy = [&](double v) { return h - mb - v / ymax * (h - mt - mb); };

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_sweep_svg: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n";
    auto polyline = [&](const char* color, auto get) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (const SweepRow& r : result.rows)
            out << sx(r.param) << ',' << sy(get(r)) << ' ';
        out << "\"/>\n";
    };
    polyline("steelblue", [](const SweepRow& r) { return r.mean_deg; });
    polyline("darkorange", [](const SweepRow& r) { return r.median_deg; });
    out << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 8) << "\" font-size=\"13\">"
        << result.parameter_name << "</text>\n";
    out << "<text x=\"8\" y=\"" << (mt + 10) << "\" font-size=\"13\">error (deg): mean=blue"
        << " median=orange, ymax=" << ymax << "</text>\n";
    out << "</svg>\n";
    if (!out.good())
        throw std::runtime_error("emit_sweep_svg: write failed for " + path);
}

} // namespace lightpanel

#include "lightpanel/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace lightpanel {

namespace {

bool integral_in_range(const GrayImage& img, double maxval) {
    for (double v : img.pixels())
        if (v < 0.0 || v > maxval || v != std::floor(v))
            return false;
    return true;
}

int pnm_token(std::istream& in) {
    // Skips whitespace and '#' comments, returns the next integer.
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            in.unget();
            int value;
            if (!(in >> value))
                break;
            return value;
        }
    }
    throw IoError("read_pgm: truncated header");
}

} // namespace

void write_pgm(const GrayImage& img, const std::string& path) {
    int maxval;
    if (integral_in_range(img, 255.0))
        maxval = 255;
    else if (integral_in_range(img, 65535.0))
        maxval = 65535;
    else
        throw IoError("write_pgm: non-integral pixels; use the float-plane format: " + path);

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("write_pgm: cannot open " + path);
    out << "P5\n" << img.width() << ' ' << img.height() << "\n" << maxval << "\n";
    if (maxval == 255) {
        std::vector<std::uint8_t> buf(img.size());
        for (std::size_t i = 0; i < buf.size(); ++i)
            buf[i] = static_cast<std::uint8_t>(img.pixels()[i]);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
    } else {
        std::vector<std::uint8_t> buf(img.size() * 2);
        for (std::size_t i = 0; i < img.size(); ++i) {
            const auto v = static_cast<std::uint16_t>(img.pixels()[i]);
            buf[2 * i] = static_cast<std::uint8_t>(v >> 8);   // PNM is big-endian
            buf[2 * i + 1] = static_cast<std::uint8_t>(v & 0xff);
        }
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
    }
    if (!out.good())
        throw IoError("write_pgm: write failed for " + path);
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("read_pgm: cannot open " + path);
    char m0 = 0, m1 = 0;
    in.get(m0).get(m1);
    if (m0 != 'P' || m1 != '5')
        throw IoError("read_pgm: not a binary PGM: " + path);
    const int w = pnm_token(in);
    const int h = pnm_token(in);
    const int maxval = pnm_token(in);
    if (w <= 0 || h <= 0 || (maxval != 255 && maxval != 65535))
        throw IoError("read_pgm: unsupported header in " + path);
    in.get();   // single whitespace after maxval

    GrayImage img(w, h);
    const std::size_t n = img.size();
    if (maxval == 255) {
        std::vector<std::uint8_t> buf(n);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            throw IoError("read_pgm: truncated data in " + path);
        for (std::size_t i = 0; i < n; ++i)
            img.pixels()[i] = buf[i];
    } else {
        std::vector<std::uint8_t> buf(n * 2);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * 2));
        if (static_cast<std::size_t>(in.gcount()) != n * 2)
            throw IoError("read_pgm: truncated data in " + path);
        for (std::size_t i = 0; i < n; ++i)
            img.pixels()[i] = (buf[2 * i] << 8) | buf[2 * i + 1];
    }
    return img;
}

void write_float_planes(const std::vector<const GrayImage*>& planes, const std::string& path) {
    if (planes.empty())
        throw IoError("write_float_planes: no planes");
    for (const GrayImage* p : planes)
        if (!p->same_size(*planes.front()))
            throw IoError("write_float_planes: plane dimensions differ");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("write_float_planes: cannot open " + path);
    const char* endian = std::endian::native == std::endian::little ? "LE" : "BE";
    out << "FPM1\n" << planes.size() << ' ' << planes.front()->width() << ' '
        << planes.front()->height() << ' ' << endian << "\n";
    for (const GrayImage* p : planes)
        out.write(reinterpret_cast<const char*>(p->pixels().data()),
                  static_cast<std::streamsize>(p->size() * sizeof(double)));
    if (!out.good())
        throw IoError("write_float_planes: write failed for " + path);
}

std::vector<GrayImage> read_float_planes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("read_float_planes: cannot open " + path);
    std::string magic;
    std::getline(in, magic);
    if (magic != "FPM1")
        throw IoError("read_float_planes: bad magic in " + path);
    std::size_t count = 0;
    int w = 0, h = 0;
    std::string endian;
    std::string header;
    std::getline(in, header);
    {
        std::istringstream hs(header);
        if (!(hs >> count >> w >> h >> endian) || count == 0 || w <= 0 || h <= 0)
            throw IoError("read_float_planes: bad header in " + path);
    }
    const bool host_le = std::endian::native == std::endian::little;
    const bool file_le = endian == "LE";
    if (endian != "LE" && endian != "BE")
        throw IoError("read_float_planes: bad endian tag in " + path);

    std::vector<GrayImage> planes;
    planes.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        GrayImage img(w, h);
        const std::streamsize bytes =
            static_cast<std::streamsize>(img.size() * sizeof(double));
        in.read(reinterpret_cast<char*>(img.pixels().data()), bytes);
        if (in.gcount() != bytes)
            throw IoError("read_float_planes: truncated data in " + path);
        if (host_le != file_le) {
            for (double& v : img.pixels()) {
                std::uint64_t bits;
                std::memcpy(&bits, &v, 8);
                bits = __builtin_bswap64(bits);
                std::memcpy(&v, &bits, 8);
            }
        }
        planes.push_back(std::move(img));
    }
    return planes;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

void write_gray(const GrayImage& img, const std::string& path) {
    if (ends_with(path, ".pgm"))
        write_pgm(img, path);
    else if (ends_with(path, ".fpm"))
        write_float_planes({&img}, path);
    else
        throw IoError("write_gray: unknown extension for " + path);
}

GrayImage read_gray(const std::string& path) {
    if (ends_with(path, ".pgm"))
        return read_pgm(path);
    if (ends_with(path, ".fpm")) {
        auto planes = read_float_planes(path);
        if (planes.size() != 1)
            throw IoError("read_gray: expected a single plane in " + path);
        return std::move(planes.front());
    }
    throw IoError("read_gray: unknown extension for " + path);
}

void write_light_directions(const std::vector<UnitVector3>& lights, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("write_light_directions: cannot open " + path);
    char buf[128];
    for (const UnitVector3& l : lights) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", l.x, l.y, l.z);
        out << buf;
    }
    if (!out.good())
        throw IoError("write_light_directions: write failed for " + path);
}

std::vector<UnitVector3> read_light_directions(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("read_light_directions: cannot open " + path);
    std::vector<UnitVector3> lights;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        UnitVector3 l;
        if (std::sscanf(line.c_str(), "%lf %lf %lf", &l.x, &l.y, &l.z) != 3)
            throw IoError("read_light_directions: malformed line: " + line);
        if (!is_unit(l, 1e-6))
            throw IoError("read_light_directions: direction is not unit length: " + line);
        lights.push_back(l);
    }
    return lights;
}

namespace {

std::string stack_image_name(std::size_t i, bool quantized) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "img_%03zu.%s", i, quantized ? "pgm" : "fpm");
    return buf;
}

} // namespace

void write_image_stack(const ImageStack& stack, const std::string& dir, bool quantized) {
    stack.validate();
    fs::create_directories(dir);
    for (std::size_t i = 0; i < stack.images.size(); ++i)
        write_gray(stack.images[i], (fs::path(dir) / stack_image_name(i, quantized)).string());
    write_light_directions(stack.light_directions, (fs::path(dir) / "lights.txt").string());
    if (stack.ambient_frame)
        write_gray(*stack.ambient_frame,
                   (fs::path(dir) / (quantized ? "ambient.pgm" : "ambient.fpm")).string());
}

ImageStack read_image_stack(const std::string& dir) {
    ImageStack stack;
    stack.light_directions = read_light_directions((fs::path(dir) / "lights.txt").string());
    for (std::size_t i = 0; i < stack.light_directions.size(); ++i) {
        const fs::path pgm = fs::path(dir) / stack_image_name(i, true);
        const fs::path fpm = fs::path(dir) / stack_image_name(i, false);
        if (fs::exists(pgm))
            stack.images.push_back(read_gray(pgm.string()));
        else if (fs::exists(fpm))
            stack.images.push_back(read_gray(fpm.string()));
        else
            throw IoError("read_image_stack: missing image " + pgm.string());
    }
    const fs::path amb_pgm = fs::path(dir) / "ambient.pgm";
    const fs::path amb_fpm = fs::path(dir) / "ambient.fpm";
    if (fs::exists(amb_pgm))
        stack.ambient_frame = read_gray(amb_pgm.string());
    else if (fs::exists(amb_fpm))
        stack.ambient_frame = read_gray(amb_fpm.string());
    stack.validate();
    return stack;
}

void write_normal_albedo_map(const NormalAlbedoMap& map, const std::string& dir) {
    fs::create_directories(dir);
    GrayImage nx(map.width, map.height), ny(map.width, map.height), nz(map.width, map.height);
    GrayImage albedo(map.width, map.height), mask(map.width, map.height),
        used(map.width, map.height);
    for (std::size_t i = 0; i < map.normals.size(); ++i) {
        if (map.valid[i]) {
            nx.pixels()[i] = map.normals[i].x;
            ny.pixels()[i] = map.normals[i].y;
            nz.pixels()[i] = map.normals[i].z;
            albedo.pixels()[i] = map.albedo[i];
            mask.pixels()[i] = 255.0;
        }
        used.pixels()[i] = std::min(255, map.used_light_count[i]);
    }
    write_float_planes({&nx, &ny, &nz}, (fs::path(dir) / "normals.fpm").string());
    write_float_planes({&albedo}, (fs::path(dir) / "albedo.fpm").string());
    write_pgm(mask, (fs::path(dir) / "mask.pgm").string());
    write_pgm(used, (fs::path(dir) / "used.pgm").string());
}

NormalAlbedoMap read_normal_albedo_map(const std::string& dir) {
    const auto normals = read_float_planes((fs::path(dir) / "normals.fpm").string());
    if (normals.size() != 3)
        throw IoError("read_normal_albedo_map: normals.fpm must hold three planes");
    const auto albedo = read_float_planes((fs::path(dir) / "albedo.fpm").string());
    const GrayImage mask = read_pgm((fs::path(dir) / "mask.pgm").string());
    const GrayImage used = read_pgm((fs::path(dir) / "used.pgm").string());

    NormalAlbedoMap map;
    map.width = mask.width();
    map.height = mask.height();
    const std::size_t npix = mask.size();
    map.normals.resize(npix);
    map.albedo.assign(npix, 0.0);
    map.valid.assign(npix, false);
    map.used_light_count.assign(npix, 0);
    for (std::size_t i = 0; i < npix; ++i) {
        map.used_light_count[i] = static_cast<int>(used.pixels()[i]);
        if (mask.pixels()[i] > 0.0) {
            map.normals[i] = {normals[0].pixels()[i], normals[1].pixels()[i],
                              normals[2].pixels()[i]};
            if (!is_unit(map.normals[i], 1e-6))
                throw IoError("read_normal_albedo_map: non-unit normal at valid pixel");
            map.albedo[i] = albedo[0].pixels()[i];
            map.valid[i] = true;
        }
    }
    return map;
}

void write_depth_map(const DepthMap& depth, const std::string& path) {
    GrayImage z(depth.width, depth.height), valid(depth.width, depth.height);
    for (std::size_t i = 0; i < depth.z.size(); ++i) {
        z.pixels()[i] = depth.z[i];
        valid.pixels()[i] = depth.valid[i] ? 1.0 : 0.0;
    }
    write_float_planes({&z, &valid}, path);
}

DepthMap read_depth_map(const std::string& path) {
    const auto planes = read_float_planes(path);
    if (planes.size() != 2)
        throw IoError("read_depth_map: expected two planes in " + path);
    DepthMap depth;
    depth.width = planes[0].width();
    depth.height = planes[0].height();
    depth.z = planes[0].pixels();
    depth.valid.resize(depth.z.size());
    for (std::size_t i = 0; i < depth.z.size(); ++i)
        depth.valid[i] = planes[1].pixels()[i] != 0.0;
    return depth;
}

void write_ply(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("write_ply: cannot open " + path);
    const bool with_gray = !mesh.gray.empty();
    if (with_gray && mesh.gray.size() != mesh.vertices.size())
        throw IoError("write_ply: gray count must match vertex count");
    out << "ply\nformat ascii 1.0\n";
    out << "element vertex " << mesh.vertices.size() << "\n";
    out << "property float x\nproperty float y\nproperty float z\n";
    if (with_gray)
        out << "property uchar gray\n";
    out << "element face " << mesh.triangles.size() << "\n";
    out << "property list uchar int vertex_indices\nend_header\n";
    char buf[160];
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& v = mesh.vertices[i];
        if (with_gray)
            std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g %d\n", v[0], v[1], v[2],
                          static_cast<int>(mesh.gray[i]));
        else
            std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g\n", v[0], v[1], v[2]);
        out << buf;
    }
    for (const auto& t : mesh.triangles)
        out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
    if (!out.good())
        throw IoError("write_ply: write failed for " + path);
}

// ---- configuration ---------------------------------------------------------

ProjectConfig default_config() { return ProjectConfig{}; }

namespace {

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::istringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError(key + ": malformed number '" + item + "'");
        }
    }
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos])))
            ++pos;
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": malformed number '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (v != std::floor(v))
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    return static_cast<int>(v);
}

void require(bool ok, const std::string& key, const std::string& what) {
    if (!ok)
        throw ConfigError(key + ": " + what);
}

QuantizeMode parse_quantize(const std::string& key, const std::string& value) {
    if (value == "off" || value == "false" || value == "0")
        return QuantizeMode::off;
    if (value == "truncate" || value == "on" || value == "true" || value == "1")
        return QuantizeMode::truncate;
    if (value == "round")
        return QuantizeMode::round;
    throw ConfigError(key + ": expected off/truncate/round, got '" + value + "'");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

ProjectConfig parse_config(std::istream& in, const std::string& origin) {
    ProjectConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "panel.phase_angle_g") {
            const double v = parse_number(key, value);
            require(v >= 10.0 && v <= 80.0, key, "must lie in [10, 80]");
            require(std::abs(std::remainder(v, 10.0)) <= 1e-9, key,
                    "must be a multiple of 10");
            cfg.panel.phase_angle_g_deg = v;
        } else if (key == "panel.wing_count_f") {
            const int v = parse_int(key, value);
            require(v >= 3 && v <= 12, key, "must lie in [3, 12]");
            cfg.panel.wing_count_f = v;
        } else if (key == "panel.disc_radius") {
            cfg.panel.disc_radius_m = parse_number(key, value);
        } else if (key == "panel.spacer1") {
            cfg.panel.spacer1_m = parse_number(key, value);
        } else if (key == "panel.joint_radius") {
            cfg.panel.joint_radius_m = parse_number(key, value);
        } else if (key == "panel.spacer2") {
            cfg.panel.spacer2_m = parse_number(key, value);
        } else if (key == "panel.blob_offset") {
            cfg.panel.blob_offset_m = parse_number(key, value);
        } else if (key == "panel.azimuth_offsets") {
            cfg.panel.azimuth_offsets_deg = parse_list(key, value);
        } else if (key == "hardware.spacer1_options") {
            cfg.hardware.spacer1_options_m = parse_list(key, value);
        } else if (key == "hardware.spacer2_options") {
            cfg.hardware.spacer2_options_m = parse_list(key, value);
        } else if (key == "hardware.joint_angles") {
            cfg.hardware.joint_angles_deg = parse_list(key, value);
        } else if (key == "scene.radius") {
            const double v = parse_number(key, value);
            require(v > 0.0, key, "must be positive");
            cfg.scene.radius = v;
        } else if (key == "scene.albedo") {
            const double v = parse_number(key, value);
            require(v > 0.0 && v <= 1.0, key, "must lie in (0, 1]");
            cfg.scene.albedo = v;
        } else if (key == "scene.image_size") {
            const int v = parse_int(key, value);
            require(v > 0, key, "must be positive");
            cfg.scene.image_size = v;
        } else if (key == "scene.radius_fraction") {
            const double v = parse_number(key, value);
            require(v > 0.0 && v <= 0.5, key, "must lie in (0, 0.5]");
            cfg.scene.radius_fraction = v;
        } else if (key == "scene.background_albedo") {
            const double v = parse_number(key, value);
            require(v >= 0.0, key, "must be >= 0");
            cfg.scene.background_albedo = v;
        } else if (key == "render.light_intensity") {
            const double v = parse_number(key, value);
            require(v >= 0.0, key, "must be >= 0");
            cfg.render.light_intensity = v;
        } else if (key == "render.ambient_level") {
            const double v = parse_number(key, value);
            require(v >= 0.0 && v <= 255.0, key, "must lie in [0, 255]");
            cfg.render.ambient_level = v;
        } else if (key == "render.quantize") {
            cfg.render.quantize = parse_quantize(key, value);
        } else if (key == "render.noise_sigma") {
            const double v = parse_number(key, value);
            require(v >= 0.0, key, "must be >= 0");
            cfg.render.noise_sigma = v;
        } else if (key == "render.seed") {
            cfg.render.noise_seed = static_cast<std::uint64_t>(parse_number(key, value));
        } else if (key == "render.phase_angle") {
            const double v = parse_number(key, value);
            require(v >= 0.0 && v < 90.0, key, "must lie in [0, 90)");
            cfg.phase_angle_deg = v;
        } else if (key == "solver.low_threshold") {
            cfg.solver.low = parse_number(key, value);
        } else if (key == "solver.high_threshold") {
            cfg.solver.high = parse_number(key, value);
        } else if (key == "solver.max_condition") {
            const double v = parse_number(key, value);
            require(v > 0.0, key, "must be positive");
            cfg.solver.max_condition = v;
        } else if (key == "solver.albedo_floor") {
            const double v = parse_number(key, value);
            require(v > 0.0, key, "must be positive");
            cfg.solver.albedo_floor = v;
        } else if (key == "integrate.z_floor") {
            const double v = parse_number(key, value);
            require(v > 0.0 && v < 1.0, key, "must lie in (0, 1)");
            cfg.z_floor = v;
        } else if (key == "sweep.g_min") {
            cfg.sweep_g_min = parse_number(key, value);
        } else if (key == "sweep.g_max") {
            cfg.sweep_g_max = parse_number(key, value);
        } else if (key == "sweep.g_step") {
            cfg.sweep_g_step = parse_number(key, value);
        } else if (key == "sweep.ambient_levels") {
            cfg.sweep_ambient_levels = parse_list(key, value);
            for (double v : cfg.sweep_ambient_levels)
                require(v >= 0.0 && v <= 255.0, key, "levels must lie in [0, 255]");
        } else if (key == "output.dir") {
            require(!value.empty(), key, "must not be empty");
            cfg.output_dir = value;
        } else {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
        }
    }
    require(cfg.solver.low >= 0.0 && cfg.solver.low < cfg.solver.high &&
                cfg.solver.high <= 255.0,
            "solver.low_threshold", "need 0 <= low < high <= 255");
    require(cfg.sweep_g_min > 0.0 && cfg.sweep_g_max < 90.0 &&
                cfg.sweep_g_min <= cfg.sweep_g_max && cfg.sweep_g_step > 0.0,
            "sweep.g_min", "sweep range must lie inside (0, 90)");
    cfg.panel.validate();
    cfg.scene.validate();
    return cfg;
}

ProjectConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("load_config: cannot open " + path);
    return parse_config(in, path);
}

void save_config(const ProjectConfig& cfg, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("save_config: cannot open " + path);
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    auto list = [&](const std::vector<double>& values) {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += num(values[i]);
        }
        return s;
    };
    out << "panel.phase_angle_g = " << num(cfg.panel.phase_angle_g_deg) << "\n";
    out << "panel.wing_count_f = " << cfg.panel.wing_count_f << "\n";
    out << "panel.disc_radius = " << num(cfg.panel.disc_radius_m) << "\n";
    out << "panel.spacer1 = " << num(cfg.panel.spacer1_m) << "\n";
    out << "panel.joint_radius = " << num(cfg.panel.joint_radius_m) << "\n";
    out << "panel.spacer2 = " << num(cfg.panel.spacer2_m) << "\n";
    out << "panel.blob_offset = " << num(cfg.panel.blob_offset_m) << "\n";
    if (!cfg.panel.azimuth_offsets_deg.empty())
        out << "panel.azimuth_offsets = " << list(cfg.panel.azimuth_offsets_deg) << "\n";
    out << "hardware.spacer1_options = " << list(cfg.hardware.spacer1_options_m) << "\n";
    out << "hardware.spacer2_options = " << list(cfg.hardware.spacer2_options_m) << "\n";
    out << "hardware.joint_angles = " << list(cfg.hardware.joint_angles_deg) << "\n";
    out << "scene.radius = " << num(cfg.scene.radius) << "\n";
    out << "scene.albedo = " << num(cfg.scene.albedo) << "\n";
    out << "scene.image_size = " << cfg.scene.image_size << "\n";
    out << "scene.radius_fraction = " << num(cfg.scene.radius_fraction) << "\n";
    out << "scene.background_albedo = " << num(cfg.scene.background_albedo) << "\n";
    out << "render.light_intensity = " << num(cfg.render.light_intensity) << "\n";
    out << "render.ambient_level = " << num(cfg.render.ambient_level) << "\n";
    const char* qm = cfg.render.quantize == QuantizeMode::off       ? "off"
                     : cfg.render.quantize == QuantizeMode::truncate ? "truncate"
                                                                     : "round";
    out << "render.quantize = " << qm << "\n";
    out << "render.noise_sigma = " << num(cfg.render.noise_sigma) << "\n";
    out << "render.seed = " << cfg.render.noise_seed << "\n";
    out << "render.phase_angle = " << num(cfg.phase_angle_deg) << "\n";
    out << "solver.low_threshold = " << num(cfg.solver.low) << "\n";
    out << "solver.high_threshold = " << num(cfg.solver.high) << "\n";
    out << "solver.max_condition = " << num(cfg.solver.max_condition) << "\n";
    out << "solver.albedo_floor = " << num(cfg.solver.albedo_floor) << "\n";
    out << "integrate.z_floor = " << num(cfg.z_floor) << "\n";
    out << "sweep.g_min = " << num(cfg.sweep_g_min) << "\n";
    out << "sweep.g_max = " << num(cfg.sweep_g_max) << "\n";
    out << "sweep.g_step = " << num(cfg.sweep_g_step) << "\n";
    if (!cfg.sweep_ambient_levels.empty())
        out << "sweep.ambient_levels = " << list(cfg.sweep_ambient_levels) << "\n";
    out << "output.dir = " << cfg.output_dir << "\n";
    if (!out.good())
        throw ConfigError("save_config: write failed for " + path);
}

} // namespace lightpanel

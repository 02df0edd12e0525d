#include "lightpanel/io.hpp"

#include "lightpanel/panel.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace lightpanel;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lightpanel_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("pgm round trip, 8 and 16 bit") {
    TempDir tmp;
    GrayImage img(7, 5);
    for (std::size_t i = 0; i < img.size(); ++i)
        img.pixels()[i] = static_cast<double>((i * 37) % 256);
    write_pgm(img, tmp.file("a.pgm"));
    CHECK(read_pgm(tmp.file("a.pgm")).pixels() == img.pixels());

    for (std::size_t i = 0; i < img.size(); ++i)
        img.pixels()[i] = static_cast<double>((i * 4099) % 65536);
    write_pgm(img, tmp.file("b.pgm"));
    CHECK(read_pgm(tmp.file("b.pgm")).pixels() == img.pixels());

    img.pixels()[0] = 0.5;
    CHECK_THROWS_AS(write_pgm(img, tmp.file("c.pgm")), IoError);
}

TEST_CASE("float planes round trip losslessly") {
    TempDir tmp;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    GrayImage a(9, 4), b(9, 4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a.pixels()[i] = dist(rng);
        b.pixels()[i] = dist(rng);
    }
    write_float_planes({&a, &b}, tmp.file("p.fpm"));
    const auto back = read_float_planes(tmp.file("p.fpm"));
    REQUIRE(back.size() == 2);
    CHECK(back[0].pixels() == a.pixels());
    CHECK(back[1].pixels() == b.pixels());

    GrayImage mismatched(3, 3);
    CHECK_THROWS_AS(write_float_planes({&a, &mismatched}, tmp.file("q.fpm")), IoError);
}

TEST_CASE("write_gray dispatches on extension and stays lossless") {
    TempDir tmp;
    GrayImage img(4, 4);
    img.pixels() = {0,   1.5, 2,  3,  4,  5,  6,  7,
                    8.25, 9,  10, 11, 12, 13, 14, 254.75};
    write_gray(img, tmp.file("x.fpm"));
    CHECK(read_gray(tmp.file("x.fpm")).pixels() == img.pixels());
    CHECK_THROWS_AS(write_gray(img, tmp.file("x.txt")), IoError);
}

TEST_CASE("light direction sidecar validates unit norm") {
    TempDir tmp;
    const auto lights = ring_directions_at(30.0, 6);
    write_light_directions(lights, tmp.file("lights.txt"));
    const auto back = read_light_directions(tmp.file("lights.txt"));
    REQUIRE(back.size() == lights.size());
    for (std::size_t i = 0; i < lights.size(); ++i) {
        CHECK(back[i].x == lights[i].x);
        CHECK(back[i].y == lights[i].y);
        CHECK(back[i].z == lights[i].z);
    }
    std::ofstream bad(tmp.file("bad.txt"));
    bad << "1 1 0\n";
    bad.close();
    CHECK_THROWS_AS(read_light_directions(tmp.file("bad.txt")), IoError);
}

TEST_CASE("image stack round trip with ambient frame") {
    TempDir tmp;
    SphereScene scene;
    scene.image_size = 24;
    RenderSettings settings;
    settings.ambient_level = 12.0;
    ImageStack stack;
    for (const UnitVector3& l : ring_directions_at(30.0, 3)) {
        settings.light_direction = l;
        stack.images.push_back(render(scene, settings));
        stack.light_directions.push_back(l);
    }
    stack.ambient_frame = render_ambient_frame(scene, settings);
    write_image_stack(stack, tmp.file("stack"), true);
    const ImageStack back = read_image_stack(tmp.file("stack"));
    REQUIRE(back.images.size() == 3);
    REQUIRE(back.ambient_frame.has_value());
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(back.images[k].pixels() == stack.images[k].pixels());
    CHECK(back.ambient_frame->pixels() == stack.ambient_frame->pixels());
}

TEST_CASE("normal/albedo map round trip") {
    TempDir tmp;
    SphereScene scene;
    scene.image_size = 24;
    const NormalAlbedoMap map = ground_truth_map(scene);
    write_normal_albedo_map(map, tmp.file("map"));
    const NormalAlbedoMap back = read_normal_albedo_map(tmp.file("map"));
    CHECK(back.valid == map.valid);
    for (std::size_t i = 0; i < map.valid.size(); ++i) {
        if (!map.valid[i])
            continue;
        CHECK(back.normals[i].x == map.normals[i].x);
        CHECK(back.normals[i].y == map.normals[i].y);
        CHECK(back.normals[i].z == map.normals[i].z);
        CHECK(back.albedo[i] == map.albedo[i]);
    }
}

TEST_CASE("depth map round trip") {
    TempDir tmp;
    DepthMap depth;
    depth.width = 3;
    depth.height = 2;
    depth.z = {0.0, 1.25, -2.5, 3.0, 0.0, 7.125};
    depth.valid = {true, true, false, true, false, true};
    write_depth_map(depth, tmp.file("d.fpm"));
    const DepthMap back = read_depth_map(tmp.file("d.fpm"));
    CHECK(back.z == depth.z);
    CHECK(back.valid == depth.valid);
}

TEST_CASE("ply writer emits a complete ascii mesh") {
    TempDir tmp;
    TriangleMesh mesh;
    mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.5}};
    mesh.gray = {0, 128, 255};
    mesh.triangles = {{0, 1, 2}};
    write_ply(mesh, tmp.file("m.ply"));
    std::ifstream in(tmp.file("m.ply"));
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    CHECK(text.find("element vertex 3") != std::string::npos);
    CHECK(text.find("element face 1") != std::string::npos);
    CHECK(text.find("property uchar gray") != std::string::npos);
    CHECK(text.find("3 0 1 2") != std::string::npos);
    CHECK(text.find("0 1 0.5 255") != std::string::npos);
}

TEST_CASE("config errors name the offending key") {
    std::istringstream bad_g("panel.phase_angle_g = 95\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_g), doctest::Contains("panel.phase_angle_g"),
                         ConfigError);
    std::istringstream bad_albedo("scene.albedo = 1.5\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_albedo), doctest::Contains("scene.albedo"),
                         ConfigError);
    std::istringstream unknown("panel.bogus = 1\n");
    CHECK_THROWS_WITH_AS(parse_config(unknown), doctest::Contains("panel.bogus"),
                         ConfigError);
    std::istringstream garbage("scene.image_size = large\n");
    CHECK_THROWS_WITH_AS(parse_config(garbage), doctest::Contains("scene.image_size"),
                         ConfigError);
}

TEST_CASE("config save/load round trip") {
    TempDir tmp;
    ProjectConfig cfg = default_config();
    cfg.scene.image_size = 96;
    cfg.render.quantize = QuantizeMode::round;
    cfg.phase_angle_deg = 42.5;
    cfg.sweep_ambient_levels = {0.0, 12.75, 51.0};
    cfg.output_dir = "results";
    save_config(cfg, tmp.file("cfg.ini"));
    const ProjectConfig back = load_config(tmp.file("cfg.ini"));
    CHECK(back.scene.image_size == 96);
    CHECK(back.render.quantize == QuantizeMode::round);
    CHECK(back.phase_angle_deg == 42.5);
    CHECK(back.sweep_ambient_levels == cfg.sweep_ambient_levels);
    CHECK(back.output_dir == "results");
    CHECK(back.panel.phase_angle_g_deg == cfg.panel.phase_angle_g_deg);
    CHECK(back.solver.high == cfg.solver.high);
    CHECK(back.hardware.joint_angles_deg == cfg.hardware.joint_angles_deg);
}

TEST_CASE("comments and blank lines are accepted") {
    std::istringstream in(
        "# capture rig\n\nscene.image_size = 64   # small test size\n"
        "render.quantize = off\n");
    const ProjectConfig cfg = parse_config(in);
    CHECK(cfg.scene.image_size == 64);
    CHECK(cfg.render.quantize == QuantizeMode::off);
}

TEST_CASE("missing config file raises ConfigError") {
    CHECK_THROWS_AS(load_config("/nonexistent/path/cfg.ini"), ConfigError);
}

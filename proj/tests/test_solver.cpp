#include "lightpanel/solver.hpp"

#include "lightpanel/panel.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace lightpanel;

namespace {

std::vector<double> shade(const UnitVector3& n, const std::vector<UnitVector3>& lights,
                          double albedo, double intensity) {
    std::vector<double> out;
    for (const UnitVector3& l : lights)
        out.push_back(std::max(0.0, n.dot(l)) * albedo * intensity);
    return out;
}

ImageStack render_ring(const SphereScene& scene, double g_deg, int count,
                       double ambient = 0.0, QuantizeMode quantize = QuantizeMode::off) {
    ImageStack stack;
    RenderSettings settings;
    settings.quantize = quantize;
    settings.ambient_level = ambient;
    for (const UnitVector3& l : ring_directions_at(g_deg, count)) {
        settings.light_direction = l;
        stack.images.push_back(render(scene, settings));
        stack.light_directions.push_back(l);
    }
    stack.ambient_frame = render_ambient_frame(scene, settings);
    return stack;
}

} // namespace

TEST_CASE("symmetric three-light setup recovers the up normal exactly") {
    const auto lights = ring_directions_at(30.0, 3);
    const auto intensities = shade({0, 0, 1}, lights, 0.75, 255.0);
    const PixelSolution sol = solve_pixel(intensities, lights);
    CHECK(std::abs(sol.normal.x) < 1e-12);
    CHECK(std::abs(sol.normal.y) < 1e-12);
    CHECK(sol.normal.z == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.albedo == doctest::Approx(0.75 * 255.0).epsilon(1e-12));
    CHECK(sol.residual < 1e-9);
}

TEST_CASE("three lights: least squares equals the direct matrix inverse") {
    const std::vector<UnitVector3> lights = {make_unit(0.3, 0.1, 0.9),
                                             make_unit(-0.2, 0.4, 0.8),
                                             make_unit(0.1, -0.3, 0.95)};
    const UnitVector3 n = make_unit(0.2, -0.1, 0.97);
    const auto intensities = shade(n, lights, 0.6, 200.0);
    // Oracle: invert the 3x3 light matrix directly with Cramer's rule.
    const auto a = lights[0].vec(), b = lights[1].vec(), c = lights[2].vec();
    Eigen::Matrix3d L;
    L << a.transpose(), b.transpose(), c.transpose();
    const double det = L.determinant();
    REQUIRE(std::abs(det) > 1e-6);
    Eigen::Vector3d rhs(intensities[0], intensities[1], intensities[2]);
    Eigen::Vector3d s;
    for (int k = 0; k < 3; ++k) {
        Eigen::Matrix3d Lk = L;
        Lk.col(k) = rhs;
        s(k) = Lk.determinant() / det;
    }
    const PixelSolution sol = solve_pixel(intensities, lights);
    CHECK(sol.albedo == doctest::Approx(s.norm()).epsilon(1e-12));
    CHECK(sol.normal.x == doctest::Approx(s(0) / s.norm()).epsilon(1e-12));
    CHECK(sol.normal.y == doctest::Approx(s(1) / s.norm()).epsilon(1e-12));
    CHECK(sol.normal.z == doctest::Approx(s(2) / s.norm()).epsilon(1e-12));
}

TEST_CASE("intensity scaling scales albedo, not the normal") {
    const auto lights = ring_directions_at(40.0, 6);
    const UnitVector3 n = make_unit(0.3, 0.2, 0.93);
    auto base = shade(n, lights, 0.8, 100.0);
    auto scaled = base;
    for (double& v : scaled)
        v *= 2.5;
    const PixelSolution a = solve_pixel(base, lights);
    const PixelSolution b = solve_pixel(scaled, lights);
    CHECK(b.albedo == doctest::Approx(2.5 * a.albedo).epsilon(1e-12));
    CHECK(b.normal.x == doctest::Approx(a.normal.x).epsilon(1e-12));
    CHECK(b.normal.y == doctest::Approx(a.normal.y).epsilon(1e-12));
    CHECK(b.normal.z == doctest::Approx(a.normal.z).epsilon(1e-12));
}

TEST_CASE("degenerate and dark pixels throw") {
    const std::vector<UnitVector3> coplanar = {make_unit(1, 0, 1), make_unit(-1, 0, 1),
                                               make_unit(0, 0, 1)};
    CHECK_THROWS_AS(solve_pixel({10.0, 10.0, 10.0}, coplanar), std::domain_error);
    const auto lights = ring_directions_at(30.0, 3);
    CHECK_THROWS_AS(solve_pixel({0.0, 0.0, 0.0}, lights), std::domain_error);
    CHECK_THROWS_AS(solve_pixel({1.0, 1.0}, {lights[0], lights[1]}), std::invalid_argument);
}

TEST_CASE("measurement mask keeps the open interval") {
    const auto mask = pixel_measurement_mask({0.0, 2.0, 2.5, 249.9, 250.0, 255.0}, 2.0, 250.0);
    CHECK(mask == std::vector<bool>{false, false, true, true, false, false});
    CHECK_THROWS_AS(pixel_measurement_mask({1.0}, 250.0, 2.0), std::invalid_argument);
}

TEST_CASE("render/solve round trip is exact without quantization") {
    SphereScene scene;
    scene.image_size = 64;
    scene.albedo = 0.9;
    const ImageStack stack = render_ring(scene, 30.0, 6);
    const NormalAlbedoMap est = solve_stack(stack);
    const NormalAlbedoMap truth = ground_truth_map(scene);
    const AngularErrorMap err = angular_error_map(est, truth);
    CHECK(err.stats.pixel_count > 1000);
    CHECK(err.stats.mean_deg < 1e-8);
    for (std::size_t i = 0; i < est.valid.size(); ++i)
        if (est.valid[i])
            CHECK(std::abs(est.albedo[i] - 0.9 * 255.0) < 1e-8);
}

TEST_CASE("stack solve is invariant to image permutation") {
    SphereScene scene;
    scene.image_size = 48;
    ImageStack stack = render_ring(scene, 35.0, 5);
    const NormalAlbedoMap a = solve_stack(stack);
    std::rotate(stack.images.begin(), stack.images.begin() + 2, stack.images.end());
    std::rotate(stack.light_directions.begin(), stack.light_directions.begin() + 2,
                stack.light_directions.end());
    const NormalAlbedoMap b = solve_stack(stack);
    REQUIRE(a.valid == b.valid);
    for (std::size_t i = 0; i < a.valid.size(); ++i) {
        if (!a.valid[i])
            continue;
        CHECK(std::abs(a.normals[i].x - b.normals[i].x) < 1e-12);
        CHECK(std::abs(a.normals[i].y - b.normals[i].y) < 1e-12);
        CHECK(std::abs(a.normals[i].z - b.normals[i].z) < 1e-12);
        CHECK(std::abs(a.albedo[i] - b.albedo[i]) < 1e-10);
    }
}

TEST_CASE("ambient subtraction is exact for real-valued captures") {
    SphereScene scene;
    scene.image_size = 48;
    const ImageStack clean = render_ring(scene, 30.0, 6, 0.0);
    const ImageStack lit = render_ring(scene, 30.0, 6, 37.25);
    const ImageStack recovered = subtract_ambient(lit);
    for (std::size_t k = 0; k < clean.images.size(); ++k)
        for (std::size_t i = 0; i < clean.images[k].size(); ++i)
            CHECK(std::abs(recovered.images[k].pixels()[i] - clean.images[k].pixels()[i]) <
                  1e-10);
    CHECK_FALSE(recovered.ambient_frame.has_value());

    ImageStack no_frame = clean;
    no_frame.ambient_frame.reset();
    CHECK_THROWS_AS(subtract_ambient(no_frame), std::invalid_argument);
}

TEST_CASE("stack validation catches mismatches") {
    ImageStack stack;
    CHECK_THROWS_AS(stack.validate(), std::invalid_argument);
    SphereScene scene;
    scene.image_size = 16;
    stack = render_ring(scene, 30.0, 3);
    stack.light_directions.pop_back();
    CHECK_THROWS_AS(stack.validate(), std::invalid_argument);
}

TEST_CASE("angular error statistics on a constructed pair") {
    NormalAlbedoMap a, b;
    a.width = b.width = 2;
    a.height = b.height = 1;
    a.normals = {{0, 0, 1}, {0, 0, 1}};
    b.normals = {{0, 0, 1}, make_unit(std::sin(0.1), 0.0, std::cos(0.1))};
    a.albedo = b.albedo = {1.0, 1.0};
    a.valid = b.valid = {true, true};
    a.used_light_count = b.used_light_count = {3, 3};
    const AngularErrorMap err = angular_error_map(a, b);
    const double deg = 0.1 * 180.0 / std::numbers::pi;
    CHECK(err.stats.mean_deg == doctest::Approx(deg / 2.0).epsilon(1e-9));
    CHECK(err.stats.median_deg == doctest::Approx(deg / 2.0).epsilon(1e-9));
    CHECK(err.stats.pixel_count == 2);

    b.valid = {false, false};
    CHECK_THROWS_AS(angular_error_map(a, b), std::domain_error);
}

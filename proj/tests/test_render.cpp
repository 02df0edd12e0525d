#include "lightpanel/render.hpp"

#include <doctest.h>

#include <cmath>

using namespace lightpanel;

TEST_CASE("lambertian shading on hand-worked examples") {
    // n = l = +z, albedo 0.8, intensity 255: 255 * 0.8 * 1 = 204.
    CHECK(lambertian_intensity({0, 0, 1}, {0, 0, 1}, 0.8, 255.0) == doctest::Approx(204.0));
    // cos 60 = 0.5: 255 * 0.8 * 0.5 = 102.
    const UnitVector3 l60 = make_unit(std::sin(std::acos(0.5)), 0.0, 0.5);
    CHECK(lambertian_intensity({0, 0, 1}, l60, 0.8, 255.0) ==
          doctest::Approx(102.0).epsilon(1e-12));
    // Light behind the surface clamps to zero (attached shadow).
    CHECK(lambertian_intensity({0, 0, 1}, {0, 0, -1}, 0.8, 255.0) == 0.0);
    CHECK(lambertian_intensity({1, 0, 0}, {0, 0, 1}, 0.8, 255.0) == 0.0);
}

TEST_CASE("sphere normals under orthographic projection") {
    SphereScene scene;
    scene.image_size = 129;   // odd size puts a pixel centre on the axis
    scene.radius_fraction = 0.4;
    const int c = (scene.image_size - 1) / 2;
    const auto centre = sphere_normal_at(scene, c, c);
    REQUIRE(centre.has_value());
    CHECK(centre->x == doctest::Approx(0.0));
    CHECK(centre->y == doctest::Approx(0.0));
    CHECK(centre->z == doctest::Approx(1.0));

    // Half a projected radius to the right: n = (0.5, 0, sqrt(0.75)).
    const int px = c + static_cast<int>(scene.pixel_radius() * 0.5);
    const double x = (px - c) / scene.pixel_radius();
    const auto side = sphere_normal_at(scene, px, c);
    REQUIRE(side.has_value());
    CHECK(side->x == doctest::Approx(x).epsilon(1e-12));
    CHECK(side->z == doctest::Approx(std::sqrt(1.0 - x * x)).epsilon(1e-12));
    CHECK(is_unit(*side, 1e-12));

    CHECK_FALSE(sphere_normal_at(scene, 0, 0).has_value());
}

TEST_CASE("quantization modes") {
    CHECK(apply_quantization(100.7, QuantizeMode::off, 255.0) == doctest::Approx(100.7));
    CHECK(apply_quantization(100.7, QuantizeMode::truncate, 255.0) == 100.0);
    CHECK(apply_quantization(100.7, QuantizeMode::round, 255.0) == 101.0);
    CHECK(apply_quantization(300.0, QuantizeMode::truncate, 255.0) == 255.0);
    CHECK(apply_quantization(-3.0, QuantizeMode::truncate, 255.0) == 0.0);
    CHECK(apply_quantization(300.0, QuantizeMode::round, 200.0) == 200.0);
}

TEST_CASE("render produces expected values at the sphere pole") {
    SphereScene scene;
    scene.image_size = 65;
    scene.albedo = 0.9;
    RenderSettings settings;
    settings.light_direction = {0, 0, 1};
    settings.light_intensity = 255.0;
    settings.quantize = QuantizeMode::off;
    const GrayImage img = render(scene, settings);
    const int c = (scene.image_size - 1) / 2;
    CHECK(img.at(c, c) == doctest::Approx(229.5).epsilon(1e-12));
    CHECK(img.at(0, 0) == 0.0);   // background, no ambient

    settings.ambient_level = 10.0;
    const GrayImage lit = render(scene, settings);
    CHECK(lit.at(c, c) == doctest::Approx(239.5).epsilon(1e-12));
    CHECK(lit.at(0, 0) == doctest::Approx(10.0));

    const GrayImage amb = render_ambient_frame(scene, settings);
    CHECK(amb.at(c, c) == doctest::Approx(10.0));
    CHECK(amb.at(0, 0) == doctest::Approx(10.0));
}

TEST_CASE("truncating capture floors fractional intensities") {
    SphereScene scene;
    scene.image_size = 65;
    scene.albedo = 0.9;
    RenderSettings settings;
    settings.light_direction = {0, 0, 1};
    settings.quantize = QuantizeMode::truncate;
    const GrayImage img = render(scene, settings);
    const int c = (scene.image_size - 1) / 2;
    CHECK(img.at(c, c) == 229.0);   // floor(229.5)
    for (double v : img.pixels())
        CHECK(v == std::floor(v));
}

TEST_CASE("noise is reproducible per seed") {
    SphereScene scene;
    scene.image_size = 33;
    RenderSettings settings;
    settings.noise_sigma = 2.0;
    settings.noise_seed = 42;
    settings.quantize = QuantizeMode::off;
    const GrayImage a = render(scene, settings);
    const GrayImage b = render(scene, settings);
    CHECK(a.pixels() == b.pixels());
    settings.noise_seed = 43;
    const GrayImage c = render(scene, settings);
    CHECK(a.pixels() != c.pixels());
}

TEST_CASE("scene validation") {
    SphereScene scene;
    scene.radius_fraction = 0.6;
    CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
    scene.radius_fraction = 0.4;
    scene.albedo = 0.0;
    CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
}

#pragma once

#include "lightpanel/solver.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lightpanel {

/// Per-pixel surface gradients (p = dz/dx, q = dz/dy) on a masked domain.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> p;
    std::vector<double> q;
    std::vector<bool> valid;

    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x);
    }
};

/// Height field defined up to an additive constant; anchored to zero mean
/// over each connected component of the valid region.
struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<double> z;
    std::vector<bool> valid;

    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x);
    }
};

/// p = -nx/nz, q = -ny/nz where nz > z_floor; grazing normals are dropped.
GradientField normals_to_gradients(const NormalAlbedoMap& map, double z_floor = 0.1);

struct IntegrateOptions {
    /// Relative residual target for the conjugate-gradient solve.
    double cg_tolerance = 1e-14;
    /// Iteration cap as a multiple of the pixel count.
    int max_iterations_per_pixel = 10;
};

/// Global least-squares integration of the gradient field (Poisson-type
/// normal equations solved by conjugate gradients). Each 4-connected
/// component is integrated and anchored independently.
DepthMap integrate(const GradientField& field, const IntegrateOptions& opts = {});

struct TriangleMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::uint8_t> gray;               // optional, per vertex
    std::vector<std::array<std::uint32_t, 3>> triangles;
};

/// One vertex per valid pixel; two triangles per fully valid 2x2 quad.
/// Albedo, when given, is clamped to [0, 1] and stored as 8-bit gray.
TriangleMesh depth_to_mesh(const DepthMap& depth, const NormalAlbedoMap* albedo = nullptr);

} // namespace lightpanel

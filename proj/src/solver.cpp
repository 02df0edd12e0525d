#include "lightpanel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lightpanel {

void ImageStack::validate() const {
    if (images.size() < 3)
        throw std::invalid_argument("ImageStack: at least three images are required");
    if (light_directions.size() != images.size())
        throw std::invalid_argument("ImageStack: one light direction per image required");
    for (const auto& img : images)
        if (!img.same_size(images.front()))
            throw std::invalid_argument("ImageStack: images must share dimensions");
    if (ambient_frame && !ambient_frame->same_size(images.front()))
        throw std::invalid_argument("ImageStack: ambient frame must match image dimensions");
    for (const auto& l : light_directions)
        if (!is_unit(l))
            throw std::invalid_argument("ImageStack: light directions must be unit length");
}

ImageStack subtract_ambient(const ImageStack& stack) {
    stack.validate();
    if (!stack.ambient_frame)
        throw std::invalid_argument("subtract_ambient: stack has no ambient frame");
    ImageStack out;
    out.light_directions = stack.light_directions;
    out.images.reserve(stack.images.size());
    const auto& amb = stack.ambient_frame->pixels();
    for (const auto& img : stack.images) {
        GrayImage sub(img.width(), img.height());
        const auto& src = img.pixels();
        auto& dst = sub.pixels();
        for (std::size_t i = 0; i < src.size(); ++i)
            dst[i] = std::max(0.0, src[i] - amb[i]);
        out.images.push_back(std::move(sub));
    }
    return out;
}

std::vector<bool> pixel_measurement_mask(const std::vector<double>& intensities, double low,
                                         double high) {
    if (!(low >= 0.0 && low < high && high <= 255.0))
        throw std::invalid_argument("pixel_measurement_mask: need 0 <= low < high <= 255");
    std::vector<bool> mask(intensities.size());
    for (std::size_t i = 0; i < intensities.size(); ++i)
        mask[i] = intensities[i] > low && intensities[i] < high;
    return mask;
}

namespace {

struct LinearSolve {
    Eigen::Vector3d scaled_normal;
    double residual;
    double condition;
};

// Normal-equations least squares for the scaled normal rho * n.
LinearSolve solve_scaled_normal(const std::vector<double>& intensities,
                                const std::vector<UnitVector3>& lights) {
    const std::size_t k = intensities.size();
    Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < k; ++i) {
        const Eigen::Vector3d l = lights[i].vec();
        g += l * l.transpose();
        rhs += l * intensities[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(g);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    const double cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();

    const Eigen::Vector3d s = g.ldlt().solve(rhs);
    double res2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double r = lights[i].vec().dot(s) - intensities[i];
        res2 += r * r;
    }
    return {s, std::sqrt(res2), cond};
}

} // namespace

PixelSolution solve_pixel(const std::vector<double>& intensities,
                          const std::vector<UnitVector3>& lights, double max_condition,
                          double albedo_floor) {
    if (intensities.size() < 3 || intensities.size() != lights.size())
        throw std::invalid_argument("solve_pixel: need k >= 3 matched measurements");
    const LinearSolve ls = solve_scaled_normal(intensities, lights);
    if (!(ls.condition <= max_condition))
        throw std::domain_error("solve_pixel: degenerate light configuration");
    const double rho = ls.scaled_normal.norm();
    if (rho < albedo_floor)
        throw std::domain_error("solve_pixel: dark pixel (albedo below floor)");
    const Eigen::Vector3d n = ls.scaled_normal / rho;
    return {{n.x(), n.y(), n.z()}, rho, ls.residual};
}

NormalAlbedoMap solve_stack(const ImageStack& stack, const SolverThresholds& thresholds) {
    stack.validate();
    const int w = stack.width();
    const int h = stack.height();
    const std::size_t f = stack.light_count();

    NormalAlbedoMap map;
    map.width = w;
    map.height = h;
    const std::size_t npix = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    map.normals.resize(npix);
    map.albedo.assign(npix, 0.0);
    map.valid.assign(npix, false);
    map.used_light_count.assign(npix, 0);

    std::vector<double> meas;
    std::vector<UnitVector3> lights;
    meas.reserve(f);
    lights.reserve(f);

    for (std::size_t p = 0; p < npix; ++p) {
        meas.clear();
        lights.clear();
        for (std::size_t i = 0; i < f; ++i) {
            const double v = stack.images[i].pixels()[p];
            if (v > thresholds.low && v < thresholds.high) {
                meas.push_back(v);
                lights.push_back(stack.light_directions[i]);
            }
        }
        map.used_light_count[p] = static_cast<int>(meas.size());
        if (meas.size() < 3)
            continue;
        const LinearSolve ls = solve_scaled_normal(meas, lights);
        if (!(ls.condition <= thresholds.max_condition))
            continue;
        const double rho = ls.scaled_normal.norm();
        if (rho < thresholds.albedo_floor)
            continue;
        const Eigen::Vector3d n = ls.scaled_normal / rho;
        map.normals[p] = {n.x(), n.y(), n.z()};
        map.albedo[p] = rho;
        map.valid[p] = true;
    }
    return map;
}

AngularErrorMap angular_error_map(const NormalAlbedoMap& estimate, const NormalAlbedoMap& truth) {
    if (estimate.width != truth.width || estimate.height != truth.height)
        throw std::invalid_argument("angular_error_map: maps must share dimensions");
    AngularErrorMap out;
    out.degrees = GrayImage(estimate.width, estimate.height);
    const std::size_t npix = estimate.normals.size();
    out.compared.assign(npix, false);

    std::vector<double> deg;
    std::vector<double> rel;
    for (std::size_t p = 0; p < npix; ++p) {
        if (!estimate.valid[p] || !truth.valid[p])
            continue;
        const UnitVector3& a = estimate.normals[p];
        const UnitVector3& b = truth.normals[p];
        // atan2 of the cross-product norm stays accurate for tiny angles,
        // where acos of the dot product bottoms out near sqrt(eps).
        const Eigen::Vector3d cross = a.vec().cross(b.vec());
        const double e = std::atan2(cross.norm(), a.dot(b)) * 180.0 / std::numbers::pi;
        out.degrees.pixels()[p] = e;
        out.compared[p] = true;
        deg.push_back(e);
        const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
        rel.push_back(std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    if (deg.empty())
        throw std::domain_error("angular_error_map: no pixel valid in both maps");

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    double sum_deg = 0.0, sum_rel = 0.0;
    for (double e : deg) sum_deg += e;
    for (double e : rel) sum_rel += e;
    out.stats.pixel_count = deg.size();
    out.stats.mean_deg = sum_deg / deg.size();
    out.stats.mean_rel = sum_rel / rel.size();
    out.stats.median_deg = median(deg);
    out.stats.median_rel = median(rel);
    return out;
}

NormalAlbedoMap ground_truth_map(const SphereScene& scene) {
    const GroundTruth gt = ground_truth_normals(scene);
    NormalAlbedoMap map;
    map.width = gt.width;
    map.height = gt.height;
    const std::size_t npix = gt.normals.size();
    map.normals.resize(npix);
    map.albedo.assign(npix, 0.0);
    map.valid.assign(npix, false);
    map.used_light_count.assign(npix, 0);
    for (std::size_t p = 0; p < npix; ++p) {
        if (gt.normals[p]) {
            map.normals[p] = *gt.normals[p];
            map.albedo[p] = scene.albedo;
            map.valid[p] = true;
        }
    }
    return map;
}

} // namespace lightpanel

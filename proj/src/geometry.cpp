#include "lightpanel/geometry.hpp"

#include <cmath>

namespace lightpanel {

UnitVector3 make_unit(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-15)
        throw std::invalid_argument("make_unit: vector too close to zero");
    return {x / n, y / n, z / n};
}

bool is_unit(const UnitVector3& v, double tol) {
    return std::abs(std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z) - 1.0) <= tol;
}

namespace {

// Nearest orthonormal matrix with det +1 (polar factor via SVD).
Eigen::Matrix3d orthonormalize(const Eigen::Matrix3d& m) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d r = svd.matrixU() * svd.matrixV().transpose();
    if (r.determinant() < 0.0) {
        Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
        flip(2, 2) = -1.0;
        r = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    return r;
}

double defect_of(const Eigen::Matrix3d& r) {
    return (r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

} // namespace

Transform::Transform(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation)
    : rot_(rotation), trans_(translation) {
    if (defect_of(rot_) > 1e-9 || rot_.determinant() < 0.0)
        rot_ = orthonormalize(rot_);
}

Transform Transform::translation(double x, double y, double z) {
    return {Eigen::Matrix3d::Identity(), Eigen::Vector3d(x, y, z)};
}

Transform Transform::rotation_z(double radians) {
    Eigen::Matrix3d r;
    const double c = std::cos(radians), s = std::sin(radians);
    r << c, -s, 0.0,
         s,  c, 0.0,
         0.0, 0.0, 1.0;
    return {r, Eigen::Vector3d::Zero()};
}

double Transform::orthonormality_defect() const { return defect_of(rot_); }

Transform compose(const Transform& a, const Transform& b) {
    return {a.rotation() * b.rotation(), a.rotation() * b.translation() + a.translation()};
}

Transform inverse(const Transform& t) {
    Eigen::Matrix3d rt = t.rotation().transpose();
    return {rt, -(rt * t.translation())};
}

Transform light_in_camera(const TransformChain& chain, std::size_t i) {
    chain.validate();
    if (i >= chain.lights_in_world.size())
        throw std::out_of_range("light_in_camera: light index out of range");
    const Transform world_to_camera = inverse(compose(chain.panel_in_world, chain.camera_in_panel));
    return compose(world_to_camera, chain.lights_in_world[i]);
}

} // namespace lightpanel

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace lightpanel {

/// Direction in right-handed 3D space, kept at unit length.
/// Convention: camera looks down +z, image x right, image y down.
struct UnitVector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    Eigen::Vector3d vec() const { return {x, y, z}; }
    double dot(const UnitVector3& o) const { return x * o.x + y * o.y + z * o.z; }
};

/// Builds a UnitVector3 from an arbitrary non-zero vector, normalizing it.
UnitVector3 make_unit(double x, double y, double z);

/// Checks the unit-norm invariant (1e-9 tolerance).
bool is_unit(const UnitVector3& v, double tol = 1e-9);

/// Rigid pose: orthonormal rotation (det +1) plus translation in metres.
class Transform {
  public:
    Transform() : rot_(Eigen::Matrix3d::Identity()), trans_(Eigen::Vector3d::Zero()) {}
    Transform(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

    static Transform identity() { return {}; }
    static Transform translation(double x, double y, double z);
    static Transform rotation_z(double radians);

    const Eigen::Matrix3d& rotation() const { return rot_; }
    const Eigen::Vector3d& translation() const { return trans_; }

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rot_ * p + trans_; }

    /// Orthonormality defect ||R Rᵀ - I||_max.
    double orthonormality_defect() const;

  private:
    Eigen::Matrix3d rot_;
    Eigen::Vector3d trans_;
};

/// result applies b first, then a.
Transform compose(const Transform& a, const Transform& b);

Transform inverse(const Transform& t);

/// Calibration inputs: the panel pose in the world, the camera pose in the
/// panel frame, and one world pose per light source.
struct TransformChain {
    Transform panel_in_world;                 // H_OP
    Transform camera_in_panel;                // H_PC
    std::vector<Transform> lights_in_world;   // H_OL_i

    void validate() const {
        if (lights_in_world.empty())
            throw std::invalid_argument("TransformChain: lights_in_world must be non-empty");
    }
};

/// Pose of light i in the camera frame: (H_OP * H_PC)^-1 * H_OL_i.
Transform light_in_camera(const TransformChain& chain, std::size_t i);

} // namespace lightpanel

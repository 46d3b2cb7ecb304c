#pragma once

#include <Eigen/Dense>

namespace armkin {

/// End-effector position in the base frame, millimeters.
struct CartesianTarget {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const CartesianTarget&) const = default;
};

bool is_finite(const CartesianTarget& p);
double distance(const CartesianTarget& a, const CartesianTarget& b);

enum class Axis { X, Y, Z };

/**
 * Rigid motion as a 4x4 homogeneous matrix, column-vector convention
 * (p' = M * p), right-handed frames.
 *
 * Only the rotation block and translation column are stored; the bottom
 * row (0, 0, 0, 1) is supplied by construction whenever the full matrix
 * is requested, so it is exact rather than the result of arithmetic.
 */
class HomogeneousTransform {
public:
    HomogeneousTransform();
    HomogeneousTransform(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

    static HomogeneousTransform identity() { return {}; }

    /// Validates the bottom row and orthonormality (within 1e-12); throws DomainError.
    static HomogeneousTransform from_matrix(const Eigen::Matrix4d& m);

    const Eigen::Matrix3d& rotation() const { return rotation_; }
    const Eigen::Vector3d& translation() const { return translation_; }
    Eigen::Matrix4d matrix() const;

    CartesianTarget apply(const CartesianTarget& point) const;

private:
    Eigen::Matrix3d rotation_;
    Eigen::Vector3d translation_;
};

/// Orthonormality and det(R) = +1, both within `tol`.
bool is_rigid(const HomogeneousTransform& t, double tol = 1e-12);

HomogeneousTransform rot(Axis axis, double angle);
HomogeneousTransform trans(Axis axis, double d);
HomogeneousTransform compose(const HomogeneousTransform& a, const HomogeneousTransform& b);
CartesianTarget position_of(const HomogeneousTransform& t);

inline HomogeneousTransform operator*(const HomogeneousTransform& a, const HomogeneousTransform& b) {
    return compose(a, b);
}

} // namespace armkin

#include "armkin/transforms.hpp"

#include "armkin/errors.hpp"

#include <cmath>
#include <string>

namespace armkin {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

Eigen::Vector3d unit(Axis axis) {
    switch (axis) {
    case Axis::X: return Eigen::Vector3d::UnitX();
    case Axis::Y: return Eigen::Vector3d::UnitY();
    case Axis::Z: return Eigen::Vector3d::UnitZ();
    }
    throw DomainError("unknown axis");
}

} // namespace

bool is_finite(const CartesianTarget& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

double distance(const CartesianTarget& a, const CartesianTarget& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

HomogeneousTransform::HomogeneousTransform()
    : rotation_(Eigen::Matrix3d::Identity()), translation_(Eigen::Vector3d::Zero()) {}

HomogeneousTransform::HomogeneousTransform(const Eigen::Matrix3d& rotation,
                                           const Eigen::Vector3d& translation)
    : rotation_(rotation), translation_(translation) {}

HomogeneousTransform HomogeneousTransform::from_matrix(const Eigen::Matrix4d& m) {
    if (m(3, 0) != 0.0 || m(3, 1) != 0.0 || m(3, 2) != 0.0 || m(3, 3) != 1.0) {
        throw DomainError("bottom row of a homogeneous transform must be (0, 0, 0, 1)");
    }
    if (!m.allFinite()) {
        throw DomainError("homogeneous transform has non-finite entries");
    }
    HomogeneousTransform t(m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>());
    if (!is_rigid(t)) {
        throw DomainError("rotation block is not a proper rotation");
    }
    return t;
}

Eigen::Matrix4d HomogeneousTransform::matrix() const {
    Eigen::Matrix4d m;
    m.topLeftCorner<3, 3>() = rotation_;
    m.topRightCorner<3, 1>() = translation_;
    m.row(3) << 0.0, 0.0, 0.0, 1.0;
    return m;
}

CartesianTarget HomogeneousTransform::apply(const CartesianTarget& point) const {
    const Eigen::Vector3d p = rotation_ * Eigen::Vector3d(point.x, point.y, point.z) + translation_;
    return {p.x(), p.y(), p.z()};
}

bool is_rigid(const HomogeneousTransform& t, double tol) {
    const Eigen::Matrix3d& r = t.rotation();
    const double ortho = (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    return ortho <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

HomogeneousTransform rot(Axis axis, double angle) {
    require_finite(angle, "rotation angle");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix3d r;
    switch (axis) {
    case Axis::X:
        r << 1, 0, 0,
             0, c, -s,
             0, s, c;
        break;
    case Axis::Y:
        r << c, 0, s,
             0, 1, 0,
             -s, 0, c;
        break;
    case Axis::Z:
        r << c, -s, 0,
             s, c, 0,
             0, 0, 1;
        break;
    }
    return {r, Eigen::Vector3d::Zero()};
}

HomogeneousTransform trans(Axis axis, double d) {
    require_finite(d, "translation distance");
    return {Eigen::Matrix3d::Identity(), d * unit(axis)};
}

HomogeneousTransform compose(const HomogeneousTransform& a, const HomogeneousTransform& b) {
    return {a.rotation() * b.rotation(), a.rotation() * b.translation() + a.translation()};
}

CartesianTarget position_of(const HomogeneousTransform& t) {
    const Eigen::Vector3d& p = t.translation();
    return {p.x(), p.y(), p.z()};
}

} // namespace armkin

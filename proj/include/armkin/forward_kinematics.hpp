#pragma once

#include "armkin/transforms.hpp"

#include <array>
#include <cstddef>

namespace armkin {

/// Link lengths in millimeters: base column height a0, then links a1..a3.
struct LinkParameters {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    /// Maximum distance of the tool from the shoulder origin (0, 0, a0).
    double reach() const { return a1 + a2 + a3; }

    bool operator==(const LinkParameters&) const = default;
};

/// Throws DomainError unless every length is finite and strictly positive.
void validate(const LinkParameters& links);

/// Waist (about base Z), shoulder and elbow angles in radians.
struct JointAngles {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;

    double& operator[](std::size_t i);
    double operator[](std::size_t i) const;

    bool operator==(const JointAngles&) const = default;
};

struct JointLimit {
    double min = 0.0;
    double max = 0.0;

    bool operator==(const JointLimit&) const = default;
};

struct JointLimits {
    std::array<JointLimit, 3> joints;

    /// [-pi, pi] on every joint.
    static JointLimits full_turn();
    /// [0, pi] on every joint, the usual hobby-servo travel.
    static JointLimits servo_half_turn();

    bool operator==(const JointLimits&) const = default;
};

void validate(const JointLimits& limits);

/// Throws DomainError naming the first joint that is non-finite or outside `limits`.
void check_joint_limits(const JointAngles& q, const JointLimits& limits);

inline constexpr std::array<const char*, 3> kJointNames = {"t1 (waist)", "t2 (shoulder)", "t3 (elbow)"};

struct LinkTransforms {
    HomogeneousTransform m01;
    HomogeneousTransform m12;
    HomogeneousTransform m23;
    HomogeneousTransform m34;
};

/**
 * Frame-to-frame transforms of the arm:
 *
 *   M01 = Trans(Z, a0)
 *   M12 = Rot(Z, t1) * Rot(Y, pi/2) * Trans(Z, a1) * Rot(Y, t2)
 *   M23 = Trans(Z, a2) * Rot(Y, t3)
 *   M34 = Trans(Z, a3)
 *
 * The tool frame carries no fourth rotation.
 */
LinkTransforms link_transforms(const LinkParameters& links, const JointAngles& q,
                               const JointLimits& limits = JointLimits::full_turn());

struct FkResult {
    CartesianTarget position;
    HomogeneousTransform m04;
};

/// M04 = M01 * M12 * M23 * M34 and its translation column.
FkResult fk(const LinkParameters& links, const JointAngles& q,
            const JointLimits& limits = JointLimits::full_turn());

} // namespace armkin

#include "armkin/forward_kinematics.hpp"

#include "armkin/errors.hpp"
#include "armkin/units.hpp"

#include <fmt/format.h>

#include <cmath>

namespace armkin {

namespace {

// Slack on joint limits so that degree inputs such as 180 survive the conversion to radians.
constexpr double kLimitSlack = 1e-12;

} // namespace

void validate(const LinkParameters& links) {
    const std::array<std::pair<const char*, double>, 4> fields = {
        {{"a0", links.a0}, {"a1", links.a1}, {"a2", links.a2}, {"a3", links.a3}}};
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw DomainError(fmt::format("link length {} must be finite and > 0 (got {})", name, value));
        }
    }
}

double& JointAngles::operator[](std::size_t i) {
    switch (i) {
    case 0: return t1;
    case 1: return t2;
    case 2: return t3;
    }
    throw DomainError(fmt::format("joint index {} out of range", i));
}

double JointAngles::operator[](std::size_t i) const {
    return const_cast<JointAngles&>(*this)[i];
}

JointLimits JointLimits::full_turn() {
    return {{{{-kPi, kPi}, {-kPi, kPi}, {-kPi, kPi}}}};
}

JointLimits JointLimits::servo_half_turn() {
    return {{{{0.0, kPi}, {0.0, kPi}, {0.0, kPi}}}};
}

void validate(const JointLimits& limits) {
    for (std::size_t i = 0; i < limits.joints.size(); ++i) {
        const auto& j = limits.joints[i];
        if (!std::isfinite(j.min) || !std::isfinite(j.max) || j.min >= j.max) {
            throw DomainError(fmt::format("joint {} limits must be finite with min < max", kJointNames[i]));
        }
    }
}

void check_joint_limits(const JointAngles& q, const JointLimits& limits) {
    for (std::size_t i = 0; i < 3; ++i) {
        const double v = q[i];
        const auto& lim = limits.joints[i];
        if (!std::isfinite(v)) {
            throw DomainError(fmt::format("joint {} angle is not finite", kJointNames[i]));
        }
        if (v < lim.min - kLimitSlack || v > lim.max + kLimitSlack) {
            throw DomainError(fmt::format("joint {} angle {:.6f} deg outside limits [{:.6f}, {:.6f}] deg",
                                          kJointNames[i], rad_to_deg(v), rad_to_deg(lim.min),
                                          rad_to_deg(lim.max)));
        }
    }
}

LinkTransforms link_transforms(const LinkParameters& links, const JointAngles& q,
                               const JointLimits& limits) {
    validate(links);
    check_joint_limits(q, limits);
    return {
        trans(Axis::Z, links.a0),
        rot(Axis::Z, q.t1) * rot(Axis::Y, kPi / 2.0) * trans(Axis::Z, links.a1) * rot(Axis::Y, q.t2),
        trans(Axis::Z, links.a2) * rot(Axis::Y, q.t3),
        trans(Axis::Z, links.a3),
    };
}

FkResult fk(const LinkParameters& links, const JointAngles& q, const JointLimits& limits) {
    const LinkTransforms m = link_transforms(links, q, limits);
    HomogeneousTransform m04 = m.m01 * m.m12 * m.m23 * m.m34;
    return {position_of(m04), m04};
}

} // namespace armkin

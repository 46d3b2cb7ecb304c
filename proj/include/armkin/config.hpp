#pragma once

#include "armkin/arm_sim.hpp"
#include "armkin/inverse_kinematics.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace armkin {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Everything the tools need to know about one arm.
 *
 * On disk this is a flat `section.key = value` text file with `#` comments.
 * Angles are written in degrees and held here in radians. Keys that are
 * not present keep their defaults; unknown or repeated keys are errors.
 *
 *   links.a0 .. links.a3                   mm
 *   workspace.z_floor                       mm
 *   workspace.x_min_when_y_negative         mm
 *   workspace.x_threshold_when_y_positive   mm
 *   workspace.x_clamp_when_y_positive       mm
 *   servoN.min_deg / servoN.max_deg         N = 1..3
 *   servoN.max_velocity_dps
 *   servoN.pulse_min_us / servoN.pulse_max_us
 *   joints.tN_min_deg / joints.tN_max_deg   fk and sweep limits
 *   home.tN_deg                             simulator start pose
 *   ik.domain_mode                          clamp | paper
 *   ik.branch_mode                          robust | paper
 *   sweep.max_error_rel                     pass threshold, fraction of a1+a2+a3
 */
struct ArmConfig {
    LinkParameters links{40.0, 20.0, 80.0, 70.0};
    WorkspaceLimits workspace;
    std::array<ServoModel, 3> servos{};
    JointLimits joint_limits = JointLimits::full_turn();
    JointAngles home;
    DomainMode domain_mode = DomainMode::CLAMP;
    BranchMode branch_mode = BranchMode::ROBUST_ACOS;
    double sweep_max_error_rel = 1e-6;

    ArmModel arm_model() const { return {links, workspace, servos}; }

    bool operator==(const ArmConfig&) const = default;
};

/// Throws ConfigError if any component invariant is violated.
void validate(const ArmConfig& config);

ArmConfig parse_config(std::string_view text);
ArmConfig load_config(const std::filesystem::path& path);

/// Canonical text with every key, in a fixed order.
std::string serialize_config(const ArmConfig& config);

} // namespace armkin

#pragma once

#include "armkin/forward_kinematics.hpp"
#include "armkin/units.hpp"
#include "armkin/workspace_guard.hpp"

#include <array>
#include <optional>
#include <string>

namespace armkin {

/// Hobby servo: travel, slew rate and PWM pulse calibration.
struct ServoModel {
    double min_angle = 0.0;          // rad
    double max_angle = kPi;          // rad
    double max_velocity = kPi / 2.0; // rad/s
    double pulse_min = 500.0;        // us at min_angle
    double pulse_max = 2500.0;       // us at max_angle

    bool operator==(const ServoModel&) const = default;
};

void validate(const ServoModel& servo);

/// Linear angle -> pulse width map. Throws DomainError outside [min_angle, max_angle].
double servo_pulse(const ServoModel& servo, double angle);

struct ArmModel {
    LinkParameters links;
    WorkspaceLimits workspace;
    std::array<ServoModel, 3> servos;
};

void validate(const ArmModel& model);

/// Joints closer than this to their goal count as arrived.
inline constexpr double kMotionResolution = 1e-6;

struct ArmState {
    JointAngles current;
    JointAngles goal;
    bool moving = false;
    std::optional<ClampReport> last_clamp;
    double sim_time = 0.0;

    bool operator==(const ArmState&) const = default;
};

/// At rest at `home`; throws DomainError if home is outside a servo's travel.
ArmState initial_state(const ArmModel& model, const JointAngles& home);

struct CommandResult {
    ArmState state;
    bool accepted = false;
    std::string reason;
    ClampReport clamp;
};

/**
 * clamp_target -> reachable -> ik (ROBUST_ACOS, CLAMP) -> fit each angle into
 * its servo travel (allowing a 2*pi shift) -> new goal.
 *
 * A rejected command returns the input state unchanged. IK angles that do
 * not fit a servo are rejected, never clamped.
 */
CommandResult command_target(const ArmModel& model, const ArmState& state, const CartesianTarget& target);

/// Slews every joint toward its goal by at most max_velocity * dt, landing
/// exactly on the goal instead of overshooting. Throws DomainError for dt <= 0.
ArmState step(const ArmModel& model, const ArmState& state, double dt);

/// Freezes the arm where it is.
ArmState estop(const ArmState& state);

} // namespace armkin

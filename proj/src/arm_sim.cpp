#include "armkin/arm_sim.hpp"

#include "armkin/errors.hpp"
#include "armkin/inverse_kinematics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace armkin {

namespace {

constexpr double kServoSlack = 1e-12;

bool within(const ServoModel& s, double angle) {
    return angle >= s.min_angle - kServoSlack && angle <= s.max_angle + kServoSlack;
}

bool any_moving(const JointAngles& current, const JointAngles& goal) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(goal[i] - current[i]) > kMotionResolution) {
            return true;
        }
    }
    return false;
}

} // namespace

void validate(const ServoModel& s) {
    if (!std::isfinite(s.min_angle) || !std::isfinite(s.max_angle) || !(s.min_angle < s.max_angle)) {
        throw DomainError("servo min_angle must be below max_angle");
    }
    if (!std::isfinite(s.pulse_min) || !std::isfinite(s.pulse_max) || !(s.pulse_min < s.pulse_max)) {
        throw DomainError("servo pulse_min must be below pulse_max");
    }
    if (!std::isfinite(s.max_velocity) || !(s.max_velocity > 0.0)) {
        throw DomainError("servo max_velocity must be positive");
    }
}

double servo_pulse(const ServoModel& s, double angle) {
    if (!std::isfinite(angle) || !within(s, angle)) {
        throw DomainError(fmt::format("servo angle {:.6f} deg outside [{:.6f}, {:.6f}] deg", rad_to_deg(angle),
                                      rad_to_deg(s.min_angle), rad_to_deg(s.max_angle)));
    }
    const double u = (angle - s.min_angle) / (s.max_angle - s.min_angle);
    return s.pulse_min + u * (s.pulse_max - s.pulse_min);
}

void validate(const ArmModel& model) {
    validate(model.links);
    validate(model.workspace);
    for (const auto& s : model.servos) {
        validate(s);
    }
}

ArmState initial_state(const ArmModel& model, const JointAngles& home) {
    validate(model);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!std::isfinite(home[i]) || !within(model.servos[i], home[i])) {
            throw DomainError(fmt::format("home angle of joint {} is outside its servo travel", kJointNames[i]));
        }
    }
    return {home, home, false, std::nullopt, 0.0};
}

CommandResult command_target(const ArmModel& model, const ArmState& state, const CartesianTarget& target) {
    CommandResult result{state, false, {}, {}};
    if (!is_finite(target)) {
        result.reason = "target must be finite";
        return result;
    }
    result.clamp = clamp_target(target, model.workspace);
    const CartesianTarget& effective = result.clamp.clamped;

    const Reachability reach = reachable(model.links, effective);
    if (!reach.reachable) {
        result.reason = "unreachable after clamping: " + reach.reason;
        return result;
    }

    JointAngles goal;
    try {
        goal = ik(model.links, effective, DomainMode::CLAMP, BranchMode::ROBUST_ACOS).angles;
    } catch (const KinematicsError& e) {
        result.reason = e.what();
        return result;
    }

    for (std::size_t i = 0; i < 3; ++i) {
        const ServoModel& servo = model.servos[i];
        double fitted = goal[i];
        if (!within(servo, fitted)) {
            for (double shift : {2.0 * kPi, -2.0 * kPi}) {
                if (within(servo, goal[i] + shift)) {
                    fitted = goal[i] + shift;
                    break;
                }
            }
        }
        if (!within(servo, fitted)) {
            result.reason = fmt::format("joint {} angle {:.6f} deg outside servo travel [{:.6f}, {:.6f}] deg",
                                        kJointNames[i], rad_to_deg(goal[i]), rad_to_deg(servo.min_angle),
                                        rad_to_deg(servo.max_angle));
            return result;
        }
        fitted = std::clamp(fitted, servo.min_angle, servo.max_angle);
        // Already there: keep the goal bit-identical to the current angle.
        goal[i] = std::abs(fitted - state.current[i]) <= kMotionResolution ? state.current[i] : fitted;
    }

    result.state.goal = goal;
    result.state.moving = any_moving(state.current, goal);
    result.state.last_clamp = result.clamp;
    result.accepted = true;
    return result;
}

ArmState step(const ArmModel& model, const ArmState& state, double dt) {
    if (!std::isfinite(dt) || !(dt > 0.0)) {
        throw DomainError("step dt must be positive");
    }
    ArmState next = state;
    for (std::size_t i = 0; i < 3; ++i) {
        const double delta = state.goal[i] - state.current[i];
        const double max_move = model.servos[i].max_velocity * dt;
        next.current[i] = std::abs(delta) <= max_move ? state.goal[i] : state.current[i] + std::copysign(max_move, delta);
    }
    next.sim_time = state.sim_time + dt;
    next.moving = any_moving(next.current, next.goal);
    return next;
}

ArmState estop(const ArmState& state) {
    ArmState next = state;
    next.goal = state.current;
    next.moving = false;
    return next;
}

} // namespace armkin

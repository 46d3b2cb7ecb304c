#include "armkin/workspace_guard.hpp"

#include "armkin/errors.hpp"

#include <cmath>

namespace armkin {

void validate(const WorkspaceLimits& limits) {
    if (!std::isfinite(limits.z_floor) || !std::isfinite(limits.x_min_when_y_negative) ||
        !std::isfinite(limits.x_threshold_when_y_positive) || !std::isfinite(limits.x_clamp_when_y_positive)) {
        throw DomainError("workspace limits must be finite");
    }
    if (!(limits.x_min_when_y_negative < limits.x_threshold_when_y_positive)) {
        throw DomainError("workspace x_min_when_y_negative must be below x_threshold_when_y_positive");
    }
    if (limits.x_clamp_when_y_positive > limits.x_threshold_when_y_positive) {
        throw DomainError("workspace x_clamp_when_y_positive must not exceed x_threshold_when_y_positive");
    }
}

std::string_view to_string(ClampRule rule) {
    switch (rule) {
    case ClampRule::Z_FLOOR: return "Z_FLOOR";
    case ClampRule::X_NEG_Y: return "X_NEG_Y";
    case ClampRule::X_POS_Y: return "X_POS_Y";
    }
    return "?";
}

std::optional<ClampRule> parse_clamp_rule(std::string_view text) {
    for (ClampRule r : {ClampRule::Z_FLOOR, ClampRule::X_NEG_Y, ClampRule::X_POS_Y}) {
        if (to_string(r) == text) {
            return r;
        }
    }
    return std::nullopt;
}

ClampReport clamp_target(const CartesianTarget& target, const WorkspaceLimits& limits) {
    if (!is_finite(target)) {
        throw DomainError("target must be finite");
    }
    ClampReport report{target, target, {}};
    if (target.z < limits.z_floor) {
        report.clamped.z = limits.z_floor;
        report.rules_applied.push_back(ClampRule::Z_FLOOR);
    }
    if (target.y < 0.0 && target.x < limits.x_min_when_y_negative) {
        report.clamped.x = limits.x_min_when_y_negative;
        report.rules_applied.push_back(ClampRule::X_NEG_Y);
    } else if (target.y >= 0.0 && target.x > limits.x_threshold_when_y_positive) {
        report.clamped.x = limits.x_clamp_when_y_positive;
        report.rules_applied.push_back(ClampRule::X_POS_Y);
    }
    return report;
}

} // namespace armkin

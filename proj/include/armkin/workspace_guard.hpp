#pragma once

#include "armkin/transforms.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace armkin {

/// Coordinate box that keeps the tool off the mounting surface and away from the base.
struct WorkspaceLimits {
    double z_floor = -60.0;
    double x_min_when_y_negative = -51.0;
    double x_threshold_when_y_positive = 53.0;
    double x_clamp_when_y_positive = 52.0;

    bool operator==(const WorkspaceLimits&) const = default;
};

/// Finite values, x_min_when_y_negative < x_threshold_when_y_positive, and a
/// clamp value that does not itself trip the threshold.
void validate(const WorkspaceLimits& limits);

enum class ClampRule { Z_FLOOR, X_NEG_Y, X_POS_Y };

std::string_view to_string(ClampRule rule);
std::optional<ClampRule> parse_clamp_rule(std::string_view text);

struct ClampReport {
    CartesianTarget original;
    CartesianTarget clamped;
    std::vector<ClampRule> rules_applied;

    bool applied() const { return !rules_applied.empty(); }
    bool operator==(const ClampReport&) const = default;
};

/**
 * Rewrites a target that would drive the arm into the floor or into itself:
 *
 *   z < z_floor                              -> z = z_floor
 *   y <  0 and x < x_min_when_y_negative     -> x = x_min_when_y_negative
 *   y >= 0 and x > x_threshold_when_y_positive -> x = x_clamp_when_y_positive
 *
 * Rules are tested on the original components. y is never changed.
 */
ClampReport clamp_target(const CartesianTarget& target, const WorkspaceLimits& limits = {});

} // namespace armkin

#include "armkin/errors.hpp"
#include "armkin/workspace_guard.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace armkin;

TEST(ClampTarget, FloorRule) {
    const auto r = clamp_target({0, 0, -75});
    EXPECT_EQ(r.clamped, (CartesianTarget{0, 0, -60}));
    EXPECT_EQ(r.rules_applied, std::vector<ClampRule>{ClampRule::Z_FLOOR});
}

TEST(ClampTarget, NegativeYRule) {
    const auto r = clamp_target({-60, -10, 0});
    EXPECT_EQ(r.clamped, (CartesianTarget{-51, -10, 0}));
    EXPECT_EQ(r.rules_applied, std::vector<ClampRule>{ClampRule::X_NEG_Y});
}

TEST(ClampTarget, PositiveYRuleUsesAsymmetricConstants) {
    const auto r = clamp_target({60, 5, 0});
    EXPECT_EQ(r.clamped, (CartesianTarget{52, 5, 0}));
    EXPECT_EQ(r.rules_applied, std::vector<ClampRule>{ClampRule::X_POS_Y});
    // Between the clamp value and the threshold nothing happens.
    EXPECT_FALSE(clamp_target({52.5, 5, 0}).applied());
    EXPECT_FALSE(clamp_target({53, 5, 0}).applied());
}

TEST(ClampTarget, ZeroYBelongsToPositiveRule) {
    EXPECT_EQ(clamp_target({60, 0, 0}).rules_applied, std::vector<ClampRule>{ClampRule::X_POS_Y});
    EXPECT_FALSE(clamp_target({-60, 0, 0}).applied());
}

TEST(ClampTarget, RulesCombine) {
    const auto r = clamp_target({-70, -1, -100});
    EXPECT_EQ(r.clamped, (CartesianTarget{-51, -1, -60}));
    EXPECT_EQ(r.rules_applied, (std::vector<ClampRule>{ClampRule::Z_FLOOR, ClampRule::X_NEG_Y}));
    EXPECT_EQ(r.original, (CartesianTarget{-70, -1, -100}));
}

TEST(ClampTarget, CustomLimitsAndErrors) {
    const WorkspaceLimits limits{-10, -5, 5, 4};
    EXPECT_EQ(clamp_target({6, 1, -11}, limits).clamped, (CartesianTarget{4, 1, -10}));
    EXPECT_THROW(clamp_target({NAN, 0, 0}), DomainError);
    EXPECT_THROW(validate(WorkspaceLimits{-60, 53, 53, 52}), DomainError);
    EXPECT_THROW(validate(WorkspaceLimits{-60, -51, 53, 54}), DomainError);
    EXPECT_NO_THROW(validate(WorkspaceLimits{}));
}

TEST(ClampTarget, RuleNames) {
    EXPECT_EQ(to_string(ClampRule::Z_FLOOR), "Z_FLOOR");
    EXPECT_EQ(parse_clamp_rule("X_POS_Y"), ClampRule::X_POS_Y);
    EXPECT_FALSE(parse_clamp_rule("x_pos_y"));
}

TEST(ClampTargetProperty, IdempotentAndIdentityInside) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> coord(-120.0, 120.0);
    const WorkspaceLimits limits;
    for (int i = 0; i < 1000; ++i) {
        const CartesianTarget t{coord(rng), coord(rng), coord(rng)};
        const auto once = clamp_target(t, limits);
        const auto twice = clamp_target(once.clamped, limits);
        ASSERT_FALSE(twice.applied());
        ASSERT_EQ(twice.clamped, once.clamped);
        ASSERT_EQ(once.clamped.y, t.y);
        ASSERT_GE(once.clamped.z, limits.z_floor);
        ASSERT_EQ(once.applied(), !(once.clamped == t));

        const bool inside = t.z >= limits.z_floor && !(t.y < 0 && t.x < limits.x_min_when_y_negative) &&
                            !(t.y >= 0 && t.x > limits.x_threshold_when_y_positive);
        if (inside) {
            ASSERT_EQ(once.clamped, t);
            ASSERT_TRUE(once.rules_applied.empty());
        }
    }
}

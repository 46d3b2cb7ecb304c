#include "armkin/errors.hpp"
#include "armkin/validator.hpp"

#include <gtest/gtest.h>

using namespace armkin;

namespace {
const LinkParameters kLinks{2, 4, 6, 5};
}

TEST(RoundTrip, PaperTestPoint) {
    const auto r = roundtrip(kLinks, {3, -5, -8});
    ASSERT_TRUE(r.ok) << r.failure;
    EXPECT_LT(r.error_norm, 1e-3);
    EXPECT_EQ(r.error_norm, distance(r.target, r.recovered));
    EXPECT_EQ(r.domain_fixes_triggered, 0);
}

TEST(RoundTrip, StraightPose) {
    const auto target = fk(kLinks, {0, 0, 0}).position;
    const auto r = roundtrip(kLinks, target);
    ASSERT_TRUE(r.ok);
    EXPECT_LT(r.error_norm, 1e-9);
}

TEST(RoundTrip, UnreachableIsAFailureReport) {
    const auto r = roundtrip(kLinks, {100, 0, 0});
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.failure.find("a2 + a3"), std::string::npos) << r.failure;
}

TEST(RoundTrip, ErrorIsZeroOnlyForExactRecovery) {
    const auto r = roundtrip(kLinks, {15, 0, 2});
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.error_norm == 0.0, r.recovered == r.target);
}

TEST(Sweep, JointSpaceHasNoFailures) {
    const SweepSummary s = sweep(kLinks, {.sampler = Sampler::JOINT_SPACE, .n = 1000, .seed = 7});
    EXPECT_EQ(s.samples, 1000u);
    EXPECT_EQ(s.failures, 0u);
    EXPECT_LE(s.max_error, 1e-6 * kLinks.reach());
    EXPECT_LE(s.mean_error, s.max_error);
    std::size_t total = 0;
    for (auto c : s.histogram) total += c;
    EXPECT_EQ(total + s.failures, s.samples);
}

TEST(Sweep, ServoLimitsStillRoundTrip) {
    SweepOptions o;
    o.n = 500;
    o.seed = 3;
    o.joint_limits = JointLimits::servo_half_turn();
    const auto s = sweep({40, 20, 80, 70}, o);
    EXPECT_EQ(s.failures, 0u);
    EXPECT_LE(s.max_error, 1e-6 * 170.0);
}

TEST(Sweep, DeterministicPerSeed) {
    const SweepOptions o{.sampler = Sampler::JOINT_SPACE, .n = 1, .seed = 12345};
    EXPECT_EQ(sweep(kLinks, o), sweep(kLinks, o));
    const SweepOptions box{.sampler = Sampler::CARTESIAN_BOX, .n = 300, .seed = 9};
    EXPECT_EQ(to_csv(sweep(kLinks, box)), to_csv(sweep(kLinks, box)));
    EXPECT_NE(sweep(kLinks, {.n = 50, .seed = 1}), sweep(kLinks, {.n = 50, .seed = 2}));
}

TEST(Sweep, BoxBeyondReachFails) {
    const auto s = sweep(kLinks, {.sampler = Sampler::CARTESIAN_BOX, .n = 500, .seed = 4});
    EXPECT_GT(s.failures, 0u);
    EXPECT_LT(s.failures, s.samples);

    SweepOptions far{.sampler = Sampler::CARTESIAN_BOX, .n = 20, .seed = 4};
    far.box = Box{{100, 100, 100}, {200, 200, 200}};
    EXPECT_EQ(sweep(kLinks, far).failures, 20u);
}

TEST(Sweep, ZeroSamplesRejected) {
    EXPECT_THROW(sweep(kLinks, {.n = 0}), DomainError);
}

TEST(Sweep, CsvLayout) {
    SweepSummary s;
    s.seed = 7;
    s.samples = 10;
    s.max_error = 1.5e-12;
    s.mean_error = 2.5e-13;
    s.failures = 1;
    EXPECT_EQ(to_csv(s), "seed,samples,max_error,mean_error,failures\n7,10,1.500000e-12,2.500000e-13,1\n");
}

#pragma once

#include "armkin/inverse_kinematics.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace armkin {

/// One IK -> FK pass over a single target.
struct RoundTripReport {
    CartesianTarget target;
    JointAngles angles;
    IkIntermediates intermediates;
    CartesianTarget recovered;
    double error_norm = 0.0;
    int domain_fixes_triggered = 0;
    bool rear_reach = false;
    /// False when IK refused the target; `failure` then says why.
    bool ok = false;
    std::string failure;
};

/// Never throws for kinematic failures; they come back as ok = false.
RoundTripReport roundtrip(const LinkParameters& links, const CartesianTarget& target,
                          DomainMode domain = DomainMode::CLAMP,
                          BranchMode branch = BranchMode::ROBUST_ACOS);

enum class Sampler { JOINT_SPACE, CARTESIAN_BOX };

struct Box {
    CartesianTarget min;
    CartesianTarget max;
};

/// Cube of half-width 1.25 * reach centred on the shoulder origin (0, 0, a0).
Box default_box(const LinkParameters& links);

struct SweepOptions {
    Sampler sampler = Sampler::JOINT_SPACE;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    DomainMode domain = DomainMode::CLAMP;
    BranchMode branch = BranchMode::ROBUST_ACOS;
    JointLimits joint_limits = JointLimits::full_turn();
    std::optional<Box> box;
};

/// Upper edges of the error histogram buckets; the last bucket is open.
inline constexpr std::array<double, 5> kHistogramEdges = {1e-12, 1e-9, 1e-6, 1e-3, 1.0};

struct SweepSummary {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double max_error = 0.0;
    /// Over successful samples only.
    double mean_error = 0.0;
    std::size_t failures = 0;
    std::array<std::size_t, kHistogramEdges.size() + 1> histogram{};

    bool operator==(const SweepSummary&) const = default;
};

/// Deterministic for a given seed. Throws DomainError when n == 0.
SweepSummary sweep(const LinkParameters& links, const SweepOptions& options);

/// "seed,samples,max_error,mean_error,failures" header plus one row.
std::string to_csv(const SweepSummary& summary);

} // namespace armkin

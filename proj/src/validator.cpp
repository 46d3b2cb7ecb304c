#include "armkin/validator.hpp"

#include "armkin/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <random>

namespace armkin {

RoundTripReport roundtrip(const LinkParameters& links, const CartesianTarget& target, DomainMode domain,
                          BranchMode branch) {
    RoundTripReport report;
    report.target = target;
    try {
        const IkSolution sol = ik(links, target, domain, branch);
        report.angles = sol.angles;
        report.intermediates = sol.intermediates;
        report.domain_fixes_triggered = sol.domain_fixes;
        report.rear_reach = sol.rear_reach;
        report.recovered = fk(links, sol.angles).position;
        report.error_norm = distance(target, report.recovered);
        report.ok = true;
    } catch (const KinematicsError& e) {
        report.failure = e.what();
    }
    return report;
}

Box default_box(const LinkParameters& links) {
    const double h = 1.25 * links.reach();
    return {{-h, -h, links.a0 - h}, {h, h, links.a0 + h}};
}

SweepSummary sweep(const LinkParameters& links, const SweepOptions& options) {
    validate(links);
    validate(options.joint_limits);
    if (options.n == 0) {
        throw DomainError("sweep needs at least one sample");
    }

    std::mt19937_64 rng(options.seed);
    auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    const Box box = options.box.value_or(default_box(links));

    SweepSummary summary;
    summary.seed = options.seed;
    summary.samples = options.n;
    double error_sum = 0.0;

    for (std::size_t i = 0; i < options.n; ++i) {
        CartesianTarget target;
        if (options.sampler == Sampler::JOINT_SPACE) {
            JointAngles q;
            for (std::size_t j = 0; j < 3; ++j) {
                const auto& lim = options.joint_limits.joints[j];
                q[j] = uniform(lim.min, lim.max);
            }
            target = fk(links, q, options.joint_limits).position;
        } else {
            target = {uniform(box.min.x, box.max.x), uniform(box.min.y, box.max.y),
                      uniform(box.min.z, box.max.z)};
        }

        const RoundTripReport r = roundtrip(links, target, options.domain, options.branch);
        if (!r.ok) {
            ++summary.failures;
            continue;
        }
        summary.max_error = std::max(summary.max_error, r.error_norm);
        error_sum += r.error_norm;
        const auto bucket = std::upper_bound(kHistogramEdges.begin(), kHistogramEdges.end(), r.error_norm) -
                            kHistogramEdges.begin();
        ++summary.histogram[static_cast<std::size_t>(bucket)];
    }

    const std::size_t ok = summary.samples - summary.failures;
    summary.mean_error = ok > 0 ? error_sum / static_cast<double>(ok) : 0.0;
    return summary;
}

std::string to_csv(const SweepSummary& s) {
    return fmt::format("seed,samples,max_error,mean_error,failures\n{},{},{:.6e},{:.6e},{}\n", s.seed, s.samples,
                       s.max_error, s.mean_error, s.failures);
}

} // namespace armkin

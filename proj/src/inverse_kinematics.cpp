#include "armkin/inverse_kinematics.hpp"

#include "armkin/errors.hpp"
#include "armkin/units.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace armkin {

namespace {

constexpr double kReachSlack = 1e-9;

struct SideView {
    double w_prime;
    double alpha;
    double alpha_prime;
    double b;
};

// radial is the signed horizontal distance in the arm plane.
SideView side_view(const LinkParameters& links, double radial, double z) {
    SideView s{};
    const double drop = links.a0 - z;
    s.w_prime = std::sqrt(radial * radial + drop * drop);
    s.alpha = std::atan2(radial, drop);
    s.alpha_prime = kPi / 2.0 - s.alpha;
    const double b2 = links.a1 * links.a1 + s.w_prime * s.w_prime -
                      2.0 * links.a1 * s.w_prime * std::cos(s.alpha_prime);
    s.b = std::sqrt(std::max(b2, 0.0));
    return s;
}

bool closes(const LinkParameters& links, double b) {
    const double slack = kReachSlack * links.reach();
    return b >= std::abs(links.a2 - links.a3) - slack && b <= links.a2 + links.a3 + slack;
}

} // namespace

std::string_view to_string(DomainMode mode) {
    return mode == DomainMode::PAPER_FRACTIONAL ? "paper" : "clamp";
}

std::string_view to_string(BranchMode mode) {
    return mode == BranchMode::PAPER_ASIN ? "paper" : "robust";
}

std::optional<DomainMode> parse_domain_mode(std::string_view text) {
    if (text == "paper") return DomainMode::PAPER_FRACTIONAL;
    if (text == "clamp") return DomainMode::CLAMP;
    return std::nullopt;
}

std::optional<BranchMode> parse_branch_mode(std::string_view text) {
    if (text == "paper") return BranchMode::PAPER_ASIN;
    if (text == "robust") return BranchMode::ROBUST_ACOS;
    return std::nullopt;
}

double normalize_trig_arg(double x, DomainMode mode) {
    if (!std::isfinite(x)) {
        throw DomainError("trig argument must be finite");
    }
    if (std::abs(x) <= 1.0) {
        return x;
    }
    if (mode == DomainMode::PAPER_FRACTIONAL) {
        return x - std::trunc(x);
    }
    return std::copysign(1.0, x);
}

Reachability reachable(const LinkParameters& links, const CartesianTarget& target) {
    validate(links);
    if (!is_finite(target)) {
        throw DomainError("target must be finite");
    }
    const double w = std::hypot(target.x, target.y);
    Reachability r;
    r.b = side_view(links, w, target.z).b;
    if (closes(links, r.b)) {
        r.reachable = true;
        return r;
    }
    if (w > 0.0 && closes(links, side_view(links, -w, target.z).b)) {
        r.reachable = true;
        r.rear_reach = true;
        return r;
    }
    if (r.b > links.a2 + links.a3) {
        r.reason = fmt::format("b = {:.6f} > a2 + a3 = {:.6f} (target beyond reach)", r.b,
                               links.a2 + links.a3);
    } else {
        r.reason = fmt::format("b = {:.6f} < |a2 - a3| = {:.6f} (target too close to the shoulder)", r.b,
                               std::abs(links.a2 - links.a3));
    }
    return r;
}

IkSolution ik(const LinkParameters& links, const CartesianTarget& target, DomainMode domain,
              BranchMode branch) {
    const Reachability reach = reachable(links, target);
    if (domain == DomainMode::CLAMP && !reach.reachable) {
        throw ReachabilityError("unreachable target: " + reach.reason);
    }

    IkSolution sol;
    sol.rear_reach = reach.rear_reach;
    IkIntermediates& m = sol.intermediates;

    m.w = std::hypot(target.x, target.y);
    double t1 = m.w > 0.0 ? std::atan2(target.y, target.x) : 0.0;
    const double radial = sol.rear_reach ? -m.w : m.w;
    if (sol.rear_reach) {
        t1 = wrap_angle(t1 + kPi);
    }

    const SideView side = side_view(links, radial, target.z);
    m.w_prime = side.w_prime;
    m.alpha = side.alpha;
    m.alpha_prime = side.alpha_prime;
    m.b = side.b;
    if (!(m.b > 0.0)) {
        throw SingularityError("target coincides with the end of link a1 (b = 0)");
    }

    auto fix = [&](double x) {
        const double y = normalize_trig_arg(x, domain);
        if (y != x) {
            ++sol.domain_fixes;
        }
        return y;
    };

    const double a1 = links.a1;
    const double a2 = links.a2;
    const double a3 = links.a3;
    const double b = m.b;
    const double wp = m.w_prime;

    m.gamma = std::acos(fix((a2 * a2 + a3 * a3 - b * b) / (2.0 * a2 * a3)));
    if (branch == BranchMode::PAPER_ASIN) {
        m.alpha_dprime = std::asin(fix(wp * std::sin(m.alpha_prime) / b));
        m.gamma_prime = std::asin(fix(a3 * std::sin(m.gamma) / b));
    } else {
        const double magnitude = std::acos(fix((a1 * a1 + b * b - wp * wp) / (2.0 * a1 * b)));
        m.alpha_dprime = std::sin(m.alpha_prime) < 0.0 ? -magnitude : magnitude;
        m.gamma_prime = std::acos(fix((a2 * a2 + b * b - a3 * a3) / (2.0 * a2 * b)));
    }

    sol.angles = {t1, wrap_angle(kPi - m.alpha_dprime - m.gamma_prime), kPi - m.gamma};
    return sol;
}

} // namespace armkin

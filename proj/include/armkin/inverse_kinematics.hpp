#pragma once

#include "armkin/forward_kinematics.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace armkin {

/// How asin/acos arguments that fall outside [-1, 1] are brought back into range.
enum class DomainMode {
    PAPER_FRACTIONAL, ///< keep only the signed fractional part: 1.3 -> 0.3, -1.2 -> -0.2
    CLAMP,            ///< saturate to +-1
};

/// Which closed form recovers the shoulder-side triangle angles.
enum class BranchMode {
    PAPER_ASIN,  ///< law of sines; cannot represent obtuse angles
    ROBUST_ACOS, ///< law of cosines; valid over [0, pi]
};

std::string_view to_string(DomainMode mode);
std::string_view to_string(BranchMode mode);
std::optional<DomainMode> parse_domain_mode(std::string_view text);
std::optional<BranchMode> parse_branch_mode(std::string_view text);

/// Identity on [-1, 1]; otherwise applies `mode`. Throws DomainError for non-finite x.
double normalize_trig_arg(double x, DomainMode mode);

/**
 * Every quantity of the side-view construction, in the order it is computed.
 *
 * alpha and alpha_prime are taken from the signed radial distance, which is
 * negative when the solution reaches over the back of the waist.
 */
struct IkIntermediates {
    double w = 0.0;            ///< horizontal distance sqrt(x^2 + y^2)
    double w_prime = 0.0;      ///< shoulder origin to target
    double alpha = 0.0;        ///< atan2(w, a0 - z), measured from straight down
    double alpha_prime = 0.0;  ///< pi/2 - alpha, elevation below the horizontal
    double b = 0.0;            ///< end of link a1 to target
    double alpha_dprime = 0.0; ///< angle at the end of a1 between the base and the target
    double gamma = 0.0;        ///< elbow interior angle, in [0, pi]
    double gamma_prime = 0.0;  ///< angle at the end of a1 between the target and link a2
};

struct Reachability {
    bool reachable = false;
    /// The front triangle cannot close but the one across the waist axis can.
    bool rear_reach = false;
    /// Front-side b.
    double b = 0.0;
    /// Empty when reachable; otherwise the violated triangle inequality.
    std::string reason;
};

/**
 * True iff |a2 - a3| <= b <= a2 + a3 for the front-facing triangle, or for
 * the rear-facing one (waist turned by pi). Both bounds get a slack of
 * 1e-9 * reach so that boundary poses produced by fk() are accepted.
 */
Reachability reachable(const LinkParameters& links, const CartesianTarget& target);

struct IkSolution {
    JointAngles angles;
    IkIntermediates intermediates;
    bool rear_reach = false;
    /// Number of trig arguments that needed normalize_trig_arg to change them.
    int domain_fixes = 0;
};

/**
 * Closed-form geometric inverse kinematics.
 *
 *   t1 = atan2(y, x)          (0 when x = y = 0)
 *   t2 = pi - alpha'' - gamma' (wrapped to (-pi, pi])
 *   t3 = pi - gamma
 *
 * With CLAMP an unreachable target raises ReachabilityError; PAPER_FRACTIONAL
 * computes through whatever the fractional-part fix produces. b = 0 raises
 * SingularityError in either mode.
 *
 * ROBUST_ACOS gives alpha'' the sign of sin(alpha'), which is what the asin
 * form produces and what keeps targets above the shoulder on the same
 * elbow branch.
 */
IkSolution ik(const LinkParameters& links, const CartesianTarget& target,
              DomainMode domain = DomainMode::CLAMP, BranchMode branch = BranchMode::ROBUST_ACOS);

} // namespace armkin

#include "armkin/units.hpp"

#include <cmath>

namespace armkin {

double wrap_angle(double rad) {
    double r = std::fmod(rad + kPi, 2.0 * kPi);
    if (r <= 0.0) {
        r += 2.0 * kPi;
    }
    return r - kPi;
}

} // namespace armkin

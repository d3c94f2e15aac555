#pragma once

#include <cmath>
#include <string>

#include "spinent/errors.hpp"

namespace spinent::detail {

// Angle validation with a roundoff allowance: values within 1e-9 of a bound
// (e.g. pi/2 entered as 1.5707963268) are snapped into range rather than
// rejected. For a half-open [lo, hi) the upper bound wraps to lo, since every
// such parameter here is a phase with period hi - lo.
inline double checked_angle(double value, double lo, double hi, bool hi_open,
                            const char* name) {
    constexpr double kSlack = 1e-9;
    if (!std::isfinite(value) || value < lo - kSlack || value > hi + kSlack) {
        throw ParamOutOfRange(std::string(name) + " out of range");
    }
    if (value < lo) return lo;
    if (hi_open) {
        if (value >= hi) return lo;
    } else if (value > hi) {
        return hi;
    }
    return value;
}

}  // namespace spinent::detail

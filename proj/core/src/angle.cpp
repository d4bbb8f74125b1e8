// SPDX-License-Identifier: MIT

#include "crsq/angle.hpp"

namespace crsq {

double normalize_degrees(double degrees) {
    double m = std::fmod(degrees, 360.0);
    if (m <= -180.0) {
        m += 360.0;
    } else if (m > 180.0) {
        m -= 360.0;
    }
    const double snapped = std::round(m);
    if (std::abs(m - snapped) < 1e-7) {
        m = snapped;
    }
    return m == 0.0 ? 0.0 : m;  // avoid -0.0
}

Angle Angle::normalized() const { return Angle(normalize_degrees(degrees_)); }

}  // namespace crsq

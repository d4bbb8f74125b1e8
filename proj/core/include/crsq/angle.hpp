// SPDX-License-Identifier: MIT

#pragma once

#include <cmath>

namespace crsq {

/// Rotation angle in degrees. The canonical representative of a rotation lies
/// in (-180, 180]; adding 360 degrees flips the sign of the 2x2 operator but
/// leaves it unchanged up to global phase.
class Angle {
public:
    constexpr Angle() = default;
    constexpr explicit Angle(double degrees) : degrees_(degrees) {}

    [[nodiscard]] constexpr double degrees() const { return degrees_; }
    [[nodiscard]] double radians() const { return degrees_ * kPi / 180.0; }

    /// Canonical representative in (-180, 180]. Values within 1e-7 degrees of
    /// an integer are snapped to it, so pass pipelines stay exactly on the
    /// 45-degree grid they started from.
    [[nodiscard]] Angle normalized() const;

    [[nodiscard]] bool is_zero(double tol = 1e-9) const {
        return std::abs(normalized().degrees()) <= tol;
    }

    friend bool operator==(const Angle& a, const Angle& b) {
        return a.degrees_ == b.degrees_;
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    double degrees_ = 0.0;
};

/// Maps any angle onto (-180, 180], with integer snapping (see Angle::normalized).
double normalize_degrees(double degrees);

}  // namespace crsq

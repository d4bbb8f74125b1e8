// SPDX-License-Identifier: MIT

#pragma once

#include <span>
#include <vector>

#include "crsq/gate.hpp"
#include "crsq/unitary.hpp"

namespace crsq {

/// ZXZ Euler angles of a 2x2 unitary, up to global phase:
/// U ~ Rz(post_z) * Rx(x) * Rz(pre_z), with x in [0, 180].
struct ZxzAngles {
    double pre_z = 0.0;
    double x = 0.0;
    double post_z = 0.0;
};
[[nodiscard]] ZxzAngles zxz_decompose(const Eigen::Matrix2cd& u);

enum class CanonicalForm {
    /// [Rz][Rx(theta)][Rz] with the smallest |Rx| total; ties prefer fewer
    /// gates, then theta = +90 over -90.
    MIN_ROTATION,
    /// Executable form restricted to Rx(+90) pulses: [Rz][Rx(90)][Rz] (and
    /// the two-pulse [Rz][Rx(90)][Rz][Rx(90)][Rz] shape when already present).
    /// Runs whose conversion would add pulses are left untouched.
    X90,
};

/// Rewrites a same-wire run of RX/RY/RZ gates into canonical form, preserving
/// the operator up to global phase. Zero-angle gates are dropped; an identity
/// run comes back empty.
[[nodiscard]] std::vector<Gate> canonicalize_1q_run(std::span<const Gate> run,
                                                    CanonicalForm form = CanonicalForm::MIN_ROTATION);

/// Sum of |normalized angle| over RX/RY gates in a run (degrees).
[[nodiscard]] double run_rotation(std::span<const Gate> run);

/// 2x2 operator of a same-wire rotation run.
[[nodiscard]] Eigen::Matrix2cd run_unitary(std::span<const Gate> run);

}  // namespace crsq

// SPDX-License-Identifier: MIT

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "crsq/circuit.hpp"

namespace crsq {

/// Dense operator on 2^n basis states. Wire 0 is the most significant bit of
/// the basis index, so a 2-wire CNOT(0,1) prints in the textbook layout.
using Unitary = Eigen::MatrixXcd;

/// 2x2 rotation conventions (theta in degrees):
///   Rx(t) = [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
///   Ry(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
///   Rz(t) = diag(e^{-i t/2}, e^{+i t/2})
[[nodiscard]] Eigen::Matrix2cd rx_matrix(double degrees);
[[nodiscard]] Eigen::Matrix2cd ry_matrix(double degrees);
[[nodiscard]] Eigen::Matrix2cd rz_matrix(double degrees);
[[nodiscard]] Eigen::Matrix2cd h_matrix();
[[nodiscard]] Eigen::Matrix2cd x_matrix();

/// 4x4 closed forms on (control, target) = (wire 0, wire 1). The echoed CR
/// factors into a conditional-Rx kernel K = |0><0| (x) Rx(90) + |1><1| (x) Rx(-90)
/// and an echo E = Rx(180) on the control:
///   CR_{+-} = E * K   (kernel first in circuit time)
///   CR_{-+} = K * E   (echo first in circuit time)
[[nodiscard]] Eigen::Matrix4cd cr_kernel_matrix();
[[nodiscard]] Eigen::Matrix4cd cr_echo_matrix();
[[nodiscard]] Eigen::Matrix4cd cr_matrix(CrPolarity polarity);
[[nodiscard]] Eigen::Matrix4cd cnot_matrix();
[[nodiscard]] Eigen::Matrix4cd notc_matrix();
[[nodiscard]] Eigen::Matrix4cd swap_matrix();

/// The gate's own 2x2 or 4x4 block, before embedding into the full register.
[[nodiscard]] Unitary gate_block(const Gate& gate);

/// Embeds the gate into the full 2^n x 2^n register operator.
[[nodiscard]] Unitary gate_unitary(const Gate& gate, int n_wires);

/// Product of gate operators, rightmost factor first in circuit time.
/// Dense construction is limited to n_wires <= 12.
[[nodiscard]] Unitary circuit_unitary(const Circuit& circuit);

/// Embeds a k-wire block (k = wires.size(), 1 or 2) acting on `wires` into n wires.
[[nodiscard]] Unitary embed(const Unitary& block, std::span<const int> wires, int n_wires);

/// Applies a 1- or 2-wire block to a state vector in place. O(2^n) per gate.
void apply_block_to_state(Eigen::VectorXcd& state, const Unitary& block, std::span<const int> wires,
                          int n_wires);
void apply_circuit_to_state(Eigen::VectorXcd& state, const Circuit& circuit);

struct PhaseCheck {
    bool equal = false;
    double phase = 0.0;  // radians; arg(tr(u^dag v)) when equal
    double deficit = 0.0;  // dim - |tr(u^dag v)|
};

/// Global-phase-insensitive equivalence: equal iff |tr(u^dag v)| >= dim*(1 - tol).
[[nodiscard]] PhaseCheck equal_up_to_global_phase(const Unitary& u, const Unitary& v, double tol = 1e-9);

/// Max n_wires for dense operators.
inline constexpr int kMaxDenseWires = 12;

}  // namespace crsq

// SPDX-License-Identifier: MIT

#pragma once

#include "crsq/circuit.hpp"
#include "crsq/device.hpp"
#include "crsq/unitary.hpp"

namespace crsq {

/// The five optimization stages of the SWAP lowering, plus the executable
/// variant of the final stage using only Rx(+90) pulses.
enum class SwapStrategy {
    SLOW_ORIENTATION,  // NOTC-CNOT-NOTC
    FAST_ORIENTATION,  // CNOT-NOTC-CNOT
    CGPC,              // fast orientation + cross-gate pulse cancellation
    COMMUTED,          // + commutation through CR
    OPTIMIZED,         // + CR polarity switch on the first CR
    OPTIMIZED_X90,     // optimized, Rx(-90) converted to Rx(+90) via virtual Rz
};

[[nodiscard]] std::string_view strategy_name(SwapStrategy strategy);
[[nodiscard]] SwapStrategy strategy_from_name(std::string_view name);

/// CNOT aligned with the CR drive direction:
/// [Rz(-90)@c, Ry(180)@c, Rx(90)@t, CR+-(c,t)].
[[nodiscard]] Circuit lower_cnot(int control, int target);

/// Controlled-NOT whose logical control is the CR target:
/// [Rz(90)@c, Rx(90)@c, Rz(180)@t, Ry(90)@t, CR+-(c,t), Ry(-90)@c, Rz(90)@t, Rx(90)@t].
[[nodiscard]] Circuit lower_notc(int cr_control, int cr_target);

/// The textbook alternative: Hadamard sandwich around the aligned CNOT.
/// Costs more active rotation than lower_notc.
[[nodiscard]] Circuit lower_notc_via_h(int cr_control, int cr_target);

/// H as [Ry(90), Rx(180)]; operator equals -i H.
[[nodiscard]] Circuit lower_h(int wire);

/// X as a single Rx(180) pulse.
[[nodiscard]] Circuit lower_x(int wire);

/// Per-figure SWAP template oriented along the device edge containing {a,b}.
/// Requesting (a,b) against the CR direction transparently relabels wires.
[[nodiscard]] Circuit lower_swap(int a, int b, SwapStrategy strategy, const DeviceModel& device);

/// Template on abstract wires (control, target) without a device.
[[nodiscard]] Circuit swap_template(SwapStrategy strategy, int control, int target);

/// One step of the echoed CR sequence. The conditional rotations exist only
/// inside this expansion; they are not part of the circuit IR.
struct CrEchoStep {
    enum class Kind : std::uint8_t {
        RX_IF_CONTROL_0,  // Rx(angle) on target when control is |0>
        RX_IF_CONTROL_1,  // Rx(angle) on target when control is |1>
        ECHO_RX180,       // Rx(180) on control
    };
    Kind kind;
    double angle_deg = 0.0;
};

/// Echoed realization of one CR gate: positive and negative half pulses with
/// the Rx(180) echo in between; polarity selects which half comes first.
struct CrEcho {
    int control = 0;
    int target = 0;
    CrPolarity polarity = CrPolarity::PLUS_MINUS;
    std::vector<CrEchoStep> steps;  // circuit order

    /// 4x4 operator of one step on (control, target) local wires.
    [[nodiscard]] Eigen::Matrix4cd step_unitary(std::size_t index) const;
    /// Product over all steps; equals cr_matrix(polarity) exactly.
    [[nodiscard]] Eigen::Matrix4cd unitary() const;
    /// Same product with the echo steps skipped; without the echo the two
    /// half pulses cancel instead of composing.
    [[nodiscard]] Eigen::Matrix4cd unitary_without_echo() const;
};

[[nodiscard]] CrEcho expand_cr(const Gate& gate);

}  // namespace crsq

// SPDX-License-Identifier: MIT

#pragma once

#include "crsq/circuit.hpp"
#include "crsq/decompose.hpp"
#include "crsq/device.hpp"
#include "crsq/schedule.hpp"

namespace crsq {

/// Before/after ledger of one rewrite pass, with the machine check that the
/// operator survived. A pass result is accepted only when verified is true.
struct PassReport {
    std::string pass_name;
    int gates_before = 0;
    int gates_after = 0;
    SymbolicDepth depth_before;
    SymbolicDepth depth_after;
    double rotation_before = 0.0;  // external active rotation, degrees
    double rotation_after = 0.0;
    bool verified = false;
    double phase = 0.0;  // radians, arg tr(U_before^dag U_after)
};

/// Global-phase equivalence of two circuits. Uses the dense operator on the
/// compacted active wires when they fit (<= 6); wider circuits are checked on
/// 16 seeded random product states instead.
[[nodiscard]] PassReport verify_rewrite(std::string name, const Circuit& before, const Circuit& after);

/// Expands every SWAP composite into CNOT-NOTC-CNOT with the CNOTs aligned to
/// the device's CR direction (never the slow NOTC-CNOT-NOTC order).
[[nodiscard]] Circuit choose_orientation(const Circuit& circuit, const DeviceModel& device);

/// Lowers the remaining composites (CNOT, NOTC, H, X) into natives, orienting
/// controlled gates along the device's CR direction.
[[nodiscard]] Circuit lower_to_native(const Circuit& circuit, const DeviceModel& device);

/// Merges single-qubit runs that used to straddle CNOT/NOTC boundaries,
/// accepting a run's canonical form when it strictly reduces (rotation, gate
/// count) lexicographically.
[[nodiscard]] std::pair<Circuit, PassReport> pass_cross_gate_cancellation(const Circuit& circuit);

/// Moves Rx pulses across CRs on their target wire (Rx commutes with the
/// conditional-Rx kernel) and Rx(180) through Rz via Rx(180)Rz(t) = Rz(-t)Rx(180),
/// whenever the receiving run then cancels to strictly less active rotation.
[[nodiscard]] std::pair<Circuit, PassReport> pass_commute_through_cr(const Circuit& circuit);

/// Flips a CR's echo polarity via CR+- = [Rx(-180)@c, CR-+, Rx(180)@c] exactly
/// when the injected pulses cancel into the neighbouring runs for a strict
/// external-rotation decrease. Ties keep the +- polarity.
[[nodiscard]] std::pair<Circuit, PassReport> pass_polarity_switch(const Circuit& circuit);

/// Converts single-pulse runs to the Rx(+90)-only executable form where that
/// neither adds pulses nor rotation.
[[nodiscard]] std::pair<Circuit, PassReport> pass_x90_form(const Circuit& circuit);

struct PipelineResult {
    Circuit circuit;
    std::vector<PassReport> reports;
};

/// choose_orientation -> native lowering -> cross-gate cancellation ->
/// commutation through CR -> polarity switch -> Rx(+90) form. On a single
/// SWAP this lands gate-for-gate on the OPTIMIZED_X90 template.
[[nodiscard]] PipelineResult optimize_pipeline(const Circuit& circuit, const DeviceModel& device);

}  // namespace crsq

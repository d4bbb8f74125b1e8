// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "crsq/angle.hpp"

namespace crsq {

/// Gate vocabulary. RX/RY/RZ/CR are native; the rest are composites that the
/// decomposition layer lowers into natives. RZ is virtual: zero duration and
/// zero active rotation.
enum class GateKind : std::uint8_t { RX, RY, RZ, CR, CNOT, NOTC, SWAP, H, X };

/// Echo order of the two half-pulses inside a CR: PLUS_MINUS applies the
/// positive half first, MINUS_PLUS the negative half first. Switching
/// polarity moves the Rx(180) echo side effect to the other side of the gate.
enum class CrPolarity : std::uint8_t { PLUS_MINUS, MINUS_PLUS };

[[nodiscard]] std::string_view kind_name(GateKind kind);

/// One native or composite operation on one or two wires. CR wires are
/// ordered control-then-target; NOTC's logical control is its second wire.
struct Gate {
    GateKind kind = GateKind::RX;
    Angle angle{};                                    // RX/RY/RZ only
    CrPolarity polarity = CrPolarity::PLUS_MINUS;     // CR only
    std::array<int, 2> wires{0, 0};
    int arity = 1;

    static Gate rx(double degrees, int wire) { return rotation(GateKind::RX, degrees, wire); }
    static Gate ry(double degrees, int wire) { return rotation(GateKind::RY, degrees, wire); }
    static Gate rz(double degrees, int wire) { return rotation(GateKind::RZ, degrees, wire); }
    static Gate cr(CrPolarity polarity, int control, int target);
    static Gate cnot(int control, int target) { return two(GateKind::CNOT, control, target); }
    static Gate notc(int cr_control, int cr_target) { return two(GateKind::NOTC, cr_control, cr_target); }
    static Gate swap(int a, int b) { return two(GateKind::SWAP, a, b); }
    static Gate h(int wire);
    static Gate x(int wire);

    [[nodiscard]] bool is_rotation() const {
        return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
    }
    /// Virtual frame update: free, instantaneous, no active rotation.
    [[nodiscard]] bool is_virtual() const { return kind == GateKind::RZ; }
    /// A physical single-qubit pulse (RX or RY).
    [[nodiscard]] bool is_pulse() const { return kind == GateKind::RX || kind == GateKind::RY; }
    [[nodiscard]] bool is_native() const { return is_rotation() || kind == GateKind::CR; }
    [[nodiscard]] bool is_composite() const { return !is_native(); }

    [[nodiscard]] int wire() const { return wires[0]; }
    [[nodiscard]] int control() const { return wires[0]; }
    [[nodiscard]] int target() const { return wires[1]; }

    /// Structural equality; rotation angles compared on the canonical branch
    /// within `angle_tol` degrees.
    [[nodiscard]] bool same_as(const Gate& other, double angle_tol = 1e-9) const;

private:
    static Gate rotation(GateKind kind, double degrees, int wire);
    static Gate two(GateKind kind, int a, int b);
};

}  // namespace crsq

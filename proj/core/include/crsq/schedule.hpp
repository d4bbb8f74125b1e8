// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "crsq/circuit.hpp"

namespace crsq {

enum class MomentClass : std::uint8_t { VIRTUAL, ONE_QUBIT, CR };

/// One time slot of the ASAP schedule. `gate_indices` point into the source
/// circuit in circuit order. Non-virtual moments hold wire-disjoint gates of
/// one class; RZ gates ride along with the nearest following non-virtual
/// moment on their wire and never contribute duration.
struct Moment {
    MomentClass klass = MomentClass::VIRTUAL;
    std::vector<int> gate_indices;
};

/// Symbolic circuit depth a*t1q + b*tCR.
struct SymbolicDepth {
    int one_qubit = 0;
    int cr = 0;

    friend bool operator==(const SymbolicDepth&, const SymbolicDepth&) = default;
};

struct MomentSchedule {
    std::vector<Moment> moments;

    [[nodiscard]] SymbolicDepth depth() const;
};

/// As-soon-as-possible schedule over a native circuit. Two physical gates
/// share a moment only if wire-disjoint and of the same class. Throws
/// std::invalid_argument when the circuit still contains composite gates.
[[nodiscard]] MomentSchedule schedule_moments(const Circuit& circuit);

}  // namespace crsq

// SPDX-License-Identifier: MIT

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crsq/gate.hpp"

namespace crsq {

/// Thrown by parse_circuit with the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// Ordered gate sequence on a fixed wire count. Gate order is left-to-right
/// circuit time; operator composition runs right-to-left.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int n_wires);

    [[nodiscard]] int n_wires() const { return n_wires_; }
    [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }
    [[nodiscard]] bool empty() const { return gates_.empty(); }

    /// Appends a gate, validating wire bounds and 2-wire distinctness.
    void push(const Gate& gate);
    void append(const Circuit& other);

    [[nodiscard]] bool native_only() const;
    /// Sum of |angle| over RX/RY gates, normalized angles, in degrees.
    [[nodiscard]] double external_rotation() const;
    [[nodiscard]] int cr_count() const;
    /// 180 degrees per CR, performed inside the echo.
    [[nodiscard]] double internal_rotation() const { return 180.0 * cr_count(); }

    /// Gate-for-gate equality (kinds, wires, polarities; angles within tol).
    [[nodiscard]] bool same_gates(const Circuit& other, double angle_tol = 1e-9) const;

    [[nodiscard]] std::vector<Gate>& mutable_gates() { return gates_; }

private:
    int n_wires_ = 0;
    std::vector<Gate> gates_;
};

/// Parses the line-oriented circuit text format:
///   qubits <n>
///   rx <deg> <w> | ry <deg> <w> | rz <deg> <w>
///   cr+- <c> <t> | cr-+ <c> <t>
///   cnot <c> <t> | notc <c> <t> | swap <a> <b> | h <w> | x <w>
/// '#' starts a comment; blank lines are ignored.
[[nodiscard]] Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit; output is byte-deterministic.
[[nodiscard]] std::string to_text(const Circuit& circuit);

/// Remaps the circuit onto its active wires only. wire_map[i] is the original
/// index of compacted wire i.
struct CompactCircuit {
    Circuit circuit;
    std::vector<int> wire_map;
};
[[nodiscard]] CompactCircuit compact_wires(const Circuit& circuit);

}  // namespace crsq

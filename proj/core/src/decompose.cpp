// SPDX-License-Identifier: MIT

#include "crsq/decompose.hpp"

#include <algorithm>

namespace crsq {

std::string_view strategy_name(SwapStrategy strategy) {
    switch (strategy) {
        case SwapStrategy::SLOW_ORIENTATION: return "slow";
        case SwapStrategy::FAST_ORIENTATION: return "fast";
        case SwapStrategy::CGPC: return "cgpc";
        case SwapStrategy::COMMUTED: return "commuted";
        case SwapStrategy::OPTIMIZED: return "optimized";
        case SwapStrategy::OPTIMIZED_X90: return "optimized-x90";
    }
    return "?";
}

SwapStrategy strategy_from_name(std::string_view name) {
    if (name == "slow") return SwapStrategy::SLOW_ORIENTATION;
    if (name == "fast") return SwapStrategy::FAST_ORIENTATION;
    if (name == "cgpc") return SwapStrategy::CGPC;
    if (name == "commuted") return SwapStrategy::COMMUTED;
    if (name == "optimized") return SwapStrategy::OPTIMIZED;
    if (name == "optimized-x90" || name == "optimized_x90") return SwapStrategy::OPTIMIZED_X90;
    throw std::invalid_argument("unknown SWAP strategy '" + std::string(name) + "'");
}

namespace {
Circuit on_wires(int a, int b) { return Circuit(std::max(a, b) + 1); }
}  // namespace

Circuit lower_cnot(int control, int target) {
    Circuit c = on_wires(control, target);
    c.push(Gate::rz(-90, control));
    c.push(Gate::ry(180, control));
    c.push(Gate::rx(90, target));
    c.push(Gate::cr(CrPolarity::PLUS_MINUS, control, target));
    return c;
}

Circuit lower_notc(int cr_control, int cr_target) {
    Circuit c = on_wires(cr_control, cr_target);
    c.push(Gate::rz(90, cr_control));
    c.push(Gate::rx(90, cr_control));
    c.push(Gate::rz(180, cr_target));
    c.push(Gate::ry(90, cr_target));
    c.push(Gate::cr(CrPolarity::PLUS_MINUS, cr_control, cr_target));
    c.push(Gate::ry(-90, cr_control));
    c.push(Gate::rz(90, cr_target));
    c.push(Gate::rx(90, cr_target));
    return c;
}

Circuit lower_h(int wire) {
    Circuit c(wire + 1);
    c.push(Gate::ry(90, wire));
    c.push(Gate::rx(180, wire));
    return c;
}

Circuit lower_x(int wire) {
    Circuit c(wire + 1);
    c.push(Gate::rx(180, wire));
    return c;
}

Circuit lower_notc_via_h(int cr_control, int cr_target) {
    Circuit c = on_wires(cr_control, cr_target);
    c.append(lower_h(cr_control));
    c.append(lower_h(cr_target));
    c.append(lower_cnot(cr_control, cr_target));
    c.append(lower_h(cr_control));
    c.append(lower_h(cr_target));
    return c;
}

namespace {

// The per-figure SWAP sequences. c is the CR control wire, t the target.
Circuit template_slow(int c, int t) {
    Circuit out = on_wires(c, t);
    out.append(lower_notc(c, t));
    out.append(lower_cnot(c, t));
    out.append(lower_notc(c, t));
    return out;
}

Circuit template_fast(int c, int t) {
    Circuit out = on_wires(c, t);
    out.append(lower_cnot(c, t));
    out.append(lower_notc(c, t));
    out.append(lower_cnot(c, t));
    return out;
}

Circuit template_cgpc(int c, int t) {
    Circuit out = on_wires(c, t);
    out.push(Gate::rz(-90, c));
    out.push(Gate::ry(180, c));
    out.push(Gate::rx(90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    out.push(Gate::rz(90, c));
    out.push(Gate::rx(90, c));
    out.push(Gate::rz(180, t));
    out.push(Gate::ry(90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    out.push(Gate::rz(90, c));
    out.push(Gate::rx(-90, c));
    out.push(Gate::rz(90, t));
    out.push(Gate::rx(180, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    return out;
}

Circuit template_commuted(int c, int t) {
    Circuit out = on_wires(c, t);
    out.push(Gate::rz(-90, c));
    out.push(Gate::ry(180, c));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    out.push(Gate::rz(90, c));
    out.push(Gate::rx(90, c));
    out.push(Gate::rz(-90, t));
    out.push(Gate::rx(90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    out.push(Gate::rz(90, c));
    out.push(Gate::rx(-90, c));
    out.push(Gate::rz(-90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    return out;
}

Circuit template_optimized(int c, int t) {
    Circuit out = on_wires(c, t);
    out.push(Gate::rz(90, c));
    out.push(Gate::cr(CrPolarity::MINUS_PLUS, c, t));
    out.push(Gate::rz(-90, c));
    out.push(Gate::rx(-90, c));
    out.push(Gate::rz(-90, t));
    out.push(Gate::rx(90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    out.push(Gate::rz(90, c));
    out.push(Gate::rx(-90, c));
    out.push(Gate::rz(-90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    return out;
}

Circuit template_optimized_x90(int c, int t) {
    Circuit out = on_wires(c, t);
    out.push(Gate::rz(90, c));
    out.push(Gate::cr(CrPolarity::MINUS_PLUS, c, t));
    out.push(Gate::rz(90, c));
    out.push(Gate::rx(90, c));
    out.push(Gate::rz(180, c));
    out.push(Gate::rz(-90, t));
    out.push(Gate::rx(90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    out.push(Gate::rz(-90, c));
    out.push(Gate::rx(90, c));
    out.push(Gate::rz(180, c));
    out.push(Gate::rz(-90, t));
    out.push(Gate::cr(CrPolarity::PLUS_MINUS, c, t));
    return out;
}

}  // namespace

Circuit swap_template(SwapStrategy strategy, int control, int target) {
    switch (strategy) {
        case SwapStrategy::SLOW_ORIENTATION: return template_slow(control, target);
        case SwapStrategy::FAST_ORIENTATION: return template_fast(control, target);
        case SwapStrategy::CGPC: return template_cgpc(control, target);
        case SwapStrategy::COMMUTED: return template_commuted(control, target);
        case SwapStrategy::OPTIMIZED: return template_optimized(control, target);
        case SwapStrategy::OPTIMIZED_X90: return template_optimized_x90(control, target);
    }
    throw std::invalid_argument("unknown SWAP strategy");
}

Circuit lower_swap(int a, int b, SwapStrategy strategy, const DeviceModel& device) {
    const EdgeCalibration* edge = device.find_edge(a, b);
    if (edge == nullptr) {
        throw std::invalid_argument("qubits " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are not connected on device '" + device.name + "'");
    }
    // SWAP is symmetric, so the template always follows the drive direction.
    return swap_template(strategy, edge->control, edge->target);
}

Eigen::Matrix4cd CrEcho::step_unitary(std::size_t index) const {
    const CrEchoStep& s = steps.at(index);
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    switch (s.kind) {
        case CrEchoStep::Kind::RX_IF_CONTROL_0:
            u.topLeftCorner<2, 2>() = rx_matrix(s.angle_deg);
            break;
        case CrEchoStep::Kind::RX_IF_CONTROL_1:
            u.bottomRightCorner<2, 2>() = rx_matrix(s.angle_deg);
            break;
        case CrEchoStep::Kind::ECHO_RX180:
            u = cr_echo_matrix();
            break;
    }
    return u;
}

Eigen::Matrix4cd CrEcho::unitary() const {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    for (std::size_t i = 0; i < steps.size(); ++i) u = step_unitary(i) * u;
    return u;
}

Eigen::Matrix4cd CrEcho::unitary_without_echo() const {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].kind == CrEchoStep::Kind::ECHO_RX180) continue;
        u = step_unitary(i) * u;
    }
    return u;
}

CrEcho expand_cr(const Gate& gate) {
    if (gate.kind != GateKind::CR) throw std::invalid_argument("expand_cr needs a CR gate");
    CrEcho echo;
    echo.control = gate.control();
    echo.target = gate.target();
    echo.polarity = gate.polarity;
    using K = CrEchoStep::Kind;
    const std::vector<CrEchoStep> positive{{K::RX_IF_CONTROL_0, 45.0}, {K::RX_IF_CONTROL_1, -45.0}};
    const std::vector<CrEchoStep> negative{{K::RX_IF_CONTROL_1, 45.0}, {K::RX_IF_CONTROL_0, -45.0}};
    const auto& first = gate.polarity == CrPolarity::PLUS_MINUS ? positive : negative;
    const auto& second = gate.polarity == CrPolarity::PLUS_MINUS ? negative : positive;
    echo.steps.insert(echo.steps.end(), first.begin(), first.end());
    echo.steps.push_back({K::ECHO_RX180, 180.0});
    echo.steps.insert(echo.steps.end(), second.begin(), second.end());
    return echo;
}

}  // namespace crsq

// SPDX-License-Identifier: MIT

#include "crsq/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace crsq {

std::string_view kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::CR: return "cr";
        case GateKind::CNOT: return "cnot";
        case GateKind::NOTC: return "notc";
        case GateKind::SWAP: return "swap";
        case GateKind::H: return "h";
        case GateKind::X: return "x";
    }
    return "?";
}

Gate Gate::rotation(GateKind kind, double degrees, int wire) {
    Gate g;
    g.kind = kind;
    g.angle = Angle(degrees);
    g.wires = {wire, wire};
    g.arity = 1;
    return g;
}

Gate Gate::two(GateKind kind, int a, int b) {
    if (a == b) throw std::invalid_argument("two-wire gate needs distinct wires");
    Gate g;
    g.kind = kind;
    g.wires = {a, b};
    g.arity = 2;
    return g;
}

Gate Gate::cr(CrPolarity polarity, int control, int target) {
    Gate g = two(GateKind::CR, control, target);
    g.polarity = polarity;
    return g;
}

Gate Gate::h(int wire) {
    Gate g;
    g.kind = GateKind::H;
    g.wires = {wire, wire};
    g.arity = 1;
    return g;
}

Gate Gate::x(int wire) {
    Gate g;
    g.kind = GateKind::X;
    g.wires = {wire, wire};
    g.arity = 1;
    return g;
}

bool Gate::same_as(const Gate& other, double angle_tol) const {
    if (kind != other.kind || arity != other.arity) return false;
    for (int i = 0; i < arity; ++i) {
        if (wires[i] != other.wires[i]) return false;
    }
    if (kind == GateKind::CR && polarity != other.polarity) return false;
    if (is_rotation()) {
        const double da = normalize_degrees(angle.degrees() - other.angle.degrees());
        if (std::abs(da) > angle_tol) return false;
    }
    return true;
}

Circuit::Circuit(int n_wires) : n_wires_(n_wires) {
    if (n_wires <= 0) throw std::invalid_argument("circuit needs a positive wire count");
}

void Circuit::push(const Gate& gate) {
    for (int i = 0; i < gate.arity; ++i) {
        if (gate.wires[i] < 0 || gate.wires[i] >= n_wires_) {
            throw std::out_of_range("gate wire " + std::to_string(gate.wires[i]) +
                                    " outside circuit of " + std::to_string(n_wires_) + " wires");
        }
    }
    if (gate.arity == 2 && gate.wires[0] == gate.wires[1]) {
        throw std::invalid_argument("two-wire gate needs distinct wires");
    }
    gates_.push_back(gate);
}

void Circuit::append(const Circuit& other) {
    for (const Gate& g : other.gates()) push(g);
}

bool Circuit::native_only() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_native(); });
}

double Circuit::external_rotation() const {
    double total = 0.0;
    for (const Gate& g : gates_) {
        if (g.is_pulse()) total += std::abs(normalize_degrees(g.angle.degrees()));
    }
    return total;
}

int Circuit::cr_count() const {
    return static_cast<int>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::CR; }));
}

bool Circuit::same_gates(const Circuit& other, double angle_tol) const {
    if (n_wires_ != other.n_wires_ || gates_.size() != other.gates_.size()) return false;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (!gates_[i].same_as(other.gates_[i], angle_tol)) return false;
    }
    return true;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

int parse_wire(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
        throw ParseError(line, "expected a wire index, got '" + tok + "'");
    }
    return value;
}

double parse_angle(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an angle in degrees, got '" + tok + "'");
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    Circuit circuit;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "qubits" || toks.size() != 2) {
                throw ParseError(line_no, "expected header 'qubits <n>'");
            }
            const int n = parse_wire(toks[1], line_no);
            if (n <= 0) throw ParseError(line_no, "qubit count must be positive");
            circuit = Circuit(n);
            have_header = true;
            continue;
        }
        const std::string& op = toks[0];
        auto expect_args = [&](std::size_t n, const char* what) {
            if (toks.size() != n + 1) {
                throw ParseError(line_no, std::string(what) + " expects " + std::to_string(n) + " arguments");
            }
        };
        try {
            if (op == "rx" || op == "ry" || op == "rz") {
                if (toks.size() == 2) throw ParseError(line_no, "missing angle for '" + op + "'");
                expect_args(2, op.c_str());
                const double deg = parse_angle(toks[1], line_no);
                const int w = parse_wire(toks[2], line_no);
                if (op == "rx") circuit.push(Gate::rx(deg, w));
                else if (op == "ry") circuit.push(Gate::ry(deg, w));
                else circuit.push(Gate::rz(deg, w));
            } else if (op == "cr+-" || op == "cr-+") {
                expect_args(2, "cr");
                circuit.push(Gate::cr(op == "cr+-" ? CrPolarity::PLUS_MINUS : CrPolarity::MINUS_PLUS,
                                      parse_wire(toks[1], line_no), parse_wire(toks[2], line_no)));
            } else if (op == "cr") {
                throw ParseError(line_no, "missing polarity: use 'cr+-' or 'cr-+'");
            } else if (op == "cnot") {
                expect_args(2, "cnot");
                circuit.push(Gate::cnot(parse_wire(toks[1], line_no), parse_wire(toks[2], line_no)));
            } else if (op == "notc") {
                expect_args(2, "notc");
                circuit.push(Gate::notc(parse_wire(toks[1], line_no), parse_wire(toks[2], line_no)));
            } else if (op == "swap") {
                expect_args(2, "swap");
                circuit.push(Gate::swap(parse_wire(toks[1], line_no), parse_wire(toks[2], line_no)));
            } else if (op == "h") {
                expect_args(1, "h");
                circuit.push(Gate::h(parse_wire(toks[1], line_no)));
            } else if (op == "x") {
                expect_args(1, "x");
                circuit.push(Gate::x(parse_wire(toks[1], line_no)));
            } else {
                throw ParseError(line_no, "unknown gate '" + op + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) throw ParseError(line_no, "missing 'qubits <n>' header");
    return circuit;
}

namespace {

std::string format_angle(double degrees) {
    const double v = degrees;
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::string to_text(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_wires()) + "\n";
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
                out += std::string(kind_name(g.kind)) + " " + format_angle(g.angle.degrees()) + " " +
                       std::to_string(g.wire()) + "\n";
                break;
            case GateKind::CR:
                out += std::string("cr") + (g.polarity == CrPolarity::PLUS_MINUS ? "+-" : "-+") + " " +
                       std::to_string(g.control()) + " " + std::to_string(g.target()) + "\n";
                break;
            default:
                out += std::string(kind_name(g.kind)) + " " + std::to_string(g.wires[0]);
                if (g.arity == 2) out += " " + std::to_string(g.wires[1]);
                out += "\n";
        }
    }
    return out;
}

CompactCircuit compact_wires(const Circuit& circuit) {
    std::vector<int> active;
    for (const Gate& g : circuit.gates()) {
        for (int i = 0; i < g.arity; ++i) {
            if (std::find(active.begin(), active.end(), g.wires[i]) == active.end()) {
                active.push_back(g.wires[i]);
            }
        }
    }
    std::sort(active.begin(), active.end());
    std::vector<int> to_new(circuit.n_wires(), -1);
    for (std::size_t i = 0; i < active.size(); ++i) to_new[active[i]] = static_cast<int>(i);

    CompactCircuit out;
    out.wire_map = active;
    out.circuit = Circuit(std::max<int>(1, static_cast<int>(active.size())));
    for (Gate g : circuit.gates()) {
        for (int i = 0; i < g.arity; ++i) g.wires[i] = to_new[g.wires[i]];
        if (g.arity == 1) g.wires[1] = g.wires[0];
        out.circuit.push(g);
    }
    return out;
}

}  // namespace crsq

// SPDX-License-Identifier: MIT

#include "crsq/unitary.hpp"

#include <cmath>

namespace crsq {

using std::complex;
namespace {
constexpr complex<double> kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

Eigen::Matrix2cd rx_matrix(double degrees) {
    const double t = degrees * kPi / 360.0;  // theta/2 in radians
    Eigen::Matrix2cd m;
    m << std::cos(t), -kI * std::sin(t), -kI * std::sin(t), std::cos(t);
    return m;
}

Eigen::Matrix2cd ry_matrix(double degrees) {
    const double t = degrees * kPi / 360.0;
    Eigen::Matrix2cd m;
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
}

Eigen::Matrix2cd rz_matrix(double degrees) {
    const double t = degrees * kPi / 360.0;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(-kI * t);
    m(1, 1) = std::exp(kI * t);
    return m;
}

Eigen::Matrix2cd h_matrix() {
    Eigen::Matrix2cd m;
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Eigen::Matrix2cd x_matrix() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix4cd cr_kernel_matrix() {
    Eigen::Matrix4cd k = Eigen::Matrix4cd::Zero();
    k.topLeftCorner<2, 2>() = rx_matrix(90.0);
    k.bottomRightCorner<2, 2>() = rx_matrix(-90.0);
    return k;
}

Eigen::Matrix4cd cr_echo_matrix() {
    Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
    const Eigen::Matrix2cd x180 = rx_matrix(180.0);
    e.topRightCorner<2, 2>() = x180(0, 1) * Eigen::Matrix2cd::Identity();
    e.bottomLeftCorner<2, 2>() = x180(1, 0) * Eigen::Matrix2cd::Identity();
    e.topLeftCorner<2, 2>() = x180(0, 0) * Eigen::Matrix2cd::Identity();
    e.bottomRightCorner<2, 2>() = x180(1, 1) * Eigen::Matrix2cd::Identity();
    return e;
}

Eigen::Matrix4cd cr_matrix(CrPolarity polarity) {
    return polarity == CrPolarity::PLUS_MINUS ? Eigen::Matrix4cd(cr_echo_matrix() * cr_kernel_matrix())
                                              : Eigen::Matrix4cd(cr_kernel_matrix() * cr_echo_matrix());
}

Eigen::Matrix4cd cnot_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(2, 2) = 0;
    m(3, 3) = 0;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

Eigen::Matrix4cd notc_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 3) = 1;
    m(2, 2) = 1;
    m(3, 1) = 1;
    return m;
}

Eigen::Matrix4cd swap_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

Unitary gate_block(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::RX: return rx_matrix(gate.angle.degrees());
        case GateKind::RY: return ry_matrix(gate.angle.degrees());
        case GateKind::RZ: return rz_matrix(gate.angle.degrees());
        case GateKind::H: return h_matrix();
        case GateKind::X: return x_matrix();
        case GateKind::CR: return cr_matrix(gate.polarity);
        case GateKind::CNOT: return cnot_matrix();
        case GateKind::NOTC: return notc_matrix();
        case GateKind::SWAP: return swap_matrix();
    }
    throw std::invalid_argument("unknown gate kind");
}

Unitary embed(const Unitary& block, std::span<const int> wires, int n_wires) {
    if (n_wires > kMaxDenseWires) throw std::invalid_argument("dense operator bound exceeded");
    const int k = static_cast<int>(wires.size());
    const Eigen::Index dim = Eigen::Index(1) << n_wires;
    const Eigen::Index bdim = Eigen::Index(1) << k;
    if (block.rows() != bdim || block.cols() != bdim) {
        throw std::invalid_argument("block dimension does not match wire count");
    }
    for (int i = 0; i < k; ++i) {
        if (wires[i] < 0 || wires[i] >= n_wires) throw std::out_of_range("embed wire out of range");
        for (int j = i + 1; j < k; ++j) {
            if (wires[i] == wires[j]) throw std::invalid_argument("wire collision in embed");
        }
    }

    // wire w occupies bit (n_wires - 1 - w), wire 0 being the MSB
    std::vector<int> shift(k);
    for (int i = 0; i < k; ++i) shift[i] = n_wires - 1 - wires[i];

    Unitary out = Unitary::Zero(dim, dim);
    const Eigen::Index rest = dim >> k;
    for (Eigen::Index env = 0; env < rest; ++env) {
        // scatter the environment bits around the gate's bit positions
        Eigen::Index base = 0;
        Eigen::Index e = env;
        for (int bit = 0; bit < n_wires; ++bit) {
            bool is_gate_bit = false;
            for (int i = 0; i < k; ++i) is_gate_bit |= (shift[i] == bit);
            if (is_gate_bit) continue;
            if (e & 1) base |= (Eigen::Index(1) << bit);
            e >>= 1;
        }
        for (Eigen::Index r = 0; r < bdim; ++r) {
            Eigen::Index row = base;
            for (int i = 0; i < k; ++i) {
                if ((r >> (k - 1 - i)) & 1) row |= (Eigen::Index(1) << shift[i]);
            }
            for (Eigen::Index c = 0; c < bdim; ++c) {
                if (block(r, c) == complex<double>(0.0, 0.0)) continue;
                Eigen::Index col = base;
                for (int i = 0; i < k; ++i) {
                    if ((c >> (k - 1 - i)) & 1) col |= (Eigen::Index(1) << shift[i]);
                }
                out(row, col) = block(r, c);
            }
        }
    }
    return out;
}

Unitary gate_unitary(const Gate& gate, int n_wires) {
    for (int i = 0; i < gate.arity; ++i) {
        if (gate.wires[i] < 0 || gate.wires[i] >= n_wires) throw std::out_of_range("gate wire out of range");
    }
    if (gate.arity == 2 && gate.wires[0] == gate.wires[1]) {
        throw std::invalid_argument("wire collision");
    }
    const Unitary block = gate_block(gate);
    const std::array<int, 2> ws{gate.wires[0], gate.wires[1]};
    return embed(block, std::span<const int>(ws.data(), static_cast<std::size_t>(gate.arity)), n_wires);
}

Unitary circuit_unitary(const Circuit& circuit) {
    if (circuit.n_wires() > kMaxDenseWires) {
        throw std::invalid_argument("dense operator bound exceeded (max 12 wires)");
    }
    const Eigen::Index dim = Eigen::Index(1) << circuit.n_wires();
    Unitary u = Unitary::Identity(dim, dim);
    for (const Gate& g : circuit.gates()) {
        u = gate_unitary(g, circuit.n_wires()) * u;
    }
    return u;
}

void apply_block_to_state(Eigen::VectorXcd& state, const Unitary& block, std::span<const int> wires,
                          int n_wires) {
    const int k = static_cast<int>(wires.size());
    const Eigen::Index bdim = Eigen::Index(1) << k;
    std::vector<int> shift(k);
    for (int i = 0; i < k; ++i) shift[i] = n_wires - 1 - wires[i];
    const Eigen::Index dim = state.size();
    const Eigen::Index rest = dim >> k;
    Eigen::VectorXcd amps(bdim);
    for (Eigen::Index env = 0; env < rest; ++env) {
        Eigen::Index base = 0;
        Eigen::Index e = env;
        for (int bit = 0; bit < n_wires; ++bit) {
            bool is_gate_bit = false;
            for (int i = 0; i < k; ++i) is_gate_bit |= (shift[i] == bit);
            if (is_gate_bit) continue;
            if (e & 1) base |= (Eigen::Index(1) << bit);
            e >>= 1;
        }
        for (Eigen::Index r = 0; r < bdim; ++r) {
            Eigen::Index idx = base;
            for (int i = 0; i < k; ++i) {
                if ((r >> (k - 1 - i)) & 1) idx |= (Eigen::Index(1) << shift[i]);
            }
            amps(r) = state(idx);
        }
        const Eigen::VectorXcd upd = block * amps;
        for (Eigen::Index r = 0; r < bdim; ++r) {
            Eigen::Index idx = base;
            for (int i = 0; i < k; ++i) {
                if ((r >> (k - 1 - i)) & 1) idx |= (Eigen::Index(1) << shift[i]);
            }
            state(idx) = upd(r);
        }
    }
}

void apply_circuit_to_state(Eigen::VectorXcd& state, const Circuit& circuit) {
    for (const Gate& g : circuit.gates()) {
        const std::array<int, 2> ws{g.wires[0], g.wires[1]};
        apply_block_to_state(state, gate_block(g),
                             std::span<const int>(ws.data(), static_cast<std::size_t>(g.arity)),
                             circuit.n_wires());
    }
}

PhaseCheck equal_up_to_global_phase(const Unitary& u, const Unitary& v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("dimension mismatch in equal_up_to_global_phase");
    }
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const complex<double> tr = (u.adjoint() * v).trace();
    const double dim = static_cast<double>(u.rows());
    PhaseCheck out;
    out.deficit = dim - std::abs(tr);
    out.equal = std::abs(tr) >= dim * (1.0 - tol);
    out.phase = std::arg(tr);
    return out;
}

}  // namespace crsq

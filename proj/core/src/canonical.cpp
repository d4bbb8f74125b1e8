// SPDX-License-Identifier: MIT

#include "crsq/canonical.hpp"

#include <cmath>

namespace crsq {

namespace {
constexpr double kRad2Deg = 57.29577951308232;

bool phase_equal_2x2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return std::abs((a.adjoint() * b).trace()) >= 2.0 * (1.0 - 1e-9);
}

Eigen::Matrix2cd zxz_matrix(double pre, double x, double post) {
    return rz_matrix(post) * rx_matrix(x) * rz_matrix(pre);
}

}  // namespace

Eigen::Matrix2cd run_unitary(std::span<const Gate> run) {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (const Gate& g : run) {
        if (!g.is_rotation()) throw std::invalid_argument("run_unitary expects only rotation gates");
        u = Eigen::Matrix2cd(gate_block(g)) * u;
    }
    return u;
}

double run_rotation(std::span<const Gate> run) {
    double total = 0.0;
    for (const Gate& g : run) {
        if (g.is_pulse()) total += std::abs(normalize_degrees(g.angle.degrees()));
    }
    return total;
}

ZxzAngles zxz_decompose(const Eigen::Matrix2cd& u) {
    ZxzAngles out;
    out.x = normalize_degrees(2.0 * kRad2Deg * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0))));
    if (out.x < 1e-9) {  // diagonal: pure Z rotation
        out.x = 0.0;
        out.pre_z = normalize_degrees(kRad2Deg * std::arg(u(1, 1) / u(0, 0)));
        return out;
    }
    if (out.x > 180.0 - 1e-9) {  // antidiagonal
        out.x = 180.0;
        out.pre_z = normalize_degrees(kRad2Deg * std::arg(u(0, 1) / u(1, 0)));
        return out;
    }
    const double sum = kRad2Deg * std::arg(u(1, 1) / u(0, 0));   // pre + post
    const double diff = kRad2Deg * std::arg(u(0, 1) / u(1, 0));  // pre - post
    double pre = (sum + diff) / 2.0;
    double post = (sum - diff) / 2.0;
    // arg() fixes sum and diff only mod 360; the halved angles carry a joint
    // 180-degree branch ambiguity that the reconstruction resolves.
    if (!phase_equal_2x2(zxz_matrix(pre, out.x, post), u)) {
        pre += 180.0;
        post += 180.0;
    }
    out.pre_z = normalize_degrees(pre);
    out.post_z = normalize_degrees(post);
    return out;
}

namespace {

std::vector<Gate> build_zxz(double pre, double x, double post, int wire) {
    std::vector<Gate> out;
    if (normalize_degrees(pre) != 0.0) out.push_back(Gate::rz(normalize_degrees(pre), wire));
    if (normalize_degrees(x) != 0.0) out.push_back(Gate::rx(normalize_degrees(x), wire));
    if (normalize_degrees(post) != 0.0) out.push_back(Gate::rz(normalize_degrees(post), wire));
    return out;
}

bool x90_executable(std::span<const Gate> run) {
    for (const Gate& g : run) {
        if (g.kind == GateKind::RY) return false;
        if (g.kind == GateKind::RX && normalize_degrees(g.angle.degrees()) != 90.0) return false;
    }
    return true;
}

}  // namespace

std::vector<Gate> canonicalize_1q_run(std::span<const Gate> run, CanonicalForm form) {
    if (run.empty()) return {};
    const int wire = run.front().wire();
    for (const Gate& g : run) {
        if (!g.is_rotation()) throw std::invalid_argument("canonicalize_1q_run expects RX/RY/RZ gates");
        if (g.wire() != wire) throw std::invalid_argument("canonicalize_1q_run expects a same-wire run");
    }
    const Eigen::Matrix2cd u = run_unitary(run);
    const ZxzAngles a = zxz_decompose(u);

    if (form == CanonicalForm::X90) {
        if (x90_executable(run)) return {run.begin(), run.end()};
        if (a.x == 0.0) return build_zxz(a.pre_z, 0.0, 0.0, wire);
        if (a.x == 90.0) return build_zxz(a.pre_z, 90.0, a.post_z, wire);
        // Converting other rotations to Rx(90) pulses would add pulses and
        // depth, so those runs stay as they are.
        return {run.begin(), run.end()};
    }

    if (a.x == 0.0) return build_zxz(a.pre_z, 0.0, 0.0, wire);
    // Rx(-x) = Rz(180) Rx(x) Rz(180) up to phase, so the mirrored branch
    // shifts both Z angles by 180.
    std::vector<Gate> plus = build_zxz(a.pre_z, a.x, a.post_z, wire);
    if (a.x == 180.0) return plus;
    std::vector<Gate> minus = build_zxz(a.pre_z + 180.0, -a.x, a.post_z + 180.0, wire);
    // Same |Rx| on both branches; fewer gates wins, ties prefer theta = +90.
    return minus.size() < plus.size() ? minus : plus;
}

}  // namespace crsq

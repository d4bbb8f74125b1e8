// SPDX-License-Identifier: MIT

#include "crsq/passes.hpp"

#include <algorithm>
#include <random>

#include "crsq/canonical.hpp"

namespace crsq {

namespace {

constexpr double kRotEps = 1e-9;

/// Per-wire decomposition of a native circuit into the runs between the CRs
/// touching that wire. runs[w] has (number of CRs on w) + 1 entries; CR order
/// is preserved globally and runs are re-emitted control-first at each CR.
struct ZoneView {
    std::vector<Gate> crs;
    std::vector<std::vector<std::vector<Gate>>> runs;  // [wire][zone] -> gates
    int n_wires = 0;

    static ZoneView decompose(const Circuit& circuit) {
        ZoneView z;
        z.n_wires = circuit.n_wires();
        std::vector<int> zone_of(circuit.n_wires(), 0);
        std::vector<int> cr_on_wire(circuit.n_wires(), 0);
        for (const Gate& g : circuit.gates()) {
            if (g.kind == GateKind::CR) {
                ++cr_on_wire[g.control()];
                ++cr_on_wire[g.target()];
            } else if (!g.is_rotation()) {
                throw std::invalid_argument("rewrite passes need a native circuit");
            }
        }
        z.runs.resize(circuit.n_wires());
        for (int w = 0; w < circuit.n_wires(); ++w) z.runs[w].resize(cr_on_wire[w] + 1);
        for (const Gate& g : circuit.gates()) {
            if (g.kind == GateKind::CR) {
                z.crs.push_back(g);
                ++zone_of[g.control()];
                ++zone_of[g.target()];
            } else {
                z.runs[g.wire()][zone_of[g.wire()]].push_back(g);
            }
        }
        return z;
    }

    [[nodiscard]] Circuit rebuild() const {
        Circuit out(n_wires);
        std::vector<std::size_t> next(n_wires, 0);
        for (const Gate& cr : crs) {
            for (int w : {cr.control(), cr.target()}) {
                for (const Gate& g : runs[w][next[w]]) out.push(g);
                ++next[w];
            }
            out.push(cr);
        }
        for (int w = 0; w < n_wires; ++w) {
            for (const Gate& g : runs[w][next[w]]) out.push(g);
        }
        return out;
    }

    /// Indices into crs of the CRs touching wire w, in order.
    [[nodiscard]] std::vector<int> crs_on_wire(int w) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(crs.size()); ++i) {
            if (crs[i].control() == w || crs[i].target() == w) out.push_back(i);
        }
        return out;
    }
};

double rot(const std::vector<Gate>& run) { return run_rotation(run); }

/// Trailing block of Rx gates that can leave the run to the right. An Rx(180)
/// separated from the edge only by Rz gates hops over them, negating each
/// (Rx(180) Rz(t) = Rz(-t) Rx(180)).
std::pair<std::vector<Gate>, std::vector<Gate>> movable_suffix(std::vector<Gate> run) {
    std::vector<Gate> block;
    while (!run.empty()) {
        if (run.back().kind == GateKind::RX) {
            block.insert(block.begin(), run.back());
            run.pop_back();
            continue;
        }
        if (run.back().kind == GateKind::RZ) {
            int j = static_cast<int>(run.size()) - 1;
            while (j >= 0 && run[j].kind == GateKind::RZ) --j;
            if (j >= 0 && run[j].kind == GateKind::RX &&
                std::abs(normalize_degrees(run[j].angle.degrees())) == 180.0) {
                const Gate hop = run[j];
                run.erase(run.begin() + j);
                for (std::size_t k = static_cast<std::size_t>(j); k < run.size(); ++k) {
                    run[k] = Gate::rz(normalize_degrees(-run[k].angle.degrees()), run[k].wire());
                }
                run.push_back(hop);
                continue;
            }
        }
        break;
    }
    return {std::move(run), std::move(block)};
}

std::pair<std::vector<Gate>, std::vector<Gate>> movable_prefix(std::vector<Gate> run) {
    std::vector<Gate> block;
    while (!run.empty()) {
        if (run.front().kind == GateKind::RX) {
            block.push_back(run.front());
            run.erase(run.begin());
            continue;
        }
        if (run.front().kind == GateKind::RZ) {
            std::size_t j = 0;
            while (j < run.size() && run[j].kind == GateKind::RZ) ++j;
            if (j < run.size() && run[j].kind == GateKind::RX &&
                std::abs(normalize_degrees(run[j].angle.degrees())) == 180.0) {
                const Gate hop = run[j];
                run.erase(run.begin() + j);
                for (std::size_t k = 0; k < j; ++k) {
                    run[k] = Gate::rz(normalize_degrees(-run[k].angle.degrees()), run[k].wire());
                }
                run.insert(run.begin(), hop);
                continue;
            }
        }
        break;
    }
    return {std::move(run), std::move(block)};
}

std::vector<Gate> concat(const std::vector<Gate>& a, const std::vector<Gate>& b) {
    std::vector<Gate> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

PassReport verify_rewrite(std::string name, const Circuit& before, const Circuit& after) {
    PassReport r;
    r.pass_name = std::move(name);
    r.gates_before = static_cast<int>(before.size());
    r.gates_after = static_cast<int>(after.size());
    r.rotation_before = before.external_rotation();
    r.rotation_after = after.external_rotation();
    if (before.native_only()) r.depth_before = schedule_moments(before).depth();
    if (after.native_only()) r.depth_after = schedule_moments(after).depth();

    // Compare on the union of active wires so both sides line up.
    Circuit joined(std::max(before.n_wires(), after.n_wires()));
    for (const Gate& g : before.gates()) joined.push(g);
    const std::size_t split = joined.size();
    for (const Gate& g : after.gates()) joined.push(g);
    const CompactCircuit compact = compact_wires(joined);
    Circuit cb(std::max(1, compact.circuit.n_wires()));
    Circuit ca(cb.n_wires());
    for (std::size_t i = 0; i < compact.circuit.size(); ++i) {
        (i < split ? cb : ca).push(compact.circuit.gates()[i]);
    }

    if (cb.n_wires() <= 6) {
        const PhaseCheck pc = equal_up_to_global_phase(circuit_unitary(cb), circuit_unitary(ca), 1e-9);
        r.verified = pc.equal;
        r.phase = pc.phase;
        return r;
    }
    // Too wide for a dense check: compare on seeded random product states.
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const Eigen::Index dim = Eigen::Index(1) << cb.n_wires();
    bool all_equal = true;
    std::complex<double> phase_ref{0.0, 0.0};
    for (int s = 0; s < 16 && all_equal; ++s) {
        Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dim);
        state(0) = 1.0;
        Circuit prep(cb.n_wires());
        for (int w = 0; w < cb.n_wires(); ++w) {
            prep.push(Gate::ry(dist(rng) * 360.0 - 180.0, w));
            prep.push(Gate::rz(dist(rng) * 360.0 - 180.0, w));
        }
        apply_circuit_to_state(state, prep);
        Eigen::VectorXcd sb = state;
        Eigen::VectorXcd sa = state;
        apply_circuit_to_state(sb, cb);
        apply_circuit_to_state(sa, ca);
        const std::complex<double> overlap = sb.dot(sa);  // <sb|sa>
        if (s == 0) {
            phase_ref = overlap / std::abs(overlap);
            r.phase = std::arg(overlap);
        }
        all_equal = (sa - phase_ref * sb).norm() < 1e-8;
    }
    r.verified = all_equal;
    return r;
}

Circuit choose_orientation(const Circuit& circuit, const DeviceModel& device) {
    Circuit out(circuit.n_wires());
    for (const Gate& g : circuit.gates()) {
        if (g.kind != GateKind::SWAP) {
            out.push(g);
            continue;
        }
        const EdgeCalibration* edge = device.find_edge(g.wires[0], g.wires[1]);
        if (edge == nullptr) {
            throw std::invalid_argument("SWAP on (" + std::to_string(g.wires[0]) + "," +
                                        std::to_string(g.wires[1]) + ") is not on a device edge");
        }
        out.push(Gate::cnot(edge->control, edge->target));
        out.push(Gate::notc(edge->control, edge->target));
        out.push(Gate::cnot(edge->control, edge->target));
    }
    return out;
}

Circuit lower_to_native(const Circuit& circuit, const DeviceModel& device) {
    Circuit out(circuit.n_wires());
    auto oriented_edge = [&](int a, int b) -> const EdgeCalibration& {
        const EdgeCalibration* edge = device.find_edge(a, b);
        if (edge == nullptr) {
            throw std::invalid_argument("two-qubit gate on (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") is not on a device edge");
        }
        return *edge;
    };
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::SWAP: {
                const EdgeCalibration& e = oriented_edge(g.wires[0], g.wires[1]);
                out.append(lower_cnot(e.control, e.target));
                out.append(lower_notc(e.control, e.target));
                out.append(lower_cnot(e.control, e.target));
                break;
            }
            case GateKind::CNOT: {
                const EdgeCalibration& e = oriented_edge(g.wires[0], g.wires[1]);
                if (e.control == g.control()) {
                    out.append(lower_cnot(e.control, e.target));
                } else {
                    // logical control sits on the CR target side
                    out.append(lower_notc(e.control, e.target));
                }
                break;
            }
            case GateKind::NOTC: {
                const EdgeCalibration& e = oriented_edge(g.wires[0], g.wires[1]);
                if (e.control == g.wires[0]) {
                    out.append(lower_notc(e.control, e.target));
                } else {
                    out.append(lower_cnot(e.control, e.target));
                }
                break;
            }
            case GateKind::H:
                out.append(lower_h(g.wire()));
                break;
            case GateKind::X:
                out.append(lower_x(g.wire()));
                break;
            default:
                out.push(g);
        }
    }
    return out;
}

std::pair<Circuit, PassReport> pass_cross_gate_cancellation(const Circuit& circuit) {
    ZoneView z = ZoneView::decompose(circuit);
    for (auto& wire_runs : z.runs) {
        for (auto& run : wire_runs) {
            if (run.empty()) continue;
            std::vector<Gate> cand = canonicalize_1q_run(run);
            const auto better = std::make_pair(rot(cand), cand.size());
            const auto current = std::make_pair(rot(run), run.size());
            if (better.first < current.first - kRotEps ||
                (better.first < current.first + kRotEps && better.second < current.second)) {
                run = std::move(cand);
            }
        }
    }
    Circuit out = z.rebuild();
    PassReport report = verify_rewrite("cross-gate-cancellation", circuit, out);
    return {std::move(out), std::move(report)};
}

std::pair<Circuit, PassReport> pass_commute_through_cr(const Circuit& circuit) {
    ZoneView z = ZoneView::decompose(circuit);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < z.n_wires; ++w) {
            const std::vector<int> wcrs = z.crs_on_wire(w);
            for (std::size_t j = 0; j < wcrs.size(); ++j) {
                if (z.crs[wcrs[j]].target() != w) continue;  // Rx commutes on the target side only
                std::vector<Gate>& left = z.runs[w][j];
                std::vector<Gate>& right = z.runs[w][j + 1];
                const double base = rot(left) + rot(right);
                // Pull the right run's movable prefix backwards first; moving
                // pulses earlier keeps the schedule as-soon-as-possible.
                {
                    auto [rem, block] = movable_prefix(right);
                    if (!block.empty()) {
                        std::vector<Gate> merged = canonicalize_1q_run(concat(left, block));
                        if (rot(merged) + rot(rem) < base - kRotEps) {
                            left = std::move(merged);
                            right = std::move(rem);
                            changed = true;
                            continue;
                        }
                    }
                }
                {
                    auto [rem, block] = movable_suffix(left);
                    if (!block.empty()) {
                        std::vector<Gate> merged = canonicalize_1q_run(concat(block, right));
                        if (rot(rem) + rot(merged) < base - kRotEps) {
                            left = std::move(rem);
                            right = std::move(merged);
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    Circuit out = z.rebuild();
    PassReport report = verify_rewrite("commute-through-cr", circuit, out);
    return {std::move(out), std::move(report)};
}

std::pair<Circuit, PassReport> pass_polarity_switch(const Circuit& circuit) {
    ZoneView z = ZoneView::decompose(circuit);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < static_cast<int>(z.crs.size()); ++i) {
            Gate& cr = z.crs[i];
            const int c = cr.control();
            const std::vector<int> ccrs = z.crs_on_wire(c);
            const std::size_t j = static_cast<std::size_t>(
                std::find(ccrs.begin(), ccrs.end(), i) - ccrs.begin());
            std::vector<Gate>& left = z.runs[c][j];
            std::vector<Gate>& right = z.runs[c][j + 1];
            const double base = rot(left) + rot(right);
            // CR+- = [Rx(-180)@c, CR-+, Rx(180)@c] and vice versa; the switch
            // pays off only when both injected pulses cancel into neighbours.
            const double inject = cr.polarity == CrPolarity::PLUS_MINUS ? -180.0 : 180.0;
            std::vector<Gate> left2 = canonicalize_1q_run(concat(left, {Gate::rx(inject, c)}));
            std::vector<Gate> right2 = canonicalize_1q_run(concat({Gate::rx(-inject, c)}, right));
            if (rot(left2) + rot(right2) < base - kRotEps) {
                cr = Gate::cr(cr.polarity == CrPolarity::PLUS_MINUS ? CrPolarity::MINUS_PLUS
                                                                    : CrPolarity::PLUS_MINUS,
                              cr.control(), cr.target());
                left = std::move(left2);
                right = std::move(right2);
                changed = true;
            }
        }
    }
    Circuit out = z.rebuild();
    PassReport report = verify_rewrite("polarity-switch", circuit, out);
    return {std::move(out), std::move(report)};
}

std::pair<Circuit, PassReport> pass_x90_form(const Circuit& circuit) {
    ZoneView z = ZoneView::decompose(circuit);
    for (auto& wire_runs : z.runs) {
        for (auto& run : wire_runs) {
            if (run.empty()) continue;
            run = canonicalize_1q_run(run, CanonicalForm::X90);
        }
    }
    Circuit out = z.rebuild();
    PassReport report = verify_rewrite("x90-form", circuit, out);
    return {std::move(out), std::move(report)};
}

PipelineResult optimize_pipeline(const Circuit& circuit, const DeviceModel& device) {
    PipelineResult result;
    const Circuit oriented = choose_orientation(circuit, device);
    Circuit current = lower_to_native(oriented, device);
    result.reports.push_back(verify_rewrite("orientation+lowering", circuit, current));
    if (!result.reports.back().verified) {
        throw std::runtime_error("orientation lowering failed verification");
    }

    const auto stages = {pass_cross_gate_cancellation, pass_commute_through_cr, pass_polarity_switch,
                         pass_x90_form};
    for (const auto& stage : stages) {
        auto [next, report] = stage(current);
        if (!report.verified) {
            throw std::runtime_error("pass '" + report.pass_name + "' failed equivalence verification");
        }
        current = std::move(next);
        result.reports.push_back(std::move(report));
    }
    result.circuit = std::move(current);
    return result;
}

}  // namespace crsq

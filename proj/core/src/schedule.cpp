// SPDX-License-Identifier: MIT

#include "crsq/schedule.hpp"

#include <set>

namespace crsq {

SymbolicDepth MomentSchedule::depth() const {
    SymbolicDepth d;
    for (const Moment& m : moments) {
        if (m.klass == MomentClass::ONE_QUBIT) ++d.one_qubit;
        if (m.klass == MomentClass::CR) ++d.cr;
    }
    return d;
}

MomentSchedule schedule_moments(const Circuit& circuit) {
    struct Slot {
        MomentClass klass;
        std::vector<int> gates;
        std::set<int> wires;
    };
    std::vector<Slot> slots;
    std::vector<int> last(circuit.n_wires(), -1);          // last slot touching each wire
    std::vector<std::vector<int>> pending(circuit.n_wires());  // unattached RZ indices

    const auto& gates = circuit.gates();
    for (int gi = 0; gi < static_cast<int>(gates.size()); ++gi) {
        const Gate& g = gates[gi];
        if (g.is_composite()) {
            throw std::invalid_argument("schedule_moments needs a native circuit; found composite '" +
                                        std::string(kind_name(g.kind)) + "'");
        }
        if (g.is_virtual()) {
            pending[g.wire()].push_back(gi);
            continue;
        }
        const MomentClass klass = g.kind == GateKind::CR ? MomentClass::CR : MomentClass::ONE_QUBIT;
        int start = 0;
        for (int i = 0; i < g.arity; ++i) start = std::max(start, last[g.wires[i]] + 1);
        int j = start;
        for (; j < static_cast<int>(slots.size()); ++j) {
            if (slots[j].klass != klass) continue;
            bool clash = false;
            for (int i = 0; i < g.arity; ++i) clash |= slots[j].wires.count(g.wires[i]) > 0;
            if (!clash) break;
        }
        if (j == static_cast<int>(slots.size())) slots.push_back(Slot{klass, {}, {}});
        for (int i = 0; i < g.arity; ++i) {
            for (int rz : pending[g.wires[i]]) slots[j].gates.push_back(rz);
            pending[g.wires[i]].clear();
            slots[j].wires.insert(g.wires[i]);
            last[g.wires[i]] = j;
        }
        slots[j].gates.push_back(gi);
    }

    // Leftover RZ gates close the circuit as trailing virtual moments,
    // wire-disjoint within each moment.
    std::vector<int> trailing;
    for (int w = 0; w < circuit.n_wires(); ++w) {
        for (int rz : pending[w]) trailing.push_back(rz);
    }
    std::sort(trailing.begin(), trailing.end());
    std::set<int> used;
    Slot virt{MomentClass::VIRTUAL, {}, {}};
    std::vector<Slot> virts;
    for (int rz : trailing) {
        const int w = gates[rz].wire();
        if (used.count(w)) {
            virts.push_back(virt);
            virt = Slot{MomentClass::VIRTUAL, {}, {}};
            used.clear();
        }
        virt.gates.push_back(rz);
        used.insert(w);
    }
    if (!virt.gates.empty()) virts.push_back(virt);

    MomentSchedule out;
    for (auto& s : slots) out.moments.push_back(Moment{s.klass, std::move(s.gates)});
    for (auto& s : virts) out.moments.push_back(Moment{s.klass, std::move(s.gates)});
    return out;
}

}  // namespace crsq

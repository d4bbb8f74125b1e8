// SPDX-License-Identifier: MIT

#include "crsq/device.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace crsq {

void DeviceModel::validate() const {
    if (dt_ns <= 0) throw std::invalid_argument("device.dt_ns must be positive");
    if (qubits.empty()) throw std::invalid_argument("device.qubits must not be empty");
    std::set<int> ids;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const auto& q = qubits[i];
        const std::string path = "device.qubits[" + std::to_string(i) + "]";
        if (q.id < 0) throw std::invalid_argument(path + ".id must be non-negative");
        if (!ids.insert(q.id).second) throw std::invalid_argument(path + ".id duplicates qubit " + std::to_string(q.id));
        if (q.t1q_dt <= 0) throw std::invalid_argument(path + ".t1q_dt must be positive");
        if (q.T1_us <= 0) throw std::invalid_argument(path + ".T1_us must be positive");
        if (q.T2_us <= 0) throw std::invalid_argument(path + ".T2_us must be positive");
        if (q.T2_us > 2.0 * q.T1_us + 1e-12) {
            throw std::invalid_argument("qubit " + std::to_string(q.id) +
                                        ": T2_us exceeds 2*T1_us (unphysical relaxation channel)");
        }
    }
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string path = "device.edges[" + std::to_string(i) + "]";
        if (!ids.count(e.control)) throw std::invalid_argument(path + ".control references unknown qubit");
        if (!ids.count(e.target)) throw std::invalid_argument(path + ".target references unknown qubit");
        if (e.control == e.target) throw std::invalid_argument(path + ": endpoints must be distinct");
        if (e.tcr_dt <= 0) throw std::invalid_argument(path + ".tcr_dt must be positive");
        auto key = std::minmax(e.control, e.target);
        if (!pairs.insert(key).second) {
            throw std::invalid_argument(path + ": duplicate edge for pair (" + std::to_string(key.first) +
                                        "," + std::to_string(key.second) + ")");
        }
    }
}

bool DeviceModel::has_qubit(int id) const {
    return std::any_of(qubits.begin(), qubits.end(), [&](const auto& q) { return q.id == id; });
}

const QubitCalibration& DeviceModel::qubit(int id) const {
    for (const auto& q : qubits) {
        if (q.id == id) return q;
    }
    throw std::out_of_range("device has no qubit " + std::to_string(id));
}

const EdgeCalibration* DeviceModel::find_edge(int a, int b) const {
    for (const auto& e : edges) {
        if ((e.control == a && e.target == b) || (e.control == b && e.target == a)) return &e;
    }
    return nullptr;
}

int DeviceModel::wire_count() const {
    int max_id = -1;
    for (const auto& q : qubits) max_id = std::max(max_id, q.id);
    return max_id + 1;
}

int DeviceModel::edge_t1q_dt(const EdgeCalibration& edge) const {
    return std::max(qubit(edge.control).t1q_dt, qubit(edge.target).t1q_dt);
}

namespace {

using nlohmann::json;

template <typename T>
T require_field(const json& j, const char* field, const std::string& path) {
    if (!j.contains(field)) throw std::invalid_argument(path + "." + field + " is missing");
    try {
        return j.at(field).get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(path + "." + field + " has the wrong type");
    }
}

}  // namespace

DeviceModel parse_device_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("device JSON parse error: ") + e.what());
    }
    DeviceModel d;
    d.name = require_field<std::string>(j, "name", "device");
    d.dt_ns = require_field<double>(j, "dt_ns", "device");
    const json qubits = require_field<json>(j, "qubits", "device");
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const std::string path = "device.qubits[" + std::to_string(i) + "]";
        QubitCalibration q;
        q.id = require_field<int>(qubits[i], "id", path);
        q.t1q_dt = require_field<int>(qubits[i], "t1q_dt", path);
        q.T1_us = require_field<double>(qubits[i], "T1_us", path);
        q.T2_us = require_field<double>(qubits[i], "T2_us", path);
        d.qubits.push_back(q);
    }
    const json edges = require_field<json>(j, "edges", "device");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "device.edges[" + std::to_string(i) + "]";
        EdgeCalibration e;
        e.control = require_field<int>(edges[i], "control", path);
        e.target = require_field<int>(edges[i], "target", path);
        e.tcr_dt = require_field<int>(edges[i], "tcr_dt", path);
        d.edges.push_back(e);
    }
    d.validate();
    return d;
}

DeviceModel load_device(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open device file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_device_json(buf.str());
}

std::string device_to_json(const DeviceModel& device) {
    nlohmann::ordered_json j;
    j["name"] = device.name;
    j["dt_ns"] = device.dt_ns;
    j["qubits"] = nlohmann::ordered_json::array();
    for (const auto& q : device.qubits) {
        j["qubits"].push_back({{"id", q.id}, {"t1q_dt", q.t1q_dt}, {"T1_us", q.T1_us}, {"T2_us", q.T2_us}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : device.edges) {
        j["edges"].push_back({{"control", e.control}, {"target", e.target}, {"tcr_dt", e.tcr_dt}});
    }
    return j.dump(2) + "\n";
}

MetricsReport circuit_metrics(const Circuit& circuit, const DeviceModel& device) {
    const MomentSchedule sched = schedule_moments(circuit);
    MetricsReport r;
    r.depth = sched.depth();
    for (const Moment& m : sched.moments) {
        if (m.klass == MomentClass::VIRTUAL) continue;
        long dur = 0;
        if (m.klass == MomentClass::ONE_QUBIT) {
            for (int gi : m.gate_indices) {
                const Gate& g = circuit.gates()[gi];
                if (g.is_pulse()) dur = std::max<long>(dur, device.qubit(g.wire()).t1q_dt);
            }
        } else {
            for (int gi : m.gate_indices) {
                const Gate& g = circuit.gates()[gi];
                if (g.kind != GateKind::CR) continue;
                const EdgeCalibration* e = device.find_edge(g.control(), g.target());
                if (e == nullptr || e->control != g.control()) {
                    throw std::invalid_argument("CR on (" + std::to_string(g.control()) + "," +
                                                std::to_string(g.target()) + ") has no matching device edge");
                }
                dur = std::max<long>(dur, e->tcr_dt);
            }
        }
        r.duration_dt += dur;
    }
    r.duration_ns = static_cast<double>(r.duration_dt) * device.dt_ns;
    r.external_rotation_deg = circuit.external_rotation();
    r.internal_rotation_deg = circuit.internal_rotation();
    return r;
}

namespace {
const EdgeCalibration& checked_edge(const EdgeCalibration& edge, const DeviceModel& device) {
    const EdgeCalibration* found = device.find_edge(edge.control, edge.target);
    if (found == nullptr) {
        throw std::invalid_argument("edge (" + std::to_string(edge.control) + "," +
                                    std::to_string(edge.target) + ") is not on the device");
    }
    return *found;
}
}  // namespace

double orientation_speedup(const EdgeCalibration& edge, const DeviceModel& device) {
    const EdgeCalibration& e = checked_edge(edge, device);
    const double a = device.edge_t1q_dt(e);
    const double b = e.tcr_dt;
    return (5.0 * a + 3.0 * b) / (4.0 * a + 3.0 * b);
}

double optimized_speedup(const EdgeCalibration& edge, const DeviceModel& device) {
    const EdgeCalibration& e = checked_edge(edge, device);
    const double a = device.edge_t1q_dt(e);
    const double b = e.tcr_dt;
    return (5.0 * a + 3.0 * b) / (2.0 * a + 3.0 * b);
}

DeviceSpeedups device_speedups(const DeviceModel& device) {
    DeviceSpeedups out;
    if (device.edges.empty()) return out;
    double so = 0.0;
    double sp = 0.0;
    for (const auto& e : device.edges) {
        EdgeSpeedup s;
        s.control = e.control;
        s.target = e.target;
        s.t1q_dt = device.edge_t1q_dt(e);
        s.tcr_dt = e.tcr_dt;
        s.orientation = orientation_speedup(e, device);
        s.optimized = optimized_speedup(e, device);
        so += s.orientation;
        sp += s.optimized;
        out.edges.push_back(s);
    }
    out.mean_orientation = so / static_cast<double>(out.edges.size());
    out.mean_optimized = sp / static_cast<double>(out.edges.size());
    return out;
}

std::pair<int, int> infer_native_durations(long d_std_dt, long d_opt_dt) {
    if (!(d_std_dt > d_opt_dt && d_opt_dt > 0)) {
        throw std::invalid_argument("need standard > optimized > 0 durations");
    }
    // standard = 5a + 3b, optimized = 2a + 3b
    const long a = std::lround(static_cast<double>(d_std_dt - d_opt_dt) / 3.0);
    const long b = std::lround(static_cast<double>(d_opt_dt - 2 * a) / 3.0);
    if (a <= 0 || b <= 0) throw std::invalid_argument("inconsistent durations: non-positive solution");
    return {static_cast<int>(a), static_cast<int>(b)};
}

double coherence_limited_error(double duration_ns, std::span<const QubitCalibration> qubits) {
    if (duration_ns < 0) throw std::invalid_argument("duration must be non-negative");
    if (qubits.empty() || qubits.size() > 2) {
        throw std::invalid_argument("coherence_limited_error takes 1 or 2 qubit records");
    }
    const double t_us = duration_ns * 1e-3;
    double fidelity = 1.0;
    for (const auto& q : qubits) {
        fidelity *= 0.5 + std::exp(-t_us / q.T2_us) / 3.0 + std::exp(-t_us / q.T1_us) / 6.0;
    }
    return 1.0 - fidelity;
}

}  // namespace crsq

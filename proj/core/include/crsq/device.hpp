// SPDX-License-Identifier: MIT

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crsq/circuit.hpp"
#include "crsq/schedule.hpp"

namespace crsq {

struct QubitCalibration {
    int id = 0;
    int t1q_dt = 0;      // single-qubit pulse duration, dt samples
    double T1_us = 0.0;  // energy relaxation lifetime
    double T2_us = 0.0;  // dephasing lifetime
};

/// control -> target is the CR drive direction.
struct EdgeCalibration {
    int control = 0;
    int target = 0;
    int tcr_dt = 0;
};

/// Calibration record for one device: per-qubit pulse duration and
/// lifetimes, per-edge CR duration and direction, and the sample period dt.
class DeviceModel {
public:
    std::string name;
    double dt_ns = 0.0;
    std::vector<QubitCalibration> qubits;
    std::vector<EdgeCalibration> edges;

    /// Checks all invariants; throws std::invalid_argument naming the field.
    void validate() const;

    [[nodiscard]] bool has_qubit(int id) const;
    [[nodiscard]] const QubitCalibration& qubit(int id) const;
    /// Matches either orientation of the unordered pair; nullptr when absent.
    [[nodiscard]] const EdgeCalibration* find_edge(int a, int b) const;
    /// Wire count needed for circuits addressing this device's qubit ids.
    [[nodiscard]] int wire_count() const;
    /// Shared single-qubit moments cost the slower of the two qubits.
    [[nodiscard]] int edge_t1q_dt(const EdgeCalibration& edge) const;
};

[[nodiscard]] DeviceModel parse_device_json(const std::string& json_text);
[[nodiscard]] DeviceModel load_device(const std::filesystem::path& path);
[[nodiscard]] std::string device_to_json(const DeviceModel& device);

struct MetricsReport {
    SymbolicDepth depth;
    long duration_dt = 0;
    double duration_ns = 0.0;
    double external_rotation_deg = 0.0;
    double internal_rotation_deg = 0.0;
};

/// Schedules the native circuit on the device and accounts durations and
/// active rotation. CR gates must sit on device edges in drive direction.
[[nodiscard]] MetricsReport circuit_metrics(const Circuit& circuit, const DeviceModel& device);

/// (5 t1q + 3 tCR) / (4 t1q + 3 tCR): gain from orienting a SWAP's CNOTs
/// along the CR direction instead of against it.
[[nodiscard]] double orientation_speedup(const EdgeCalibration& edge, const DeviceModel& device);

/// (5 t1q + 3 tCR) / (2 t1q + 3 tCR): full optimized-vs-standard gain.
[[nodiscard]] double optimized_speedup(const EdgeCalibration& edge, const DeviceModel& device);

struct EdgeSpeedup {
    int control = 0;
    int target = 0;
    int t1q_dt = 0;
    int tcr_dt = 0;
    double orientation = 1.0;
    double optimized = 1.0;
};
struct DeviceSpeedups {
    std::vector<EdgeSpeedup> edges;
    double mean_orientation = 1.0;
    double mean_optimized = 1.0;
};
[[nodiscard]] DeviceSpeedups device_speedups(const DeviceModel& device);

/// Recovers (t1q, tCR) from the standard (5a+3b) and optimized (2a+3b) SWAP
/// durations. Throws on inconsistent inputs.
[[nodiscard]] std::pair<int, int> infer_native_durations(long d_std_dt, long d_opt_dt);

/// Decoherence lower bound on gate error over 1 or 2 qubits:
/// 1 - prod_q [ 1/2 + (1/3) e^{-t/T2_q} + (1/6) e^{-t/T1_q} ].
[[nodiscard]] double coherence_limited_error(double duration_ns,
                                             std::span<const QubitCalibration> qubits);

}  // namespace crsq

// SPDX-License-Identifier: MIT

#pragma once

#include <optional>
#include <random>

#include "crsq/circuit.hpp"
#include "crsq/device.hpp"
#include "crsq/unitary.hpp"

namespace crsq {

/// Noise attaches to structure: depol_1q after every physical Rx/Ry pulse,
/// depol_2q after every CR, and (when thermal is set) per-qubit relaxation
/// for every moment's wall-clock duration, idle qubits included. Virtual Rz
/// gates are noiseless.
struct NoiseModel {
    double depol_1q = 0.0;
    double depol_2q = 0.0;
    bool thermal = false;
    std::optional<int> shots;  // empty = exact probabilities
    std::uint64_t seed = 0;

    void validate() const;
};

[[nodiscard]] NoiseModel parse_noise_json(const std::string& json_text);
[[nodiscard]] NoiseModel load_noise(const std::filesystem::path& path);

using KrausSet = std::vector<Eigen::MatrixXcd>;

/// Amplitude damping with gamma = 1 - e^{-t/T1} composed with pure dephasing
/// from 1/T_phi = 1/T2 - 1/(2 T1). Requires T2 <= 2 T1.
[[nodiscard]] KrausSet thermal_channel(double t_ns, double T1_us, double T2_us);
[[nodiscard]] KrausSet depolarizing_1q(double p);
[[nodiscard]] KrausSet depolarizing_2q(double p);

/// Sum_k K^dag K == I within tol.
[[nodiscard]] bool kraus_closure_ok(const KrausSet& kraus, double tol = 1e-10);

/// rho <- U rho U^dag with a 1- or 2-wire block.
void apply_unitary_to_density(Eigen::MatrixXcd& rho, const Unitary& block, std::span<const int> wires,
                              int n_wires);
/// rho <- sum_k K rho K^dag with 1- or 2-wire Kraus operators.
void apply_kraus_to_density(Eigen::MatrixXcd& rho, const KrausSet& kraus, std::span<const int> wires,
                            int n_wires);

/// Full density-matrix evolution of |0..0> through the moment schedule:
/// moment unitaries, then thermal relaxation per qubit for the moment
/// duration, then depolarizing per physical gate. n_wires <= 9.
[[nodiscard]] Eigen::MatrixXcd simulate_density_matrix(const Circuit& circuit, const NoiseModel& noise,
                                                       const DeviceModel& device);

/// Computational-basis outcome probabilities (ideal readout). With
/// noise.shots set, returns the seeded empirical frequencies instead.
[[nodiscard]] Eigen::VectorXd simulate_density(const Circuit& circuit, const NoiseModel& noise,
                                               const DeviceModel& device);

/// Column-major superoperator of the noisy circuit channel. Dimension 4^n.
[[nodiscard]] Eigen::MatrixXcd channel_superoperator(const Circuit& circuit, const NoiseModel& noise,
                                                     const DeviceModel& device);

/// Average gate error 1 - (Tr[S_target^dag S] + d) / (d^2 + d) of the noisy
/// circuit against an ideal target unitary of matching dimension.
[[nodiscard]] double average_gate_error(const Circuit& circuit, const Unitary& target,
                                        const NoiseModel& noise, const DeviceModel& device);

inline constexpr int kMaxDensityWires = 9;

}  // namespace crsq

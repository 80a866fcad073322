// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Dense statevector and density-matrix simulation of {RY, CNOT} circuits
// with depolarizing gate noise, per-qubit readout confusion, shot sampling,
// and grouped Pauli energy estimation.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qeec/pauli.hpp"

namespace qeec {

enum class GateKind { ry, cnot };

struct Gate {
    GateKind kind;
    std::uint32_t a = 0;  // RY target / CNOT control
    std::uint32_t b = 0;  // CNOT target
    double angle = 0.0;   // RY only
};

struct Circuit {
    std::uint32_t qubits = 0;
    std::vector<Gate> gates;

    void ry(std::uint32_t q, double angle);
    void cnot(std::uint32_t control, std::uint32_t target);
    std::size_t cnot_count() const;
    void validate() const;  // throws InputError on bad indices
};

struct ReadoutPair {
    double p1_given_0 = 0.0;
    double p0_given_1 = 0.0;
};

struct NoiseModel {
    // per-qubit depolarizing probability applied after every RY
    std::vector<double> single_qubit_error;
    // per-qubit readout confusion
    std::vector<ReadoutPair> readout;
    // per-coupling two-qubit depolarizing probability; either direction
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> cnot_error;

    static NoiseModel ideal(std::uint32_t qubits);
    // device-calibration JSON: per-qubit gate_error/p0_given_1/p1_given_0
    // plus per-coupling gate_error
    static NoiseModel from_json(const std::string& text);

    bool is_ideal() const;
    double single(std::uint32_t q) const;
    double cnot(std::uint32_t c, std::uint32_t t) const;
    ReadoutPair read(std::uint32_t q) const;
    std::uint32_t qubit_count() const {
        return static_cast<std::uint32_t>(readout.size());
    }
};

struct ShotCounts {
    std::uint32_t qubits = 0;
    std::uint64_t total = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
};

inline constexpr std::uint32_t kStatevectorLimit = 24;
inline constexpr std::uint32_t kDensityLimit = 10;

Eigen::VectorXcd run_statevector(const Circuit& c,
                                 std::uint32_t limit = kStatevectorLimit);
Eigen::MatrixXcd run_noisy(const Circuit& c, const NoiseModel& nm,
                           std::uint32_t limit = kDensityLimit);

double expectation(const Eigen::VectorXcd& state, const PauliOperator& op);
double expectation(const Eigen::MatrixXcd& rho, const PauliOperator& op);

// Born probabilities of measuring every qubit after rotating `basis`
// letters into the Z eigenbasis (X via Hadamard, Y via S-dagger then
// Hadamard), with per-qubit readout confusion folded in
Eigen::VectorXd measured_probabilities(const Eigen::VectorXcd& state,
                                       const PauliString& basis,
                                       const NoiseModel& nm);
Eigen::VectorXd measured_probabilities(const Eigen::MatrixXcd& rho,
                                       const PauliString& basis,
                                       const NoiseModel& nm);

ShotCounts sample_distribution(const Eigen::VectorXd& probs,
                               std::uint32_t qubits, std::uint64_t shots,
                               std::mt19937_64& rng);

// eigenvalue average of a Z-basis Pauli support under a probability vector
double pauli_mean_from_probabilities(const Eigen::VectorXd& probs,
                                     std::uint64_t support);

// qubit-wise commuting grouping, deterministic order; identity terms are
// folded into every report's constant instead of being measured
struct MeasurementGroup {
    PauliString basis;  // union of letters
    std::vector<std::pair<PauliString, double>> terms;
};
std::vector<MeasurementGroup> group_commuting(const PauliOperator& op);

struct Backend {
    enum class Kind { exact, shots, noisy };
    Kind kind = Kind::exact;
    std::uint64_t shots = 0;
    NoiseModel noise;
    // apply the inverse readout-confusion model to measured frequencies
    bool mitigate_readout = false;

    static Backend exact();
    static Backend sampled(std::uint64_t shots);
    static Backend noisy_backend(const NoiseModel& nm, std::uint64_t shots,
                                 bool mitigate = false);
};

struct EnergyEstimate {
    double energy = 0.0;
    double sigma = 0.0;
    std::size_t groups = 0;
};

EnergyEstimate estimate_energy(const Circuit& c, const PauliOperator& op,
                               const Backend& backend, std::uint64_t seed);

std::vector<double> diagonalize(const PauliOperator& op,
                                std::uint32_t limit = 14);

}  // namespace qeec

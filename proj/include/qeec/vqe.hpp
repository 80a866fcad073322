// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Hardware-efficient ansatz (RY layers + linear CNOT chains, optionally
// padded with identity CNOT pairs for noise amplification) and a
// derivative-free trust-region minimizer over its parameters.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qeec/pauli.hpp"
#include "qeec/simulator.hpp"

namespace qeec {

struct AnsatzSpec {
    std::uint32_t qubits = 4;
    std::uint32_t reps = 2;
    // identity CNOT pairs inserted across the whole circuit, spread evenly
    // over the entangling chain; 0/3/6 give 6/12/18 CNOTs at 4 qubits
    std::uint32_t redundant_cnot_pairs = 0;

    std::size_t parameter_count() const {
        return static_cast<std::size_t>(qubits) * (reps + 1);
    }
    std::size_t original_cnot_count() const {
        return qubits == 0 ? 0
                           : static_cast<std::size_t>(qubits - 1) * reps;
    }
    std::size_t total_cnot_count() const {
        return original_cnot_count() + 2 * redundant_cnot_pairs;
    }
};

Circuit build_ansatz(const AnsatzSpec& spec,
                     const std::vector<double>& parameters);

struct OptimizerConfig {
    std::size_t max_iterations = 500;  // energy evaluations per start
    double initial_step = 0.4;         // trust-region radius, radians
    double tolerance = 1e-6;           // final trust-region radius
    std::uint64_t seed = 0;
    std::size_t restarts = 3;          // extra seeded starts when above target
    std::optional<double> target;      // stop once energy <= target
};

struct VqeResult {
    double energy = 0.0;
    std::vector<double> parameters;
    std::vector<double> trajectory;  // best-so-far is min over this
    std::size_t evaluations = 0;
    std::size_t starts = 1;  // total starts used (1 = no restart needed)
};

VqeResult minimize(const PauliOperator& hamiltonian, const AnsatzSpec& spec,
                   const OptimizerConfig& config, const Backend& backend);

}  // namespace qeec

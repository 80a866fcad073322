// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// The compiler core: fermionic excitation operators are restricted to the
// admitted configuration set, written as signed index transitions, and the
// resulting matrix elements are expanded into Pauli strings through the
// single-entry operators Q+ = (X-iY)/2, Q- = (X+iY)/2, N0 = (I+Z)/2,
// N1 = (I-Z)/2.  Two-body products walk through raw (unfiltered)
// intermediate configurations so that the compiled operator matches the
// exact matrix elements of the Hamiltonian on the admitted set.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qeec/configspace.hpp"
#include "qeec/integrals.hpp"
#include "qeec/pauli.hpp"

namespace qeec {

struct Excitation {
    FermionConfig config;
    int sign;  // +1 or -1
};

// a+_p a_q applied to one occupation vector.  p == q tests occupation;
// p != q moves a particle with sign (-1)^(occupied bits strictly between).
// Absence (Pauli blocking) is a value, not an error.
std::optional<Excitation> apply_excitation(FermionConfig f, std::uint32_t p,
                                           std::uint32_t q);

struct Transition {
    std::size_t target;
    double coeff;
};

// Sparse one-entry-per-source map: for each admitted source index k at most
// one target survives.
struct TransitionOperator {
    std::map<std::size_t, Transition> entries;

    std::size_t count() const { return entries.size(); }
    bool operator==(const TransitionOperator& o) const {
        if (entries.size() != o.entries.size()) return false;
        for (const auto& [k, t] : entries) {
            auto it = o.entries.find(k);
            if (it == o.entries.end() || it->second.target != t.target ||
                it->second.coeff != t.coeff)
                return false;
        }
        return true;
    }
};

// restriction of a+_p a_q to the admitted set (end points both admitted)
TransitionOperator build_transition(const ConfigSpace& space, std::uint32_t p,
                                    std::uint32_t q);

// matrix product a.b (b acts first), all indices within one admitted set
TransitionOperator compose(const TransitionOperator& a,
                           const TransitionOperator& b);

// Pauli expansion of a transition operator over the Q-qubit register
PauliOperator transition_to_pauli(const ConfigSpace& space,
                                  const TransitionOperator& t);

// Attempt to write a transition operator as a single signed tensor product
// of {I, Q+, Q-, N0, N1}; returns e.g. "I_1 Q+_0" (descending qubits) or
// nullopt when no single product reproduces the entry set.
std::optional<std::string> entry_factorization(const ConfigSpace& space,
                                               const TransitionOperator& t);

struct EncodeStats {
    std::size_t nonzero_elements = 0;  // admitted-set matrix elements expanded
    std::size_t raw_terms = 0;         // nonzero_elements * 2^Q, before merging
    double max_imag_residue = 0.0;
};

// Full Hamiltonian compilation: one- plus two-body accumulation into an
// admitted-set matrix, then one Pauli expansion per nonzero element, then a
// Hermiticity check (imaginary residue above 1e-10 throws NumericError).
PauliOperator build_hamiltonian(const ConfigSpace& space,
                                const IntegralTable& spin,
                                EncodeStats* stats = nullptr);

// Full-register reference encoding (parity-string ladder operators)
PauliOperator jw_encode(const IntegralTable& spin);

struct TermCountReport {
    std::uint32_t full_register_qubits = 0;
    std::size_t full_register_terms = 0;
    std::uint32_t subspace_qubits = 0;
    std::size_t subspace_terms = 0;
};

// Runs both encodings on one spatial table + filter and counts terms with
// magnitude above `count_threshold` after merging.
TermCountReport term_count_report(const IntegralTable& spatial,
                                  const SymmetryFilter& filter,
                                  double count_threshold = 1e-8);

}  // namespace qeec

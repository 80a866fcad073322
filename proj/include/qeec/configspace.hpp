// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Symmetry-filtered enumeration of fermionic occupation vectors and the
// compact state mapping: the k-th configuration (ascending by integer
// value) is assigned the k-th computational basis state of a register of
// Q = ceil(log2 |configs|) qubits.  The lowest configuration is the
// reference determinant and lands on the all-zeros state.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qeec/integrals.hpp"

namespace qeec {

using FermionConfig = std::uint64_t;  // bit i = occupation f_i

struct SymmetryFilter {
    std::uint32_t n_spin_orbitals = 0;  // N
    std::uint32_t n_particles = 0;      // m
    // per-spin particle counts (m_alpha, m_beta); empty = no constraint
    std::optional<std::pair<std::uint32_t, std::uint32_t>> sz;
    OrbitalLayout layout;  // defines which bits are alpha when sz is set
    std::vector<FermionConfig> exclude;
    std::vector<FermionConfig> include_extra;
    // optional per-config sign redefinition (applied after final sorting);
    // empty = all +1
    std::vector<double> basis_phases;

    static SymmetryFilter from_json(const std::string& text);
    std::string to_json() const;
};

class ConfigSpace {
  public:
    static ConfigSpace enumerate(const SymmetryFilter& filter);

    std::size_t size() const { return configs_.size(); }
    std::uint32_t qubit_count() const { return q_; }
    std::uint32_t n_spin_orbitals() const { return n_; }
    FermionConfig config_at(std::size_t k) const { return configs_.at(k); }
    const std::vector<FermionConfig>& configs() const { return configs_; }
    std::optional<std::size_t> index_of(FermionConfig f) const;
    // index_of that throws InputError when absent
    std::size_t encode_state(FermionConfig f) const;
    double phase(std::size_t k) const {
        return phases_.empty() ? 1.0 : phases_.at(k);
    }
    bool has_phases() const { return !phases_.empty(); }

  private:
    std::vector<FermionConfig> configs_;
    std::unordered_map<FermionConfig, std::size_t> index_;
    std::vector<double> phases_;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
};

// ceil(log2 C(n, m)) with exact integer arithmetic; 0 when C(n, m) == 1
std::uint32_t qubit_count_for(std::uint32_t n, std::uint32_t m);

// C(n, m) as a decimal string (exact); used by the CLI report
std::string binomial_string(std::uint32_t n, std::uint32_t m);

}  // namespace qeec

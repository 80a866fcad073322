// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// One- and two-electron integral tables and their conversion into the
// spin-orbital convention used by the encoder: H = sum h_pq a+_p a_q
// + 1/2 sum h_pqrs a+_p a+_q a_r a_s with x1 pairing p<->s and x2 pairing
// q<->r.  Chemist-notation input (ij|kl) is reordered on conversion.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qeec {

enum class Convention { chemist, physicist };

struct TwoBodyEntry {
    std::uint32_t p, q, r, s;
    double value;
};

// Bit position of each (spatial orbital, spin) pair.  spin 0 = alpha,
// spin 1 = beta.
struct OrbitalLayout {
    std::uint32_t n_spatial = 0;
    // index 2*spatial + spin -> bit position; must be a bijection
    std::vector<std::uint32_t> spin_order;

    static OrbitalLayout blocked(std::uint32_t n_spatial);
    static OrbitalLayout interleaved(std::uint32_t n_spatial);
    static OrbitalLayout named(const std::string& name,
                               std::uint32_t n_spatial);

    std::uint32_t bit_of(std::uint32_t spatial, std::uint32_t spin) const;
    std::uint64_t alpha_mask() const;
    // throws InputError when spin_order is not a bijection on [0, 2n)
    void validate() const;
};

struct IntegralTable {
    std::uint32_t n = 0;  // orbital count (spatial or spin, per `spin_basis`)
    bool spin_basis = false;
    Convention convention = Convention::chemist;
    double constant = 0.0;
    Eigen::MatrixXd one_body;           // n x n, dense
    std::vector<TwoBodyEntry> two_body; // entries with |value| >= 1e-12
    std::string metadata_json;          // opaque, round-tripped verbatim

    double one(std::uint32_t p, std::uint32_t q) const {
        return one_body(p, q);
    }
    // throws InputError on failed hermiticity / index bounds
    void validate() const;
};

// FCIDUMP reader: namelist header (NORB/NELEC/MS2), then "value i j k l"
// lines with 1-based indices in chemist notation; i=j=k=l=0 carries the
// scalar constant; k=l=0 carries one-body h_ij.
struct FcidumpMetadata {
    std::uint32_t norb = 0;
    std::int32_t nelec = 0;
    std::int32_t ms2 = 0;
};
std::pair<IntegralTable, FcidumpMetadata> parse_fcidump(
    const std::string& text);

IntegralTable load_json_integrals(const std::string& text);
std::string emit_json_integrals(const IntegralTable& t);

// Expand a spatial-orbital table to 2n spin-orbitals under `layout`,
// converting chemist input to the physicist index order used everywhere
// downstream.  Spin-forbidden entries are dropped.
IntegralTable to_spin_orbitals(const IntegralTable& spatial,
                               const OrbitalLayout& layout);

}  // namespace qeec

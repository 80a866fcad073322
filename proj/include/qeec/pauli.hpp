// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic over linear combinations of Pauli strings.  Strings are
// packed as an (X, Z) bitmask pair so single-term products and hash merges
// are O(1); qubit 0 is the rightmost letter in text form.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace qeec {

using cplx = std::complex<double>;

struct PauliString {
    std::uint64_t x = 0;  // bit w set: letter at qubit w is X or Y
    std::uint64_t z = 0;  // bit w set: letter at qubit w is Z or Y
    std::uint32_t n = 0;  // ambient qubit count (0 = scalar)

    bool operator==(const PauliString& o) const {
        return x == o.x && z == o.z && n == o.n;
    }
    char letter(std::uint32_t w) const {
        static const char tab[4] = {'I', 'X', 'Z', 'Y'};
        return tab[((x >> w) & 1u) | (((z >> w) & 1u) << 1)];
    }
    // descending qubit order, index 0 rightmost
    std::string str() const;
    static PauliString parse(const std::string& text);
    bool is_identity() const { return x == 0 && z == 0; }
};

struct PauliStringHash {
    std::size_t operator()(const PauliString& p) const {
        std::uint64_t h = p.x * 0x9e3779b97f4a7c15ull;
        h ^= p.z + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ p.n);
    }
};

// Product of two single Pauli strings: returns the resulting string and the
// phase i^k it carries.
struct PauliProduct {
    PauliString string;
    cplx phase;
};
PauliProduct pauli_mul(const PauliString& a, const PauliString& b);

class PauliOperator {
  public:
    static constexpr double kDefaultPrune = 1e-12;

    PauliOperator() = default;
    explicit PauliOperator(std::uint32_t n_qubits) : n_(n_qubits) {}

    std::uint32_t qubit_count() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add_term(const PauliString& s, cplx c);
    cplx coeff(const PauliString& s) const;

    PauliOperator& operator+=(const PauliOperator& o);
    PauliOperator& operator*=(cplx c);
    friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
        a += b;
        return a;
    }
    PauliOperator multiply(const PauliOperator& o) const;

    // drop terms with |coeff| below threshold
    void prune(double threshold = kDefaultPrune);
    std::size_t count_above(double threshold) const;
    // largest |imag| over all coefficients
    double max_imag() const;
    // discard imaginary parts (call after max_imag() has been checked)
    void realify();

    Eigen::MatrixXcd to_matrix(std::uint32_t dense_limit = 14) const;

    // deterministic order: identity first, then lexicographic by label
    std::vector<std::pair<PauliString, cplx>> sorted_terms() const;

    const std::unordered_map<PauliString, cplx, PauliStringHash>& terms()
        const {
        return terms_;
    }

    // "(-1.052373) II" style lines, coefficients printed with `decimals`
    std::string pretty(int decimals = 6, double threshold = 1e-8) const;
    std::string to_json() const;
    static PauliOperator from_json(const std::string& text);

  private:
    std::uint32_t n_ = 0;
    std::unordered_map<PauliString, cplx, PauliStringHash> terms_;
};

}  // namespace qeec

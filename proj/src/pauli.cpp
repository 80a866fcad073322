// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/pauli.hpp"

#include "qeec/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qeec {

namespace {

const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^k

}  // namespace

std::string PauliString::str() const {
    std::string out;
    out.reserve(n);
    for (std::uint32_t w = n; w-- > 0;) out.push_back(letter(w));
    return out;
}

PauliString PauliString::parse(const std::string& text) {
    PauliString p;
    p.n = static_cast<std::uint32_t>(text.size());
    if (p.n > 64) throw InputError("pauli string longer than 64");
    for (std::uint32_t i = 0; i < p.n; ++i) {
        std::uint32_t w = p.n - 1 - i;  // leftmost char is the highest qubit
        switch (text[i]) {
            case 'I': break;
            case 'X': p.x |= 1ull << w; break;
            case 'Y': p.x |= 1ull << w; p.z |= 1ull << w; break;
            case 'Z': p.z |= 1ull << w; break;
            default:
                throw InputError("bad pauli letter in " + text);
        }
    }
    return p;
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw InputError("pauli length mismatch");
    // i-exponent per qubit: ZX,XY,YZ contribute +1; XZ,YX,ZY contribute +3
    std::uint64_t ax = a.x, az = a.z, bx = b.x, bz = b.z;
    int plus = std::popcount((az & ~ax) & (bx & ~bz)) +
               std::popcount((ax & ~az) & (bx & bz)) +
               std::popcount((ax & az) & (bz & ~bx));
    int minus = std::popcount((ax & ~az) & (bz & ~bx)) +
                std::popcount((ax & az) & (bx & ~bz)) +
                std::popcount((az & ~ax) & (bx & bz));
    PauliProduct out;
    out.string = PauliString{ax ^ bx, az ^ bz, a.n};
    out.phase = kPhase[((plus - minus) % 4 + 4) % 4];
    return out;
}

void PauliOperator::add_term(const PauliString& s, cplx c) {
    if (s.n != n_) throw InputError("pauli length mismatch");
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (std::abs(c) > 0.0) terms_.emplace(s, c);
    } else {
        it->second += c;
        if (std::abs(it->second) < kDefaultPrune) terms_.erase(it);
    }
}

cplx PauliOperator::coeff(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
    if (o.n_ != n_) throw InputError("operator length mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

PauliOperator& PauliOperator::operator*=(cplx c) {
    for (auto& [s, v] : terms_) v *= c;
    return *this;
}

PauliOperator PauliOperator::multiply(const PauliOperator& o) const {
    if (o.n_ != n_) throw InputError("operator length mismatch");
    PauliOperator out(n_);
    for (const auto& [sa, ca] : terms_) {
        for (const auto& [sb, cb] : o.terms_) {
            PauliProduct p = pauli_mul(sa, sb);
            out.add_term(p.string, ca * cb * p.phase);
        }
    }
    out.prune();
    return out;
}

void PauliOperator::prune(double threshold) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < threshold)
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::size_t PauliOperator::count_above(double threshold) const {
    std::size_t k = 0;
    for (const auto& [s, c] : terms_)
        if (std::abs(c) > threshold) ++k;
    return k;
}

double PauliOperator::max_imag() const {
    double m = 0.0;
    for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c.imag()));
    return m;
}

void PauliOperator::realify() {
    for (auto& [s, c] : terms_) c = cplx{c.real(), 0.0};
}

Eigen::MatrixXcd PauliOperator::to_matrix(std::uint32_t dense_limit) const {
    if (n_ > dense_limit)
        throw InputError("operator too wide for dense expansion");
    const std::uint64_t dim = 1ull << n_;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<long>(dim),
                                                static_cast<long>(dim));
    for (const auto& [s, c] : terms_) {
        const std::uint64_t y = s.x & s.z;
        for (std::uint64_t b = 0; b < dim; ++b) {
            // P|b> = phase * |b ^ x>; Z gives (-1)^bit, Y gives +-i
            int zpar = std::popcount(b & s.z & ~s.x);
            int yups = std::popcount(y & ~b);   // Y on a 0 bit: +i
            int ydowns = std::popcount(y & b);  // Y on a 1 bit: -i
            cplx ph = kPhase[((yups - ydowns) % 4 + 4) % 4];
            if (zpar & 1) ph = -ph;
            M(static_cast<long>(b ^ s.x), static_cast<long>(b)) += c * ph;
        }
    }
    return M;
}

std::vector<std::pair<PauliString, cplx>> PauliOperator::sorted_terms() const {
    std::vector<std::pair<PauliString, cplx>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        bool ia = a.first.is_identity(), ib = b.first.is_identity();
        if (ia != ib) return ia;
        return a.first.str() < b.first.str();
    });
    return v;
}

std::string PauliOperator::pretty(int decimals, double threshold) const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    for (const auto& [s, c] : sorted_terms()) {
        if (std::abs(c) <= threshold) continue;
        os << (c.real() < 0 ? "" : "+") << c.real();
        if (std::abs(c.imag()) > threshold)
            os << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
        os << " " << (n_ ? s.str() : std::string("1")) << "\n";
    }
    return os.str();
}

std::string PauliOperator::to_json() const {
    nlohmann::json j;
    j["qubits"] = n_;
    auto& arr = j["terms"] = nlohmann::json::array();
    for (const auto& [s, c] : sorted_terms()) {
        nlohmann::json t;
        t["string"] = s.str();
        t["re"] = c.real();
        t["im"] = c.imag();
        arr.push_back(std::move(t));
    }
    return j.dump(1);
}

PauliOperator PauliOperator::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PauliOperator op(j.at("qubits").get<std::uint32_t>());
    for (const auto& t : j.at("terms")) {
        PauliString s = PauliString::parse(t.at("string").get<std::string>());
        op.add_term(s, cplx{t.at("re").get<double>(),
                            t.value("im", 0.0)});
    }
    return op;
}

}  // namespace qeec

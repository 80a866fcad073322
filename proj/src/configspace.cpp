// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/configspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "qeec/errors.hpp"

namespace qeec {

namespace {

using bigint = boost::multiprecision::cpp_int;

bigint binomial(std::uint32_t n, std::uint32_t m) {
    if (m > n) return 0;
    if (m > n - m) m = n - m;
    bigint c = 1;
    for (std::uint32_t i = 1; i <= m; ++i) {
        c *= n - m + i;  // product stays integral: divides exactly each step
        c /= i;
    }
    return c;
}

// all n-bit masks of popcount m, ascending
std::vector<std::uint64_t> weight_masks(std::uint32_t n, std::uint32_t m) {
    if (n > 64) throw InputError("enumeration limited to 64 spin-orbitals");
    if (m > n) throw InputError("more particles than spin-orbitals");
    std::vector<std::uint64_t> out;
    if (m == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t f = (m == 64) ? ~0ull : (1ull << m) - 1;
    const std::uint64_t last = f << (n - m);
    for (;;) {
        out.push_back(f);
        if (f == last) break;
        // lexicographically next mask of equal popcount
        std::uint64_t c = f & (~f + 1);
        std::uint64_t r = f + c;
        f = (((r ^ f) >> 2) / c) | r;
    }
    return out;
}

// expand a compressed mask over `positions` back into full bit positions
std::uint64_t scatter(std::uint64_t compressed,
                      const std::vector<std::uint32_t>& positions) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        if ((compressed >> i) & 1) out |= 1ull << positions[i];
    return out;
}

}  // namespace

std::uint32_t qubit_count_for(std::uint32_t n, std::uint32_t m) {
    bigint c = binomial(n, m);
    if (c <= 0) throw InputError("qubit_count_for: m exceeds n");
    if (c == 1) return 0;
    return static_cast<std::uint32_t>(boost::multiprecision::msb(c - 1)) + 1;
}

std::string binomial_string(std::uint32_t n, std::uint32_t m) {
    return binomial(n, m).str();
}

SymmetryFilter SymmetryFilter::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("filter JSON parse error: ") + e.what());
    }
    if (j.value("schema", "") != "qeec-filter-v1")
        throw InputError("filter JSON: expected schema qeec-filter-v1");
    SymmetryFilter f;
    f.n_spin_orbitals = j.at("n_spin_orbitals").get<std::uint32_t>();
    f.n_particles = j.at("n_particles").get<std::uint32_t>();
    if (f.n_spin_orbitals % 2 != 0)
        throw InputError("filter JSON: n_spin_orbitals must be even");
    f.layout = OrbitalLayout::named(j.value("layout", "blocked"),
                                    f.n_spin_orbitals / 2);
    if (j.contains("sz") && !j.at("sz").is_null()) {
        auto arr = j.at("sz");
        if (!arr.is_array() || arr.size() != 2)
            throw InputError("filter JSON: sz must be [m_alpha, m_beta]");
        f.sz = {arr[0].get<std::uint32_t>(), arr[1].get<std::uint32_t>()};
        if (f.sz->first + f.sz->second != f.n_particles)
            throw InputError("filter JSON: sz counts must sum to n_particles");
    }
    for (const auto& e : j.value("exclude", nlohmann::json::array()))
        f.exclude.push_back(e.get<std::uint64_t>());
    for (const auto& e : j.value("include_extra", nlohmann::json::array()))
        f.include_extra.push_back(e.get<std::uint64_t>());
    if (j.contains("basis_phases"))
        for (const auto& e : j.at("basis_phases"))
            f.basis_phases.push_back(e.get<double>());
    return f;
}

std::string SymmetryFilter::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "qeec-filter-v1";
    j["n_spin_orbitals"] = n_spin_orbitals;
    j["n_particles"] = n_particles;
    if (sz)
        j["sz"] = {sz->first, sz->second};
    else
        j["sz"] = nullptr;
    bool interleaved = !layout.spin_order.empty() && layout.spin_order[1] == 1;
    j["layout"] = interleaved ? "interleaved" : "blocked";
    j["exclude"] = exclude;
    j["include_extra"] = include_extra;
    if (!basis_phases.empty()) j["basis_phases"] = basis_phases;
    return j.dump(1) + "\n";
}

ConfigSpace ConfigSpace::enumerate(const SymmetryFilter& filter) {
    const std::uint32_t n = filter.n_spin_orbitals;
    const std::uint32_t m = filter.n_particles;
    if (n == 0 || n > 64)
        throw InputError("enumeration needs 1..64 spin-orbitals");
    if (m > n) throw InputError("more particles than spin-orbitals");
    const std::uint64_t full =
        (n == 64) ? ~0ull : (1ull << n) - 1;

    std::vector<FermionConfig> configs;
    if (filter.sz) {
        auto [ma, mb] = *filter.sz;
        if (ma + mb != m)
            throw InputError("sz constraint inconsistent with particle count");
        filter.layout.validate();
        if (2 * filter.layout.n_spatial != n)
            throw InputError("filter layout does not cover all spin-orbitals");
        std::vector<std::uint32_t> apos, bpos;
        std::uint64_t amask = filter.layout.alpha_mask();
        for (std::uint32_t b = 0; b < n; ++b)
            ((amask >> b) & 1 ? apos : bpos).push_back(b);
        if (ma > apos.size() || mb > bpos.size())
            throw InputError("sz constraint exceeds available spin-orbitals");
        auto am = weight_masks(static_cast<std::uint32_t>(apos.size()), ma);
        auto bm = weight_masks(static_cast<std::uint32_t>(bpos.size()), mb);
        configs.reserve(am.size() * bm.size());
        for (std::uint64_t a : am)
            for (std::uint64_t b : bm)
                configs.push_back(scatter(a, apos) | scatter(b, bpos));
    } else {
        configs = weight_masks(n, m);
    }

    for (FermionConfig f : filter.exclude) {
        if (f > full) throw InputError("exclude entry references bits >= N");
        configs.erase(std::remove(configs.begin(), configs.end(), f),
                      configs.end());
    }
    for (FermionConfig f : filter.include_extra) {
        if (f > full)
            throw InputError("include_extra entry references bits >= N");
        if (static_cast<std::uint32_t>(std::popcount(f)) != m)
            throw InputError("include_extra entry has wrong particle number");
        for (FermionConfig e : filter.exclude)
            if (e == f)
                throw InputError("config listed in both exclude and include");
        configs.push_back(f);
    }

    std::sort(configs.begin(), configs.end());
    configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
    if (configs.empty())
        throw InputError("symmetry filter admits no configurations");

    ConfigSpace space;
    space.n_ = n;
    space.configs_ = std::move(configs);
    space.index_.reserve(space.configs_.size());
    for (std::size_t k = 0; k < space.configs_.size(); ++k)
        space.index_.emplace(space.configs_[k], k);
    std::size_t count = space.configs_.size();
    space.q_ = 0;
    while ((1ull << space.q_) < count) ++space.q_;
    if (!filter.basis_phases.empty()) {
        if (filter.basis_phases.size() != count)
            throw InputError("basis_phases length must equal config count");
        for (double p : filter.basis_phases)
            if (p != 1.0 && p != -1.0)
                throw InputError("basis_phases entries must be +1 or -1");
        space.phases_ = filter.basis_phases;
    }
    return space;
}

std::optional<std::size_t> ConfigSpace::index_of(FermionConfig f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ConfigSpace::encode_state(FermionConfig f) const {
    auto k = index_of(f);
    if (!k) throw InputError("configuration is not in the admitted set");
    return *k;
}

}  // namespace qeec

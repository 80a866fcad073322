// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qeec/errors.hpp"

namespace qeec {

namespace {

constexpr double kDropThreshold = 1e-12;

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

}  // namespace

OrbitalLayout OrbitalLayout::blocked(std::uint32_t n) {
    OrbitalLayout l;
    l.n_spatial = n;
    l.spin_order.resize(2 * n);
    for (std::uint32_t s = 0; s < n; ++s) {
        l.spin_order[2 * s] = s;          // alpha block, low bits
        l.spin_order[2 * s + 1] = n + s;  // beta block above it
    }
    return l;
}

OrbitalLayout OrbitalLayout::interleaved(std::uint32_t n) {
    OrbitalLayout l;
    l.n_spatial = n;
    l.spin_order.resize(2 * n);
    for (std::uint32_t s = 0; s < n; ++s) {
        l.spin_order[2 * s] = 2 * s;
        l.spin_order[2 * s + 1] = 2 * s + 1;
    }
    return l;
}

OrbitalLayout OrbitalLayout::named(const std::string& name,
                                   std::uint32_t n_spatial) {
    if (name == "blocked") return blocked(n_spatial);
    if (name == "interleaved") return interleaved(n_spatial);
    fail("unknown orbital layout '" + name + "'");
}

std::uint32_t OrbitalLayout::bit_of(std::uint32_t spatial,
                                    std::uint32_t spin) const {
    return spin_order.at(2 * spatial + spin);
}

std::uint64_t OrbitalLayout::alpha_mask() const {
    std::uint64_t m = 0;
    for (std::uint32_t s = 0; s < n_spatial; ++s)
        m |= 1ull << spin_order[2 * s];
    return m;
}

void OrbitalLayout::validate() const {
    if (spin_order.size() != 2 * static_cast<std::size_t>(n_spatial))
        fail("orbital layout size mismatch");
    std::vector<bool> seen(2 * n_spatial, false);
    for (std::uint32_t b : spin_order) {
        if (b >= 2 * n_spatial || seen[b])
            fail("orbital layout is not a bijection");
        seen[b] = true;
    }
}

void IntegralTable::validate() const {
    if (one_body.rows() != n || one_body.cols() != n)
        fail("one-body matrix dimension mismatch");
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
            if (std::abs(one_body(p, q) - one_body(q, p)) > 1e-10)
                fail("one-body table is not symmetric");
    for (const auto& e : two_body)
        if (e.p >= n || e.q >= n || e.r >= n || e.s >= n)
            fail("two-body index out of range");
}

namespace {

double parse_value(const std::string& tok, std::size_t lineno) {
    // Fortran-style exponents use D; accept both
    std::string t = tok;
    for (char& c : t)
        if (c == 'D' || c == 'd') c = 'e';
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        fail("line " + std::to_string(lineno) + ": non-numeric value '" +
             tok + "'");
    }
    if (used != t.size())
        fail("line " + std::to_string(lineno) + ": non-numeric value '" +
             tok + "'");
    return v;
}

long parse_index(const std::string& tok, std::size_t lineno) {
    std::size_t used = 0;
    long v;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        fail("line " + std::to_string(lineno) + ": non-numeric index '" +
             tok + "'");
    }
    if (used != tok.size() || v < 0)
        fail("line " + std::to_string(lineno) + ": bad index '" + tok + "'");
    return v;
}

}  // namespace

std::pair<IntegralTable, FcidumpMetadata> parse_fcidump(
    const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    // header: everything from &FCIDUMP up to &END or /
    std::string header;
    bool header_done = false;
    while (!header_done && std::getline(in, line)) {
        ++lineno;
        std::string upper = line;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        if (lineno == 1 && upper.find("&FCI") == std::string::npos)
            fail("line 1: missing &FCIDUMP namelist header");
        auto endpos = upper.find("&END");
        if (endpos == std::string::npos) endpos = upper.find('/');
        if (endpos != std::string::npos) {
            header += upper.substr(0, endpos);
            header_done = true;
        } else {
            header += upper + " ";
        }
    }
    if (!header_done) fail("unterminated FCIDUMP header (no &END)");

    auto get_int = [&](const std::string& key,
                       bool required) -> std::optional<long> {
        auto pos = header.find(key + "=");
        if (pos == std::string::npos) {
            if (required) fail("FCIDUMP header missing " + key);
            return std::nullopt;
        }
        pos += key.size() + 1;
        auto end = header.find_first_not_of("+-0123456789", pos);
        std::string tok = header.substr(pos, end == std::string::npos
                                                 ? std::string::npos
                                                 : end - pos);
        return parse_index(tok, 1);
    };

    FcidumpMetadata meta;
    meta.norb = static_cast<std::uint32_t>(*get_int("NORB", true));
    meta.nelec = static_cast<std::int32_t>(get_int("NELEC", false).value_or(0));
    meta.ms2 = static_cast<std::int32_t>(get_int("MS2", false).value_or(0));
    if (meta.norb == 0) fail("FCIDUMP header: NORB must be positive");

    IntegralTable t;
    t.n = meta.norb;
    t.spin_basis = false;
    t.convention = Convention::chemist;
    t.one_body = Eigen::MatrixXd::Zero(t.n, t.n);

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string tok; ls >> tok;) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 5)
            fail("line " + std::to_string(lineno) +
                 ": expected 'value i j k l'");
        double v = parse_value(toks[0], lineno);
        long idx[4];
        for (int k = 0; k < 4; ++k) idx[k] = parse_index(toks[k + 1], lineno);
        for (int k = 0; k < 4; ++k)
            if (idx[k] > meta.norb)
                fail("line " + std::to_string(lineno) +
                     ": orbital index " + std::to_string(idx[k]) +
                     " out of range (NORB=" + std::to_string(meta.norb) + ")");
        long i = idx[0], j = idx[1], k = idx[2], l = idx[3];
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            t.constant = v;
        } else if (k == 0 && l == 0) {
            if (i == 0 || j == 0)
                fail("line " + std::to_string(lineno) + ": bad index pattern");
            t.one_body(i - 1, j - 1) = v;
            t.one_body(j - 1, i - 1) = v;
        } else if (i == 0 || j == 0 || k == 0 || l == 0) {
            fail("line " + std::to_string(lineno) + ": bad index pattern");
        } else {
            // chemist (ij|kl); store the full 8-fold symmetric set expanded
            // lazily: keep one entry, expansion happens in to_spin_orbitals
            t.two_body.push_back({static_cast<std::uint32_t>(i - 1),
                                  static_cast<std::uint32_t>(j - 1),
                                  static_cast<std::uint32_t>(k - 1),
                                  static_cast<std::uint32_t>(l - 1), v});
        }
    }
    t.metadata_json = "{\"source\": \"fcidump\"}";
    return {t, meta};
}

IntegralTable load_json_integrals(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("integral JSON parse error: ") + e.what());
    }
    IntegralTable t;
    if (j.contains("n_spatial")) {
        t.n = j.at("n_spatial").get<std::uint32_t>();
        t.spin_basis = false;
    } else if (j.contains("n_spin_orbitals")) {
        t.n = j.at("n_spin_orbitals").get<std::uint32_t>();
        t.spin_basis = true;
    } else {
        fail("integral JSON: need n_spatial or n_spin_orbitals");
    }
    if (!j.contains("convention"))
        fail("integral JSON: missing convention field");
    std::string conv = j.at("convention").get<std::string>();
    if (conv == "chemist")
        t.convention = Convention::chemist;
    else if (conv == "physicist")
        t.convention = Convention::physicist;
    else
        fail("integral JSON: unknown convention '" + conv + "'");
    t.constant = j.value("constant", 0.0);
    t.one_body = Eigen::MatrixXd::Zero(t.n, t.n);
    for (const auto& e : j.at("one_body")) {
        if (!e.is_array() || e.size() != 3)
            fail("integral JSON: one_body entries must be [p, q, value]");
        std::uint32_t p = e[0].get<std::uint32_t>();
        std::uint32_t q = e[1].get<std::uint32_t>();
        if (p >= t.n || q >= t.n)
            fail("integral JSON: one_body index out of range");
        t.one_body(p, q) = e[2].get<double>();
    }
    for (const auto& e : j.at("two_body")) {
        if (!e.is_array() || e.size() != 5)
            fail("integral JSON: two_body entries must be [p, q, r, s, value]");
        std::uint32_t p = e[0].get<std::uint32_t>();
        std::uint32_t q = e[1].get<std::uint32_t>();
        std::uint32_t r = e[2].get<std::uint32_t>();
        std::uint32_t s = e[3].get<std::uint32_t>();
        if (p >= t.n || q >= t.n || r >= t.n || s >= t.n)
            fail("integral JSON: two_body index out of range");
        t.two_body.push_back({p, q, r, s, e[4].get<double>()});
    }
    if (j.contains("metadata")) t.metadata_json = j.at("metadata").dump(1);
    t.validate();
    return t;
}

std::string emit_json_integrals(const IntegralTable& t) {
    nlohmann::ordered_json j;
    j["schema"] = "qeec-integrals-v1";
    j[t.spin_basis ? "n_spin_orbitals" : "n_spatial"] = t.n;
    j["convention"] =
        t.convention == Convention::chemist ? "chemist" : "physicist";
    j["constant"] = t.constant;
    auto& ob = j["one_body"] = nlohmann::ordered_json::array();
    for (std::uint32_t p = 0; p < t.n; ++p)
        for (std::uint32_t q = 0; q < t.n; ++q)
            if (t.one_body(p, q) != 0.0)
                ob.push_back({p, q, t.one_body(p, q)});
    auto& tb = j["two_body"] = nlohmann::ordered_json::array();
    for (const auto& e : t.two_body)
        tb.push_back({e.p, e.q, e.r, e.s, e.value});
    if (!t.metadata_json.empty())
        j["metadata"] = nlohmann::ordered_json::parse(t.metadata_json);
    return j.dump(1) + "\n";
}

IntegralTable to_spin_orbitals(const IntegralTable& spatial,
                               const OrbitalLayout& layout) {
    if (spatial.spin_basis)
        fail("to_spin_orbitals: input is already a spin-orbital table");
    if (layout.n_spatial != spatial.n)
        fail("to_spin_orbitals: layout size mismatch");
    layout.validate();

    const std::uint32_t n = spatial.n;
    const std::uint32_t ns = 2 * n;
    IntegralTable t;
    t.n = ns;
    t.spin_basis = true;
    t.convention = Convention::physicist;
    t.constant = spatial.constant;
    t.metadata_json = spatial.metadata_json;
    t.one_body = Eigen::MatrixXd::Zero(ns, ns);

    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q) {
            double v = spatial.one_body(p, q);
            if (v == 0.0) continue;
            for (std::uint32_t sp = 0; sp < 2; ++sp)
                t.one_body(layout.bit_of(p, sp), layout.bit_of(q, sp)) = v;
        }

    // Chemist (AB|CD) means x1 carries A,B and x2 carries C,D.  In the
    // physicist form H2 = 1/2 sum h_pqrs a+_p a+_q a_r a_s with p<->s on
    // x1 and q<->r on x2, the matching assignment is p=A, s=B, q=C, r=D,
    // with spins sigma1 on (p,s) and sigma2 on (q,r).
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t,
                        std::uint32_t>,
             double>
        acc;
    auto add_chem = [&](std::uint32_t A, std::uint32_t B, std::uint32_t C,
                        std::uint32_t D, double v) {
        for (std::uint32_t s1 = 0; s1 < 2; ++s1)
            for (std::uint32_t s2 = 0; s2 < 2; ++s2) {
                std::uint32_t p = layout.bit_of(A, s1);
                std::uint32_t s = layout.bit_of(B, s1);
                std::uint32_t q = layout.bit_of(C, s2);
                std::uint32_t r = layout.bit_of(D, s2);
                acc[{p, q, r, s}] = v;
            }
    };

    if (spatial.convention == Convention::chemist) {
        for (const auto& e : spatial.two_body) {
            // expand the 8-fold permutational symmetry so inputs carrying
            // only unique entries (FCIDUMP) and fully-expanded inputs (the
            // JSON fixtures) land on the same table
            const std::uint32_t i = e.p, jj = e.q, k = e.r, l = e.s;
            const double v = e.value;
            add_chem(i, jj, k, l, v);
            add_chem(jj, i, k, l, v);
            add_chem(i, jj, l, k, v);
            add_chem(jj, i, l, k, v);
            add_chem(k, l, i, jj, v);
            add_chem(l, k, i, jj, v);
            add_chem(k, l, jj, i, v);
            add_chem(l, k, jj, i, v);
        }
    } else {
        for (const auto& e : spatial.two_body)
            for (std::uint32_t s1 = 0; s1 < 2; ++s1)
                for (std::uint32_t s2 = 0; s2 < 2; ++s2)
                    acc[{layout.bit_of(e.p, s1), layout.bit_of(e.q, s2),
                         layout.bit_of(e.r, s2), layout.bit_of(e.s, s1)}] =
                        e.value;
    }

    t.two_body.reserve(acc.size());
    for (const auto& [key, v] : acc) {
        if (std::abs(v) < kDropThreshold) continue;
        auto [p, q, r, s] = key;
        t.two_body.push_back({p, q, r, s, v});
    }
    return t;
}

}  // namespace qeec

// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/reference.hpp"

#include <bit>
#include <unordered_map>

#include "qeec/errors.hpp"

namespace qeec {

namespace {

struct Ket {
    FermionConfig f;
    int sign;
    bool dead;
};

Ket annihilate(Ket k, std::uint32_t p) {
    if (k.dead || !((k.f >> p) & 1)) return {0, 0, true};
    if (std::popcount(k.f & ((1ull << p) - 1)) & 1) k.sign = -k.sign;
    k.f ^= 1ull << p;
    return k;
}

Ket create(Ket k, std::uint32_t p) {
    if (k.dead || ((k.f >> p) & 1)) return {0, 0, true};
    if (std::popcount(k.f & ((1ull << p) - 1)) & 1) k.sign = -k.sign;
    k.f |= 1ull << p;
    return k;
}

}  // namespace

Eigen::MatrixXd ci_matrix(const std::vector<FermionConfig>& configs,
                          const IntegralTable& spin) {
    if (!spin.spin_basis || spin.convention != Convention::physicist)
        throw InputError("ci_matrix needs a physicist spin-orbital table");
    const long m = static_cast<long>(configs.size());
    std::unordered_map<FermionConfig, long> idx;
    for (long k = 0; k < m; ++k) idx.emplace(configs[k], k);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
    h.diagonal().array() += spin.constant;
    for (long k = 0; k < m; ++k) {
        const Ket base{configs[k], +1, false};
        for (std::uint32_t p = 0; p < spin.n; ++p)
            for (std::uint32_t q = 0; q < spin.n; ++q) {
                double v = spin.one_body(p, q);
                if (v == 0.0) continue;
                Ket t = create(annihilate(base, q), p);
                if (t.dead) continue;
                auto it = idx.find(t.f);
                if (it != idx.end()) h(it->second, k) += v * t.sign;
            }
        for (const auto& e : spin.two_body) {
            Ket t = create(create(annihilate(annihilate(base, e.s), e.r), e.q),
                           e.p);
            if (t.dead) continue;
            auto it = idx.find(t.f);
            if (it != idx.end()) h(it->second, k) += 0.5 * e.value * t.sign;
        }
    }
    return h;
}

Eigen::MatrixXcd restrict_to(const Eigen::MatrixXcd& m,
                             const std::vector<FermionConfig>& basis) {
    const long d = static_cast<long>(basis.size());
    Eigen::MatrixXcd out(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            out(i, j) = m(static_cast<long>(basis[i]),
                          static_cast<long>(basis[j]));
    return out;
}

std::vector<double> eigenvalues_ascending(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericError("eigenvalue solver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace qeec

// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/encoder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "qeec/errors.hpp"

namespace qeec {

namespace {

const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^k

// accumulator for the per-element Pauli expansion: dense over (x, z) when
// the register is small, hashed otherwise
class ExpansionAccumulator {
  public:
    explicit ExpansionAccumulator(std::uint32_t q) : q_(q) {
        if (q_ <= kDenseLimit) dense_.assign(1ull << (2 * q_), cplx{0, 0});
    }

    void add(std::uint64_t x, std::uint64_t z, cplx c) {
        if (!dense_.empty())
            dense_[(x << q_) | z] += c;
        else
            sparse_[(x << q_) | z] += c;
    }

    PauliOperator harvest() const {
        PauliOperator op(q_);
        if (!dense_.empty()) {
            const std::uint64_t dim = 1ull << q_;
            for (std::uint64_t x = 0; x < dim; ++x)
                for (std::uint64_t z = 0; z < dim; ++z) {
                    cplx c = dense_[(x << q_) | z];
                    if (std::abs(c) >= PauliOperator::kDefaultPrune)
                        op.add_term(PauliString{x, z, q_}, c);
                }
        } else {
            const std::uint64_t zmask = (1ull << q_) - 1;
            for (const auto& [key, c] : sparse_)
                if (std::abs(c) >= PauliOperator::kDefaultPrune)
                    op.add_term(
                        PauliString{key >> q_, key & zmask, q_}, c);
        }
        return op;
    }

  private:
    static constexpr std::uint32_t kDenseLimit = 10;
    std::uint32_t q_;
    std::vector<cplx> dense_;
    std::unordered_map<std::uint64_t, cplx> sparse_;
};

// expand c * |a><b| over the register into the accumulator: the X mask is
// forced to a^b and every Z mask contributes one raw term
void expand_element(ExpansionAccumulator& acc, std::uint32_t q,
                    std::uint64_t a, std::uint64_t b, double c) {
    const std::uint64_t x = a ^ b;
    const std::uint64_t raise = a & ~b;   // Q+ slots carry -i on the Y pick
    const std::uint64_t lower = b & ~a;   // Q- slots carry +i
    const std::uint64_t ones = a & b;     // N1 slots carry -1 on the Z pick
    const double scale = c * std::pow(0.5, static_cast<double>(q));
    const std::uint64_t dim = 1ull << q;
    for (std::uint64_t z = 0; z < dim; ++z) {
        int e = std::popcount(z & lower) + 3 * std::popcount(z & raise) +
                2 * std::popcount(z & ones);
        acc.add(x, z, scale * kPhase[e & 3]);
    }
}

}  // namespace

std::optional<Excitation> apply_excitation(FermionConfig f, std::uint32_t p,
                                           std::uint32_t q) {
    if (p == q) {
        if ((f >> p) & 1) return Excitation{f, +1};
        return std::nullopt;
    }
    if (!((f >> q) & 1) || ((f >> p) & 1)) return std::nullopt;
    const std::uint32_t lo = std::min(p, q), hi = std::max(p, q);
    const std::uint64_t between =
        (hi - lo > 1) ? ((1ull << hi) - (1ull << (lo + 1))) : 0;
    int sign = (std::popcount(f & between) & 1) ? -1 : +1;
    return Excitation{f ^ (1ull << p) ^ (1ull << q), sign};
}

TransitionOperator build_transition(const ConfigSpace& space, std::uint32_t p,
                                    std::uint32_t q) {
    if (p >= space.n_spin_orbitals() || q >= space.n_spin_orbitals())
        throw InputError("excitation index out of range");
    TransitionOperator t;
    for (std::size_t k = 0; k < space.size(); ++k) {
        auto e = apply_excitation(space.config_at(k), p, q);
        if (!e) continue;
        auto k2 = space.index_of(e->config);
        if (!k2) continue;  // leaves the admitted set: dropped
        t.entries.emplace(k, Transition{*k2, static_cast<double>(e->sign)});
    }
    return t;
}

TransitionOperator compose(const TransitionOperator& a,
                           const TransitionOperator& b) {
    TransitionOperator out;
    for (const auto& [k, tb] : b.entries) {
        auto it = a.entries.find(tb.target);
        if (it == a.entries.end()) continue;
        double c = tb.coeff * it->second.coeff;
        if (c != 0.0)
            out.entries.emplace(k, Transition{it->second.target, c});
    }
    return out;
}

PauliOperator transition_to_pauli(const ConfigSpace& space,
                                  const TransitionOperator& t) {
    const std::uint32_t q = space.qubit_count();
    ExpansionAccumulator acc(q);
    for (const auto& [k, tr] : t.entries)
        expand_element(acc, q, tr.target, k,
                       tr.coeff * space.phase(tr.target) * space.phase(k));
    return acc.harvest();
}

std::optional<std::string> entry_factorization(const ConfigSpace& space,
                                               const TransitionOperator& t) {
    if (t.entries.empty()) return std::nullopt;
    const std::uint32_t q = space.qubit_count();
    double c0 = t.entries.begin()->second.coeff;
    // per qubit: which (target bit, source bit) pairs occur
    std::vector<std::array<bool, 4>> seen(q ? q : 1, {false, false, false,
                                                      false});
    for (const auto& [k, tr] : t.entries) {
        if (tr.coeff != c0) return std::nullopt;
        for (std::uint32_t w = 0; w < q; ++w) {
            int tb = (tr.target >> w) & 1, sb = (k >> w) & 1;
            seen[w][(tb << 1) | sb] = true;
        }
    }
    std::size_t product = 1;
    std::vector<std::string> factors(q);
    for (std::uint32_t w = 0; w < q; ++w) {
        const auto& s = seen[w];
        bool n0 = s[0], qm = s[1], qp = s[2], n1 = s[3];
        std::string tok;
        if (n0 && n1 && !qm && !qp) {
            tok = "I";
            product *= 2;
        } else if (n0 && !n1 && !qm && !qp) {
            tok = "N0";
        } else if (n1 && !n0 && !qm && !qp) {
            tok = "N1";
        } else if (qp && !qm && !n0 && !n1) {
            tok = "Q+";
        } else if (qm && !qp && !n0 && !n1) {
            tok = "Q-";
        } else {
            return std::nullopt;  // mixed diagonal/off-diagonal: no product
        }
        factors[w] = tok + "_" + std::to_string(w);
    }
    if (t.entries.size() != product) return std::nullopt;
    std::string out = c0 == 1.0 ? "" : (c0 == -1.0 ? "-" : "");
    if (out.empty() && c0 != 1.0) return std::nullopt;
    if (q == 0) return out + "1";
    for (std::uint32_t w = q; w-- > 0;) {
        out += factors[w];
        if (w != 0) out += " ";
    }
    return out;
}

PauliOperator build_hamiltonian(const ConfigSpace& space,
                                const IntegralTable& spin,
                                EncodeStats* stats) {
    if (!spin.spin_basis || spin.convention != Convention::physicist)
        throw InputError(
            "build_hamiltonian needs a physicist-convention spin-orbital "
            "table");
    if (spin.n != space.n_spin_orbitals())
        throw InputError("integral table and configuration space disagree on "
                         "spin-orbital count");

    const std::size_t m = space.size();
    const std::uint32_t q = space.qubit_count();

    // gather nonzero one-body pairs once
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> ob;
    for (std::uint32_t p = 0; p < spin.n; ++p)
        for (std::uint32_t r = 0; r < spin.n; ++r)
            if (spin.one_body(p, r) != 0.0)
                ob.emplace_back(p, r, spin.one_body(p, r));

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<long>(m),
                                              static_cast<long>(m));
    for (std::size_t k = 0; k < m; ++k) {
        const FermionConfig f = space.config_at(k);
        for (const auto& [p, r, v] : ob) {
            auto e = apply_excitation(f, p, r);
            if (!e) continue;
            auto k2 = space.index_of(e->config);
            if (k2)
                A(static_cast<long>(*k2), static_cast<long>(k)) +=
                    v * e->sign;
        }
        for (const auto& tb : spin.two_body) {
            // a+_p a+_q a_r a_s = delta_qr a+_p a_s - (a+_p a_r)(a+_q a_s);
            // the product is evaluated on raw occupation vectors so matrix
            // elements on the admitted set stay exact even when the
            // intermediate leaves it
            if (tb.q == tb.r) {
                auto e = apply_excitation(f, tb.p, tb.s);
                if (e) {
                    auto k2 = space.index_of(e->config);
                    if (k2)
                        A(static_cast<long>(*k2), static_cast<long>(k)) +=
                            0.5 * tb.value * e->sign;
                }
            }
            auto e1 = apply_excitation(f, tb.q, tb.s);
            if (!e1) continue;
            auto e2 = apply_excitation(e1->config, tb.p, tb.r);
            if (!e2) continue;
            auto k2 = space.index_of(e2->config);
            if (k2)
                A(static_cast<long>(*k2), static_cast<long>(k)) -=
                    0.5 * tb.value * e1->sign * e2->sign;
        }
    }

    ExpansionAccumulator acc(q);
    std::size_t elements = 0;
    for (std::size_t k2 = 0; k2 < m; ++k2)
        for (std::size_t k = 0; k < m; ++k) {
            double v = A(static_cast<long>(k2), static_cast<long>(k));
            if (v == 0.0) continue;
            expand_element(acc, q, k2, k,
                           v * space.phase(k2) * space.phase(k));
            ++elements;
        }

    PauliOperator op = acc.harvest();
    if (spin.constant != 0.0)
        op.add_term(PauliString{0, 0, q}, spin.constant);

    double residue = op.max_imag();
    if (stats) {
        stats->nonzero_elements = elements;
        stats->raw_terms = elements << q;
        stats->max_imag_residue = residue;
    }
    if (residue > 1e-10)
        throw NumericError("imaginary residue " + std::to_string(residue) +
                           " in compiled operator; integral table is not "
                           "Hermitian");
    op.realify();
    op.prune();
    return op;
}

PauliOperator jw_encode(const IntegralTable& spin) {
    if (!spin.spin_basis || spin.convention != Convention::physicist)
        throw InputError(
            "jw_encode needs a physicist-convention spin-orbital table");
    const std::uint32_t n = spin.n;
    if (n > 64) throw InputError("full-register encoding limited to 64");

    // ladder operators as two-term (string, coeff) pairs:
    // a+_p = (X_p - iY_p)/2 * Z-parity string, a_p the conjugate
    struct Ladder {
        PauliString sx, sy;
        cplx cy;  // coefficient of the Y part; X part is always 1/2
    };
    std::vector<Ladder> create(n), destroy(n);
    for (std::uint32_t p = 0; p < n; ++p) {
        const std::uint64_t parity = (1ull << p) - 1;
        PauliString sx{1ull << p, parity, n};
        PauliString sy{1ull << p, parity | (1ull << p), n};
        create[p] = {sx, sy, cplx{0, -0.5}};
        destroy[p] = {sx, sy, cplx{0, 0.5}};
    }
    auto term = [](const Ladder& l, int pick) -> std::pair<PauliString, cplx> {
        return pick ? std::make_pair(l.sy, l.cy)
                    : std::make_pair(l.sx, cplx{0.5, 0});
    };

    PauliOperator op(n);
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t r = 0; r < n; ++r) {
            double v = spin.one_body(p, r);
            if (v == 0.0) continue;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    auto [s1, c1] = term(create[p], i);
                    auto [s2, c2] = term(destroy[r], j);
                    PauliProduct pr = pauli_mul(s1, s2);
                    op.add_term(pr.string, v * c1 * c2 * pr.phase);
                }
        }
    for (const auto& tb : spin.two_body) {
        for (int i = 0; i < 16; ++i) {
            auto [s1, c1] = term(create[tb.p], i & 1);
            auto [s2, c2] = term(create[tb.q], (i >> 1) & 1);
            auto [s3, c3] = term(destroy[tb.r], (i >> 2) & 1);
            auto [s4, c4] = term(destroy[tb.s], (i >> 3) & 1);
            PauliProduct p12 = pauli_mul(s1, s2);
            PauliProduct p34 = pauli_mul(s3, s4);
            PauliProduct pr = pauli_mul(p12.string, p34.string);
            op.add_term(pr.string, 0.5 * tb.value * c1 * c2 * c3 * c4 *
                                       p12.phase * p34.phase * pr.phase);
        }
    }
    if (spin.constant != 0.0)
        op.add_term(PauliString{0, 0, n}, spin.constant);

    if (op.max_imag() > 1e-10)
        throw NumericError("imaginary residue in full-register encoding");
    op.realify();
    op.prune();
    return op;
}

TermCountReport term_count_report(const IntegralTable& spatial,
                                  const SymmetryFilter& filter,
                                  double count_threshold) {
    IntegralTable spin = spatial.spin_basis
                             ? spatial
                             : to_spin_orbitals(spatial, filter.layout);
    if (spin.convention != Convention::physicist)
        throw InputError("spin-orbital input must be physicist convention");
    ConfigSpace space = ConfigSpace::enumerate(filter);

    TermCountReport rep;
    PauliOperator jw = jw_encode(spin);
    rep.full_register_qubits = spin.n;
    rep.full_register_terms = jw.count_above(count_threshold);
    PauliOperator sub = build_hamiltonian(space, spin);
    rep.subspace_qubits = space.qubit_count();
    rep.subspace_terms = sub.count_above(count_threshold);
    return rep;
}

}  // namespace qeec

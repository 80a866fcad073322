// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "qeec/errors.hpp"
#include "qeec/reference.hpp"

namespace qeec {

namespace {

const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// phase picked up by P|b>: Z on set bits, Y contributes +-i
cplx pauli_phase(const PauliString& s, std::uint64_t b) {
    const std::uint64_t y = s.x & s.z;
    int zpar = std::popcount(b & s.z & ~s.x);
    int e = (std::popcount(y & ~b) * 1 + std::popcount(y & b) * 3 +
             zpar * 2) &
            3;
    return kPhase[e];
}

void apply_1q(Eigen::VectorXcd& state, std::uint32_t q, cplx u00, cplx u01,
              cplx u10, cplx u11) {
    const std::uint64_t bit = 1ull << q;
    const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        cplx a = state[static_cast<long>(i)];
        cplx b = state[static_cast<long>(i | bit)];
        state[static_cast<long>(i)] = u00 * a + u01 * b;
        state[static_cast<long>(i | bit)] = u10 * a + u11 * b;
    }
}

void apply_cnot(Eigen::VectorXcd& state, std::uint32_t c, std::uint32_t t) {
    const std::uint64_t cb = 1ull << c, tb = 1ull << t;
    const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & cb) && !(i & tb))
            std::swap(state[static_cast<long>(i)],
                      state[static_cast<long>(i | tb)]);
}

void apply_1q_rho(Eigen::MatrixXcd& rho, std::uint32_t q, cplx u00, cplx u01,
                  cplx u10, cplx u11) {
    const std::uint64_t bit = 1ull << q;
    const long dim = static_cast<long>(rho.rows());
    for (long col = 0; col < dim; ++col) {  // rho -> U rho
        for (long i = 0; i < dim; ++i) {
            if (i & static_cast<long>(bit)) continue;
            cplx a = rho(i, col), b = rho(i | static_cast<long>(bit), col);
            rho(i, col) = u00 * a + u01 * b;
            rho(i | static_cast<long>(bit), col) = u10 * a + u11 * b;
        }
    }
    for (long row = 0; row < dim; ++row) {  // -> (U rho) U+
        for (long j = 0; j < dim; ++j) {
            if (j & static_cast<long>(bit)) continue;
            cplx a = rho(row, j), b = rho(row, j | static_cast<long>(bit));
            rho(row, j) = a * std::conj(u00) + b * std::conj(u01);
            rho(row, j | static_cast<long>(bit)) =
                a * std::conj(u10) + b * std::conj(u11);
        }
    }
}

void apply_cnot_rho(Eigen::MatrixXcd& rho, std::uint32_t c, std::uint32_t t) {
    const std::uint64_t cb = 1ull << c, tb = 1ull << t;
    const long dim = static_cast<long>(rho.rows());
    for (long col = 0; col < dim; ++col)
        for (long i = 0; i < dim; ++i)
            if ((i & static_cast<long>(cb)) && !(i & static_cast<long>(tb)))
                std::swap(rho(i, col), rho(i | static_cast<long>(tb), col));
    for (long row = 0; row < dim; ++row)
        for (long j = 0; j < dim; ++j)
            if ((j & static_cast<long>(cb)) && !(j & static_cast<long>(tb)))
                std::swap(rho(row, j), rho(row, j | static_cast<long>(tb)));
}

// expand `sub` over the positions set in `mask`
std::uint64_t scatter_bits(std::uint64_t sub, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
        std::uint64_t low = mask & (~mask + 1);
        if (sub & 1) out |= low;
        sub >>= 1;
        mask ^= low;
    }
    return out;
}

// rho -> (1-p) rho + p * (I/2^k on `mask` qubits) (x) Tr_mask(rho)
void depolarize(Eigen::MatrixXcd& rho, std::uint64_t mask, double p,
                std::uint32_t qubits) {
    if (p == 0.0) return;
    const std::uint32_t k = static_cast<std::uint32_t>(std::popcount(mask));
    const std::uint64_t rest =
        ((qubits == 64 ? ~0ull : (1ull << qubits) - 1)) & ~mask;
    const std::uint32_t nrest = qubits - k;
    const double inv = 1.0 / static_cast<double>(1ull << k);
    Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (std::uint64_t ir = 0; ir < (1ull << nrest); ++ir) {
        const std::uint64_t i0 = scatter_bits(ir, rest);
        for (std::uint64_t jr = 0; jr < (1ull << nrest); ++jr) {
            const std::uint64_t j0 = scatter_bits(jr, rest);
            cplx tr = 0;
            for (std::uint64_t s = 0; s < (1ull << k); ++s) {
                const std::uint64_t sb = scatter_bits(s, mask);
                tr += rho(static_cast<long>(i0 | sb),
                          static_cast<long>(j0 | sb));
            }
            tr *= inv;
            for (std::uint64_t s = 0; s < (1ull << k); ++s) {
                const std::uint64_t sb = scatter_bits(s, mask);
                mixed(static_cast<long>(i0 | sb), static_cast<long>(j0 | sb)) =
                    tr;
            }
        }
    }
    rho = (1.0 - p) * rho + p * mixed;
}

Eigen::VectorXd apply_readout(const Eigen::VectorXd& probs,
                              const NoiseModel& nm, std::uint32_t qubits,
                              bool invert) {
    Eigen::VectorXd p = probs;
    const std::uint64_t dim = static_cast<std::uint64_t>(p.size());
    for (std::uint32_t w = 0; w < qubits; ++w) {
        ReadoutPair r = nm.read(w);
        if (r.p1_given_0 == 0.0 && r.p0_given_1 == 0.0) continue;
        double m00 = 1.0 - r.p1_given_0, m01 = r.p0_given_1;
        double m10 = r.p1_given_0, m11 = 1.0 - r.p0_given_1;
        if (invert) {
            double det = m00 * m11 - m01 * m10;
            if (std::abs(det) < 1e-8)
                throw NumericError("readout confusion matrix is singular");
            double i00 = m11 / det, i01 = -m01 / det;
            double i10 = -m10 / det, i11 = m00 / det;
            m00 = i00, m01 = i01, m10 = i10, m11 = i11;
        }
        const std::uint64_t bit = 1ull << w;
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (i & bit) continue;
            double a = p[static_cast<long>(i)];
            double b = p[static_cast<long>(i | bit)];
            p[static_cast<long>(i)] = m00 * a + m01 * b;
            p[static_cast<long>(i | bit)] = m10 * a + m11 * b;
        }
    }
    return p;
}

const cplx kInvSqrt2{1.0 / std::numbers::sqrt2, 0.0};

template <typename StateLike, typename Apply1Q>
void rotate_basis(StateLike& state, const PauliString& basis, Apply1Q&& ap) {
    for (std::uint32_t w = 0; w < basis.n; ++w) {
        char l = basis.letter(w);
        if (l == 'X') {
            ap(state, w, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
        } else if (l == 'Y') {
            // S-dagger then Hadamard
            ap(state, w, cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, -1});
            ap(state, w, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
        }
    }
}

}  // namespace

void Circuit::ry(std::uint32_t q, double angle) {
    gates.push_back({GateKind::ry, q, 0, angle});
}

void Circuit::cnot(std::uint32_t control, std::uint32_t target) {
    gates.push_back({GateKind::cnot, control, target, 0.0});
}

std::size_t Circuit::cnot_count() const {
    std::size_t n = 0;
    for (const auto& g : gates)
        if (g.kind == GateKind::cnot) ++n;
    return n;
}

void Circuit::validate() const {
    for (const auto& g : gates) {
        if (g.a >= qubits || (g.kind == GateKind::cnot &&
                              (g.b >= qubits || g.a == g.b)))
            throw InputError("circuit gate index out of range");
    }
}

NoiseModel NoiseModel::ideal(std::uint32_t qubits) {
    NoiseModel nm;
    nm.single_qubit_error.assign(qubits, 0.0);
    nm.readout.assign(qubits, ReadoutPair{});
    return nm;
}

NoiseModel NoiseModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("noise JSON parse error: ") + e.what());
    }
    NoiseModel nm;
    std::uint32_t maxq = 0;
    for (const auto& q : j.at("qubits"))
        maxq = std::max(maxq, q.at("index").get<std::uint32_t>() + 1);
    nm.single_qubit_error.assign(maxq, 0.0);
    nm.readout.assign(maxq, ReadoutPair{});
    for (const auto& q : j.at("qubits")) {
        std::uint32_t i = q.at("index").get<std::uint32_t>();
        nm.single_qubit_error[i] = q.value("gate_error", 0.0);
        nm.readout[i] = {q.value("p1_given_0", 0.0),
                         q.value("p0_given_1", 0.0)};
    }
    for (const auto& c : j.value("couplings", nlohmann::json::array())) {
        auto pair = c.at("pair");
        nm.cnot_error[{pair[0].get<std::uint32_t>(),
                       pair[1].get<std::uint32_t>()}] =
            c.at("gate_error").get<double>();
    }
    for (double p : nm.single_qubit_error)
        if (p < 0.0 || p > 1.0) throw InputError("gate error outside [0,1]");
    for (const auto& r : nm.readout)
        if (r.p0_given_1 < 0 || r.p0_given_1 > 1 || r.p1_given_0 < 0 ||
            r.p1_given_0 > 1)
            throw InputError("readout error outside [0,1]");
    for (const auto& [k, p] : nm.cnot_error)
        if (p < 0.0 || p > 1.0) throw InputError("gate error outside [0,1]");
    return nm;
}

bool NoiseModel::is_ideal() const {
    for (double p : single_qubit_error)
        if (p != 0.0) return false;
    for (const auto& r : readout)
        if (r.p0_given_1 != 0.0 || r.p1_given_0 != 0.0) return false;
    for (const auto& [k, p] : cnot_error)
        if (p != 0.0) return false;
    return true;
}

double NoiseModel::single(std::uint32_t q) const {
    if (single_qubit_error.empty()) return 0.0;
    if (q >= single_qubit_error.size())
        throw InputError("noise model has no data for qubit " +
                         std::to_string(q));
    return single_qubit_error[q];
}

double NoiseModel::cnot(std::uint32_t c, std::uint32_t t) const {
    if (cnot_error.empty()) return 0.0;
    auto it = cnot_error.find({c, t});
    if (it == cnot_error.end()) it = cnot_error.find({t, c});
    if (it == cnot_error.end())
        throw InputError("noise model has no data for coupling " +
                         std::to_string(c) + "-" + std::to_string(t));
    return it->second;
}

ReadoutPair NoiseModel::read(std::uint32_t q) const {
    if (readout.empty()) return {};
    if (q >= readout.size())
        throw InputError("noise model has no readout data for qubit " +
                         std::to_string(q));
    return readout[q];
}

Eigen::VectorXcd run_statevector(const Circuit& c, std::uint32_t limit) {
    if (c.qubits > limit)
        throw InputError("statevector register exceeds dense limit");
    c.validate();
    Eigen::VectorXcd state =
        Eigen::VectorXcd::Zero(static_cast<long>(1ull << c.qubits));
    state[0] = 1.0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::ry) {
            double ch = std::cos(g.angle / 2), sh = std::sin(g.angle / 2);
            apply_1q(state, g.a, ch, -sh, sh, ch);
        } else {
            apply_cnot(state, g.a, g.b);
        }
    }
    return state;
}

Eigen::MatrixXcd run_noisy(const Circuit& c, const NoiseModel& nm,
                           std::uint32_t limit) {
    if (c.qubits > limit)
        throw InputError("density-matrix register exceeds dense limit");
    c.validate();
    const long dim = static_cast<long>(1ull << c.qubits);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    rho(0, 0) = 1.0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::ry) {
            double ch = std::cos(g.angle / 2), sh = std::sin(g.angle / 2);
            apply_1q_rho(rho, g.a, ch, -sh, sh, ch);
            depolarize(rho, 1ull << g.a, nm.single(g.a), c.qubits);
        } else {
            apply_cnot_rho(rho, g.a, g.b);
            depolarize(rho, (1ull << g.a) | (1ull << g.b), nm.cnot(g.a, g.b),
                       c.qubits);
        }
    }
    return rho;
}

double expectation(const Eigen::VectorXcd& state, const PauliOperator& op) {
    if ((1ull << op.qubit_count()) != static_cast<std::uint64_t>(state.size()))
        throw InputError("state and operator dimensions disagree");
    if (op.max_imag() > 1e-10)
        throw InputError("expectation needs a Hermitian operator");
    const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
    cplx acc = 0;
    for (const auto& [s, c] : op.terms()) {
        cplx val = 0;
        for (std::uint64_t b = 0; b < dim; ++b) {
            cplx amp = state[static_cast<long>(b)];
            if (amp == cplx{0, 0}) continue;
            val += std::conj(state[static_cast<long>(b ^ s.x)]) *
                   pauli_phase(s, b) * amp;
        }
        acc += c * val;
    }
    if (std::abs(acc.imag()) > 1e-9)
        throw NumericError("expectation has imaginary residue");
    return acc.real();
}

double expectation(const Eigen::MatrixXcd& rho, const PauliOperator& op) {
    if ((1ull << op.qubit_count()) != static_cast<std::uint64_t>(rho.rows()))
        throw InputError("state and operator dimensions disagree");
    if (op.max_imag() > 1e-10)
        throw InputError("expectation needs a Hermitian operator");
    const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
    cplx acc = 0;
    for (const auto& [s, c] : op.terms()) {
        cplx val = 0;
        for (std::uint64_t b = 0; b < dim; ++b)
            val += rho(static_cast<long>(b), static_cast<long>(b ^ s.x)) *
                   pauli_phase(s, b);
        acc += c * val;
    }
    if (std::abs(acc.imag()) > 1e-9)
        throw NumericError("expectation has imaginary residue");
    return acc.real();
}

Eigen::VectorXd measured_probabilities(const Eigen::VectorXcd& state,
                                       const PauliString& basis,
                                       const NoiseModel& nm) {
    Eigen::VectorXcd rotated = state;
    rotate_basis(rotated, basis,
                 [](Eigen::VectorXcd& s, std::uint32_t w, cplx a, cplx b,
                    cplx c, cplx d) { apply_1q(s, w, a, b, c, d); });
    Eigen::VectorXd probs = rotated.cwiseAbs2();
    return apply_readout(probs, nm, basis.n, false);
}

Eigen::VectorXd measured_probabilities(const Eigen::MatrixXcd& rho,
                                       const PauliString& basis,
                                       const NoiseModel& nm) {
    Eigen::MatrixXcd rotated = rho;
    rotate_basis(rotated, basis,
                 [](Eigen::MatrixXcd& s, std::uint32_t w, cplx a, cplx b,
                    cplx c, cplx d) { apply_1q_rho(s, w, a, b, c, d); });
    Eigen::VectorXd probs = rotated.diagonal().real();
    return apply_readout(probs, nm, basis.n, false);
}

ShotCounts sample_distribution(const Eigen::VectorXd& probs,
                               std::uint32_t qubits, std::uint64_t shots,
                               std::mt19937_64& rng) {
    if (shots == 0) throw InputError("sampling needs at least one shot");
    ShotCounts out;
    out.qubits = qubits;
    out.total = shots;
    std::uint64_t remaining = shots;
    double mass = probs.sum();
    const std::uint64_t dim = static_cast<std::uint64_t>(probs.size());
    for (std::uint64_t b = 0; b < dim && remaining > 0; ++b) {
        double p = probs[static_cast<long>(b)];
        if (p <= 0.0) {
            mass -= p;
            continue;
        }
        std::uint64_t draw;
        if (b + 1 == dim || mass <= p) {
            draw = remaining;
        } else {
            std::binomial_distribution<std::uint64_t> bin(
                remaining, std::clamp(p / mass, 0.0, 1.0));
            draw = bin(rng);
        }
        if (draw > 0) out.counts[b] = draw;
        remaining -= draw;
        mass -= p;
    }
    if (remaining > 0) out.counts[dim - 1] += remaining;
    return out;
}

double pauli_mean_from_probabilities(const Eigen::VectorXd& probs,
                                     std::uint64_t support) {
    double m = 0;
    const std::uint64_t dim = static_cast<std::uint64_t>(probs.size());
    for (std::uint64_t b = 0; b < dim; ++b)
        m += (std::popcount(b & support) & 1)
                 ? -probs[static_cast<long>(b)]
                 : probs[static_cast<long>(b)];
    return m;
}

std::vector<MeasurementGroup> group_commuting(const PauliOperator& op) {
    std::vector<MeasurementGroup> groups;
    for (const auto& [s, c] : op.sorted_terms()) {
        if (s.is_identity()) continue;
        bool placed = false;
        for (auto& g : groups) {
            std::uint64_t both = (s.x | s.z) & (g.basis.x | g.basis.z);
            std::uint64_t differ = (s.x ^ g.basis.x) | (s.z ^ g.basis.z);
            if ((both & differ) == 0) {
                g.basis.x |= s.x;
                g.basis.z |= s.z;
                g.terms.emplace_back(s, c.real());
                placed = true;
                break;
            }
        }
        if (!placed) {
            MeasurementGroup g;
            g.basis = s;
            g.terms.emplace_back(s, c.real());
            groups.push_back(std::move(g));
        }
    }
    return groups;
}

Backend Backend::exact() { return Backend{}; }

Backend Backend::sampled(std::uint64_t shots) {
    Backend b;
    b.kind = Kind::shots;
    b.shots = shots;
    return b;
}

Backend Backend::noisy_backend(const NoiseModel& nm, std::uint64_t shots,
                               bool mitigate) {
    Backend b;
    b.kind = Kind::noisy;
    b.shots = shots;
    b.noise = nm;
    b.mitigate_readout = mitigate;
    return b;
}

EnergyEstimate estimate_energy(const Circuit& c, const PauliOperator& op,
                               const Backend& backend, std::uint64_t seed) {
    if (op.max_imag() > 1e-10)
        throw InputError("energy estimation needs a Hermitian operator");
    EnergyEstimate out;
    if (backend.kind == Backend::Kind::exact) {
        out.energy = expectation(run_statevector(c), op);
        return out;
    }
    if (backend.shots == 0) throw InputError("shot backend needs shots > 0");

    const bool noisy = backend.kind == Backend::Kind::noisy;
    Eigen::VectorXcd state;
    Eigen::MatrixXcd rho;
    if (noisy)
        rho = run_noisy(c, backend.noise);
    else
        state = run_statevector(c);

    const NoiseModel ideal = NoiseModel::ideal(c.qubits);
    const NoiseModel& nm = noisy ? backend.noise : ideal;
    auto groups = group_commuting(op);
    out.groups = groups.size();
    out.energy = op.coeff(PauliString{0, 0, op.qubit_count()}).real();

    std::mt19937_64 rng(seed);
    const double dim = static_cast<double>(1ull << c.qubits);
    double var = 0.0;
    for (const auto& g : groups) {
        Eigen::VectorXd probs =
            noisy ? measured_probabilities(rho, g.basis, nm)
                  : measured_probabilities(state, g.basis, nm);
        ShotCounts counts =
            sample_distribution(probs, c.qubits, backend.shots, rng);
        Eigen::VectorXd freq = Eigen::VectorXd::Zero(static_cast<long>(dim));
        for (const auto& [b, n] : counts.counts)
            freq[static_cast<long>(b)] =
                static_cast<double>(n) / static_cast<double>(counts.total);
        if (backend.mitigate_readout)
            freq = apply_readout(freq, nm, c.qubits, true);
        for (const auto& [s, h] : g.terms) {
            double mean = pauli_mean_from_probabilities(freq, s.x | s.z);
            out.energy += h * mean;
            var += h * h *
                   std::max(0.0, 1.0 - mean * mean) /
                   static_cast<double>(backend.shots);
        }
    }
    out.sigma = std::sqrt(var);
    return out;
}

std::vector<double> diagonalize(const PauliOperator& op, std::uint32_t limit) {
    if (op.qubit_count() > limit)
        throw InputError("operator exceeds dense diagonalization limit");
    if (op.max_imag() > 1e-9)
        throw InputError("diagonalization needs a Hermitian operator");
    return eigenvalues_ascending(op.to_matrix(limit));
}

}  // namespace qeec

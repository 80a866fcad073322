// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "qeec/errors.hpp"
#include "qeec/simulator.hpp"

using namespace qeec;
using namespace std::complex_literals;
using std::numbers::pi;
using testutil::slurp;

namespace {

PauliOperator h2_operator() {
    PauliOperator op(2);
    op.add_term(PauliString::parse("II"), -1.052373);
    op.add_term(PauliString::parse("IZ"), -0.397937);
    op.add_term(PauliString::parse("ZI"), -0.397937);
    op.add_term(PauliString::parse("ZZ"), 0.011280);
    op.add_term(PauliString::parse("XX"), 0.180931);
    return op;
}

}  // namespace

TEST_CASE("statevector basics") {
    Circuit c;
    c.qubits = 2;
    auto zero = run_statevector(c);
    CHECK(zero(0) == 1.0);

    c.ry(0, pi);
    auto flipped = run_statevector(c);
    CHECK(std::abs(flipped(1) - 1.0) < 1e-12);

    c.cnot(0, 1);
    auto both = run_statevector(c);
    CHECK(std::abs(both(3) - 1.0) < 1e-12);

    Circuit bell;
    bell.qubits = 2;
    bell.ry(0, pi / 2);
    bell.cnot(0, 1);
    auto state = run_statevector(bell);
    CHECK(std::abs(state(0) - 1 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(state(3) - 1 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(state(1)) < 1e-12);
}

TEST_CASE("circuit validation") {
    Circuit c;
    c.qubits = 2;
    c.ry(5, 0.1);
    CHECK_THROWS_AS(c.validate(), InputError);
    Circuit d;
    d.qubits = 2;
    d.cnot(1, 1);
    CHECK_THROWS_AS(d.validate(), InputError);
}

TEST_CASE("expectation values against explicit matrices") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 10; ++trial) {
        Circuit c;
        c.qubits = 2;
        c.ry(0, angle(rng));
        c.ry(1, angle(rng));
        c.cnot(0, 1);
        c.ry(0, angle(rng));
        auto state = run_statevector(c);
        auto op = h2_operator();
        auto dense = op.to_matrix();
        double direct = (state.adjoint() * dense * state)(0).real();
        CHECK(expectation(state, op) == doctest::Approx(direct).epsilon(1e-12));

        // pure-state density matrix agrees
        Eigen::MatrixXcd rho = state * state.adjoint();
        CHECK(expectation(rho, op) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("noiseless density evolution matches the statevector") {
    Circuit c;
    c.qubits = 2;
    c.ry(0, 0.7);
    c.cnot(0, 1);
    c.ry(1, -0.3);
    auto state = run_statevector(c);
    auto rho = run_noisy(c, NoiseModel::ideal(2));
    Eigen::MatrixXcd pure = state * state.adjoint();
    CHECK((rho - pure).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("depolarizing channel shrinks coherences analytically") {
    // single qubit: <Z> after RY(theta) with replacement probability p
    double theta = 0.9, p = 0.03;
    NoiseModel nm = NoiseModel::ideal(1);
    nm.single_qubit_error = {p};
    Circuit c;
    c.qubits = 1;
    c.ry(0, theta);
    auto rho = run_noisy(c, nm);
    PauliOperator z(1);
    z.add_term(PauliString::parse("Z"), 1.0);
    CHECK(expectation(rho, z) ==
          doctest::Approx((1 - p) * std::cos(theta)).epsilon(1e-12));

    // two-qubit CNOT error acts on both qubits of the pair
    double pc = 0.05;
    NoiseModel nm2 = NoiseModel::ideal(2);
    nm2.cnot_error[{0, 1}] = pc;
    Circuit c2;
    c2.qubits = 2;
    c2.ry(0, pi / 2);
    c2.cnot(0, 1);
    auto rho2 = run_noisy(c2, nm2);
    PauliOperator zz(2);
    zz.add_term(PauliString::parse("ZZ"), 1.0);
    CHECK(expectation(rho2, zz) == doctest::Approx(1 - pc).epsilon(1e-12));
}

TEST_CASE("measurement bases rotate correctly") {
    NoiseModel ideal = NoiseModel::ideal(1);

    // +1 eigenstate of X measured in the X basis is deterministic
    Eigen::VectorXcd plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    auto px = measured_probabilities(plus, PauliString::parse("X"), ideal);
    CHECK(px(0) == doctest::Approx(1.0).epsilon(1e-12));

    // +1 eigenstate of Y measured in the Y basis is deterministic
    Eigen::VectorXcd yplus(2);
    yplus << 1 / std::sqrt(2.0), 1.0i / std::sqrt(2.0);
    auto py = measured_probabilities(yplus, PauliString::parse("Y"), ideal);
    CHECK(py(0) == doctest::Approx(1.0).epsilon(1e-12));
    auto pz = measured_probabilities(yplus, PauliString::parse("Z"), ideal);
    CHECK(pz(0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("readout confusion folds into the probabilities") {
    NoiseModel nm = NoiseModel::ideal(1);
    nm.readout = {{0.1, 0.2}};
    Eigen::VectorXcd zero(2);
    zero << 1.0, 0.0;
    auto probs = measured_probabilities(zero, PauliString::parse("Z"), nm);
    CHECK(probs(0) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(probs(1) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("shot sampling is seeded and consistent") {
    Eigen::VectorXd probs(4);
    probs << 0.5, 0.0, 0.0, 0.5;
    std::mt19937_64 rng(99);
    auto counts = sample_distribution(probs, 2, 100000, rng);
    CHECK(counts.total == 100000);
    std::uint64_t sum = 0;
    for (const auto& [k, v] : counts.counts) sum += v;
    CHECK(sum == 100000);
    CHECK(counts.counts.count(1) == 0);
    CHECK(double(counts.counts.at(0)) / 100000 ==
          doctest::Approx(0.5).epsilon(0.02));

    std::mt19937_64 rng2(99);
    auto again = sample_distribution(probs, 2, 100000, rng2);
    CHECK(again.counts == counts.counts);
}

TEST_CASE("pauli means from probability vectors") {
    Eigen::VectorXd probs(4);
    probs << 0.5, 0.0, 0.0, 0.5;
    CHECK(pauli_mean_from_probabilities(probs, 0b11) == 1.0);
    CHECK(pauli_mean_from_probabilities(probs, 0b01) == 0.0);
    Eigen::VectorXd tilted(2);
    tilted << 0.8, 0.2;
    CHECK(pauli_mean_from_probabilities(tilted, 0b1) ==
          doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("qubit-wise commuting groups cover the operator once") {
    auto op = h2_operator();
    auto groups = group_commuting(op);
    REQUIRE(groups.size() == 2);
    std::size_t measured = 0;
    for (const auto& g : groups) measured += g.terms.size();
    CHECK(measured == 4);  // identity handled exactly, not measured
    for (const auto& g : groups)
        for (const auto& [s, c] : g.terms)
            for (std::uint32_t w = 0; w < 2; ++w)
                if (s.letter(w) != 'I') CHECK(s.letter(w) == g.basis.letter(w));
}

TEST_CASE("device noise model loads from the calibration fixture") {
    auto nm = NoiseModel::from_json(slurp("noise/santiago.json"));
    CHECK(nm.qubit_count() == 5);
    CHECK(nm.single(0) > 0.0);
    CHECK(nm.read(0).p1_given_0 > 0.0);
    CHECK(nm.cnot(0, 1) == nm.cnot(1, 0));
    CHECK(!nm.is_ideal());
    CHECK_THROWS_AS(nm.cnot(0, 4), InputError);  // no such coupling
}

TEST_CASE("energy estimation across backends") {
    auto op = h2_operator();
    Circuit c;
    c.qubits = 2;
    c.ry(0, 0.4);
    c.ry(1, -0.2);
    c.cnot(0, 1);
    auto state = run_statevector(c);
    double truth = expectation(state, op);

    auto exact = estimate_energy(c, op, Backend::exact(), 1);
    CHECK(exact.energy == doctest::Approx(truth).epsilon(1e-12));
    CHECK(exact.sigma == 0.0);

    auto sampled = estimate_energy(c, op, Backend::sampled(200000), 7);
    CHECK(sampled.sigma > 0.0);
    CHECK(std::abs(sampled.energy - truth) < 5 * sampled.sigma);
    auto repeat = estimate_energy(c, op, Backend::sampled(200000), 7);
    CHECK(repeat.energy == sampled.energy);  // same seed, same draw

    // readout-only noise is undone by mitigation up to shot noise
    NoiseModel nm = NoiseModel::ideal(2);
    nm.readout = {{0.02, 0.04}, {0.03, 0.01}};
    auto mitigated =
        estimate_energy(c, op, Backend::noisy_backend(nm, 400000, true), 11);
    CHECK(std::abs(mitigated.energy - truth) < 6 * mitigated.sigma);
    auto biased =
        estimate_energy(c, op, Backend::noisy_backend(nm, 400000, false), 11);
    CHECK(std::abs(biased.energy - truth) >
          std::abs(mitigated.energy - truth));
}

TEST_CASE("diagonalization returns the ascending spectrum") {
    auto op = h2_operator();
    auto evals = diagonalize(op);
    REQUIRE(evals.size() == 4);
    CHECK(evals.front() == doctest::Approx(-1.85727).epsilon(1e-4));
    for (std::size_t i = 1; i < evals.size(); ++i)
        CHECK(evals[i] >= evals[i - 1]);

    PauliOperator wide(20);
    wide.add_term(PauliString{0, 1, 20}, 1.0);
    CHECK_THROWS_AS(diagonalize(wide), InputError);
}

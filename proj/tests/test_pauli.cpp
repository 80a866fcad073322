// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <complex>
#include <random>

#include "qeec/errors.hpp"
#include "qeec/pauli.hpp"

using namespace qeec;
using namespace std::complex_literals;

namespace {

PauliOperator random_op(std::mt19937_64& rng, std::uint32_t qubits,
                        int terms) {
    std::uniform_int_distribution<std::uint64_t> bits(
        0, (std::uint64_t{1} << qubits) - 1);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    PauliOperator op(qubits);
    for (int t = 0; t < terms; ++t)
        op.add_term({bits(rng), bits(rng), qubits},
                    {coeff(rng), coeff(rng)});
    return op;
}

}  // namespace

TEST_CASE("string parse and print round-trip") {
    for (const char* label : {"I", "X", "Y", "Z", "IXYZ", "ZZZZ", "XIIX"}) {
        auto p = PauliString::parse(label);
        CHECK(p.str() == label);
    }
    auto p = PauliString::parse("XY");
    CHECK(p.n == 2);
    CHECK(p.letter(0) == 'Y');
    CHECK(p.letter(1) == 'X');
    CHECK(!p.is_identity());
    CHECK(PauliString::parse("II").is_identity());
    CHECK_THROWS_AS(PauliString::parse("XQ"), InputError);
}

TEST_CASE("single products carry the right phases") {
    auto X = PauliString::parse("X");
    auto Y = PauliString::parse("Y");
    auto Z = PauliString::parse("Z");

    auto xy = pauli_mul(X, Y);
    CHECK(xy.string == Z);
    CHECK(xy.phase == 1.0i);
    auto yx = pauli_mul(Y, X);
    CHECK(yx.phase == -1.0i);
    CHECK(pauli_mul(Y, Z).phase == 1.0i);
    CHECK(pauli_mul(Z, X).phase == 1.0i);
    CHECK(pauli_mul(X, Z).phase == -1.0i);
    for (auto p : {X, Y, Z}) {
        auto sq = pauli_mul(p, p);
        CHECK(sq.string.is_identity());
        CHECK(sq.phase == 1.0);
    }
}

TEST_CASE("products agree with dense matrix algebra") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> bits(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        PauliString a{bits(rng), bits(rng), 2};
        PauliString b{bits(rng), bits(rng), 2};
        auto ab = pauli_mul(a, b);
        PauliOperator oa(2), ob(2), oc(2);
        oa.add_term(a, 1.0);
        ob.add_term(b, 1.0);
        oc.add_term(ab.string, ab.phase);
        CHECK((oa.to_matrix() * ob.to_matrix() - oc.to_matrix()).norm() ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("known matrices") {
    PauliOperator z(1);
    z.add_term(PauliString::parse("Z"), 1.0);
    auto mz = z.to_matrix();
    CHECK(mz(0, 0) == 1.0);
    CHECK(mz(1, 1) == -1.0);

    PauliOperator y(1);
    y.add_term(PauliString::parse("Y"), 1.0);
    auto my = y.to_matrix();
    CHECK(my(1, 0) == 1.0i);
    CHECK(my(0, 1) == -1.0i);

    PauliOperator zz(2);
    zz.add_term(PauliString::parse("ZZ"), 1.0);
    auto mzz = zz.to_matrix();
    CHECK(mzz(0, 0) == 1.0);
    CHECK(mzz(1, 1) == -1.0);
    CHECK(mzz(2, 2) == -1.0);
    CHECK(mzz(3, 3) == 1.0);
}

TEST_CASE("term accumulation merges and prunes") {
    PauliOperator op(2);
    auto xx = PauliString::parse("XX");
    op.add_term(xx, 0.25);
    op.add_term(xx, 0.25);
    CHECK(op.size() == 1);
    CHECK(op.coeff(xx) == 0.5);
    op.add_term(xx, -0.5);
    CHECK(op.empty());  // merge cancellation drops the entry

    // a fresh explicit insert is kept however small; prune() removes it
    op.add_term(xx, 1e-15);
    CHECK(op.size() == 1);
    op.prune();
    CHECK(op.empty());
}

TEST_CASE("operator algebra matches dense matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_op(rng, 2, 4);
        auto b = random_op(rng, 2, 4);
        auto sum = a + b;
        CHECK((sum.to_matrix() - (a.to_matrix() + b.to_matrix())).norm() <
              1e-12);
        auto prod = a.multiply(b);
        CHECK((prod.to_matrix() - a.to_matrix() * b.to_matrix()).norm() <
              1e-11);
        auto scaled = a;
        scaled *= 2.0 - 1.0i;
        CHECK((scaled.to_matrix() - (2.0 - 1.0i) * a.to_matrix()).norm() <
              1e-12);
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937_64 rng(37);
    auto a = random_op(rng, 3, 3);
    auto b = random_op(rng, 3, 3);
    auto c = random_op(rng, 3, 3);
    auto left = a.multiply(b).multiply(c);
    auto right = a.multiply(b.multiply(c));
    CHECK((left.to_matrix() - right.to_matrix()).norm() < 1e-10);
}

TEST_CASE("imaginary bookkeeping") {
    PauliOperator op(1);
    op.add_term(PauliString::parse("X"), {0.5, 1e-11});
    CHECK(op.max_imag() == doctest::Approx(1e-11));
    op.realify();
    CHECK(op.max_imag() == 0.0);
    CHECK(op.coeff(PauliString::parse("X")) == 0.5);
}

TEST_CASE("sorted terms are deterministic, identity first") {
    PauliOperator op(2);
    op.add_term(PauliString::parse("ZZ"), 1.0);
    op.add_term(PauliString::parse("II"), 2.0);
    op.add_term(PauliString::parse("IX"), 3.0);
    op.add_term(PauliString::parse("XI"), 4.0);
    auto sorted = op.sorted_terms();
    REQUIRE(sorted.size() == 4);
    CHECK(sorted[0].first.is_identity());
    CHECK(sorted[1].first.str() == "IX");
    CHECK(sorted[2].first.str() == "XI");
    CHECK(sorted[3].first.str() == "ZZ");
}

TEST_CASE("pretty prints signed fixed-point lines") {
    PauliOperator op(2);
    op.add_term(PauliString::parse("II"), -1.052373);
    op.add_term(PauliString::parse("XX"), 0.180931);
    op.add_term(PauliString::parse("IZ"), 1e-9);  // below display threshold
    auto text = op.pretty(6, 1e-8);
    CHECK(text == "-1.052373 II\n+0.180931 XX\n");
}

TEST_CASE("json round-trip preserves every coefficient") {
    std::mt19937_64 rng(41);
    auto op = random_op(rng, 3, 8);
    auto back = PauliOperator::from_json(op.to_json());
    CHECK(back.qubit_count() == op.qubit_count());
    CHECK(back.size() == op.size());
    for (const auto& [s, c] : op.terms()) CHECK(back.coeff(s) == c);
    // serialization is canonical: a second trip is byte-identical
    CHECK(back.to_json() == op.to_json());
}

TEST_CASE("count above threshold") {
    PauliOperator op(1);
    op.add_term(PauliString::parse("X"), 0.5);
    op.add_term(PauliString::parse("Z"), 1e-9);
    CHECK(op.count_above(1e-8) == 1);
    CHECK(op.count_above(1e-10) == 2);
    op.prune(1e-8);
    CHECK(op.size() == 1);
}

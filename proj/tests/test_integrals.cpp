// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "qeec/errors.hpp"
#include "qeec/integrals.hpp"

using namespace qeec;
using testutil::slurp;

TEST_CASE("orbital layouts") {
    auto blocked = OrbitalLayout::blocked(2);
    CHECK(blocked.bit_of(0, 0) == 0);
    CHECK(blocked.bit_of(1, 0) == 1);
    CHECK(blocked.bit_of(0, 1) == 2);
    CHECK(blocked.bit_of(1, 1) == 3);
    CHECK(blocked.alpha_mask() == 0b0011);

    auto inter = OrbitalLayout::interleaved(2);
    CHECK(inter.bit_of(0, 0) == 0);
    CHECK(inter.bit_of(0, 1) == 1);
    CHECK(inter.bit_of(1, 0) == 2);
    CHECK(inter.alpha_mask() == 0b0101);

    CHECK(OrbitalLayout::named("blocked", 3).alpha_mask() == 0b000111);
    CHECK_THROWS_AS(OrbitalLayout::named("diagonal", 2), InputError);

    OrbitalLayout bad;
    bad.n_spatial = 1;
    bad.spin_order = {0, 0};
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("fcidump fixture parses to the documented header and entries") {
    auto [table, meta] =
        parse_fcidump(slurp("integrals/h2_sto3g_0.7414.fcidump"));
    CHECK(meta.norb == 2);
    CHECK(meta.nelec == 2);
    CHECK(meta.ms2 == 0);
    CHECK(table.n == 2);
    CHECK(!table.spin_basis);
    CHECK(table.convention == Convention::chemist);
    CHECK(table.constant == doctest::Approx(0.7137540450).epsilon(1e-9));
    CHECK(table.one(0, 0) ==
          doctest::Approx(-1.2524636057911356).epsilon(1e-12));
    CHECK(table.one(0, 1) == table.one(1, 0));
}

TEST_CASE("fcidump accepts fortran exponents and slash terminators") {
    std::string text =
        "&FCIDUMP NORB=1,NELEC=2,MS2=0,\n"
        " ORBSYM=1,\n"
        " ISYM=1,\n"
        "/\n"
        " 1.0D-01 1 1 1 1\n"
        " -2.5d0 1 1 0 0\n"
        " 3.0 0 0 0 0\n";
    auto [table, meta] = parse_fcidump(text);
    CHECK(meta.norb == 1);
    CHECK(table.one(0, 0) == -2.5);
    CHECK(table.constant == 3.0);
    REQUIRE(table.two_body.size() == 1);
    CHECK(table.two_body[0].value == 0.1);
}

TEST_CASE("fcidump rejects out-of-range indices with a line number") {
    std::string text =
        "&FCIDUMP NORB=1,NELEC=2,MS2=0,\n"
        "&END\n"
        " 1.0 2 1 1 1\n";
    try {
        parse_fcidump(text);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_fcidump("no header here"), InputError);
}

TEST_CASE("json integral round-trip is byte-identical") {
    auto text = slurp("integrals/h2_sto3g_0.735.json");
    auto table = load_json_integrals(text);
    CHECK(table.n == 2);
    CHECK(!table.spin_basis);
    CHECK(table.constant == 0.0);
    CHECK(emit_json_integrals(table) == text);
}

TEST_CASE("json loader validates structure") {
    CHECK_THROWS_AS(load_json_integrals("{}"), InputError);
    CHECK_THROWS_AS(
        load_json_integrals(R"({"schema": "qeec-integrals-v1",
          "n_spatial": 1, "convention": "royal", "constant": 0,
          "one_body": [], "two_body": []})"),
        InputError);
}

TEST_CASE("spin-orbital expansion, blocked layout") {
    auto spatial = load_json_integrals(slurp("integrals/h2_sto3g_0.735.json"));
    auto spin = to_spin_orbitals(spatial, OrbitalLayout::blocked(2));
    CHECK(spin.spin_basis);
    CHECK(spin.convention == Convention::physicist);
    CHECK(spin.n == 4);

    // one-body blocks are spin-diagonal copies of the spatial matrix
    CHECK(spin.one(0, 0) == spatial.one(0, 0));
    CHECK(spin.one(2, 2) == spatial.one(0, 0));
    CHECK(spin.one(1, 3) == 0.0);
    CHECK(spin.one(0, 2) == 0.0);

    // hermiticity of the physicist table: every (p,q,r,s) has an (s,r,q,p)
    // partner with the same value
    for (const auto& e : spin.two_body) {
        bool found = false;
        for (const auto& f : spin.two_body)
            if (f.p == e.s && f.q == e.r && f.r == e.q && f.s == e.p &&
                f.value == e.value)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("fcidump and json fixtures expand to the same entry pattern") {
    // same molecule and basis at slightly different geometry: the surviving
    // spin-orbital index tuples must coincide even though values differ
    auto a = to_spin_orbitals(
        parse_fcidump(slurp("integrals/h2_sto3g_0.7414.fcidump")).first,
        OrbitalLayout::blocked(2));
    auto b = to_spin_orbitals(load_json_integrals(
                                  slurp("integrals/h2_sto3g_0.735.json")),
                              OrbitalLayout::blocked(2));
    CHECK(a.n == b.n);
    REQUIRE(a.two_body.size() == b.two_body.size());
    for (std::size_t i = 0; i < a.two_body.size(); ++i) {
        CHECK(a.two_body[i].p == b.two_body[i].p);
        CHECK(a.two_body[i].q == b.two_body[i].q);
        CHECK(a.two_body[i].r == b.two_body[i].r);
        CHECK(a.two_body[i].s == b.two_body[i].s);
    }
}

TEST_CASE("spin table refuses a second expansion") {
    auto spatial = load_json_integrals(slurp("integrals/h2_sto3g_0.735.json"));
    auto spin = to_spin_orbitals(spatial, OrbitalLayout::blocked(2));
    CHECK_THROWS_AS(to_spin_orbitals(spin, OrbitalLayout::blocked(4)),
                    InputError);
}

TEST_CASE("table validation catches broken hermiticity") {
    IntegralTable t;
    t.n = 2;
    t.spin_basis = true;
    t.convention = Convention::physicist;
    t.one_body = Eigen::MatrixXd::Zero(2, 2);
    t.one_body(0, 1) = 0.5;  // no (1,0) partner
    CHECK_THROWS_AS(t.validate(), InputError);
}

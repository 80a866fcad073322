// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library boundary: every call goes through the C
// interface exactly as an external client would.

#include <doctest.h>

#include <cstring>
#include <json.hpp>
#include <string>

#include "helpers.hpp"
#include "qeec.h"

using nlohmann::json;
using testutil::slurp;

namespace {

struct String {
    char* ptr = nullptr;
    ~String() { qeec_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? "" : ptr; }
};

struct Op {
    qeec_op* ptr = nullptr;
    ~Op() { qeec_op_free(ptr); }
};

}  // namespace

TEST_CASE("version and error state") {
    CHECK(std::strlen(qeec_version()) > 0);
    unsigned q = 0;
    CHECK(qeec_qubit_count_for(4, 2, &q) == QEEC_OK);
    CHECK(std::string(qeec_last_error()).empty());
    CHECK(q == 3);
    CHECK(qeec_qubit_count_for(402, 10, &q) == QEEC_OK);
    CHECK(q == 65);
}

TEST_CASE("null arguments are input errors, not crashes") {
    CHECK(qeec_qubit_count_for(4, 2, nullptr) == QEEC_ERR_INPUT);
    CHECK(!std::string(qeec_last_error()).empty());
    qeec_op* op = nullptr;
    CHECK(qeec_encode(nullptr, "auto", "{}", "qee", &op) == QEEC_ERR_INPUT);
    char* out = nullptr;
    CHECK(qeec_enumerate_configs("not json", &out) == QEEC_ERR_INPUT);
}

TEST_CASE("configuration enumeration over the boundary") {
    auto filter = slurp("filters/h2_sto3g_restricted.json");
    String doc;
    REQUIRE(qeec_enumerate_configs(filter.c_str(), &doc.ptr) == QEEC_OK);
    auto parsed = json::parse(doc.str());
    CHECK(parsed.at("size") == 4);
    CHECK(parsed.at("qubits") == 2);
    CHECK(parsed.at("configs").at(0).at("f") == "0101");
    CHECK(parsed.at("configs").at(0).at("q") == "00");
    CHECK(parsed.at("configs").at(3).at("f") == "1010");
}

TEST_CASE("encode, inspect and re-load an operator") {
    auto integrals = slurp("integrals/h2_sto3g_0.735.json");
    auto filter = slurp("filters/h2_sto3g_restricted.json");

    Op op;
    REQUIRE(qeec_encode(integrals.c_str(), "auto", filter.c_str(), "qee",
                        &op.ptr) == QEEC_OK);
    unsigned qubits = 0;
    CHECK(qeec_op_qubits(op.ptr, &qubits) == QEEC_OK);
    CHECK(qubits == 2);
    unsigned long long terms = 0;
    CHECK(qeec_op_term_count(op.ptr, 1e-8, &terms) == QEEC_OK);
    CHECK(terms == 5);

    String pretty;
    CHECK(qeec_op_pretty(op.ptr, 6, 1e-8, &pretty.ptr) == QEEC_OK);
    CHECK(pretty.str().find("-1.052373 II") != std::string::npos);
    CHECK(pretty.str().find("+0.180931 XX") != std::string::npos);

    String serialized;
    REQUIRE(qeec_op_to_json(op.ptr, &serialized.ptr) == QEEC_OK);
    Op reloaded;
    REQUIRE(qeec_op_from_json(serialized.str().c_str(), &reloaded.ptr) ==
            QEEC_OK);
    String again;
    REQUIRE(qeec_op_to_json(reloaded.ptr, &again.ptr) == QEEC_OK);
    CHECK(again.str() == serialized.str());

    String evals;
    REQUIRE(qeec_op_eigenvalues(op.ptr, &evals.ptr) == QEEC_OK);
    auto spectrum = json::parse(evals.str());
    CHECK(spectrum.at(0).get<double>() ==
          doctest::Approx(-1.8572750).epsilon(1e-6));

    String meta;
    REQUIRE(qeec_op_metadata(op.ptr, &meta.ptr) == QEEC_OK);
    auto metadata = json::parse(meta.str());
    CHECK(metadata.at("nuclear_repulsion").get<double>() ==
          doctest::Approx(0.7199690).epsilon(1e-6));
}

TEST_CASE("fcidump input picks the right parser automatically") {
    auto integrals = slurp("integrals/h2_sto3g_0.7414.fcidump");
    auto filter = slurp("filters/h2_sto3g_restricted.json");
    Op op;
    REQUIRE(qeec_encode(integrals.c_str(), "auto", filter.c_str(), "qee",
                        &op.ptr) == QEEC_OK);
    unsigned qubits = 0;
    CHECK(qeec_op_qubits(op.ptr, &qubits) == QEEC_OK);
    CHECK(qubits == 2);
    // the FCIDUMP constant (nuclear repulsion) shifts the whole spectrum
    String evals;
    REQUIRE(qeec_op_eigenvalues(op.ptr, &evals.ptr) == QEEC_OK);
    CHECK(json::parse(evals.str()).at(0).get<double>() ==
          doctest::Approx(-1.137270175284539).epsilon(1e-9));
}

TEST_CASE("full-register encoding over the boundary") {
    auto integrals = slurp("integrals/h2_sto3g_0.735.json");
    auto filter = slurp("filters/h2_sto3g_restricted.json");
    Op op;
    REQUIRE(qeec_encode(integrals.c_str(), "json", filter.c_str(), "jw",
                        &op.ptr) == QEEC_OK);
    unsigned qubits = 0;
    CHECK(qeec_op_qubits(op.ptr, &qubits) == QEEC_OK);
    CHECK(qubits == 4);
}

TEST_CASE("bad inputs map to the input error code") {
    qeec_op* op = nullptr;
    CHECK(qeec_encode("{}", "json", "{}", "qee", &op) == QEEC_ERR_INPUT);
    CHECK(qeec_encode("{}", "parquet", "{}", "qee", &op) == QEEC_ERR_INPUT);
    auto integrals = slurp("integrals/h2_sto3g_0.735.json");
    auto filter = slurp("filters/h2_sto3g_restricted.json");
    CHECK(qeec_encode(integrals.c_str(), "json", filter.c_str(), "parity",
                      &op) == QEEC_ERR_INPUT);
}

TEST_CASE("variational search through the C interface") {
    auto integrals = slurp("integrals/h2_sto3g_0.735.json");
    auto filter = slurp("filters/h2_sto3g_restricted.json");
    Op op;
    REQUIRE(qeec_encode(integrals.c_str(), "json", filter.c_str(), "qee",
                        &op.ptr) == QEEC_OK);
    json options = {{"reps", 2},
                    {"seed", 4},
                    {"max_iterations", 300},
                    {"target", -1.8557}};
    String result;
    REQUIRE(qeec_vqe(op.ptr, options.dump().c_str(), &result.ptr) == QEEC_OK);
    auto doc = json::parse(result.str());
    CHECK(doc.at("energy").get<double>() < -1.8557);
    CHECK(doc.at("cnots") == 2);
    CHECK(doc.at("parameters").size() == 6);
}

TEST_CASE("bench grid validates its own counting") {
    json grid = {{"points", json::array({{{"n", 4}, {"m", 2}},
                                         {{"n", 4}, {"m", 4}},
                                         {{"n", 6}, {"m", 2}}})},
                 {"seed", 3}};
    String out;
    REQUIRE(qeec_bench(grid.dump().c_str(), &out.ptr) == QEEC_OK);
    auto doc = json::parse(out.str());
    REQUIRE(doc.at("rows").size() == 3);
    const auto& r0 = doc.at("rows").at(0);
    CHECK(r0.at("configs") == 6);
    CHECK(r0.at("qubits") == 3);
    CHECK(r0.at("elements") == 36);      // C(4,2)^2 pairs, all reachable
    CHECK(r0.at("raw_terms") == 288);    // 36 * 2^3
    CHECK(r0.at("bound") == 288);
    const auto& r1 = doc.at("rows").at(1);
    CHECK(r1.at("configs") == 1);        // closed shell: scalar problem
    CHECK(r1.at("qubits") == 0);
    CHECK(r1.at("raw_terms") == 1);
}

// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// C interface implementation.  Exceptions from the core are converted to
// error codes here; no exception crosses the boundary.

#include "qeec.h"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeec/configspace.hpp"
#include "qeec/encoder.hpp"
#include "qeec/errors.hpp"
#include "qeec/integrals.hpp"
#include "qeec/mitigation.hpp"
#include "qeec/pauli.hpp"
#include "qeec/reference.hpp"
#include "qeec/simulator.hpp"
#include "qeec/vqe.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

struct qeec_op {
    qeec::PauliOperator op{0};
    std::string metadata_json;  // source-table metadata, "null" if absent
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& msg) {
    g_error = msg;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_error.clear();
        return fn();
    } catch (const qeec::InputError& e) {
        return fail(QEEC_ERR_INPUT, e.what());
    } catch (const qeec::NumericError& e) {
        return fail(QEEC_ERR_NUMERIC, e.what());
    } catch (const json::exception& e) {
        return fail(QEEC_ERR_INPUT, e.what());
    } catch (const std::exception& e) {
        return fail(QEEC_ERR_INTERNAL, e.what());
    }
}

int require(bool ok, const char* what) {
    if (!ok) throw qeec::InputError(what);
    return QEEC_OK;
}

std::string bit_string(std::uint64_t value, std::uint32_t width) {
    std::string s(width, '0');
    for (std::uint32_t i = 0; i < width; ++i)
        if (value >> i & 1) s[width - 1 - i] = '1';
    return s;
}

// "auto" sniffing: FCIDUMP files open with a &NAMELIST header
qeec::IntegralTable parse_integrals(const std::string& text,
                                    const std::string& format) {
    std::string fmt = format.empty() ? "auto" : format;
    if (fmt == "auto") {
        auto first = text.find_first_not_of(" \t\r\n");
        fmt = (first != std::string::npos && text[first] == '&') ? "fcidump"
                                                                 : "json";
    }
    if (fmt == "fcidump") return qeec::parse_fcidump(text).first;
    if (fmt == "json") return qeec::load_json_integrals(text);
    throw qeec::InputError("unknown integral format: " + fmt);
}

// spin-basis physicist table for the encoder, whatever the input basis
qeec::IntegralTable spin_table(const qeec::IntegralTable& table,
                               const qeec::OrbitalLayout& layout) {
    if (table.spin_basis) return table;
    return qeec::to_spin_orbitals(table, layout);
}

qeec::SymmetryFilter parse_filter(const char* filter_json) {
    require(filter_json != nullptr && *filter_json != '\0',
            "filter document required");
    return qeec::SymmetryFilter::from_json(filter_json);
}

qeec::Backend backend_from_json(const json& spec) {
    if (spec.is_null()) return qeec::Backend::exact();
    std::string kind = spec.value("kind", "exact");
    if (kind == "exact") return qeec::Backend::exact();
    std::uint64_t shots = spec.value("shots", std::uint64_t{0});
    require(shots > 0, "backend requires shots > 0");
    if (kind == "shots") return qeec::Backend::sampled(shots);
    if (kind == "noisy") {
        require(spec.contains("noise"), "noisy backend requires a noise model");
        auto nm = qeec::NoiseModel::from_json(spec.at("noise").dump());
        return qeec::Backend::noisy_backend(nm, shots,
                                            spec.value("mitigate_readout", false));
    }
    throw qeec::InputError("unknown backend kind: " + kind);
}

std::uint32_t pairs_from_options(const json& o, const qeec::AnsatzSpec& spec,
                                 const json& cnot_key) {
    if (cnot_key.is_null()) return o.value("redundant_cnot_pairs", 0u);
    std::uint64_t want = cnot_key.get<std::uint64_t>();
    std::uint64_t base = spec.original_cnot_count();
    require(want >= base && (want - base) % 2 == 0,
            "cnot count must be the bare chain plus an even surplus");
    return static_cast<std::uint32_t>((want - base) / 2);
}

qeec::OptimizerConfig optimizer_from_json(const json& o) {
    qeec::OptimizerConfig cfg;
    cfg.max_iterations = o.value("max_iterations", cfg.max_iterations);
    cfg.initial_step = o.value("initial_step", cfg.initial_step);
    cfg.tolerance = o.value("tolerance", cfg.tolerance);
    cfg.seed = o.value("seed", cfg.seed);
    cfg.restarts = o.value("restarts", cfg.restarts);
    if (o.contains("target") && !o.at("target").is_null())
        cfg.target = o.at("target").get<double>();
    return cfg;
}

}  // namespace

extern "C" {

const char* qeec_version(void) { return "1.0.0"; }

const char* qeec_last_error(void) { return g_error.c_str(); }

void qeec_string_free(char* s) { std::free(s); }

void qeec_op_free(qeec_op* op) { delete op; }

int qeec_qubit_count_for(unsigned n, unsigned m, unsigned* out_qubits) {
    return guarded([&] {
        require(out_qubits != nullptr, "null output pointer");
        *out_qubits = qeec::qubit_count_for(n, m);
        return QEEC_OK;
    });
}

int qeec_enumerate_configs(const char* filter_json, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null output pointer");
        auto filter = parse_filter(filter_json);
        auto space = qeec::ConfigSpace::enumerate(filter);
        ordered_json doc;
        doc["n_spin_orbitals"] = space.n_spin_orbitals();
        doc["n_particles"] = filter.n_particles;
        doc["size"] = space.size();
        doc["qubits"] = space.qubit_count();
        doc["configs"] = ordered_json::array();
        for (std::size_t k = 0; k < space.size(); ++k) {
            auto f = space.config_at(k);
            ordered_json row;
            row["index"] = k;
            row["filled"] = ordered_json::array();
            for (std::uint32_t i = 0; i < space.n_spin_orbitals(); ++i)
                if (f >> i & 1) row["filled"].push_back(i);
            row["f"] = bit_string(f, space.n_spin_orbitals());
            row["q"] = bit_string(k, space.qubit_count());
            if (space.has_phases()) row["phase"] = space.phase(k);
            doc["configs"].push_back(std::move(row));
        }
        *out_json = dup_string(doc.dump(1) + "\n");
        return QEEC_OK;
    });
}

int qeec_encode(const char* integrals_text, const char* format,
                const char* filter_json, const char* encoding,
                qeec_op** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        require(integrals_text != nullptr, "integral text required");
        std::string enc = (encoding == nullptr) ? "qee" : encoding;
        auto table = parse_integrals(integrals_text,
                                     format == nullptr ? "auto" : format);
        auto filter = parse_filter(filter_json);
        auto spin = spin_table(table, filter.layout);
        qeec::PauliOperator op{0};
        if (enc == "qee") {
            auto space = qeec::ConfigSpace::enumerate(filter);
            require(space.n_spin_orbitals() == spin.n,
                    "filter and integral table disagree on orbital count");
            op = qeec::build_hamiltonian(space, spin);
        } else if (enc == "jw") {
            op = qeec::jw_encode(spin);
        } else {
            throw qeec::InputError("unknown encoding: " + enc);
        }
        auto* handle = new qeec_op;
        handle->op = std::move(op);
        handle->metadata_json =
            table.metadata_json.empty() ? "null" : table.metadata_json;
        *out = handle;
        return QEEC_OK;
    });
}

int qeec_op_from_json(const char* op_json, qeec_op** out) {
    return guarded([&] {
        require(out != nullptr && op_json != nullptr, "null argument");
        auto* handle = new qeec_op;
        handle->op = qeec::PauliOperator::from_json(op_json);
        handle->metadata_json = "null";
        json doc = json::parse(op_json);
        if (doc.contains("metadata") && !doc.at("metadata").is_null())
            handle->metadata_json = doc.at("metadata").dump();
        *out = handle;
        return QEEC_OK;
    });
}

int qeec_op_to_json(const qeec_op* op, char** out_json) {
    return guarded([&] {
        require(op != nullptr && out_json != nullptr, "null argument");
        *out_json = dup_string(op->op.to_json());
        return QEEC_OK;
    });
}

int qeec_op_pretty(const qeec_op* op, int decimals, double threshold,
                   char** out_text) {
    return guarded([&] {
        require(op != nullptr && out_text != nullptr, "null argument");
        *out_text = dup_string(op->op.pretty(decimals, threshold));
        return QEEC_OK;
    });
}

int qeec_op_qubits(const qeec_op* op, unsigned* out_qubits) {
    return guarded([&] {
        require(op != nullptr && out_qubits != nullptr, "null argument");
        *out_qubits = op->op.qubit_count();
        return QEEC_OK;
    });
}

int qeec_op_term_count(const qeec_op* op, double threshold,
                       unsigned long long* out_count) {
    return guarded([&] {
        require(op != nullptr && out_count != nullptr, "null argument");
        unsigned long long count = 0;
        for (const auto& [s, c] : op->op.terms())
            if (std::abs(c) > threshold) ++count;
        *out_count = count;
        return QEEC_OK;
    });
}

int qeec_op_eigenvalues(const qeec_op* op, char** out_json) {
    return guarded([&] {
        require(op != nullptr && out_json != nullptr, "null argument");
        auto evals = qeec::diagonalize(op->op);
        ordered_json doc = evals;
        *out_json = dup_string(doc.dump(1) + "\n");
        return QEEC_OK;
    });
}

int qeec_op_metadata(const qeec_op* op, char** out_json) {
    return guarded([&] {
        require(op != nullptr && out_json != nullptr, "null argument");
        *out_json = dup_string(op->metadata_json);
        return QEEC_OK;
    });
}

int qeec_vqe(const qeec_op* op, const char* options_json, char** out_json) {
    return guarded([&] {
        require(op != nullptr && out_json != nullptr, "null argument");
        json o = options_json == nullptr ? json::object()
                                         : json::parse(options_json);
        qeec::AnsatzSpec spec;
        spec.qubits = op->op.qubit_count();
        spec.reps = o.value("reps", 2u);
        spec.redundant_cnot_pairs = pairs_from_options(
            o, spec, o.contains("cnot_count") ? o.at("cnot_count") : json());
        auto cfg = optimizer_from_json(o);
        auto backend = backend_from_json(o.value("backend", json()));

        auto result = qeec::minimize(op->op, spec, cfg, backend);

        ordered_json doc;
        doc["energy"] = result.energy;
        doc["parameters"] = result.parameters;
        doc["evaluations"] = result.evaluations;
        doc["starts"] = result.starts;
        doc["cnots"] = spec.total_cnot_count();
        if (backend.kind != qeec::Backend::Kind::exact) {
            auto circuit = qeec::build_ansatz(spec, result.parameters);
            auto estimate = qeec::estimate_energy(circuit, op->op, backend,
                                                  cfg.seed ^ 0x5DEECE66DULL);
            doc["sigma"] = estimate.sigma;
        }
        if (o.value("trajectory", false)) doc["trajectory"] = result.trajectory;
        *out_json = dup_string(doc.dump(1) + "\n");
        return QEEC_OK;
    });
}

int qeec_zne(const qeec_op* op, const char* options_json, char** out_json) {
    return guarded([&] {
        require(op != nullptr && out_json != nullptr, "null argument");
        require(options_json != nullptr, "zne options required");
        json o = json::parse(options_json);
        require(o.contains("noise"), "zne requires a noise model");

        qeec::AnsatzSpec spec;
        spec.qubits = op->op.qubit_count();
        spec.reps = o.value("reps", 2u);

        qeec::ZneOptions z;
        if (o.contains("pair_counts")) {
            z.redundant_pair_counts =
                o.at("pair_counts").get<std::vector<std::uint32_t>>();
        } else if (o.contains("cnot_counts")) {
            z.redundant_pair_counts.clear();
            for (const auto& c : o.at("cnot_counts"))
                z.redundant_pair_counts.push_back(
                    pairs_from_options(o, spec, c));
        }
        z.shots = o.value("shots", z.shots);
        z.repeats = o.value("repeats", z.repeats);
        z.seed = o.value("seed", z.seed);
        z.mitigate_readout = o.value("mitigate_readout", z.mitigate_readout);
        std::string mode = o.value("mode", "fixed-angles");
        if (mode == "fixed-angles") {
            z.mode = qeec::ZneMode::fixed_angles;
        } else if (mode == "full-vqe") {
            z.mode = qeec::ZneMode::full_vqe;
        } else {
            throw qeec::InputError("unknown zne mode: " + mode);
        }

        auto cfg = optimizer_from_json(o.value("optimizer", json::object()));
        if (cfg.seed == 0) cfg.seed = z.seed;
        auto nm = qeec::NoiseModel::from_json(o.at("noise").dump());

        auto zout = qeec::zne_pipeline(op->op, spec, cfg, nm, z);

        ordered_json doc;
        doc["points"] = ordered_json::array();
        for (const auto& p : zout.points) {
            ordered_json row;
            row["redundant_pairs"] = p.redundant_pairs;
            row["cnots"] = p.cnots;
            row["mean"] = p.mean;
            row["stddev"] = p.stddev;
            row["energies"] = p.energies;
            doc["points"].push_back(std::move(row));
        }
        doc["fit"] = {{"intercept", zout.fit.intercept},
                      {"slope", zout.fit.slope},
                      {"sigma_intercept", zout.fit.sigma_intercept},
                      {"two_sigma_intercept", 2.0 * zout.fit.sigma_intercept},
                      {"residuals", zout.fit.residuals}};
        doc["angles"] = zout.angles;
        *out_json = dup_string(doc.dump(1) + "\n");
        return QEEC_OK;
    });
}

int qeec_term_report(const char* integrals_text, const char* format,
                     const char* filter_json, double count_threshold,
                     char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null output pointer");
        require(integrals_text != nullptr, "integral text required");
        auto table = parse_integrals(integrals_text,
                                     format == nullptr ? "auto" : format);
        auto filter = parse_filter(filter_json);
        auto report = qeec::term_count_report(table, filter, count_threshold);
        ordered_json doc;
        doc["jw_qubits"] = report.full_register_qubits;
        doc["jw_terms"] = report.full_register_terms;
        doc["qee_qubits"] = report.subspace_qubits;
        doc["qee_terms"] = report.subspace_terms;
        *out_json = dup_string(doc.dump(1) + "\n");
        return QEEC_OK;
    });
}

int qeec_bench(const char* grid_json, char** out_json) {
    return guarded([&] {
        require(grid_json != nullptr && out_json != nullptr, "null argument");
        json grid = json::parse(grid_json);
        require(grid.contains("points"), "bench grid requires points");
        std::mt19937_64 rng(grid.value("seed", std::uint64_t{7}));
        std::uniform_real_distribution<double> unit(-1.0, 1.0);

        ordered_json rows = ordered_json::array();
        for (const auto& point : grid.at("points")) {
            std::uint32_t n = point.at("n").get<std::uint32_t>();
            std::uint32_t m = point.at("m").get<std::uint32_t>();
            require(n >= 1 && n <= 20 && m >= 1 && m <= n,
                    "bench grid point outside the supported range");

            // random hermitian spin-basis table in physicist order
            qeec::IntegralTable spin;
            spin.n = n;
            spin.spin_basis = true;
            spin.convention = qeec::Convention::physicist;
            spin.one_body = Eigen::MatrixXd::Zero(n, n);
            for (std::uint32_t p = 0; p < n; ++p)
                for (std::uint32_t q = p; q < n; ++q) {
                    double v = unit(rng);
                    spin.one_body(p, q) = v;
                    spin.one_body(q, p) = v;
                }
            std::vector<double> raw(static_cast<std::size_t>(n) * n * n * n);
            for (auto& v : raw) v = unit(rng);
            auto at = [&](std::uint32_t p, std::uint32_t q, std::uint32_t r,
                          std::uint32_t s) -> double& {
                return raw[((static_cast<std::size_t>(p) * n + q) * n + r) *
                               n +
                           s];
            };
            for (std::uint32_t p = 0; p < n; ++p)
                for (std::uint32_t q = 0; q < n; ++q)
                    for (std::uint32_t r = 0; r < n; ++r)
                        for (std::uint32_t s = 0; s < n; ++s) {
                            double v = 0.5 * (at(p, q, r, s) + at(s, r, q, p));
                            if (p >= s && !(p == s && q >= r)) continue;
                            at(p, q, r, s) = v;
                            at(s, r, q, p) = v;
                        }
            for (std::uint32_t p = 0; p < n; ++p)
                for (std::uint32_t q = 0; q < n; ++q)
                    for (std::uint32_t r = 0; r < n; ++r)
                        for (std::uint32_t s = 0; s < n; ++s)
                            spin.two_body.push_back({p, q, r, s, at(p, q, r, s)});

            qeec::SymmetryFilter filter;
            filter.n_spin_orbitals = n;
            filter.n_particles = m;
            auto space = qeec::ConfigSpace::enumerate(filter);

            // elements reachable by at most a double excitation; random
            // tables make every one of them nonzero
            std::size_t predicted = 0;
            for (auto fa : space.configs())
                for (auto fb : space.configs())
                    if (std::popcount(fa ^ fb) <= 4) ++predicted;
            std::size_t raw_predicted = predicted
                                        << space.qubit_count();
            std::size_t bound = (space.size() * space.size())
                                << space.qubit_count();

            qeec::EncodeStats stats{};
            auto t0 = std::chrono::steady_clock::now();
            auto compiled = qeec::build_hamiltonian(space, spin, &stats);
            auto t1 = std::chrono::steady_clock::now();
            double seconds =
                std::chrono::duration<double>(t1 - t0).count();

            if (stats.nonzero_elements != predicted ||
                stats.raw_terms != raw_predicted)
                throw qeec::NumericError(
                    "bench: measured counts deviate from the analytic "
                    "prediction");
            if (stats.raw_terms > bound)
                throw qeec::NumericError("bench: raw terms exceed the bound");

            ordered_json row;
            row["n"] = n;
            row["m"] = m;
            row["configs"] = space.size();
            row["qubits"] = space.qubit_count();
            row["elements"] = stats.nonzero_elements;
            row["raw_terms"] = stats.raw_terms;
            row["raw_predicted"] = raw_predicted;
            row["bound"] = bound;
            row["merged_terms"] = compiled.terms().size();
            row["seconds"] = seconds;
            rows.push_back(std::move(row));
        }
        ordered_json doc;
        doc["rows"] = std::move(rows);
        *out_json = dup_string(doc.dump(1) + "\n");
        return QEEC_OK;
    });
}

}  // extern "C"

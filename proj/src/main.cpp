// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Talks to the compiler and simulation stack
// exclusively through the C interface in qeec.h; everything here is
// argument plumbing, fixture checksum validation, and report rendering.
//
// Exit codes: 0 success, 2 usage, 3 input, 4 numerical assertion.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "qeec.h"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

// unwraps a C-interface status, forwarding its code as the exit code
void check(int rc) {
    if (rc != QEEC_OK) die(rc, qeec_last_error());
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { qeec_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? "" : ptr; }
};

struct OwnedOp {
    qeec_op* ptr = nullptr;
    ~OwnedOp() { qeec_op_free(ptr); }
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    auto* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        die(1, "sha256 failure");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::optional<fs::path> fixtures_root() {
    if (const char* env = std::getenv("QEEC_FIXTURES"))
        if (*env != '\0' && fs::exists(env)) return fs::path(env);
    if (fs::exists("fixtures/manifest.json")) return fs::path("fixtures");
    return std::nullopt;
}

const json& fixture_manifest(const fs::path& root) {
    static json manifest;
    static bool loaded = false;
    if (!loaded) {
        std::ifstream in(root / "manifest.json");
        if (in) manifest = json::parse(in, nullptr, false);
        loaded = true;
    }
    return manifest;
}

// every shipped fixture is checksum-validated before use
void validate_fixture(const fs::path& path, const std::string& data) {
    auto root = fixtures_root();
    if (!root) return;
    std::error_code ec;
    auto rel = fs::relative(fs::weakly_canonical(path, ec),
                            fs::weakly_canonical(*root, ec), ec);
    if (ec || rel.empty() || rel.native().starts_with("..")) return;
    const json& manifest = fixture_manifest(*root);
    if (!manifest.is_object() || !manifest.contains("files")) return;
    const auto& files = manifest.at("files");
    auto it = files.find(rel.generic_string());
    if (it == files.end()) return;
    if (it->at("sha256").get<std::string>() != sha256_hex(data))
        die(kExitInput,
            "fixture checksum mismatch: " + path.string() +
                " does not match manifest.json");
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string data = ss.str();
    validate_fixture(path, data);
    return data;
}

void write_output(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitInput, "cannot write " + path);
    out << data;
}

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// every file-producing run leaves a replayable record next to its output
struct RunManifest {
    std::vector<std::string> argv;
    std::vector<std::string> inputs;
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    std::string started = utc_now();

    void note(const std::string& path) { inputs.push_back(path); }
    void write(const std::string& out_path) const {
        ordered_json doc;
        doc["schema"] = "qeec-run-v1";
        doc["version"] = qeec_version();
        doc["command"] = argv;
        doc["inputs"] = ordered_json::array();
        for (const auto& p : inputs) {
            ordered_json entry;
            entry["path"] = p;
            std::ifstream in(p, std::ios::binary);
            if (in) {
                std::ostringstream ss;
                ss << in.rdbuf();
                entry["sha256"] = sha256_hex(ss.str());
            }
            doc["inputs"].push_back(std::move(entry));
        }
        doc["output"] = out_path;
        doc["started_utc"] = started;
        doc["seconds"] = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        write_output(out_path + ".manifest.json", doc.dump(1) + "\n");
    }
};

// "exact", "shots:N" or "noisy:model.json:N" -> backend document
json parse_backend(const std::string& text, bool mitigate, RunManifest& run) {
    if (text == "exact") return {{"kind", "exact"}};
    auto head = text.substr(0, text.find(':'));
    if (head == "shots") {
        auto arg = text.substr(text.find(':') + 1);
        return {{"kind", "shots"}, {"shots", std::stoull(arg)}};
    }
    if (head == "noisy") {
        auto rest = text.substr(text.find(':') + 1);
        auto sep = rest.rfind(':');
        if (sep == std::string::npos)
            die(kExitUsage, "noisy backend needs noisy:<model.json>:<shots>");
        auto model_path = rest.substr(0, sep);
        run.note(model_path);
        return {{"kind", "noisy"},
                {"shots", std::stoull(rest.substr(sep + 1))},
                {"noise", json::parse(read_input(model_path))},
                {"mitigate_readout", mitigate}};
    }
    die(kExitUsage, "unknown backend: " + text);
}

double metadata_constant(const qeec_op* op) {
    OwnedString meta;
    check(qeec_op_metadata(op, &meta.ptr));
    json doc = json::parse(meta.str(), nullptr, false);
    if (doc.is_object() && doc.contains("nuclear_repulsion"))
        return doc.at("nuclear_repulsion").get<double>();
    return 0.0;
}

std::string fmt(double v, int decimals = 9) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// -------------------------------------------------------------- commands

struct CommonOut {
    std::string out;
    bool as_json = false;
};

void emit(const CommonOut& common, const std::string& doc,
          const std::string& human, RunManifest& run) {
    if (!common.out.empty()) {
        write_output(common.out, doc);
        run.write(common.out);
    }
    if (common.as_json) {
        std::cout << doc;
    } else if (!human.empty()) {
        std::cout << human;
    }
}

int cmd_configs(const std::string& filter_path, const CommonOut& common,
                RunManifest& run) {
    run.note(filter_path);
    OwnedString doc;
    check(qeec_enumerate_configs(read_input(filter_path).c_str(), &doc.ptr));
    json parsed = json::parse(doc.str());

    std::ostringstream table;
    table << "configurations: " << parsed.at("size").get<std::size_t>()
          << "   register: " << parsed.at("qubits").get<unsigned>()
          << " qubits\n";
    table << "index  occupied        f-string  q-string\n";
    for (const auto& row : parsed.at("configs")) {
        std::string filled;
        for (const auto& i : row.at("filled")) {
            if (!filled.empty()) filled += ",";
            filled += std::to_string(i.get<unsigned>());
        }
        char line[128];
        std::snprintf(line, sizeof line, "%5zu  %-14s  %s  %s",
                      row.at("index").get<std::size_t>(), filled.c_str(),
                      row.at("f").get<std::string>().c_str(),
                      row.at("q").get<std::string>().c_str());
        table << line;
        if (row.contains("phase") && row.at("phase").get<double>() < 0)
            table << "  (sign -1)";
        table << "\n";
    }
    emit(common, doc.str(), table.str(), run);
    return 0;
}

struct EncodeArgs {
    std::string input, format = "auto", filter, encoding = "qee";
};

void encode_op(const EncodeArgs& a, RunManifest& run, OwnedOp& op) {
    run.note(a.input);
    run.note(a.filter);
    check(qeec_encode(read_input(a.input).c_str(), a.format.c_str(),
                      read_input(a.filter).c_str(), a.encoding.c_str(),
                      &op.ptr));
}

int cmd_encode(const EncodeArgs& a, bool pretty, int decimals,
               double threshold, const CommonOut& common, RunManifest& run) {
    OwnedOp op;
    encode_op(a, run, op);
    OwnedString doc;
    check(qeec_op_to_json(op.ptr, &doc.ptr));
    std::string human;
    unsigned qubits = 0;
    unsigned long long terms = 0;
    check(qeec_op_qubits(op.ptr, &qubits));
    check(qeec_op_term_count(op.ptr, threshold, &terms));
    if (pretty || (!common.as_json && common.out.empty())) {
        OwnedString text;
        check(qeec_op_pretty(op.ptr, decimals, threshold, &text.ptr));
        human = text.str();
    } else {
        human = std::to_string(terms) + " terms on " +
                std::to_string(qubits) + " qubits\n";
    }
    emit(common, doc.str(), human, run);
    return 0;
}

int cmd_diag(const std::string& ham, const EncodeArgs& enc, bool all,
             const CommonOut& common, RunManifest& run) {
    OwnedOp op;
    if (!ham.empty()) {
        run.note(ham);
        check(qeec_op_from_json(read_input(ham).c_str(), &op.ptr));
    } else if (!enc.input.empty()) {
        encode_op(enc, run, op);
    } else {
        die(kExitUsage, "diag needs --ham or --input/--filter");
    }
    OwnedString evals_json;
    check(qeec_op_eigenvalues(op.ptr, &evals_json.ptr));
    auto evals = json::parse(evals_json.str()).get<std::vector<double>>();
    double shift = metadata_constant(op.ptr);

    ordered_json doc;
    doc["ground"] = evals.front();
    if (shift != 0.0) doc["ground_with_constant"] = evals.front() + shift;
    doc["eigenvalues"] = evals;
    std::ostringstream human;
    human << "ground energy: " << fmt(evals.front(), 12) << "\n";
    if (shift != 0.0)
        human << "with constant shift: " << fmt(evals.front() + shift, 12)
              << "\n";
    if (all) {
        human << "spectrum:\n";
        for (double e : evals) human << "  " << fmt(e, 12) << "\n";
    }
    emit(common, doc.dump(1) + "\n", human.str(), run);
    return 0;
}

struct VqeArgs {
    std::string ham;
    EncodeArgs enc;
    unsigned reps = 2;
    std::optional<unsigned> cnot_count;
    std::string backend = "exact";
    bool mitigate = false;
    std::uint64_t seed = 0;
    unsigned max_iterations = 500;
    unsigned restarts = 3;
    std::optional<double> target;
    bool trajectory = false;
};

json vqe_options(const VqeArgs& a, RunManifest& run) {
    json o;
    o["reps"] = a.reps;
    if (a.cnot_count) o["cnot_count"] = *a.cnot_count;
    o["backend"] = parse_backend(a.backend, a.mitigate, run);
    o["seed"] = a.seed;
    o["max_iterations"] = a.max_iterations;
    o["restarts"] = a.restarts;
    if (a.target) o["target"] = *a.target;
    if (a.trajectory) o["trajectory"] = true;
    return o;
}

void load_ham(const std::string& ham, const EncodeArgs& enc, RunManifest& run,
              OwnedOp& op) {
    if (!ham.empty()) {
        run.note(ham);
        check(qeec_op_from_json(read_input(ham).c_str(), &op.ptr));
    } else if (!enc.input.empty()) {
        encode_op(enc, run, op);
    } else {
        die(kExitUsage, "need --ham or --input/--filter");
    }
}

int cmd_vqe(const VqeArgs& a, const CommonOut& common, RunManifest& run) {
    OwnedOp op;
    load_ham(a.ham, a.enc, run, op);
    OwnedString doc;
    check(qeec_vqe(op.ptr, vqe_options(a, run).dump().c_str(), &doc.ptr));
    json r = json::parse(doc.str());
    std::ostringstream human;
    human << "energy: " << fmt(r.at("energy").get<double>(), 9);
    if (r.contains("sigma"))
        human << "  sigma: " << fmt(r.at("sigma").get<double>(), 9);
    human << "\nevaluations: " << r.at("evaluations").get<std::size_t>()
          << "  starts: " << r.at("starts").get<std::size_t>()
          << "  cnots: " << r.at("cnots").get<std::size_t>() << "\n";
    double shift = metadata_constant(op.ptr);
    if (shift != 0.0)
        human << "with constant shift: "
              << fmt(r.at("energy").get<double>() + shift, 9) << "\n";
    emit(common, doc.str(), human.str(), run);
    return 0;
}

int cmd_scan(const std::string& dir, const std::string& filter_path,
             const std::string& encoding, const std::string& method,
             const VqeArgs& vqe_args, unsigned threads,
             const CommonOut& common, RunManifest& run) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".fcidump") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) die(kExitInput, "no integral files in " + dir);
    run.note(filter_path);
    std::string filter_text = read_input(filter_path);

    struct Row {
        std::string file;
        double distance = 0.0;
        bool has_distance = false;
        double electronic = 0.0;
        double constant = 0.0;
    };
    std::vector<Row> rows(files.size());
    std::atomic<std::size_t> next{0};
    std::atomic<int> failed{0};
    std::string first_error;
    std::mutex error_mutex;

    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < files.size();
             i = next.fetch_add(1)) {
            try {
                std::ifstream in(files[i], std::ios::binary);
                std::ostringstream ss;
                ss << in.rdbuf();
                std::string text = ss.str();
                validate_fixture(files[i], text);
                OwnedOp op;
                int rc = qeec_encode(text.c_str(), "auto",
                                     filter_text.c_str(), encoding.c_str(),
                                     &op.ptr);
                if (rc != QEEC_OK) throw std::runtime_error(qeec_last_error());
                Row row;
                row.file = files[i].filename().string();
                OwnedString meta;
                if (qeec_op_metadata(op.ptr, &meta.ptr) == QEEC_OK) {
                    json doc = json::parse(meta.str(), nullptr, false);
                    if (doc.is_object()) {
                        if (doc.contains("distance_angstrom")) {
                            row.distance =
                                doc.at("distance_angstrom").get<double>();
                            row.has_distance = true;
                        }
                        if (doc.contains("nuclear_repulsion"))
                            row.constant =
                                doc.at("nuclear_repulsion").get<double>();
                    }
                }
                if (method == "diag") {
                    OwnedString evals;
                    rc = qeec_op_eigenvalues(op.ptr, &evals.ptr);
                    if (rc != QEEC_OK)
                        throw std::runtime_error(qeec_last_error());
                    row.electronic =
                        json::parse(evals.str()).at(0).get<double>();
                } else {
                    VqeArgs local = vqe_args;
                    RunManifest scratch;
                    OwnedString result;
                    rc = qeec_vqe(op.ptr,
                                  vqe_options(local, scratch).dump().c_str(),
                                  &result.ptr);
                    if (rc != QEEC_OK)
                        throw std::runtime_error(qeec_last_error());
                    row.electronic =
                        json::parse(result.str()).at("energy").get<double>();
                }
                rows[i] = std::move(row);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (failed.fetch_add(1) == 0)
                    first_error = files[i].string() + ": " + e.what();
            }
        }
    };
    unsigned pool = std::max(1u, threads);
    std::vector<std::thread> workers;
    for (unsigned t = 1; t < pool; ++t) workers.emplace_back(work);
    work();
    for (auto& w : workers) w.join();
    if (failed.load() != 0) die(kExitInput, first_error);

    ordered_json doc;
    doc["rows"] = ordered_json::array();
    std::ostringstream csv;
    csv << "file,distance_angstrom,electronic,constant,total\n";
    for (const auto& row : rows) {
        ordered_json r;
        r["file"] = row.file;
        if (row.has_distance) r["distance_angstrom"] = row.distance;
        r["electronic"] = row.electronic;
        r["constant"] = row.constant;
        r["total"] = row.electronic + row.constant;
        doc["rows"].push_back(std::move(r));
        csv << row.file << ","
            << (row.has_distance ? fmt17(row.distance) : "") << ","
            << fmt17(row.electronic) << "," << fmt17(row.constant) << ","
            << fmt17(row.electronic + row.constant) << "\n";
    }
    emit(common, common.as_json ? doc.dump(1) + "\n" : csv.str(), csv.str(),
         run);
    return 0;
}

int cmd_zne(const VqeArgs& base, const std::string& noise_path,
            std::uint64_t shots, unsigned repeats,
            const std::string& cnot_counts, const std::string& mode,
            bool no_mitigate, const std::string& csv_path,
            const CommonOut& common, RunManifest& run) {
    OwnedOp op;
    load_ham(base.ham, base.enc, run, op);
    run.note(noise_path);

    json o;
    o["reps"] = base.reps;
    o["noise"] = json::parse(read_input(noise_path));
    o["shots"] = shots;
    o["repeats"] = repeats;
    o["mode"] = mode;
    o["seed"] = base.seed;
    o["mitigate_readout"] = !no_mitigate;
    json counts = json::array();
    std::stringstream ss(cnot_counts);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) counts.push_back(std::stoull(item));
    if (!counts.empty()) o["cnot_counts"] = counts;
    json optimizer;
    optimizer["max_iterations"] = base.max_iterations;
    optimizer["restarts"] = base.restarts;
    optimizer["seed"] = base.seed;
    if (base.target) optimizer["target"] = *base.target;
    o["optimizer"] = optimizer;

    OwnedString doc;
    check(qeec_zne(op.ptr, o.dump().c_str(), &doc.ptr));
    json r = json::parse(doc.str());

    std::ostringstream human;
    human << "cnots  mean          stddev\n";
    std::ostringstream csv;
    csv << "cnots,mean,stddev\n";
    for (const auto& p : r.at("points")) {
        human << fmt(p.at("cnots").get<double>(), 0) << "     "
              << fmt(p.at("mean").get<double>(), 9) << "  "
              << fmt(p.at("stddev").get<double>(), 9) << "\n";
        csv << fmt17(p.at("cnots").get<double>()) << ","
            << fmt17(p.at("mean").get<double>()) << ","
            << fmt17(p.at("stddev").get<double>()) << "\n";
    }
    const auto& fit = r.at("fit");
    human << "intercept: " << fmt(fit.at("intercept").get<double>(), 9)
          << " +/- " << fmt(fit.at("two_sigma_intercept").get<double>(), 9)
          << " (2 sigma)\n";
    double shift = metadata_constant(op.ptr);
    if (shift != 0.0)
        human << "with constant shift: "
              << fmt(fit.at("intercept").get<double>() + shift, 9) << "\n";
    if (!csv_path.empty()) write_output(csv_path, csv.str());
    emit(common, doc.str(), human.str(), run);
    return 0;
}

int cmd_report(const std::string& plan_path, const std::string& format,
               double threshold, const CommonOut& common, RunManifest& run) {
    run.note(plan_path);
    json plan = json::parse(read_input(plan_path));
    auto root = fs::path(plan_path).parent_path().parent_path();

    ordered_json rows = ordered_json::array();
    for (const auto& row : plan.at("rows")) {
        std::string integrals = row.value("integrals", "");
        std::string filter_file = row.value("filter_file", "");
        auto ipath = (root / integrals).string();
        auto fpath = (root / filter_file).string();
        run.note(ipath);
        OwnedString result;
        check(qeec_term_report(read_input(ipath).c_str(), "auto",
                               read_input(fpath).c_str(), threshold,
                               &result.ptr));
        json computed = json::parse(result.str());
        ordered_json r;
        r["key"] = row.value("key", "");
        r["molecule"] = row.value("molecule", "");
        if (row.contains("distance_angstrom"))
            r["distance_angstrom"] = row.at("distance_angstrom");
        r["jw_qubits"] = computed.at("jw_qubits");
        r["jw_terms"] = computed.at("jw_terms");
        r["qee_qubits"] = computed.at("qee_qubits");
        r["qee_terms"] = computed.at("qee_terms");
        if (row.contains("published")) {
            r["published"] = row.at("published");
            const auto& pub = row.at("published");
            bool caveat =
                pub.size() == 4 &&
                (computed.at("jw_terms") != pub.at(1) ||
                 computed.at("qee_terms") != pub.at(3));
            r["matches_published"] = !caveat;
        }
        rows.push_back(std::move(r));
    }

    ordered_json doc;
    doc["rows"] = rows;
    if (plan.contains("caveat")) doc["caveat"] = plan.at("caveat");

    std::ostringstream human;
    if (format == "csv") {
        human << "key,molecule,jw_qubits,jw_terms,qee_qubits,qee_terms\n";
        for (const auto& r : rows)
            human << r.at("key").get<std::string>() << ","
                  << r.at("molecule").get<std::string>() << ","
                  << r.at("jw_qubits") << "," << r.at("jw_terms") << ","
                  << r.at("qee_qubits") << "," << r.at("qee_terms") << "\n";
    } else {
        human << "| molecule | JW qubits | JW terms | qubits | terms |\n";
        human << "|---|---|---|---|---|\n";
        for (const auto& r : rows) {
            human << "| " << r.at("molecule").get<std::string>() << " | "
                  << r.at("jw_qubits") << " | " << r.at("jw_terms") << " | "
                  << r.at("qee_qubits") << " | " << r.at("qee_terms");
            if (r.contains("matches_published") &&
                !r.at("matches_published").get<bool>())
                human << " *";
            human << " |\n";
        }
        bool any_caveat = false;
        for (const auto& r : rows)
            if (r.contains("matches_published") &&
                !r.at("matches_published").get<bool>())
                any_caveat = true;
        if (any_caveat && plan.contains("caveat"))
            human << "\n* " << plan.at("caveat").get<std::string>() << "\n";
    }
    emit(common, doc.dump(1) + "\n", human.str(), run);
    return 0;
}

int cmd_bench(const std::string& grid, std::uint64_t seed,
              const CommonOut& common, RunManifest& run) {
    json points = json::array();
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto sep = item.find(':');
        if (sep == std::string::npos)
            die(kExitUsage, "bench grid items look like N:m");
        points.push_back({{"n", std::stoul(item.substr(0, sep))},
                          {"m", std::stoul(item.substr(sep + 1))}});
    }
    json o;
    o["points"] = points;
    o["seed"] = seed;
    OwnedString doc;
    check(qeec_bench(o.dump().c_str(), &doc.ptr));
    json r = json::parse(doc.str());
    std::ostringstream human;
    human << "  n   m  configs  qubits  elements  raw_terms      bound  "
             "seconds\n";
    for (const auto& row : r.at("rows")) {
        char line[160];
        std::snprintf(line, sizeof line,
                      "%3u %3u %8zu %7u %9zu %10zu %10zu  %.4f\n",
                      row.at("n").get<unsigned>(), row.at("m").get<unsigned>(),
                      row.at("configs").get<std::size_t>(),
                      row.at("qubits").get<unsigned>(),
                      row.at("elements").get<std::size_t>(),
                      row.at("raw_terms").get<std::size_t>(),
                      row.at("bound").get<std::size_t>(),
                      row.at("seconds").get<double>());
        human << line;
    }
    emit(common, doc.str(), human.str(), run);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qeec: a qubit-efficient compiler for second-quantized "
                 "Hamiltonians, with a simulation and error-mitigation "
                 "stack"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qeec ") + qeec_version());

    RunManifest run;
    for (int i = 0; i < argc; ++i) run.argv.push_back(argv[i]);

    // configs
    auto* configs = app.add_subcommand(
        "configs", "enumerate admitted configurations and their register "
                   "assignment");
    std::string configs_filter;
    CommonOut configs_out;
    configs->add_option("--filter", configs_filter, "filter document")
        ->required();
    configs->add_option("--out", configs_out.out, "write JSON here");
    configs->add_flag("--json", configs_out.as_json, "JSON to stdout");

    // encode
    auto* encode = app.add_subcommand(
        "encode", "compile an integral table to a qubit operator");
    EncodeArgs enc;
    CommonOut encode_out;
    bool encode_pretty = false;
    int encode_decimals = 6;
    double encode_threshold = 1e-8;
    encode->add_option("--input", enc.input, "integral file")->required();
    encode->add_option("--format", enc.format, "auto|json|fcidump");
    encode->add_option("--filter", enc.filter, "filter document")->required();
    encode->add_option("--encoding", enc.encoding, "qee|jw");
    encode->add_option("--out", encode_out.out, "write operator JSON here");
    encode->add_flag("--pretty", encode_pretty, "fixed-point term list");
    encode->add_option("--decimals", encode_decimals, "pretty precision");
    encode->add_option("--threshold", encode_threshold,
                       "drop smaller terms from display/count");
    encode->add_flag("--json", encode_out.as_json, "JSON to stdout");

    // diag
    auto* diag = app.add_subcommand("diag",
                                    "dense spectrum of a compiled operator");
    std::string diag_ham;
    EncodeArgs diag_enc;
    CommonOut diag_out;
    bool diag_all = false;
    diag->add_option("--ham", diag_ham, "operator JSON file");
    diag->add_option("--input", diag_enc.input, "integral file");
    diag->add_option("--format", diag_enc.format, "auto|json|fcidump");
    diag->add_option("--filter", diag_enc.filter, "filter document");
    diag->add_option("--encoding", diag_enc.encoding, "qee|jw");
    diag->add_flag("--all", diag_all, "print the whole spectrum");
    diag->add_option("--out", diag_out.out, "write JSON here");
    diag->add_flag("--json", diag_out.as_json, "JSON to stdout");

    // vqe
    auto* vqe = app.add_subcommand(
        "vqe", "variational ground-state search on a compiled operator");
    VqeArgs vqe_args;
    CommonOut vqe_out;
    vqe->add_option("--ham", vqe_args.ham, "operator JSON file");
    vqe->add_option("--input", vqe_args.enc.input, "integral file");
    vqe->add_option("--format", vqe_args.enc.format, "auto|json|fcidump");
    vqe->add_option("--filter", vqe_args.enc.filter, "filter document");
    vqe->add_option("--encoding", vqe_args.enc.encoding, "qee|jw");
    vqe->add_option("--reps", vqe_args.reps, "entangling-layer repetitions");
    vqe->add_option("--cnot-count", vqe_args.cnot_count,
                    "total CNOTs incl. redundant pairs");
    vqe->add_option("--backend", vqe_args.backend,
                    "exact | shots:N | noisy:model.json:N");
    vqe->add_flag("--mitigate", vqe_args.mitigate,
                  "apply readout mitigation (noisy backend)");
    vqe->add_option("--seed", vqe_args.seed, "RNG seed");
    vqe->add_option("--max-iterations", vqe_args.max_iterations,
                    "evaluations per start");
    vqe->add_option("--restarts", vqe_args.restarts, "extra seeded starts");
    vqe->add_option("--target", vqe_args.target,
                    "stop once energy reaches this");
    vqe->add_flag("--trajectory", vqe_args.trajectory,
                  "include evaluation trajectory in JSON");
    vqe->add_option("--out", vqe_out.out, "write result JSON here");
    vqe->add_flag("--json", vqe_out.as_json, "JSON to stdout");

    // scan
    auto* scan = app.add_subcommand(
        "scan", "encode every integral file in a directory and tabulate "
                "energies");
    std::string scan_dir, scan_filter, scan_encoding = "qee",
                          scan_method = "diag";
    unsigned scan_threads = 1;
    VqeArgs scan_vqe;
    CommonOut scan_out;
    scan->add_option("--input-dir", scan_dir, "directory of integral files")
        ->required();
    scan->add_option("--filter", scan_filter, "filter document")->required();
    scan->add_option("--encoding", scan_encoding, "qee|jw");
    scan->add_option("--method", scan_method, "diag|vqe");
    scan->add_option("--threads", scan_threads, "worker threads");
    scan->add_option("--reps", scan_vqe.reps, "vqe: layer repetitions");
    scan->add_option("--seed", scan_vqe.seed, "vqe: RNG seed");
    scan->add_option("--max-iterations", scan_vqe.max_iterations,
                     "vqe: evaluations per start");
    scan->add_option("--restarts", scan_vqe.restarts,
                     "vqe: extra seeded starts");
    scan->add_option("--target", scan_vqe.target, "vqe: stop threshold");
    scan->add_option("--out", scan_out.out, "write CSV (or JSON with --json)");
    scan->add_flag("--json", scan_out.as_json, "JSON to stdout");

    // zne
    auto* zne = app.add_subcommand(
        "zne", "noise-amplified extrapolation to the zero-noise energy");
    VqeArgs zne_base;
    std::string zne_noise, zne_counts = "", zne_mode = "fixed-angles",
                           zne_csv;
    std::uint64_t zne_shots = 100000;
    unsigned zne_repeats = 10;
    bool zne_no_mitigate = false;
    CommonOut zne_out;
    zne->add_option("--ham", zne_base.ham, "operator JSON file");
    zne->add_option("--input", zne_base.enc.input, "integral file");
    zne->add_option("--format", zne_base.enc.format, "auto|json|fcidump");
    zne->add_option("--filter", zne_base.enc.filter, "filter document");
    zne->add_option("--noise", zne_noise, "device noise model JSON")
        ->required();
    zne->add_option("--shots", zne_shots, "shots per group per repeat");
    zne->add_option("--repeats", zne_repeats, "repeats per CNOT count");
    zne->add_option("--cnot-counts", zne_counts,
                    "comma list, e.g. 6,12,18 (default from reps)");
    zne->add_option("--mode", zne_mode, "fixed-angles|full-vqe");
    zne->add_option("--reps", zne_base.reps, "entangling-layer repetitions");
    zne->add_option("--seed", zne_base.seed, "RNG seed");
    zne->add_option("--max-iterations", zne_base.max_iterations,
                    "optimizer evaluations per start");
    zne->add_option("--restarts", zne_base.restarts, "optimizer restarts");
    zne->add_option("--target", zne_base.target, "optimizer stop threshold");
    zne->add_flag("--no-mitigate", zne_no_mitigate,
                  "skip readout mitigation");
    zne->add_option("--csv", zne_csv, "write plot data CSV here");
    zne->add_option("--out", zne_out.out, "write result JSON here");
    zne->add_flag("--json", zne_out.as_json, "JSON to stdout");

    // report
    auto* report = app.add_subcommand(
        "report", "register-size and term-count table over a fixture plan");
    std::string report_plan, report_format = "md";
    double report_threshold = 1e-8;
    CommonOut report_out;
    report->add_option("--plan", report_plan,
                       "plan JSON listing integral/filter pairs")
        ->required();
    report->add_option("--format", report_format, "md|csv");
    report->add_option("--threshold", report_threshold,
                       "term-count magnitude cutoff");
    report->add_option("--out", report_out.out, "write JSON here");
    report->add_flag("--json", report_out.as_json, "JSON to stdout");

    // bench
    auto* bench = app.add_subcommand(
        "bench", "compile-cost measurement on random integral tables");
    std::string bench_grid = "8:2,10:2,12:2";
    std::uint64_t bench_seed = 7;
    CommonOut bench_out;
    bench->add_option("--grid", bench_grid, "comma list of N:m points");
    bench->add_option("--seed", bench_seed, "RNG seed");
    bench->add_option("--out", bench_out.out, "write JSON here");
    bench->add_flag("--json", bench_out.as_json, "JSON to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (configs->parsed())
            return cmd_configs(configs_filter, configs_out, run);
        if (encode->parsed())
            return cmd_encode(enc, encode_pretty, encode_decimals,
                              encode_threshold, encode_out, run);
        if (diag->parsed())
            return cmd_diag(diag_ham, diag_enc, diag_all, diag_out, run);
        if (vqe->parsed()) return cmd_vqe(vqe_args, vqe_out, run);
        if (scan->parsed())
            return cmd_scan(scan_dir, scan_filter, scan_encoding, scan_method,
                            scan_vqe, scan_threads, scan_out, run);
        if (zne->parsed())
            return cmd_zne(zne_base, zne_noise, zne_shots, zne_repeats,
                           zne_counts, zne_mode, zne_no_mitigate, zne_csv,
                           zne_out, run);
        if (report->parsed())
            return cmd_report(report_plan, report_format, report_threshold,
                              report_out, run);
        if (bench->parsed()) return cmd_bench(bench_grid, bench_seed,
                                              bench_out, run);
    } catch (const json::exception& e) {
        die(kExitInput, e.what());
    } catch (const std::exception& e) {
        die(1, e.what());
    }
    return kExitUsage;
}

// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate.  Each numbered criterion prints exactly one
// "criterion N: PASS" or "criterion N: FAIL" line plus supporting detail;
// the process exit code is 0 only if every requested criterion passed.
//
// Usage: qeec_acceptance <criterion|all> [--fixtures <dir>]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qeec/configspace.hpp"
#include "qeec/encoder.hpp"
#include "qeec/errors.hpp"
#include "qeec/integrals.hpp"
#include "qeec/mitigation.hpp"
#include "qeec/pauli.hpp"
#include "qeec/reference.hpp"
#include "qeec/simulator.hpp"
#include "qeec/vqe.hpp"

using namespace qeec;
using nlohmann::json;

namespace {

std::string g_fixtures = "fixtures";

std::string slurp(const std::string& relative) {
    std::ifstream in(g_fixtures + "/" + relative, std::ios::binary);
    if (!in) throw InputError("missing fixture: " + relative);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

bool g_ok = true;
void detail(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    std::printf("  ");
    std::vprintf(fmt, args);
    std::printf("\n");
    va_end(args);
}
void fail_detail(const char* fmt, ...) {
    g_ok = false;
    va_list args;
    va_start(args, fmt);
    std::printf("  FAIL: ");
    std::vprintf(fmt, args);
    std::printf("\n");
    va_end(args);
}

PauliOperator compile_fixture(const std::string& integrals,
                              const std::string& filter_file,
                              ConfigSpace* out_space = nullptr,
                              IntegralTable* out_spin = nullptr) {
    auto table = load_json_integrals(slurp(integrals));
    auto filter = SymmetryFilter::from_json(slurp(filter_file));
    auto spin = to_spin_orbitals(table, filter.layout);
    auto space = ConfigSpace::enumerate(filter);
    auto op = build_hamiltonian(space, spin);
    if (out_space != nullptr) *out_space = space;
    if (out_spin != nullptr) *out_spin = spin;
    return op;
}

ConfigSpace two_qubit_space() {
    SymmetryFilter f;
    f.n_spin_orbitals = 4;
    f.n_particles = 2;
    f.sz = {{1, 1}};
    f.layout = OrbitalLayout::blocked(2);
    return ConfigSpace::enumerate(f);
}

IntegralTable random_spin_table(std::mt19937_64& rng, std::uint32_t n) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    IntegralTable t;
    t.n = n;
    t.spin_basis = true;
    t.convention = Convention::physicist;
    t.constant = unit(rng);
    t.one_body = Eigen::MatrixXd::Zero(n, n);
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = p; q < n; ++q)
            t.one_body(p, q) = t.one_body(q, p) = unit(rng);
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
            for (std::uint32_t r = 0; r < n; ++r)
                for (std::uint32_t s = p; s < n; ++s) {
                    if (s == p && r > q) continue;
                    double v = 0.3 * unit(rng);
                    t.two_body.push_back({p, q, r, s, v});
                    if (!(p == s && q == r))
                        t.two_body.push_back({s, r, q, p, v});
                }
    return t;
}

// ------------------------------------------------------------ criteria

// Six excitation operators on the two-qubit register: factorization
// strings and coefficient-exact Pauli expansions.
bool criterion1() {
    Timer timer;
    auto space = two_qubit_space();
    struct Row {
        std::uint32_t p, q;
        const char* factor;
        std::vector<std::pair<const char*, cplx>> expansion;
    };
    const std::vector<Row> rows = {
        {1, 0, "I_1 Q+_0", {{"IX", {0.5, 0}}, {"IY", {0, -0.5}}}},
        {3, 2, "Q+_1 I_0", {{"XI", {0.5, 0}}, {"YI", {0, -0.5}}}},
        {0, 0, "I_1 N0_0", {{"II", {0.5, 0}}, {"IZ", {0.5, 0}}}},
        {1, 1, "I_1 N1_0", {{"II", {0.5, 0}}, {"IZ", {-0.5, 0}}}},
        {2, 2, "N0_1 I_0", {{"II", {0.5, 0}}, {"ZI", {0.5, 0}}}},
        {3, 3, "N1_1 I_0", {{"II", {0.5, 0}}, {"ZI", {-0.5, 0}}}},
    };
    for (const auto& row : rows) {
        auto t = build_transition(space, row.p, row.q);
        auto factored = entry_factorization(space, t);
        if (!factored || *factored != row.factor) {
            fail_detail("operator (%u,%u): factorization %s, wanted %s",
                        row.p, row.q,
                        factored ? factored->c_str() : "(none)", row.factor);
            continue;
        }
        auto pauli = transition_to_pauli(space, t);
        if (pauli.size() != row.expansion.size())
            fail_detail("operator (%u,%u): %zu terms, wanted %zu", row.p,
                        row.q, pauli.size(), row.expansion.size());
        for (const auto& [label, want] : row.expansion) {
            auto got = pauli.coeff(PauliString::parse(label));
            if (got != want)
                fail_detail("operator (%u,%u) %s: (%g,%g), wanted (%g,%g)",
                            row.p, row.q, label, got.real(), got.imag(),
                            want.real(), want.imag());
        }
        detail("E(%u,%u) = %s, expansion exact", row.p, row.q, row.factor);
    }
    double s = timer.seconds();
    detail("%.3f s (cap 1 s)", s);
    if (s >= 1.0) fail_detail("runtime over the 1 s cap");
    return g_ok;
}

bool check_published(const char* key, double tolerance) {
    auto expected = json::parse(slurp("expected/published_operators.json"));
    const auto& blk = expected.at(key);
    Timer timer;
    auto op = compile_fixture(blk.at("integrals").get<std::string>(),
                              blk.at("filter_file").get<std::string>());
    double s = timer.seconds();
    unsigned qubits = blk.at("qubits").get<unsigned>();
    if (op.qubit_count() != qubits)
        fail_detail("register is %u qubits, wanted %u", op.qubit_count(),
                    qubits);
    const auto& terms = blk.at("terms");
    auto count = op.count_above(1e-8);
    if (count != terms.size())
        fail_detail("%zu significant terms, wanted %zu", count, terms.size());
    double worst = 0.0;
    std::string worst_label;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        double got = op.coeff(PauliString::parse(it.key())).real();
        double delta = std::abs(got - it.value().get<double>());
        if (delta > worst) {
            worst = delta;
            worst_label = it.key();
        }
        if (delta >= tolerance)
            fail_detail("%s: %.8f, published %.8f", it.key().c_str(), got,
                        it.value().get<double>());
    }
    detail("%zu terms on %u qubits, worst |delta| %.2e (%s), %.3f s",
           terms.size(), qubits, worst, worst_label.c_str(), s);
    return g_ok;
}

// Published two-qubit operator from the restricted fixture.
bool criterion2() {
    Timer timer;
    bool ok = check_published("h2_sto3g_restricted", 1e-6);
    if (timer.seconds() >= 1.0) {
        fail_detail("runtime over the 1 s cap");
        ok = false;
    }
    return ok;
}

// Published three-qubit operator from the unrestricted fixture.
bool criterion3() { return check_published("h2_sto3g_unrestricted", 1e-6); }

// Published four-qubit operator from the larger-basis fixture, plus the
// descending-index labeling convention of the rendered term list.
bool criterion4() {
    bool ok = check_published("h2_631g", 1e-6);
    auto expected = json::parse(slurp("expected/published_operators.json"));
    const auto& blk = expected.at("h2_631g");
    auto op = compile_fixture(blk.at("integrals").get<std::string>(),
                              blk.at("filter_file").get<std::string>());
    // leftmost letter of each printed label is the highest qubit; the two
    // single-Z terms carry distinct published weights, so a mirrored
    // labeling convention cannot slip through
    double ziii = blk.at("terms").at("ZIII").get<double>();
    double iiiz = blk.at("terms").at("IIIZ").get<double>();
    double got_hi = op.coeff(PauliString::parse("ZIII")).real();
    double got_lo = op.coeff(PauliString::parse("IIIZ")).real();
    if (std::abs(got_hi - ziii) >= 1e-6 || std::abs(got_lo - iiiz) >= 1e-6) {
        fail_detail("label orientation: ZIII reads %.6f (published %.6f), "
                    "IIIZ reads %.6f (published %.6f)",
                    got_hi, ziii, got_lo, iiiz);
        ok = false;
    } else {
        detail("labels use descending qubit order (ZIII %.6f vs IIIZ %.6f)",
               got_hi, got_lo);
    }
    return ok;
}

// Register widths and term counts across the published molecule table.
bool criterion5() {
    auto plan = json::parse(slurp("expected/table3_counts.json"));
    double threshold = plan.at("count_threshold").get<double>();
    std::string caveat = plan.at("caveat").get<std::string>();
    bool printed_caveat = false;
    for (const auto& row : plan.at("rows")) {
        auto key = row.at("key").get<std::string>();
        auto report = term_count_report(
            load_json_integrals(
                slurp(row.at("integrals").get<std::string>())),
            SymmetryFilter::from_json(
                slurp(row.at("filter_file").get<std::string>())),
            threshold);
        std::vector<std::size_t> computed = {
            report.full_register_qubits, report.full_register_terms,
            report.subspace_qubits, report.subspace_terms};
        auto published = row.at("published").get<std::vector<std::size_t>>();
        auto reference = row.at("reference").get<std::vector<std::size_t>>();
        auto match = row.at("match").get<std::vector<bool>>();

        // qubit columns must agree with the published table unconditionally
        if (computed[0] != published[0] || computed[2] != published[2])
            fail_detail("%s: qubit columns (%zu, %zu), published (%zu, %zu)",
                        key.c_str(), computed[0], computed[2], published[0],
                        published[2]);
        // every column must reproduce the frozen reference values
        for (std::size_t i = 0; i < 4; ++i)
            if (computed[i] != reference[i])
                fail_detail("%s: column %zu is %zu, reference %zu",
                            key.c_str(), i, computed[i], reference[i]);
        // term columns: exact where the reference matched the publication
        bool row_caveat = false;
        for (std::size_t i : {std::size_t{1}, std::size_t{3}}) {
            if (match[i]) {
                if (computed[i] != published[i])
                    fail_detail("%s: column %zu is %zu, published %zu",
                                key.c_str(), i, computed[i], published[i]);
            } else if (computed[i] != published[i]) {
                row_caveat = true;
            }
        }
        if (row_caveat) {
            detail("%-12s computed (%zu, %zu, %zu, %zu) vs published "
                   "(%zu, %zu, %zu, %zu) -- see caveat",
                   key.c_str(), computed[0], computed[1], computed[2],
                   computed[3], published[0], published[1], published[2],
                   published[3]);
            if (!printed_caveat) {
                detail("caveat: %s", caveat.c_str());
                printed_caveat = true;
            }
        } else {
            detail("%-12s (%zu, %zu, %zu, %zu) matches", key.c_str(),
                   computed[0], computed[1], computed[2], computed[3]);
        }
    }
    return g_ok;
}

// Randomized spectrum equivalence against the full-register encoding and
// element fidelity against the determinant oracle.
bool criterion6() {
    Timer timer;
    std::mt19937_64 rng(606);
    double worst_element = 0.0, worst_eval = 0.0;
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<std::uint32_t> pick_n(2, 8);
        std::uint32_t n = pick_n(rng);
        std::uniform_int_distribution<std::uint32_t> pick_m(
            1, std::min(4u, n - 1));
        std::uint32_t m = pick_m(rng);

        SymmetryFilter f;
        f.n_spin_orbitals = n;
        f.n_particles = m;
        if (n % 2 == 0 && done % 3 == 0 && m >= 2) {
            std::uint32_t ma = m / 2;
            f.sz = {{ma, m - ma}};
            f.layout = OrbitalLayout::blocked(n / 2);
        }
        ConfigSpace space;
        try {
            space = ConfigSpace::enumerate(f);
        } catch (const InputError&) {
            continue;  // per-spin split not realizable, e.g. m_a > n/2
        }
        ++done;
        auto spin = random_spin_table(rng, n);
        auto op = build_hamiltonian(space, spin);
        auto dense = op.to_matrix();
        auto ci = ci_matrix(space.configs(), spin);
        for (std::size_t a = 0; a < space.size(); ++a)
            for (std::size_t b = 0; b < space.size(); ++b)
                worst_element =
                    std::max(worst_element,
                             std::abs(dense(a, b) - cplx(ci(a, b), 0.0)));

        auto jw = jw_encode(spin);
        auto projected = restrict_to(jw.to_matrix(), space.configs());
        // the admitted block sits in the first |F| basis states; the rest
        // of the register is untouched padding
        const long fdim = static_cast<long>(space.size());
        auto qee_evals =
            eigenvalues_ascending(dense.topLeftCorner(fdim, fdim));
        auto jw_evals = eigenvalues_ascending(projected);
        if (qee_evals.size() != jw_evals.size()) {
            fail_detail("spectrum sizes disagree: %zu vs %zu",
                        qee_evals.size(), jw_evals.size());
            return g_ok;
        }
        for (std::size_t i = 0; i < qee_evals.size(); ++i)
            worst_eval = std::max(worst_eval,
                                  std::abs(qee_evals[i] - jw_evals[i]));
    }
    detail("200 instances: worst element |delta| %.2e (cap 1e-10), worst "
           "eigenvalue |delta| %.2e (cap 1e-9)",
           worst_element, worst_eval);
    if (worst_element >= 1e-10) fail_detail("element fidelity exceeded");
    if (worst_eval >= 1e-9) fail_detail("spectrum deviation exceeded");
    double s = timer.seconds();
    detail("%.1f s (cap 120 s)", s);
    if (s >= 120.0) fail_detail("runtime over the 2 min cap");
    return g_ok;
}

// Transition-count law and pre-merge Pauli term accounting.
bool criterion7() {
    Timer timer;
    // exhaustive counting law
    for (std::uint32_t n = 2; n <= 12; ++n) {
        for (std::uint32_t m = 1; m < n; ++m) {
            SymmetryFilter f;
            f.n_spin_orbitals = n;
            f.n_particles = m;
            auto space = ConfigSpace::enumerate(f);
            auto diag_want = std::stoull(binomial_string(n - 1, m - 1));
            auto off_want =
                n >= 2 ? std::stoull(binomial_string(n - 2, m - 1)) : 0;
            unsigned long long total = 0;
            for (std::uint32_t p = 0; p < n; ++p)
                for (std::uint32_t q = 0; q < n; ++q) {
                    auto count = build_transition(space, p, q).count();
                    total += count;
                    auto want = (p == q) ? diag_want : off_want;
                    if (count != want) {
                        fail_detail("N=%u m=%u (%u,%u): %zu transitions, "
                                    "wanted %llu",
                                    n, m, p, q, count, want);
                        return g_ok;
                    }
                }
            unsigned long long formula =
                n * diag_want +
                static_cast<unsigned long long>(n) * (n - 1) * off_want;
            if (total != formula) {
                fail_detail("N=%u m=%u: total %llu, formula %llu", n, m,
                            total, formula);
            }
            // the stated growth bound, constant 2, for the small-m branch
            if (m <= n / 2) {
                double mfac = 1.0;
                for (std::uint32_t k = 2; k < m; ++k) mfac *= k;
                double bound = 2.0 * std::pow(double(n), double(m) + 1) /
                               mfac;
                if (double(total) > bound)
                    fail_detail("N=%u m=%u: %llu transitions exceed the "
                                "N^(m+1)/(m-1)! bound %g",
                                n, m, total, bound);
            }
        }
    }
    detail("transition counts match C(N-1,m-1) / C(N-2,m-1) for N <= 12");

    // pre-merge term accounting on random instances
    std::mt19937_64 rng(707);
    for (const auto& [n, m] : std::vector<std::pair<unsigned, unsigned>>{
             {4, 2}, {5, 2}, {6, 3}, {7, 3}, {8, 4}}) {
        SymmetryFilter f;
        f.n_spin_orbitals = n;
        f.n_particles = m;
        auto space = ConfigSpace::enumerate(f);
        auto spin = random_spin_table(rng, n);
        EncodeStats stats{};
        build_hamiltonian(space, spin, &stats);
        std::size_t predicted = 0;
        for (auto fa : space.configs())
            for (auto fb : space.configs())
                if (std::popcount(fa ^ fb) <= 4) ++predicted;
        std::size_t raw_predicted = predicted << space.qubit_count();
        if (stats.raw_terms != raw_predicted ||
            stats.nonzero_elements != predicted)
            fail_detail("N=%u m=%u: raw %zu (elements %zu), analytic %zu "
                        "(elements %zu)",
                        n, m, stats.raw_terms, stats.nonzero_elements,
                        raw_predicted, predicted);
        else
            detail("N=%u m=%u: raw pre-merge terms %zu = %zu elements x 2^Q",
                   n, m, stats.raw_terms, predicted);
    }
    double s = timer.seconds();
    detail("%.1f s (cap 60 s)", s);
    if (s >= 60.0) fail_detail("runtime over the 1 min cap");
    return g_ok;
}

// Headline register width for 10 electrons in 402 spin-orbitals.
bool criterion8() {
    auto q = qubit_count_for(402, 10);
    detail("C(402,10) = %s -> %u qubits", binomial_string(402, 10).c_str(),
           q);
    if (q != 65) fail_detail("expected 65 qubits, got %u", q);
    return g_ok;
}

// Noiseless variational search reaches chemical accuracy on all three
// published operators with at most three seeded restarts.
bool criterion9() {
    auto expected = json::parse(slurp("expected/published_operators.json"));
    for (const auto& key :
         {"h2_sto3g_restricted", "h2_sto3g_unrestricted", "h2_631g"}) {
        Timer timer;
        const auto& blk = expected.at(key);
        auto op = compile_fixture(blk.at("integrals").get<std::string>(),
                                  blk.at("filter_file").get<std::string>());
        double exact = diagonalize(op).front();
        AnsatzSpec spec;
        spec.qubits = op.qubit_count();
        spec.reps = 2;
        OptimizerConfig cfg;
        cfg.seed = 42;
        cfg.max_iterations = 600;
        cfg.restarts = 3;
        cfg.target = exact + 1.6e-3;
        auto result = minimize(op, spec, cfg, Backend::exact());
        double error = result.energy - exact;
        double s = timer.seconds();
        detail("%-24s error %+.2e Ha, %zu starts, %zu evaluations, %.1f s",
               key, error, result.starts, result.evaluations, s);
        if (error > 1.6e-3)
            fail_detail("%s missed chemical accuracy by %.2e", key,
                        error - 1.6e-3);
        if (result.starts > 4)
            fail_detail("%s used %zu starts (1 + restarts cap 3)", key,
                        result.starts);
        if (s >= 60.0) fail_detail("%s over the 1 min cap", key);
    }
    return g_ok;
}

// Statistical acceptance of the noise-amplified extrapolation pipeline.
bool criterion10() {
    Timer timer;
    auto expected = json::parse(slurp("expected/published_operators.json"));
    const auto& blk = expected.at("h2_631g");
    auto op = compile_fixture(blk.at("integrals").get<std::string>(),
                              blk.at("filter_file").get<std::string>());
    double exact = diagonalize(op).front();
    auto nm = NoiseModel::from_json(slurp("noise/santiago.json"));

    AnsatzSpec spec;
    spec.qubits = op.qubit_count();
    spec.reps = 2;

    auto run = [&](std::uint64_t seed, std::uint64_t shots) {
        OptimizerConfig cfg;
        cfg.seed = 1;  // identical pre-optimized angles for every family
        cfg.max_iterations = 6000;
        cfg.target = exact + 1e-9;  // converge; leave no angle bias behind
        ZneOptions options;
        options.redundant_pair_counts = {0, 3, 6};
        options.shots = shots;
        options.repeats = 10;
        options.seed = seed;
        options.mode = ZneMode::fixed_angles;
        return zne_pipeline(op, spec, cfg, nm, options);
    };

    // primary protocol run: 10 repeats x 1e5 shots, CNOT counts {6,12,18}
    auto primary = run(1, 100000);
    double err = std::abs(primary.fit.intercept - exact);
    double two_sigma = 2.0 * primary.fit.sigma_intercept;
    for (const auto& p : primary.points)
        detail("cnots %2.0f: mean %+.6f, repeat stddev %.2e", p.cnots,
               p.mean, p.stddev);
    detail("intercept %+.6f vs exact %+.6f: |error| %.2e, 2 sigma %.2e",
           primary.fit.intercept, exact, err, two_sigma);
    if (err > two_sigma)
        fail_detail("intercept misses the exact ground energy beyond 2 "
                    "sigma");

    // shot-scaling: median |error| over five seed families must improve
    // from 1e4 to 1e5 shots
    std::vector<double> err_low, err_high;
    for (std::uint64_t family = 1; family <= 5; ++family) {
        err_low.push_back(
            std::abs(run(family, 10000).fit.intercept - exact));
        err_high.push_back(
            std::abs(run(family, 100000).fit.intercept - exact));
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    double low = median(err_low), high = median(err_high);
    detail("median |error| over 5 seed families: %.2e at 1e4 shots, %.2e "
           "at 1e5 shots",
           low, high);
    if (high >= low)
        fail_detail("no improvement from 1e4 to 1e5 shots in the median");
    double s = timer.seconds();
    detail("%.1f s (cap 600 s)", s);
    if (s >= 600.0) fail_detail("runtime over the 10 min cap");
    return g_ok;
}

// Closed-form regression of the weighted-least-squares intercept.
bool criterion11() {
    Timer timer;
    std::vector<ExtrapolationPoint> linear = {
        {6, -1.2 + 6 * 0.015, 0.004},
        {12, -1.2 + 12 * 0.015, 0.002},
        {18, -1.2 + 18 * 0.015, 0.006},
    };
    auto fit = extrapolate(linear);
    double worst = std::abs(fit.intercept - (-1.2));
    worst = std::max(worst, std::abs(fit.slope - 0.015));
    for (double r : fit.residuals) worst = std::max(worst, std::abs(r));
    detail("exact linear data: worst deviation %.2e (cap 1e-12)", worst);
    if (worst >= 1e-12) fail_detail("linear regression not exact");

    double sgm = 0.0025;
    std::vector<ExtrapolationPoint> equal = {
        {6, -0.9, sgm}, {12, -0.7, sgm}, {18, -0.5, sgm}};
    auto efit = extrapolate(equal);
    double want = sgm * std::sqrt(7.0 / 3.0);
    detail("equal-sigma intercept sigma %.12e vs closed form %.12e",
           efit.sigma_intercept, want);
    if (std::abs(efit.sigma_intercept - want) >= 1e-12)
        fail_detail("closed-form sigma mismatch");
    double s = timer.seconds();
    if (s >= 1.0) fail_detail("runtime over the 1 s cap");
    return g_ok;
}

// Inverse-confusion recovery of forward-noised distributions.
bool criterion12() {
    Timer timer;
    std::mt19937_64 rng(1212);
    std::uniform_real_distribution<double> small(0.0, 0.08);
    std::uniform_real_distribution<double> mass(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t qubits = 1 + (trial % 5);
        NoiseModel nm = NoiseModel::ideal(qubits);
        for (auto& pair : nm.readout) pair = {small(rng), small(rng)};
        auto cal = CalibrationMatrix::from_noise(nm, qubits);
        Eigen::VectorXd p(1 << qubits);
        for (int i = 0; i < p.size(); ++i) p(i) = mass(rng);
        p /= p.sum();
        Eigen::VectorXd recovered = cal.mitigate(cal.full() * p);
        worst = std::max(worst, (recovered - p).cwiseAbs().maxCoeff());
    }
    detail("100 random cases: worst recovery error %.2e (cap 1e-10)", worst);
    if (worst >= 1e-10) fail_detail("round-trip recovery too loose");
    double s = timer.seconds();
    if (s >= 1.0) fail_detail("runtime over the 1 s cap");
    return g_ok;
}

bool run_criterion(int number) {
    g_ok = true;
    bool ok = false;
    try {
        switch (number) {
            case 1: ok = criterion1(); break;
            case 2: ok = criterion2(); break;
            case 3: ok = criterion3(); break;
            case 4: ok = criterion4(); break;
            case 5: ok = criterion5(); break;
            case 6: ok = criterion6(); break;
            case 7: ok = criterion7(); break;
            case 8: ok = criterion8(); break;
            case 9: ok = criterion9(); break;
            case 10: ok = criterion10(); break;
            case 11: ok = criterion11(); break;
            case 12: ok = criterion12(); break;
            default:
                std::printf("unknown criterion %d\n", number);
                return false;
        }
    } catch (const std::exception& e) {
        std::printf("  EXCEPTION: %s\n", e.what());
        ok = false;
    }
    std::printf("criterion %d: %s\n", number, ok ? "PASS" : "FAIL");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    for (int i = 2; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--fixtures") g_fixtures = argv[i + 1];

    bool ok = true;
    if (which == "all") {
        for (int n = 1; n <= 12; ++n) ok = run_criterion(n) && ok;
    } else {
        ok = run_criterion(std::stoi(which));
    }
    return ok ? 0 : 1;
}

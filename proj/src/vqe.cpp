// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "qeec/errors.hpp"

namespace qeec {

Circuit build_ansatz(const AnsatzSpec& spec,
                     const std::vector<double>& parameters) {
    if (spec.qubits == 0) throw InputError("ansatz needs at least one qubit");
    if (parameters.size() != spec.parameter_count())
        throw InputError("ansatz expects " +
                         std::to_string(spec.parameter_count()) +
                         " parameters, got " +
                         std::to_string(parameters.size()));
    const std::size_t originals = spec.original_cnot_count();
    if (originals == 0 && spec.redundant_cnot_pairs > 0)
        throw InputError("redundant pairs need an entangling chain");

    Circuit c;
    c.qubits = spec.qubits;
    std::size_t idx = 0;
    for (std::uint32_t w = 0; w < spec.qubits; ++w)
        c.ry(w, parameters[idx++]);
    std::size_t seen = 0, placed = 0;
    for (std::uint32_t rep = 0; rep < spec.reps; ++rep) {
        for (std::uint32_t w = 0; w + 1 < spec.qubits; ++w) {
            c.cnot(w, w + 1);
            ++seen;
            // spread pairs evenly over the chain: after j originals,
            // floor(j*pairs/originals) pairs have been inserted
            std::size_t want = seen * spec.redundant_cnot_pairs / originals;
            while (placed < want) {
                c.cnot(w, w + 1);
                c.cnot(w, w + 1);
                ++placed;
            }
        }
        for (std::uint32_t w = 0; w < spec.qubits; ++w)
            c.ry(w, parameters[idx++]);
    }
    return c;
}

namespace {

struct Objective {
    const PauliOperator& ham;
    const AnsatzSpec& spec;
    const Backend& backend;
    std::mt19937_64& rng;
    VqeResult& result;

    double operator()(const std::vector<double>& x) {
        Circuit c = build_ansatz(spec, x);
        double e = estimate_energy(c, ham, backend, rng()).energy;
        ++result.evaluations;
        result.trajectory.push_back(e);
        if (result.trajectory.size() == 1 || e < result.energy) {
            result.energy = e;
            result.parameters = x;
        }
        return e;
    }
};

// Nelder-Mead descent with the dimension-adaptive coefficients of Gao and
// Han; the initial simplex spans initial_step along every axis and the
// search stops when the simplex collapses below the tolerance radius.
void local_minimize(Objective& obj, std::vector<double> x0,
                    const OptimizerConfig& cfg) {
    const std::size_t n = x0.size();
    const std::size_t budget_end =
        obj.result.evaluations + cfg.max_iterations;
    auto evals_left = [&] {
        return obj.result.evaluations < budget_end;
    };
    auto reached = [&] {
        return cfg.target && obj.result.energy <= *cfg.target;
    };

    const double nd = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = n >= 2 ? 1.0 + 2.0 / nd : 2.0;
    const double beta = n >= 2 ? 0.75 - 0.5 / nd : 0.5;
    const double delta = n >= 2 ? 1.0 - 1.0 / nd : 0.5;

    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    xs.push_back(x0);
    if (!evals_left() || reached()) return;
    fs.push_back(obj(x0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = x0;
        x[i] += cfg.initial_step;
        if (!evals_left() || reached()) return;
        xs.push_back(x);
        fs.push_back(obj(x));
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xt(n);
    while (evals_left() && !reached()) {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return fs[a] < fs[b];
                         });
        const std::size_t best = order[0], worst = order[n];

        double spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            double d2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                double d = xs[i][j] - xs[best][j];
                d2 += d * d;
            }
            spread = std::max(spread, std::sqrt(d2));
        }
        if (spread < cfg.tolerance) return;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += xs[i][j];
        }
        for (double& v : centroid) v /= nd;

        for (std::size_t j = 0; j < n; ++j)
            xr[j] = centroid[j] + alpha * (centroid[j] - xs[worst][j]);
        if (!evals_left() || reached()) return;
        double fr = obj(xr);

        if (fr < fs[order[0]]) {
            // expand past the reflection
            for (std::size_t j = 0; j < n; ++j)
                xt[j] = centroid[j] + gamma * (xr[j] - centroid[j]);
            if (!evals_left() || reached()) return;
            double fe = obj(xt);
            if (fe < fr) {
                xs[worst] = xt;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
            continue;
        }
        if (fr < fs[order[n - 1]]) {
            xs[worst] = xr;
            fs[worst] = fr;
            continue;
        }
        // contract, outside or inside of the worst point
        const bool outside = fr < fs[worst];
        for (std::size_t j = 0; j < n; ++j)
            xt[j] = outside
                        ? centroid[j] + beta * (xr[j] - centroid[j])
                        : centroid[j] - beta * (centroid[j] - xs[worst][j]);
        if (!evals_left() || reached()) return;
        double fc = obj(xt);
        if (fc < std::min(fr, fs[worst])) {
            xs[worst] = xt;
            fs[worst] = fc;
            continue;
        }
        // shrink toward the incumbent
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j)
                xs[i][j] = xs[best][j] + delta * (xs[i][j] - xs[best][j]);
            if (!evals_left() || reached()) return;
            fs[i] = obj(xs[i]);
        }
    }
}

}  // namespace

VqeResult minimize(const PauliOperator& hamiltonian, const AnsatzSpec& spec,
                   const OptimizerConfig& config, const Backend& backend) {
    if (hamiltonian.qubit_count() != spec.qubits)
        throw InputError("Hamiltonian and ansatz qubit counts disagree");
    if (config.max_iterations == 0)
        throw InputError("optimizer needs at least one iteration");

    VqeResult result;
    std::mt19937_64 rng(config.seed);
    Objective obj{hamiltonian, spec, backend, rng, result};

    std::vector<double> x0(spec.parameter_count(), 0.0);
    local_minimize(obj, x0, config);
    std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                 std::numbers::pi);
    while (config.target && result.energy > *config.target &&
           result.starts <= config.restarts) {
        ++result.starts;
        for (double& v : x0) v = angle(rng);
        local_minimize(obj, x0, config);
    }
    return result;
}

}  // namespace qeec

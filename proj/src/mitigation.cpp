// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#include "qeec/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qeec/errors.hpp"

namespace qeec {

CalibrationMatrix CalibrationMatrix::from_noise(const NoiseModel& nm,
                                                std::uint32_t qubits) {
    CalibrationMatrix c;
    c.tensor_ = true;
    c.qubits_ = qubits;
    c.pairs_.reserve(qubits);
    for (std::uint32_t w = 0; w < qubits; ++w) c.pairs_.push_back(nm.read(w));
    return c;
}

CalibrationMatrix CalibrationMatrix::from_full(
    const Eigen::MatrixXd& confusion) {
    if (confusion.rows() != confusion.cols() || confusion.rows() == 0)
        throw InputError("confusion matrix must be square");
    const long dim = confusion.rows();
    if ((dim & (dim - 1)) != 0)
        throw InputError("confusion matrix dimension must be a power of two");
    for (long j = 0; j < dim; ++j) {
        double s = confusion.col(j).sum();
        if (std::abs(s - 1.0) > 1e-6)
            throw InputError("confusion matrix columns must sum to 1");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(confusion);
    double cond = svd.singularValues()(0) /
                  svd.singularValues()(svd.singularValues().size() - 1);
    if (!std::isfinite(cond) || cond > 1e8)
        throw NumericError("confusion matrix is ill-conditioned");

    CalibrationMatrix c;
    c.tensor_ = false;
    c.qubits_ = 0;
    while ((1l << c.qubits_) < dim) ++c.qubits_;
    c.full_ = confusion;
    c.inverse_ = confusion.inverse();
    return c;
}

Eigen::MatrixXd CalibrationMatrix::full() const {
    if (!tensor_) return full_;
    Eigen::MatrixXd m = Eigen::MatrixXd::Ones(1, 1);
    for (std::uint32_t w = 0; w < qubits_; ++w) {
        // grow by one qubit: kron(single, m) keeps qubit w at bit w
        Eigen::Matrix2d s;
        s << 1.0 - pairs_[w].p1_given_0, pairs_[w].p0_given_1,
            pairs_[w].p1_given_0, 1.0 - pairs_[w].p0_given_1;
        Eigen::MatrixXd next(m.rows() * 2, m.cols() * 2);
        next << s(0, 0) * m, s(0, 1) * m, s(1, 0) * m, s(1, 1) * m;
        m = std::move(next);
    }
    return m;
}

Eigen::VectorXd CalibrationMatrix::mitigate(
    const Eigen::VectorXd& frequencies) const {
    if (frequencies.size() != (1l << qubits_))
        throw InputError("frequency vector dimension mismatch");
    if (!tensor_) return inverse_ * frequencies;
    Eigen::VectorXd p = frequencies;
    for (std::uint32_t w = 0; w < qubits_; ++w) {
        const ReadoutPair& r = pairs_[w];
        double det = 1.0 - r.p1_given_0 - r.p0_given_1;
        if (std::abs(det) < 1e-8)
            throw NumericError("readout confusion matrix is singular");
        double i00 = (1.0 - r.p0_given_1) / det, i01 = -r.p0_given_1 / det;
        double i10 = -r.p1_given_0 / det, i11 = (1.0 - r.p1_given_0) / det;
        const std::uint64_t bit = 1ull << w;
        for (std::uint64_t i = 0;
             i < static_cast<std::uint64_t>(p.size()); ++i) {
            if (i & bit) continue;
            double a = p[static_cast<long>(i)];
            double b = p[static_cast<long>(i | bit)];
            p[static_cast<long>(i)] = i00 * a + i01 * b;
            p[static_cast<long>(i | bit)] = i10 * a + i11 * b;
        }
    }
    return p;
}

Eigen::VectorXd CalibrationMatrix::mitigate(const ShotCounts& counts) const {
    if (counts.total == 0) throw InputError("empty shot counts");
    Eigen::VectorXd freq = Eigen::VectorXd::Zero(1l << qubits_);
    for (const auto& [b, n] : counts.counts) {
        if (b >= (1ull << qubits_))
            throw InputError("shot outcome outside register");
        freq[static_cast<long>(b)] =
            static_cast<double>(n) / static_cast<double>(counts.total);
    }
    return mitigate(freq);
}

Eigen::VectorXd CalibrationMatrix::clipped(const Eigen::VectorXd& quasi) {
    Eigen::VectorXd p = quasi.cwiseMax(0.0);
    double s = p.sum();
    if (s <= 0.0) throw NumericError("quasi-probabilities sum to zero");
    return p / s;
}

ExtrapolationResult extrapolate(const std::vector<ExtrapolationPoint>& pts) {
    if (pts.size() < 2)
        throw InputError("extrapolation needs at least two points");
    std::set<double> distinct;
    for (const auto& p : pts) {
        if (p.sigma <= 0.0)
            throw InputError("extrapolation sigma must be positive");
        distinct.insert(p.cnots);
    }
    if (distinct.size() < 2)
        throw InputError("extrapolation needs two distinct CNOT counts");

    double s0 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const auto& p : pts) {
        double w = 1.0 / (p.sigma * p.sigma);
        s0 += w;
        sx += w * p.cnots;
        sxx += w * p.cnots * p.cnots;
        sy += w * p.energy;
        sxy += w * p.cnots * p.energy;
    }
    double delta = s0 * sxx - sx * sx;
    if (delta <= 0.0) throw NumericError("degenerate extrapolation system");

    ExtrapolationResult r;
    r.intercept = (sxx * sy - sx * sxy) / delta;
    r.slope = (s0 * sxy - sx * sy) / delta;
    r.sigma_intercept = std::sqrt(sxx / delta);
    r.residuals.reserve(pts.size());
    for (const auto& p : pts)
        r.residuals.push_back(p.energy - (r.intercept + r.slope * p.cnots));
    return r;
}

ZneOutput zne_pipeline(const PauliOperator& hamiltonian,
                       const AnsatzSpec& base_spec,
                       const OptimizerConfig& opt, const NoiseModel& nm,
                       const ZneOptions& options) {
    if (options.redundant_pair_counts.size() < 2)
        throw InputError("noise amplification needs at least two CNOT counts");
    if (options.repeats < 2)
        throw InputError("per-point statistics need at least two repeats");

    ZneOutput out;
    std::mt19937_64 seeder(options.seed);

    if (options.mode == ZneMode::fixed_angles) {
        // one noiseless optimization fixes the angles for every noise level
        OptimizerConfig pre = opt;
        pre.seed = seeder();
        VqeResult base =
            minimize(hamiltonian, base_spec, pre, Backend::exact());
        out.angles = base.parameters;
    }

    for (std::uint32_t pairs : options.redundant_pair_counts) {
        AnsatzSpec spec = base_spec;
        spec.redundant_cnot_pairs = pairs;
        std::vector<double> angles = out.angles;
        if (options.mode == ZneMode::full_vqe) {
            OptimizerConfig per = opt;
            per.seed = seeder();
            VqeResult res =
                minimize(hamiltonian, spec, per,
                         Backend::noisy_backend(nm, options.shots,
                                                options.mitigate_readout));
            angles = res.parameters;
            if (out.angles.empty()) out.angles = angles;
        }
        Circuit c = build_ansatz(spec, angles);
        Backend backend = Backend::noisy_backend(nm, options.shots,
                                                 options.mitigate_readout);
        ZnePoint point;
        point.redundant_pairs = pairs;
        point.cnots = static_cast<double>(c.cnot_count());
        point.energies.reserve(options.repeats);
        for (std::size_t rep = 0; rep < options.repeats; ++rep)
            point.energies.push_back(
                estimate_energy(c, hamiltonian, backend, seeder()).energy);
        double mean = 0;
        for (double e : point.energies) mean += e;
        mean /= static_cast<double>(point.energies.size());
        double ss = 0;
        for (double e : point.energies) ss += (e - mean) * (e - mean);
        point.mean = mean;
        point.stddev =
            std::sqrt(ss / static_cast<double>(point.energies.size() - 1));
        out.points.push_back(std::move(point));
    }

    std::vector<ExtrapolationPoint> pts;
    pts.reserve(out.points.size());
    for (const auto& p : out.points)
        pts.push_back({p.cnots, p.mean, p.stddev});
    out.fit = extrapolate(pts);
    return out;
}

}  // namespace qeec

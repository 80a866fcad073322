// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Measurement-error mitigation by confusion-matrix inversion and linear
// zero-noise extrapolation over CNOT counts with weighted-least-squares
// uncertainty propagation.

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qeec/pauli.hpp"
#include "qeec/simulator.hpp"
#include "qeec/vqe.hpp"

namespace qeec {

class CalibrationMatrix {
  public:
    // tensor product of per-qubit 2x2 confusion matrices from a noise model
    static CalibrationMatrix from_noise(const NoiseModel& nm,
                                        std::uint32_t qubits);
    // full matrix whose column j holds measured frequencies with basis
    // state j prepared
    static CalibrationMatrix from_full(const Eigen::MatrixXd& confusion);

    std::uint32_t qubit_count() const { return qubits_; }
    Eigen::MatrixXd full() const;  // 2^Q x 2^Q, column-stochastic
    // inverse confusion applied to a frequency vector; may go negative
    Eigen::VectorXd mitigate(const Eigen::VectorXd& frequencies) const;
    Eigen::VectorXd mitigate(const ShotCounts& counts) const;
    // clip negatives and renormalize (display variant)
    static Eigen::VectorXd clipped(const Eigen::VectorXd& quasi);

  private:
    bool tensor_ = true;
    std::uint32_t qubits_ = 0;
    std::vector<ReadoutPair> pairs_;
    Eigen::MatrixXd full_;
    Eigen::MatrixXd inverse_;
};

struct ExtrapolationPoint {
    double cnots = 0.0;
    double energy = 0.0;
    double sigma = 0.0;
};

struct ExtrapolationResult {
    double intercept = 0.0;
    double slope = 0.0;
    double sigma_intercept = 0.0;  // error bars are quoted as 2 sigma
    std::vector<double> residuals;
};

// weighted least squares of energy against CNOT count, weights 1/sigma^2;
// sigma_intercept = sqrt(S_xx / delta) with delta = S_0 S_xx - S_x^2
ExtrapolationResult extrapolate(const std::vector<ExtrapolationPoint>& pts);

enum class ZneMode { fixed_angles, full_vqe };

struct ZneOptions {
    std::vector<std::uint32_t> redundant_pair_counts = {0, 3, 6};
    std::uint64_t shots = 100000;
    std::size_t repeats = 10;
    ZneMode mode = ZneMode::fixed_angles;
    std::uint64_t seed = 0;
    bool mitigate_readout = true;
};

struct ZnePoint {
    std::uint32_t redundant_pairs = 0;
    double cnots = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation over repeats
    std::vector<double> energies;
};

struct ZneOutput {
    std::vector<ZnePoint> points;
    ExtrapolationResult fit;
    std::vector<double> angles;  // the measured parameter set
};

ZneOutput zne_pipeline(const PauliOperator& hamiltonian,
                       const AnsatzSpec& base_spec,
                       const OptimizerConfig& opt, const NoiseModel& nm,
                       const ZneOptions& options);

}  // namespace qeec

// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force cross-checks: a configuration-interaction matrix built by
// direct sequential ladder-operator application (independent of the
// compiler's sign rule and operator splitting), and helpers for restricting
// dense operators to a basis subset.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qeec/configspace.hpp"
#include "qeec/integrals.hpp"

namespace qeec {

// <f'|H|f> over the given configurations, H applied one elementary ladder
// operator at a time with below-index parity signs
Eigen::MatrixXd ci_matrix(const std::vector<FermionConfig>& configs,
                          const IntegralTable& spin);

// rows/columns of M picked at the given basis indices, in order
Eigen::MatrixXcd restrict_to(const Eigen::MatrixXcd& m,
                             const std::vector<FermionConfig>& basis);

// ascending eigenvalues of a Hermitian matrix
std::vector<double> eigenvalues_ascending(const Eigen::MatrixXcd& m);

}  // namespace qeec

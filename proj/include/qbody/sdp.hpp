// Copyright 2026 The qbody Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <vector>

#include "qbody/numerics.hpp"
#include "qbody/seesaw.hpp"

namespace qbody {

// Level-1 relaxation of max sum_ij M_ij a_i.b_j over unit vectors:
//   primal: maximize (1/2) tr(Gamma W)  s.t. Gamma >= 0, Gamma_ii = 1
//   dual:   minimize sum(lambda)         s.t. R = -(1/2) W + diag(lambda) >= 0
// with W = [[0, M], [M^T, 0]].

struct SdpCertificate {
  std::size_t m = 0;
  double primal_value = 0.0;
  double dual_value = 0.0;
  RealVector lambda;
  double min_eig_slack = 0.0;
  double gap = 0.0;  // dual - primal
  bool valid = false;
};

/// Constant-diagonal, constant-off-diagonal m x m matrix.
struct StructuredMatrixSpec {
  std::size_t m = 1;
  double p = 0.0;  // diagonal
  double q = 0.0;  // off-diagonal
};

RealMatrix build_W(const BellMatrix& m);

/// (1/2) tr(Gamma W). Throws InfeasiblePointError unless Gamma is symmetric,
/// has unit diagonal within 1e-10 and minimum eigenvalue >= -psd_eps.
double primal_value(const RealMatrix& gamma, const RealMatrix& w, double psd_eps = 1e-9);

/// Gram matrix of the stacked vectors (a_1..a_m, b_1..b_m).
RealMatrix gram_of(const VectorConfiguration& c);

/// Gram matrix of 2m copies of one unit vector (all ones).
RealMatrix all_equal_gram(std::size_t m);

/// Evaluates a dual point. An infeasible lambda gives valid == false, not an exception.
/// primal_value and gap are left at zero; use certify_pair to fill them in.
SdpCertificate dual_certificate(const BellMatrix& m, const RealVector& lambda,
                                double psd_eps = 1e-9);

/// Combines an externally supplied feasible Gamma with a dual point.
SdpCertificate certify_pair(const BellMatrix& m, const RealMatrix& gamma,
                            const RealVector& lambda, double psd_eps = 1e-9);

struct AnalyticCertificate {
  SdpCertificate certificate;
  double gamma_max_w = 0.0;        // largest eigenvalue of W from the structured spectrum of M
  double weyl_lower_bound = 0.0;   // -(1/2) gamma_max_w + min(lambda)
  std::vector<double> m_eigenvalues;
};

/// lambda* = (m/4) 1 against the all-equal-vectors primal point.
AnalyticCertificate analytic_certificate(std::size_t m, double psd_eps = 1e-9);

RealMatrix structured_matrix(const StructuredMatrixSpec& spec);

/// [p + (m-1) q] (p - q)^(m-1)
double structured_determinant(const StructuredMatrixSpec& spec);

/// p + (m-1) q once, then p - q repeated m-1 times.
std::vector<double> structured_eigenvalues(const StructuredMatrixSpec& spec);

}  // namespace qbody

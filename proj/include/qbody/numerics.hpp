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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qbody {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Numerical thresholds shared across modules.
///
/// rank_eps is relative to the largest singular value, psd_eps is an absolute
/// eigenvalue floor and conv_eps is the see-saw value-increase threshold.
struct ToleranceConfig {
  double rank_eps = 1e-8;
  double psd_eps = 1e-9;
  double conv_eps = 1e-10;

  static ToleranceConfig default_profile() { return {}; }
  static ToleranceConfig strict_profile() { return {1e-10, 1e-12, 1e-13}; }

  /// Throws InvalidInputError unless every threshold is strictly positive.
  void validate() const;
};

bool all_finite(const RealMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// Number of singular values above eps * (largest singular value).
std::size_t rank_with_tolerance(const RealMatrix& m, double eps);

/// Ascending eigenvalues of a Hermitian matrix (entrywise tolerance 1e-12).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
std::vector<double> symmetric_eigenvalues(const RealMatrix& m);
double min_symmetric_eigenvalue(const RealMatrix& m);

template <typename Derived1, typename Derived2>
Eigen::Matrix<typename Derived1::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  using Scalar = typename Derived1::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.template cast<Scalar>();
    }
  }
  return out;
}

/// Recovers vectors v_k (columns of the returned matrix) with v_i . v_j = G_ij.
///
/// Eigenvalues in [-eps, 0) are clipped to zero; anything lower raises
/// NotPsdError. The returned matrix is square: one column per row of G.
RealMatrix gram_factorize(const RealMatrix& gram, double eps);

/// Same as gram_factorize, returned as a list of column vectors.
std::vector<RealVector> gram_factorize_vectors(const RealMatrix& gram, double eps);

}  // namespace qbody

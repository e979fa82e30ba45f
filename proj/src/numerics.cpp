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
#include "qbody/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbody/errors.hpp"

namespace qbody {

void ToleranceConfig::validate() const {
  if (!(rank_eps > 0.0) || !(psd_eps > 0.0) || !(conv_eps > 0.0)) {
    throw InvalidInputError("tolerances must be strictly positive");
  }
}

bool all_finite(const RealMatrix& m) { return m.allFinite(); }

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

std::size_t rank_with_tolerance(const RealMatrix& m, double eps) {
  if (m.size() == 0) throw InvalidInputError("rank of an empty matrix");
  if (!all_finite(m)) throw InvalidInputError("matrix has non-finite entries");
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  if (largest == 0.0) return 0;
  const double cutoff = eps * largest;
  return static_cast<std::size_t>((sv.array() > cutoff).count());
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("eigenvalues of a non-square matrix");
  if (!all_finite(m)) throw InvalidInputError("matrix has non-finite entries");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidInputError("matrix is not Hermitian");
  }
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  const RealVector& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> symmetric_eigenvalues(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("eigenvalues of a non-square matrix");
  if (!all_finite(m)) throw InvalidInputError("matrix has non-finite entries");
  if (m.size() == 0) return {};
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidInputError("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(m, Eigen::EigenvaluesOnly);
  const RealVector& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_symmetric_eigenvalue(const RealMatrix& m) {
  const auto ev = symmetric_eigenvalues(m);
  if (ev.empty()) throw InvalidInputError("eigenvalues of an empty matrix");
  return ev.front();
}

RealMatrix gram_factorize(const RealMatrix& gram, double eps) {
  if (gram.rows() != gram.cols() || gram.size() == 0) {
    throw InvalidInputError("Gram matrix must be square and nonempty");
  }
  if (!all_finite(gram)) throw InvalidInputError("Gram matrix has non-finite entries");
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidInputError("Gram matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
  RealVector ev = es.eigenvalues();
  if (ev(0) < -eps) {
    throw NotPsdError("Gram matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(ev(0)) + ")",
                      ev(0));
  }
  ev = ev.cwiseMax(0.0);
  // G = U diag(ev) U^T = V^T V with V = diag(sqrt(ev)) U^T.
  return ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

std::vector<RealVector> gram_factorize_vectors(const RealMatrix& gram, double eps) {
  const RealMatrix v = gram_factorize(gram, eps);
  std::vector<RealVector> out;
  out.reserve(static_cast<std::size_t>(v.cols()));
  for (Eigen::Index k = 0; k < v.cols(); ++k) out.emplace_back(v.col(k));
  return out;
}

}  // namespace qbody

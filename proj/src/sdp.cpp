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
#include "qbody/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbody/errors.hpp"

namespace qbody {

RealMatrix build_W(const BellMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n < 1 || m.entries.cols() != n) throw InvalidInputError("Bell matrix must be square");
  RealMatrix w = RealMatrix::Zero(2 * n, 2 * n);
  w.topRightCorner(n, n) = m.entries;
  w.bottomLeftCorner(n, n) = m.entries.transpose();
  return w;
}

double primal_value(const RealMatrix& gamma, const RealMatrix& w, double psd_eps) {
  if (gamma.rows() != w.rows() || gamma.cols() != w.cols() || gamma.rows() != gamma.cols()) {
    throw InfeasiblePointError("Gamma and W must be square of equal size");
  }
  if (!gamma.allFinite()) throw InfeasiblePointError("Gamma has non-finite entries");
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InfeasiblePointError("Gamma is not symmetric");
  }
  if ((gamma.diagonal().array() - 1.0).abs().maxCoeff() > 1e-10) {
    throw InfeasiblePointError("Gamma must have unit diagonal");
  }
  const double min_eig = min_symmetric_eigenvalue(gamma);
  if (min_eig < -psd_eps) {
    throw InfeasiblePointError("Gamma is not positive semidefinite (min eigenvalue " +
                               std::to_string(min_eig) + ")");
  }
  return 0.5 * (gamma * w).trace();
}

RealMatrix gram_of(const VectorConfiguration& c) {
  c.validate();
  RealMatrix v(c.a.rows(), c.a.cols() + c.b.cols());
  v << c.a, c.b;
  RealMatrix g = v.transpose() * v;
  // Unit diagonal is a constraint, not a rounding accident.
  g.diagonal().setOnes();
  return g;
}

RealMatrix all_equal_gram(std::size_t m) {
  const auto n = static_cast<Eigen::Index>(2 * m);
  return RealMatrix::Ones(n, n);
}

SdpCertificate dual_certificate(const BellMatrix& m, const RealVector& lambda,
                                double psd_eps) {
  const RealMatrix w = build_W(m);
  if (lambda.size() != w.rows()) throw InvalidInputError("lambda must have 2m entries");
  if (!lambda.allFinite()) throw InvalidInputError("lambda has non-finite entries");
  SdpCertificate c;
  c.m = m.size();
  c.lambda = lambda;
  c.dual_value = lambda.sum();
  const RealMatrix slack = -0.5 * w + RealMatrix(lambda.asDiagonal());
  c.min_eig_slack = min_symmetric_eigenvalue(slack);
  c.valid = c.min_eig_slack >= -psd_eps;
  return c;
}

SdpCertificate certify_pair(const BellMatrix& m, const RealMatrix& gamma,
                            const RealVector& lambda, double psd_eps) {
  SdpCertificate c = dual_certificate(m, lambda, psd_eps);
  c.primal_value = primal_value(gamma, build_W(m), psd_eps);
  c.gap = c.dual_value - c.primal_value;
  return c;
}

AnalyticCertificate analytic_certificate(std::size_t m, double psd_eps) {
  if (m < 1) throw InvalidInputError("m must be at least 1");
  const double md = static_cast<double>(m);
  const BellMatrix bell = bell_matrix(m);

  AnalyticCertificate out;
  const RealVector lambda = RealVector::Constant(static_cast<Eigen::Index>(2 * m), md / 4.0);
  out.certificate = certify_pair(bell, all_equal_gram(m), lambda, psd_eps);

  // M is symmetric, so its singular values are the moduli of its eigenvalues
  // and W has spectrum {+-sigma}.
  out.m_eigenvalues = structured_eigenvalues({m, 1.0 - md / 2.0, 1.0});
  double sigma_max = 0.0;
  for (double e : out.m_eigenvalues) sigma_max = std::max(sigma_max, std::abs(e));
  out.gamma_max_w = sigma_max;
  out.weyl_lower_bound = -0.5 * out.gamma_max_w + lambda.minCoeff();

  SdpCertificate& c = out.certificate;
  c.valid = c.valid && out.weyl_lower_bound >= -psd_eps && c.gap <= 1e-9 && c.gap >= -1e-9;
  return out;
}

RealMatrix structured_matrix(const StructuredMatrixSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.m);
  RealMatrix out = RealMatrix::Constant(n, n, spec.q);
  out.diagonal().setConstant(spec.p);
  return out;
}

double structured_determinant(const StructuredMatrixSpec& spec) {
  if (spec.m < 1) throw InvalidInputError("m must be at least 1");
  const double md = static_cast<double>(spec.m);
  return (spec.p + (md - 1.0) * spec.q) * std::pow(spec.p - spec.q, md - 1.0);
}

std::vector<double> structured_eigenvalues(const StructuredMatrixSpec& spec) {
  if (spec.m < 1) throw InvalidInputError("m must be at least 1");
  const double md = static_cast<double>(spec.m);
  std::vector<double> out;
  out.reserve(spec.m);
  out.push_back(spec.p + (md - 1.0) * spec.q);
  out.insert(out.end(), spec.m - 1, spec.p - spec.q);
  return out;
}

}  // namespace qbody

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
#include "qbody/realize.hpp"

#include <algorithm>
#include <cmath>

#include "qbody/errors.hpp"

namespace qbody {
namespace {

constexpr double kSpectrumSlack = 1e-10;
constexpr double kImagSlack = 1e-10;

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Maps the state onto the dim_a x dim_b coefficient matrix Psi_ij.
ComplexMatrix coefficients(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b) {
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  if (state.size() != da * db) throw InvalidInputError("state size does not match dim_a * dim_b");
  ComplexMatrix psi(da, db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) psi(i, j) = state(i * db + j);
  }
  return psi;
}

double checked_real(Complex z) {
  if (std::abs(z.imag()) > kImagSlack) {
    throw NumericalIntegrityError("expectation value has an imaginary part");
  }
  return z.real();
}

void check_vectors(const RealMatrix& v) {
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (std::abs(v.col(k).norm() - 1.0) > 1e-10) {
      throw InvalidInputError("realization vectors must have unit norm");
    }
  }
}

}  // namespace

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  const auto ev = hermitian_eigenvalues(matrix_);
  if (ev.empty()) throw InvalidInputError("observable must be nonempty");
  if (ev.front() < -1.0 - kSpectrumSlack || ev.back() > 1.0 + kSpectrumSlack) {
    throw InvalidInputError("observable spectrum must lie in [-1, 1]");
  }
  const bool projective = std::all_of(ev.begin(), ev.end(), [](double e) {
    return std::abs(std::abs(e) - 1.0) <= kSpectrumSlack;
  });
  kind_ = projective ? ObservableKind::projective : ObservableKind::povm;
}

ComplexMatrix Observable::povm_element() const {
  const auto n = matrix_.rows();
  return 0.5 * (ComplexMatrix::Identity(n, n) - matrix_);
}

void QuantumRealization::validate() const {
  if (dim_a < 1 || dim_b < 1) throw InvalidInputError("local dimensions must be positive");
  if (state.size() != static_cast<Eigen::Index>(dim_a * dim_b)) {
    throw InvalidInputError("state size does not match the product space");
  }
  if (std::abs(state.norm() - 1.0) > 1e-12) throw InvalidInputError("state must be normalized");
  for (const auto& o : alice) {
    if (o.dim() != dim_a) throw InvalidInputError("Alice observable has the wrong dimension");
  }
  for (const auto& o : bob) {
    if (o.dim() != dim_b) throw InvalidInputError("Bob observable has the wrong dimension");
  }
}

std::size_t generator_dimension(std::size_t n) {
  return std::size_t{1} << ((n + 1) / 2);
}

std::vector<ComplexMatrix> gamma_generators(std::size_t n) {
  if (n < 1) throw InvalidInputError("need at least one generator");
  if (n > kMaxGenerators) throw ResourceError("generator count above 16 is not supported");
  const std::size_t qubits = (n + 1) / 2;
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix y = pauli_y();
  const ComplexMatrix z = pauli_z();

  std::vector<ComplexMatrix> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t site = k / 2;
    ComplexMatrix g = ComplexMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < qubits; ++q) {
      const ComplexMatrix& factor = q < site ? z : q == site ? (k % 2 == 0 ? x : y) : id2;
      g = kron(g, factor);
    }
    out.push_back(std::move(g));
  }
  return out;
}

Observable observable_from_vector(const RealVector& v, const std::vector<ComplexMatrix>& gammas) {
  if (static_cast<std::size_t>(v.size()) != gammas.size() || gammas.empty()) {
    throw InvalidInputError("vector length must equal the number of generators");
  }
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-10) {
    throw InvalidInputError("observable direction must be a unit vector");
  }
  ComplexMatrix a = ComplexMatrix::Zero(gammas.front().rows(), gammas.front().cols());
  for (std::size_t k = 0; k < gammas.size(); ++k) a += v(static_cast<Eigen::Index>(k)) * gammas[k];
  return Observable(std::move(a));
}

ComplexVector max_entangled_state(std::size_t dim) {
  if (dim < 2) throw InvalidInputError("maximally entangled state needs D >= 2");
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexVector psi = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index k = 0; k < d; ++k) psi(k * d + k) = amp;
  return psi;
}

double expectation(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b,
                   const ComplexMatrix* a, const ComplexMatrix* b) {
  const ComplexMatrix psi = coefficients(state, dim_a, dim_b);
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  if ((a != nullptr && (a->rows() != da || a->cols() != da)) ||
      (b != nullptr && (b->rows() != db || b->cols() != db))) {
    throw InvalidInputError("operator dimension does not match its subsystem");
  }
  // (A (x) B) psi has coefficient matrix A Psi B^T.
  ComplexMatrix image = a != nullptr ? ComplexMatrix(*a * psi) : psi;
  if (b != nullptr) image = image * b->transpose();
  return checked_real((psi.conjugate().array() * image.array()).sum());
}

ComplexMatrix reduced_state_a(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b) {
  const ComplexMatrix psi = coefficients(state, dim_a, dim_b);
  return psi * psi.adjoint();
}

ComplexMatrix reduced_state_b(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b) {
  const ComplexMatrix psi = coefficients(state, dim_a, dim_b);
  return psi.transpose() * psi.conjugate();
}

QuantumRealization realize_from_vectors(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.rows() < 1 || a.cols() < 1 || b.cols() < 1) {
    throw InvalidInputError("a and b vectors must share a positive dimension");
  }
  if (!a.allFinite() || !b.allFinite()) throw InvalidInputError("vectors have non-finite entries");
  check_vectors(a);
  check_vectors(b);
  const auto n = static_cast<std::size_t>(a.rows());
  if (n > kMaxGenerators) throw ResourceError("vector dimension above 16 is not supported");

  const auto gammas = gamma_generators(n);
  QuantumRealization r;
  r.dim_a = r.dim_b = generator_dimension(n);
  r.state = max_entangled_state(r.dim_a);
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    r.alice.push_back(observable_from_vector(a.col(i), gammas));
  }
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    r.bob.emplace_back(observable_from_vector(b.col(j), gammas).matrix().transpose());
  }
  return r;
}

QuantumRealization chsh_realization() {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix z = pauli_z();
  QuantumRealization r;
  r.dim_a = r.dim_b = 2;
  r.state = max_entangled_state(2);
  r.alice = {Observable(z), Observable(x)};
  r.bob = {Observable(s * (z + x)), Observable(s * (z - x))};
  return r;
}

double chsh_value(const Behavior& b) {
  if (b.joints.rows() < 2 || b.joints.cols() < 2) {
    throw InvalidInputError("CHSH needs two settings per party");
  }
  return b.joints(0, 0) + b.joints(0, 1) + b.joints(1, 0) - b.joints(1, 1);
}

Behavior behavior_of(const QuantumRealization& r) {
  r.validate();
  if (r.alice.empty() || r.bob.empty()) throw InvalidInputError("realization has no observables");
  const ComplexMatrix psi = coefficients(r.state, r.dim_a, r.dim_b);
  // <A (x) B> = sum_kl (Psi^dag A Psi)_kl B_kl, so Alice's side is contracted once.
  const ComplexMatrix reduced = psi.adjoint() * psi;
  Behavior out = Behavior::zero({r.alice.size(), r.bob.size()});
  for (std::size_t j = 0; j < r.bob.size(); ++j) {
    out.b_marginals(static_cast<Eigen::Index>(j)) =
        checked_real((reduced.array() * r.bob[j].matrix().array()).sum());
  }
  for (std::size_t i = 0; i < r.alice.size(); ++i) {
    const ComplexMatrix contracted = psi.adjoint() * r.alice[i].matrix() * psi;
    const auto row = static_cast<Eigen::Index>(i);
    out.a_marginals(row) = checked_real(contracted.trace());
    for (std::size_t j = 0; j < r.bob.size(); ++j) {
      out.joints(row, static_cast<Eigen::Index>(j)) =
          checked_real((contracted.array() * r.bob[j].matrix().array()).sum());
    }
  }
  return out;
}

TsirelsonVectors x_o_vectors(std::size_t m) {
  if (m < 1) throw InvalidInputError("m must be at least 1");
  const auto n = static_cast<Eigen::Index>(m);
  TsirelsonVectors v;
  v.b = RealMatrix::Identity(n, n);
  v.a = RealMatrix::Constant(n, n, 2.0 / static_cast<double>(m)) - RealMatrix::Identity(n, n);
  return v;
}

}  // namespace qbody

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

#include "qbody/model.hpp"
#include "qbody/numerics.hpp"

namespace qbody {

enum class ObservableKind { projective, povm };

/// A two-outcome observable A = I - 2P with P the POVM element of outcome -1.
class Observable {
 public:
  /// Classifies by spectrum: projective if every eigenvalue is +-1 within 1e-10,
  /// povm if the spectrum lies in [-1, 1] within 1e-10. Anything else throws.
  explicit Observable(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  ObservableKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  ComplexMatrix povm_element() const;

 private:
  ComplexMatrix matrix_;
  ObservableKind kind_;
};

/// Pure state on C^dim_a (x) C^dim_b; basis index i * dim_b + j for |i>|j>.
struct QuantumRealization {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  ComplexVector state;
  std::vector<Observable> alice;
  std::vector<Observable> bob;

  void validate() const;
};

/// Local dimension 2^ceil(n/2) used for n generators.
std::size_t generator_dimension(std::size_t n);

/// Largest vector dimension accepted by the generator construction.
inline constexpr std::size_t kMaxGenerators = 16;

/// Pairwise anticommuting Hermitian involutions (Jordan-Wigner chain):
/// generator 2k is Z^(x)k (x) X (x) I..., generator 2k+1 is Z^(x)k (x) Y (x) I...
std::vector<ComplexMatrix> gamma_generators(std::size_t n);

/// sum_k v_k gamma_k for a unit vector v; squares to the identity.
Observable observable_from_vector(const RealVector& v, const std::vector<ComplexMatrix>& gammas);

/// sum_k |kk> / sqrt(D)
ComplexVector max_entangled_state(std::size_t dim);

/// <psi| A (x) B |psi>; a null operator stands for the identity on that side.
/// Throws NumericalIntegrityError if the imaginary part exceeds 1e-10.
double expectation(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b,
                   const ComplexMatrix* a, const ComplexMatrix* b);

ComplexMatrix reduced_state_a(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix reduced_state_b(const ComplexVector& state, std::size_t dim_a, std::size_t dim_b);

/// Alice gets A(a_i), Bob gets A(b_j)^T, both on the maximally entangled state,
/// so <A_i B_j> = a_i . b_j and every marginal vanishes. Vectors are columns.
QuantumRealization realize_from_vectors(const RealMatrix& a, const RealMatrix& b);

/// Qubit CHSH block: A1 = Z, A2 = X, B1 = (Z + X)/sqrt2, B2 = (Z - X)/sqrt2 on Phi+.
QuantumRealization chsh_realization();

/// CHSH combination <A1B1> + <A1B2> + <A2B1> - <A2B2>.
double chsh_value(const Behavior& b);

Behavior behavior_of(const QuantumRealization& r);

/// Orthonormal b_j = e_j in R^m and a_i = (2/m) sum_j b_j - b_i.
struct TsirelsonVectors {
  RealMatrix a;
  RealMatrix b;
};
TsirelsonVectors x_o_vectors(std::size_t m);

}  // namespace qbody

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
#include <cstdint>
#include <optional>
#include <vector>

#include "qbody/numerics.hpp"

namespace qbody {

/// Coefficients of a correlation Bell polynomial sum_ij M_ij <A_i B_j>.
struct BellMatrix {
  RealMatrix entries;

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// The family M_ij = 1 - (m/2) delta_ij.
BellMatrix bell_matrix(std::size_t m);

/// Wraps an arbitrary square coefficient matrix.
BellMatrix bell_matrix_from(RealMatrix entries);

/// Unit vectors a_i and b_j stored as the columns of two dim x m matrices.
struct VectorConfiguration {
  RealMatrix a;
  RealMatrix b;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(a.rows()); }
  std::size_t count() const noexcept { return static_cast<std::size_t>(a.cols()); }

  /// Throws InvalidConfigurationError if shapes disagree or a norm is off by more than tol.
  void validate(double tol = 1e-8) const;
};

double bell_value(const BellMatrix& m, const VectorConfiguration& c);

struct DirectionUpdate {
  RealMatrix vectors;
  RealVector lengths;
};

/// a_i = (sum_j M_ij b_j) / l_i. Columns whose combination has length below
/// 1e-12 keep the corresponding column of previous (or e_1 if none is given).
DirectionUpdate optimal_a_given_b(const BellMatrix& m, const RealMatrix& b,
                                  const RealMatrix* previous = nullptr);

/// Mirror image of optimal_a_given_b: b_j = (sum_i M_ij a_i) / l_j.
DirectionUpdate optimal_b_given_a(const BellMatrix& m, const RealMatrix& a,
                                  const RealMatrix* previous = nullptr);

/// Bell value of the family after optimizing the a side analytically:
/// sum_i sqrt(m^2/4 + S.S - m b_i.S) with S = sum_k b_k.
double value_from_b(const RealMatrix& b, std::size_t m);

/// max_{i<j} |(b_i - b_j) . sum_k b_k|; zero at stationary points of the family.
double stationarity_residual(const RealMatrix& b);

struct SeesawOptions {
  double tol = 1e-10;         // value-increase threshold
  double step_tol = 1e-12;    // largest entry change of any vector per sweep
  std::size_t max_iter = 10000;
  std::optional<std::size_t> dim;  // defaults to min(2m, m + 1)
  bool record_history = false;
};

struct SeesawResult {
  VectorConfiguration config;
  double value = 0.0;
  std::size_t iterations = 0;
  double stationarity_residual = 0.0;
  bool converged = false;
  std::uint64_t seed = 0;
  /// Bell value after the random start and after every half-step, when recorded.
  std::vector<double> history;
};

/// Random standard-normal unit vectors drawn from a seeded generator.
VectorConfiguration random_configuration(std::size_t m, std::size_t dim, std::uint64_t seed);

/// Alternates a <- normalize(M b) and b <- normalize(M^T a) from a seeded start.
SeesawResult seesaw_optimize(const BellMatrix& m, std::uint64_t seed,
                             const SeesawOptions& options = {});

/// Runs trials with seeds seed, seed+1, ... and keeps the best value (lowest
/// seed on ties). The outcome does not depend on the number of threads.
SeesawResult seesaw_best(const BellMatrix& m, std::size_t trials, std::uint64_t seed,
                         const SeesawOptions& options = {}, std::size_t threads = 1);

}  // namespace qbody

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

namespace qbody {

/// Number of two-outcome settings available to each party.
struct Scenario {
  std::size_t alice_settings = 1;
  std::size_t bob_settings = 1;

  static Scenario symmetric(std::size_t m) { return {m, m}; }
  void validate() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Marginal and joint expectation values <A_i>, <B_j>, <A_i B_j>.
struct Behavior {
  Scenario scenario;
  RealVector a_marginals;
  RealVector b_marginals;
  RealMatrix joints;  // alice_settings x bob_settings

  static Behavior zero(Scenario s);

  /// Throws InvalidInputError on shape mismatch or entries outside [-1, 1].
  void validate() const;
};

/// The (m_A + 1) x (m_B + 1) arrangement with X_00 = 1, marginals on the
/// borders and joints in the interior.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(RealMatrix entries);

  const RealMatrix& entries() const noexcept { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  Scenario scenario() const {
    return {static_cast<std::size_t>(entries_.rows() - 1),
            static_cast<std::size_t>(entries_.cols() - 1)};
  }
  RealMatrix interior() const {
    return entries_.bottomRightCorner(entries_.rows() - 1, entries_.cols() - 1);
  }
  Behavior to_behavior() const;

 private:
  RealMatrix entries_;
};

/// A local deterministic assignment of +/-1 outcomes to every setting.
struct DeterministicStrategy {
  std::vector<int> a_outcomes;
  std::vector<int> b_outcomes;

  Scenario scenario() const { return {a_outcomes.size(), b_outcomes.size()}; }
  DeterministicStrategy flipped() const;
  void validate() const;
  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

struct WeightedStrategy {
  double weight = 0.0;
  DeterministicStrategy strategy;
};

struct ConvexCombination {
  std::vector<WeightedStrategy> terms;
};

Behavior behavior_from_strategy(const DeterministicStrategy& s);
CorrelationMatrix to_matrix(const Behavior& b);

/// Entrywise weighted average; throws InvalidCombinationError if the weights
/// are negative or do not sum to one within 1e-12.
Behavior mix(const ConvexCombination& c);

/// Strategies with exactly m/2 of the a_i equal to +1 and b_i = -a_i,
/// ordered lexicographically over the a pattern with +1 preceding -1.
std::vector<DeterministicStrategy> enumerate_balanced_strategies(std::size_t m);

/// C(m, m/2), computed exactly.
unsigned long long balanced_strategy_count(std::size_t m);

/// The witness mixture: balanced strategies share weight (m-1)/m, and the
/// all-plus and all-minus strategies get 1/(2m) each.
ConvexCombination x_o_combination(std::size_t m);
Behavior build_x_o(std::size_t m);
CorrelationMatrix closed_form_x_o(std::size_t m);

DeterministicStrategy all_plus_strategy(std::size_t m);
DeterministicStrategy all_minus_strategy(std::size_t m);

/// Largest absolute entrywise difference between two correlation matrices.
double max_abs_difference(const CorrelationMatrix& a, const CorrelationMatrix& b);

}  // namespace qbody

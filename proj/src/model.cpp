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
#include "qbody/model.hpp"

#include <cmath>
#include <string>

#include "qbody/errors.hpp"

namespace qbody {
namespace {

constexpr double kRangeSlack = 1e-12;
constexpr std::size_t kMaxEnumerationM = 20;

void require_even(std::size_t m) {
  if (m < 2 || m % 2 != 0) throw InvalidInputError("m must be even");
}

void check_outcomes(const std::vector<int>& v) {
  for (int x : v) {
    if (x != 1 && x != -1) throw InvalidInputError("strategy outcomes must be +1 or -1");
  }
}

bool in_range(const auto& values) {
  return values.allFinite() && (values.array().abs() <= 1.0 + kRangeSlack).all();
}

}  // namespace

void Scenario::validate() const {
  if (alice_settings < 1 || bob_settings < 1) {
    throw InvalidInputError("each party needs at least one setting");
  }
}

Behavior Behavior::zero(Scenario s) {
  s.validate();
  const auto ma = static_cast<Eigen::Index>(s.alice_settings);
  const auto mb = static_cast<Eigen::Index>(s.bob_settings);
  return {s, RealVector::Zero(ma), RealVector::Zero(mb), RealMatrix::Zero(ma, mb)};
}

void Behavior::validate() const {
  scenario.validate();
  const auto ma = static_cast<Eigen::Index>(scenario.alice_settings);
  const auto mb = static_cast<Eigen::Index>(scenario.bob_settings);
  if (a_marginals.size() != ma || b_marginals.size() != mb || joints.rows() != ma ||
      joints.cols() != mb) {
    throw InvalidInputError("behavior shape does not match its scenario");
  }
  if (!in_range(a_marginals) || !in_range(b_marginals) || !in_range(joints)) {
    throw InvalidInputError("behavior entries must lie in [-1, 1]");
  }
}

CorrelationMatrix::CorrelationMatrix(RealMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 2 || entries_.cols() < 2) {
    throw InvalidInputError("correlation matrix needs at least one setting per party");
  }
  if (entries_(0, 0) != 1.0) throw InvalidInputError("correlation matrix requires X_00 = 1");
  if (!in_range(entries_)) throw InvalidInputError("correlation entries must lie in [-1, 1]");
}

Behavior CorrelationMatrix::to_behavior() const {
  const Eigen::Index ma = entries_.rows() - 1;
  const Eigen::Index mb = entries_.cols() - 1;
  return {scenario(), entries_.col(0).tail(ma), entries_.row(0).tail(mb).transpose(),
          entries_.bottomRightCorner(ma, mb)};
}

DeterministicStrategy DeterministicStrategy::flipped() const {
  DeterministicStrategy out = *this;
  for (int& x : out.a_outcomes) x = -x;
  for (int& x : out.b_outcomes) x = -x;
  return out;
}

void DeterministicStrategy::validate() const {
  scenario().validate();
  check_outcomes(a_outcomes);
  check_outcomes(b_outcomes);
}

Behavior behavior_from_strategy(const DeterministicStrategy& s) {
  s.validate();
  Behavior b = Behavior::zero(s.scenario());
  for (std::size_t i = 0; i < s.a_outcomes.size(); ++i) {
    b.a_marginals(static_cast<Eigen::Index>(i)) = s.a_outcomes[i];
  }
  for (std::size_t j = 0; j < s.b_outcomes.size(); ++j) {
    b.b_marginals(static_cast<Eigen::Index>(j)) = s.b_outcomes[j];
  }
  b.joints = b.a_marginals * b.b_marginals.transpose();
  return b;
}

CorrelationMatrix to_matrix(const Behavior& b) {
  b.validate();
  const auto ma = static_cast<Eigen::Index>(b.scenario.alice_settings);
  const auto mb = static_cast<Eigen::Index>(b.scenario.bob_settings);
  RealMatrix x(ma + 1, mb + 1);
  x(0, 0) = 1.0;
  x.col(0).tail(ma) = b.a_marginals;
  x.row(0).tail(mb) = b.b_marginals.transpose();
  x.bottomRightCorner(ma, mb) = b.joints;
  return CorrelationMatrix(std::move(x));
}

Behavior mix(const ConvexCombination& c) {
  if (c.terms.empty()) throw InvalidCombinationError("empty convex combination");
  double total = 0.0;
  for (const auto& t : c.terms) {
    if (!(t.weight >= 0.0)) throw InvalidCombinationError("negative combination weight");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidCombinationError("combination weights sum to " + std::to_string(total));
  }
  const Scenario s = c.terms.front().strategy.scenario();
  Behavior out = Behavior::zero(s);
  for (const auto& t : c.terms) {
    if (!(t.strategy.scenario() == s)) {
      throw InvalidCombinationError("strategies in a combination must share a scenario");
    }
    const Behavior b = behavior_from_strategy(t.strategy);
    out.a_marginals += t.weight * b.a_marginals;
    out.b_marginals += t.weight * b.b_marginals;
    out.joints += t.weight * b.joints;
  }
  return out;
}

unsigned long long balanced_strategy_count(std::size_t m) {
  require_even(m);
  // C(m, m/2) with exact intermediate division: r * (m - k) / (k + 1) stays integral.
  unsigned long long r = 1;
  const std::size_t half = m / 2;
  for (std::size_t k = 0; k < half; ++k) {
    r = r * (m - k) / (k + 1);
  }
  return r;
}

std::vector<DeterministicStrategy> enumerate_balanced_strategies(std::size_t m) {
  require_even(m);
  if (m > kMaxEnumerationM) {
    throw InvalidInputError("balanced-strategy enumeration is limited to m <= 20");
  }
  std::vector<DeterministicStrategy> out;
  out.reserve(balanced_strategy_count(m));
  // Bit k (from the most significant end) set means a_k = -1, so counting
  // upward walks the patterns lexicographically with + before -.
  const unsigned long long patterns = 1ULL << m;
  for (unsigned long long code = 0; code < patterns; ++code) {
    if (static_cast<std::size_t>(__builtin_popcountll(code)) != m / 2) continue;
    DeterministicStrategy s;
    s.a_outcomes.resize(m);
    s.b_outcomes.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      const bool minus = (code >> (m - 1 - k)) & 1ULL;
      s.a_outcomes[k] = minus ? -1 : 1;
      s.b_outcomes[k] = -s.a_outcomes[k];
    }
    out.push_back(std::move(s));
  }
  return out;
}

DeterministicStrategy all_plus_strategy(std::size_t m) {
  return {std::vector<int>(m, 1), std::vector<int>(m, 1)};
}

DeterministicStrategy all_minus_strategy(std::size_t m) {
  return {std::vector<int>(m, -1), std::vector<int>(m, -1)};
}

ConvexCombination x_o_combination(std::size_t m) {
  const auto balanced = enumerate_balanced_strategies(m);
  const auto count = balanced_strategy_count(m);
  const double md = static_cast<double>(m);
  const double balanced_weight = (md - 1.0) / (md * static_cast<double>(count));
  const double pole_weight = 1.0 / (2.0 * md);
  ConvexCombination c;
  c.terms.reserve(balanced.size() + 2);
  for (const auto& s : balanced) c.terms.push_back({balanced_weight, s});
  c.terms.push_back({pole_weight, all_plus_strategy(m)});
  c.terms.push_back({pole_weight, all_minus_strategy(m)});
  return c;
}

Behavior build_x_o(std::size_t m) { return mix(x_o_combination(m)); }

CorrelationMatrix closed_form_x_o(std::size_t m) {
  require_even(m);
  const auto n = static_cast<Eigen::Index>(m);
  const double md = static_cast<double>(m);
  RealMatrix x = RealMatrix::Zero(n + 1, n + 1);
  x(0, 0) = 1.0;
  x.bottomRightCorner(n, n).setConstant(2.0 / md);
  x.bottomRightCorner(n, n).diagonal().setConstant(2.0 / md - 1.0);
  return CorrelationMatrix(std::move(x));
}

double max_abs_difference(const CorrelationMatrix& a, const CorrelationMatrix& b) {
  if (a.entries().rows() != b.entries().rows() || a.entries().cols() != b.entries().cols()) {
    throw InvalidInputError("correlation matrices differ in shape");
  }
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

}  // namespace qbody

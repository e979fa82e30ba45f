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
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qbody/errors.hpp"
#include "qbody/seesaw.hpp"

using namespace qbody;

namespace {

VectorConfiguration orthonormal_config(std::size_t m) {
  const auto n = static_cast<Eigen::Index>(m);
  VectorConfiguration c;
  c.b = RealMatrix::Identity(n, n);
  c.a = RealMatrix::Constant(n, n, 2.0 / static_cast<double>(m)) - RealMatrix::Identity(n, n);
  return c;
}

double direct_norm_value(const RealMatrix& b, std::size_t m) {
  const RealVector s = b.rowwise().sum();
  double total = 0.0;
  for (Eigen::Index i = 0; i < b.cols(); ++i) total += (s - 0.5 * static_cast<double>(m) * b.col(i)).norm();
  return total;
}

}  // namespace

TEST_CASE("Bell matrix family") {
  RealMatrix two(2, 2);
  two << 0, 1, 1, 0;
  CHECK(bell_matrix(2).entries == two);
  const BellMatrix four = bell_matrix(4);
  CHECK((four.entries.diagonal().array() == -1.0).all());
  CHECK(four.entries(0, 3) == 1.0);
  CHECK((four.entries.rowwise().sum().array() == 2.0).all());
  CHECK(four.entries.sum() == 8.0);
  CHECK_THROWS_AS(bell_matrix(0), InvalidInputError);
  CHECK_THROWS_AS(bell_matrix_from(RealMatrix::Ones(2, 3)), InvalidInputError);
}

TEST_CASE("Bell values of reference configurations") {
  const BellMatrix m = bell_matrix(4);
  VectorConfiguration same{RealMatrix::Zero(3, 4), RealMatrix::Zero(3, 4)};
  same.a.row(0).setOnes();
  same.b.row(0).setOnes();
  CHECK(bell_value(m, same) == doctest::Approx(8.0).epsilon(1e-15));

  CHECK(bell_value(m, orthonormal_config(4)) == doctest::Approx(8.0).epsilon(1e-14));

  VectorConfiguration perp{RealMatrix::Zero(2, 4), RealMatrix::Zero(2, 4)};
  perp.a.row(0).setOnes();
  perp.b.row(1).setOnes();
  CHECK(bell_value(m, perp) == 0.0);

  VectorConfiguration bad = same;
  bad.a(0, 0) = 1.1;
  CHECK_THROWS_AS(bell_value(m, bad), InvalidConfigurationError);
}

TEST_CASE("optimal a given b") {
  const BellMatrix m4 = bell_matrix(4);
  SUBCASE("orthonormal b") {
    const RealMatrix b = RealMatrix::Identity(4, 4);
    const auto u = optimal_a_given_b(m4, b);
    const RealMatrix expected = 0.5 * RealMatrix::Ones(4, 4) - RealMatrix::Identity(4, 4);
    CHECK((u.vectors - expected).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((u.lengths.array() - 2.0).abs().maxCoeff() <= 1e-15);
  }
  SUBCASE("all-equal b") {
    RealMatrix b = RealMatrix::Zero(3, 4);
    b.row(1).setOnes();
    const auto u = optimal_a_given_b(m4, b);
    CHECK((u.vectors - b).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((u.lengths.array() - 2.0).abs().maxCoeff() <= 1e-15);
  }
  SUBCASE("m=2 antiparallel b") {
    RealMatrix b(2, 2);
    b << 1, -1, 0, 0;
    const auto u = optimal_a_given_b(bell_matrix(2), b);
    CHECK((u.vectors + b).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((u.lengths.array() - 1.0).abs().maxCoeff() <= 1e-15);
  }
  SUBCASE("degenerate direction keeps the previous vector") {
    RealMatrix b(2, 4);
    b << 1, 1, 0, 0,
         0, 0, 1, -1;  // sum b - 2 b_1 = 0
    RealMatrix previous = RealMatrix::Zero(2, 4);
    previous.row(1).setOnes();
    const auto u = optimal_a_given_b(m4, b, &previous);
    CHECK(u.lengths(0) < 1e-12);
    CHECK(u.vectors.col(0) == previous.col(0));
    const auto fallback = optimal_a_given_b(m4, b);
    CHECK(fallback.vectors(0, 0) == 1.0);
  }
  SUBCASE("non-unit input rejected") {
    CHECK_THROWS_AS(optimal_a_given_b(m4, 2.0 * RealMatrix::Identity(4, 4)), InvalidConfigurationError);
  }
}

TEST_CASE("value from b") {
  RealMatrix same = RealMatrix::Zero(2, 4);
  same.row(0).setOnes();
  CHECK(value_from_b(same, 4) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(value_from_b(RealMatrix::Identity(4, 4), 4) == doctest::Approx(8.0).epsilon(1e-15));

  std::mt19937_64 rng(23);
  for (std::size_t m : {2u, 4u, 6u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const RealMatrix b = oracle::random_unit_columns(rng, static_cast<Eigen::Index>(m + 1),
                                                       static_cast<Eigen::Index>(m));
      CHECK(std::abs(value_from_b(b, m) - direct_norm_value(b, m)) <= 1e-10);
      // and it is the Bell value after the optimal a update
      VectorConfiguration c{optimal_a_given_b(bell_matrix(m), b).vectors, b};
      CHECK(std::abs(bell_value(bell_matrix(m), c) - value_from_b(b, m)) <= 1e-10);
    }
  }
}

TEST_CASE("stationarity residual") {
  CHECK(stationarity_residual(RealMatrix::Identity(5, 5)) <= 1e-15);
  CHECK(stationarity_residual(RealMatrix::Ones(1, 4)) == 0.0);

  RealMatrix b(2, 4);
  b << 1, 0, 1, 0,
       0, 1, 0, 1;
  CHECK(stationarity_residual(b) <= 1e-15);
  b.col(0) << std::cos(0.1), std::sin(0.1);
  CHECK(stationarity_residual(b) > 1e-3);
}

TEST_CASE("see-saw reaches m^2/2") {
  for (std::size_t m : {2u, 4u, 6u}) {
    const auto best = seesaw_best(bell_matrix(m), 50, 1);
    const double bound = static_cast<double>(m * m) / 2.0;
    CHECK(std::abs(best.value - bound) <= 1e-6);
    CHECK(best.converged);
    CHECK(best.stationarity_residual <= 1e-8);
    CHECK(std::abs(best.value - bell_value(bell_matrix(m), best.config)) <= 1e-10);
  }
}

TEST_CASE("see-saw is monotone") {
  SeesawOptions opts;
  opts.record_history = true;
  for (std::size_t m : {2u, 3u, 4u, 6u, 8u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto r = seesaw_optimize(bell_matrix(m), seed, opts);
      REQUIRE(r.history.size() >= 3);
      for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] >= r.history[k - 1] - 1e-12);
    }
  }
  // arbitrary M too
  std::mt19937_64 rng(2);
  const BellMatrix random_m = bell_matrix_from(RealMatrix::Random(5, 5));
  const auto r = seesaw_optimize(random_m, 9, opts);
  for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] >= r.history[k - 1] - 1e-12);
}

TEST_CASE("stationary points have equal lengths") {
  for (std::size_t m : {4u, 6u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = seesaw_optimize(bell_matrix(m), seed);
      if (!r.converged || r.stationarity_residual > 1e-8) continue;
      const auto u = optimal_a_given_b(bell_matrix(m), r.config.b);
      CHECK((u.lengths.array() - static_cast<double>(m) / 2.0).abs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("Bell value is rotation invariant and bounded") {
  std::mt19937_64 rng(31);
  for (std::size_t m : {2u, 4u, 6u}) {
    const BellMatrix bm = bell_matrix(m);
    const auto n = static_cast<Eigen::Index>(m + 1);
    for (int trial = 0; trial < 20; ++trial) {
      VectorConfiguration c{oracle::random_unit_columns(rng, n, static_cast<Eigen::Index>(m)),
                            oracle::random_unit_columns(rng, n, static_cast<Eigen::Index>(m))};
      const RealMatrix q = oracle::random_orthogonal(rng, n);
      const VectorConfiguration rotated{q * c.a, q * c.b};
      CHECK(std::abs(bell_value(bm, c) - bell_value(bm, rotated)) <= 1e-10);
      CHECK(bell_value(bm, c) <= static_cast<double>(m * m) / 2.0 + 1e-6);
    }
  }
}

TEST_CASE("see-saw is deterministic and thread-count independent") {
  const BellMatrix bm = bell_matrix(4);
  const auto a = seesaw_best(bm, 12, 5, {}, 1);
  const auto b = seesaw_best(bm, 12, 5, {}, 4);
  CHECK(a.seed == b.seed);
  CHECK(a.value == b.value);
  CHECK(a.config.a == b.config.a);
  CHECK(a.config.b == b.config.b);

  SeesawOptions capped;
  capped.max_iter = 1;
  const auto r = seesaw_optimize(bell_matrix(6), 3, capped);
  CHECK(r.iterations == 1);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(seesaw_best(bm, 0, 1), InvalidInputError);
}

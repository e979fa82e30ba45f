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
#include "qbody/seesaw.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "qbody/errors.hpp"

namespace qbody {
namespace {

constexpr double kDegenerateLength = 1e-12;

DirectionUpdate normalize_columns(RealMatrix raw, const RealMatrix* previous) {
  DirectionUpdate out;
  out.vectors = std::move(raw);
  out.lengths.resize(out.vectors.cols());
  for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
    const double len = out.vectors.col(k).norm();
    out.lengths(k) = len;
    if (len < kDegenerateLength) {
      if (previous != nullptr) {
        out.vectors.col(k) = previous->col(k);
      } else {
        out.vectors.col(k).setZero();
        out.vectors(0, k) = 1.0;
      }
    } else {
      out.vectors.col(k) /= len;
    }
  }
  return out;
}

void check_unit_columns(const RealMatrix& v, double tol, const char* what) {
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (std::abs(v.col(k).norm() - 1.0) > tol) {
      throw InvalidConfigurationError(std::string(what) + " vectors must have unit norm");
    }
  }
}

void check_previous(const RealMatrix& v, const RealMatrix* previous) {
  if (previous != nullptr &&
      (previous->rows() != v.rows() || previous->cols() != v.cols())) {
    throw InvalidInputError("previous vectors have the wrong shape");
  }
}

}  // namespace

BellMatrix bell_matrix(std::size_t m) {
  if (m < 1) throw InvalidInputError("m must be at least 1");
  const auto n = static_cast<Eigen::Index>(m);
  RealMatrix e = RealMatrix::Ones(n, n);
  e.diagonal().array() -= static_cast<double>(m) / 2.0;
  return {std::move(e)};
}

BellMatrix bell_matrix_from(RealMatrix entries) {
  if (entries.rows() != entries.cols() || entries.size() == 0) {
    throw InvalidInputError("Bell matrix must be square and nonempty");
  }
  if (!entries.allFinite()) throw InvalidInputError("Bell matrix has non-finite entries");
  return {std::move(entries)};
}

void VectorConfiguration::validate(double tol) const {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() < 1 || a.cols() < 1) {
    throw InvalidConfigurationError("a and b vector sets must share dimension and count");
  }
  if (!a.allFinite() || !b.allFinite()) {
    throw InvalidConfigurationError("configuration has non-finite entries");
  }
  check_unit_columns(a, tol, "a");
  check_unit_columns(b, tol, "b");
}

double bell_value(const BellMatrix& m, const VectorConfiguration& c) {
  c.validate();
  if (c.count() != m.size()) {
    throw InvalidConfigurationError("configuration size does not match the Bell matrix");
  }
  return (m.entries.array() * (c.a.transpose() * c.b).array()).sum();
}

DirectionUpdate optimal_a_given_b(const BellMatrix& m, const RealMatrix& b,
                                  const RealMatrix* previous) {
  if (static_cast<std::size_t>(b.cols()) != m.size()) {
    throw InvalidInputError("vector count does not match the Bell matrix");
  }
  check_unit_columns(b, 1e-10, "b");
  check_previous(b, previous);
  return normalize_columns(b * m.entries.transpose(), previous);
}

DirectionUpdate optimal_b_given_a(const BellMatrix& m, const RealMatrix& a,
                                  const RealMatrix* previous) {
  if (static_cast<std::size_t>(a.cols()) != m.size()) {
    throw InvalidInputError("vector count does not match the Bell matrix");
  }
  check_unit_columns(a, 1e-10, "a");
  check_previous(a, previous);
  return normalize_columns(a * m.entries, previous);
}

double value_from_b(const RealMatrix& b, std::size_t m) {
  if (static_cast<std::size_t>(b.cols()) != m) {
    throw InvalidInputError("vector count does not match m");
  }
  const double md = static_cast<double>(m);
  const RealVector s = b.rowwise().sum();
  const double ss = s.squaredNorm();
  double total = 0.0;
  for (Eigen::Index i = 0; i < b.cols(); ++i) {
    // Expanding |S - (m/2) b_i|^2 for unit b_i; rounding can push it slightly negative.
    const double sq = md * md / 4.0 + ss - md * b.col(i).dot(s);
    total += std::sqrt(std::max(sq, 0.0));
  }
  return total;
}

double stationarity_residual(const RealMatrix& b) {
  const RealVector s = b.rowwise().sum();
  const RealVector proj = b.transpose() * s;
  if (proj.size() < 2) return 0.0;
  // Over all pairs the largest |proj_i - proj_j| is the spread of proj.
  return proj.maxCoeff() - proj.minCoeff();
}

VectorConfiguration random_configuration(std::size_t m, std::size_t dim, std::uint64_t seed) {
  if (m < 1 || dim < 1) throw InvalidInputError("configuration needs m >= 1 and dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  const auto k = static_cast<Eigen::Index>(m);
  auto draw = [&] {
    RealMatrix v(n, k);
    for (Eigen::Index c = 0; c < k; ++c) {
      do {
        for (Eigen::Index r = 0; r < n; ++r) v(r, c) = normal(rng);
      } while (v.col(c).norm() < 1e-8);
      v.col(c).normalize();
    }
    return v;
  };
  VectorConfiguration c;
  c.a = draw();
  c.b = draw();
  return c;
}

SeesawResult seesaw_optimize(const BellMatrix& m, std::uint64_t seed,
                             const SeesawOptions& options) {
  if (!(options.tol > 0.0) || !(options.step_tol > 0.0)) {
    throw InvalidInputError("see-saw tolerances must be positive");
  }
  const std::size_t count = m.size();
  const std::size_t dim = options.dim.value_or(std::min(2 * count, count + 1));
  if (dim < 1 || dim > 2 * count) throw InvalidInputError("embedding dimension out of range");

  SeesawResult result;
  result.seed = seed;
  result.config = random_configuration(count, dim, seed);
  double value = bell_value(m, result.config);
  if (options.record_history) result.history.push_back(value);

  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    const RealMatrix prev_a = result.config.a;
    const RealMatrix prev_b = result.config.b;
    result.config.a = optimal_a_given_b(m, prev_b, &prev_a).vectors;
    if (options.record_history) result.history.push_back(bell_value(m, result.config));
    result.config.b = optimal_b_given_a(m, result.config.a, &prev_b).vectors;
    const double next = bell_value(m, result.config);
    if (options.record_history) result.history.push_back(next);

    const double step = std::max((result.config.a - prev_a).cwiseAbs().maxCoeff(),
                                 (result.config.b - prev_b).cwiseAbs().maxCoeff());
    const double gain = next - value;
    value = next;
    result.iterations = it;
    if (gain < options.tol && step < options.step_tol) {
      result.converged = true;
      break;
    }
  }
  result.value = value;
  result.stationarity_residual = stationarity_residual(result.config.b);
  return result;
}

SeesawResult seesaw_best(const BellMatrix& m, std::size_t trials, std::uint64_t seed,
                         const SeesawOptions& options, std::size_t threads) {
  if (trials < 1) throw InvalidInputError("at least one trial is required");
  std::vector<SeesawResult> results(trials);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, trials);
  auto run = [&](std::size_t first) {
    for (std::size_t t = first; t < trials; t += workers) {
      results[t] = seesaw_optimize(m, seed + t, options);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < trials; ++t) {
    if (results[t].value > results[best].value) best = t;
  }
  return std::move(results[best]);
}

}  // namespace qbody

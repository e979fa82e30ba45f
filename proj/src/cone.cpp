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
#include "qbody/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "qbody/errors.hpp"
#include "qbody/realize.hpp"

namespace qbody {
namespace {

struct FixedBlock {
  QuantumRealization chsh = chsh_realization();
};

const FixedBlock& fixed_block() {
  static const FixedBlock block;
  return block;
}

ComplexMatrix bloch_matrix(double alpha, const Eigen::Vector3d& v) {
  ComplexMatrix m(2, 2);
  m << Complex(alpha + v.z(), 0.0), Complex(v.x(), -v.y()), Complex(v.x(), v.y()),
      Complex(alpha - v.z(), 0.0);
  return m;
}

ScanPoint evaluate(ScanKind kind, const ThirdMeasurement& t, double eps) {
  ScanPoint s;
  s.kind = kind;
  s.measurement = t;
  s.point = cone_point(t);
  s.cls = classify_point(s.point, eps);
  return s;
}

std::vector<ScanPoint> evaluate_all(ScanKind kind, const std::vector<ThirdMeasurement>& ts,
                                    double eps, std::size_t threads) {
  std::vector<ScanPoint> out(ts.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(ts.size(), 1));
  auto run = [&](std::size_t first) {
    for (std::size_t k = first; k < ts.size(); k += workers) out[k] = evaluate(kind, ts[k], eps);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return out;
}

void require_density(std::size_t grid_density) {
  if (grid_density < 2) throw InvalidInputError("grid density must be at least 2");
}

}  // namespace

void ThirdMeasurement::validate() const {
  if (!std::isfinite(alpha) || !bloch.allFinite()) {
    throw InvalidMeasurementError("measurement parameters must be finite");
  }
  if (std::abs(alpha) + bloch.norm() > 1.0 + 1e-12) {
    throw InvalidMeasurementError("|alpha| + |bloch| must not exceed 1");
  }
}

bool ThirdMeasurement::is_projective(double tol) const {
  const double r = bloch.norm();
  return (std::abs(alpha) <= tol && std::abs(r - 1.0) <= tol) ||
         (r <= tol && std::abs(std::abs(alpha) - 1.0) <= tol);
}

ComplexMatrix ThirdMeasurement::matrix() const { return bloch_matrix(alpha, bloch); }

std::string_view to_string(ConeClass c) {
  switch (c) {
    case ConeClass::apex: return "apex";
    case ConeClass::equator: return "equator";
    case ConeClass::lateral_surface: return "lateral-surface";
    case ConeClass::interior: return "interior";
    case ConeClass::exterior: return "exterior";
  }
  return "unknown";
}

std::string_view to_string(ScanKind k) {
  return k == ScanKind::projective ? "projective" : "povm";
}

Eigen::Vector3d CorrelationPlane::bloch_for(double x, double y) const {
  Eigen::Matrix<double, 2, 3> c;
  c.row(0) = c1.transpose();
  c.row(1) = c2.transpose();
  const Eigen::Vector2d target(x, y);
  return c.transpose() * (c * c.transpose()).ldlt().solve(target);
}

const CorrelationPlane& correlation_plane() {
  static const CorrelationPlane plane = [] {
    const auto& r = fixed_block().chsh;
    CorrelationPlane p;
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix probe = bloch_matrix(0.0, Eigen::Vector3d::Unit(k));
      p.c1(k) = expectation(r.state, 2, 2, &probe, &r.bob[0].matrix());
      p.c2(k) = expectation(r.state, 2, 2, &probe, &r.bob[1].matrix());
    }
    return p;
  }();
  return plane;
}

ConePoint cone_point(const ThirdMeasurement& t) {
  t.validate();
  const auto& r = fixed_block().chsh;
  const ComplexMatrix a3 = t.matrix();
  return {expectation(r.state, 2, 2, &a3, &r.bob[0].matrix()),
          expectation(r.state, 2, 2, &a3, &r.bob[1].matrix()),
          expectation(r.state, 2, 2, &a3, nullptr)};
}

ThirdMeasurement interpolation_observable(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidInputError("lambda must lie in [0, 1]");
  return {2.0 * lambda - 1.0, Eigen::Vector3d::Zero()};
}

ConeClass classify_point(const ConePoint& p, double eps) {
  const double rho = std::hypot(p.x, p.y);
  const double az = std::abs(p.z);
  if (std::abs(az - 1.0) <= eps && std::abs(p.x) <= eps && std::abs(p.y) <= eps) {
    return ConeClass::apex;
  }
  if (az <= eps && std::abs(rho - 1.0) <= eps) return ConeClass::equator;
  const double excess = rho + az - 1.0;
  if (std::abs(excess) <= eps) return ConeClass::lateral_surface;
  return excess < 0.0 ? ConeClass::interior : ConeClass::exterior;
}

std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t n) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(k);
    out.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return out;
}

double surface_resolution(std::size_t grid_density) {
  require_density(grid_density);
  // Radial half-step moves both rho and z by 1/(2N); angular half-step moves at most pi/N.
  return (std::numbers::pi + 1.0) / static_cast<double>(grid_density);
}

std::vector<ScanPoint> projective_scan(std::size_t grid_density, double eps,
                                       std::size_t threads) {
  require_density(grid_density);
  const auto& plane = correlation_plane();
  std::vector<ThirdMeasurement> ts;
  ts.push_back({1.0, Eigen::Vector3d::Zero()});
  ts.push_back({-1.0, Eigen::Vector3d::Zero()});
  for (const auto& d : fibonacci_sphere(grid_density * grid_density)) ts.push_back({0.0, d});
  for (std::size_t l = 0; l < grid_density; ++l) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(l) / grid_density;
    ts.push_back({0.0, plane.bloch_for(std::cos(theta), std::sin(theta)).normalized()});
  }
  return evaluate_all(ScanKind::projective, ts, eps, threads);
}

std::vector<ScanPoint> povm_scan(std::size_t grid_density, double eps, std::size_t threads) {
  require_density(grid_density);
  const auto& plane = correlation_plane();
  const auto n = static_cast<double>(grid_density);
  const auto dirs = fibonacci_sphere(grid_density);
  constexpr int kRadialLevels = 4;

  std::vector<ThirdMeasurement> ts;
  for (std::size_t k = 0; k <= grid_density; ++k) {
    const ThirdMeasurement base = interpolation_observable(static_cast<double>(k) / n);
    ts.push_back(base);
    const double room = 1.0 - std::abs(base.alpha);
    if (room <= 0.0) continue;
    for (const auto& d : dirs) {
      for (int j = 1; j <= kRadialLevels; ++j) {
        ts.push_back({base.alpha, room * j / kRadialLevels * d});
      }
    }
  }
  for (std::size_t k = 0; k <= grid_density; ++k) {
    const double r = static_cast<double>(k) / n;
    // At r = 0 every angle gives the same pair of apices.
    const std::size_t angles = k == 0 ? 1 : grid_density;
    for (std::size_t l = 0; l < angles; ++l) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(l) / n;
      const Eigen::Vector3d dir = plane.bloch_for(std::cos(theta), std::sin(theta)).normalized();
      for (double sign : {1.0, -1.0}) ts.push_back({sign * (1.0 - r), r * dir});
    }
  }
  return evaluate_all(ScanKind::povm, ts, eps, threads);
}

}  // namespace qbody

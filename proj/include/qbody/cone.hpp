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
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qbody/numerics.hpp"

namespace qbody {

/// A3 = alpha I + bloch . (X, Y, Z) on Alice's qubit.
struct ThirdMeasurement {
  double alpha = 0.0;
  Eigen::Vector3d bloch = Eigen::Vector3d::Zero();

  /// Throws InvalidMeasurementError unless |alpha| + |bloch| <= 1 + 1e-12.
  void validate() const;
  bool is_projective(double tol = 1e-10) const;
  ComplexMatrix matrix() const;
};

/// (<A3 B1>, <A3 B2>, <A3>) against the fixed CHSH block.
struct ConePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class ConeClass { apex, equator, lateral_surface, interior, exterior };
enum class ScanKind { projective, povm };

std::string_view to_string(ConeClass c);
std::string_view to_string(ScanKind k);

struct ScanPoint {
  ScanKind kind = ScanKind::povm;
  ThirdMeasurement measurement;
  ConePoint point;
  ConeClass cls = ConeClass::interior;
};

/// The plane of Bloch vectors seen by Bob's two observables: <(v.sigma) B_j> = v . c_j.
struct CorrelationPlane {
  Eigen::Vector3d c1;
  Eigen::Vector3d c2;

  /// Minimum-norm Bloch vector v with (v . c1, v . c2) = (x, y).
  Eigen::Vector3d bloch_for(double x, double y) const;
};

/// Computed from the CHSH block by probing the three Pauli directions.
const CorrelationPlane& correlation_plane();

ConePoint cone_point(const ThirdMeasurement& t);

/// A3 = (2 lambda - 1) I for lambda in [0, 1].
ThirdMeasurement interpolation_observable(double lambda);

ConeClass classify_point(const ConePoint& p, double eps = 1e-6);

/// n roughly uniform unit vectors on the sphere.
std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t n);

/// Upper bound on the distance from any cone-surface target to the nearest
/// point of the POVM surface family at a given density.
double surface_resolution(std::size_t grid_density);

/// Unit Bloch vectors (grid^2 Fibonacci directions plus a ring of grid points in
/// the correlation plane) and the two degenerate observables +-I.
std::vector<ScanPoint> projective_scan(std::size_t grid_density, double eps = 1e-6,
                                       std::size_t threads = 1);

/// Interpolation observables (2k/grid - 1) I, a radial grid inside the
/// |alpha| + |bloch| <= 1 ball, and the surface family alpha = +-(1 - r) with an
/// in-plane Bloch vector of length r.
std::vector<ScanPoint> povm_scan(std::size_t grid_density, double eps = 1e-6,
                                 std::size_t threads = 1);

}  // namespace qbody

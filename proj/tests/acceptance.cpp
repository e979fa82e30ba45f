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
// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qbody/cone.hpp"
#include "qbody/model.hpp"
#include "qbody/realize.hpp"
#include "qbody/sdp.hpp"
#include "qbody/seesaw.hpp"
#include "qbody/witness.hpp"

using namespace qbody;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED(" << what << ")";
    }
  }
};

using Criterion = std::function<void(Verdict&)>;

void witness_construction(Verdict& v) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t m : {2u, 4u, 6u, 8u}) {
    const double diff = max_abs_difference(to_matrix(build_x_o(m)), closed_form_x_o(m));
    worst = std::max(worst, diff);
    v.require(diff <= 1e-12, "m=" + std::to_string(m) + " mixture vs closed form");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(seconds < 1.0, "runtime");
  v.detail << "max diff " << worst << ", " << seconds << " s";
}

void concavity_witness(Verdict& v) {
  const auto w4 = dimension_witness(build_x_o(4), 2, 1e-8);
  const auto w8 = dimension_witness(build_x_o(8), 2, 1e-8);
  v.require(w4.rank == 5 && w4.excluded, "m=4");
  v.require(w8.rank == 9 && w8.excluded, "m=8");
  v.detail << "m=4 rank " << w4.rank << (w4.excluded ? " excludes" : " keeps") << " d=2; m=8 rank "
           << w8.rank << (w8.excluded ? " excludes" : " keeps") << " d=2";
}

void bell_maximum(Verdict& v) {
  for (std::size_t m : {2u, 4u, 6u}) {
    const auto best = seesaw_best(bell_matrix(m), 50, 1);
    const double bound = static_cast<double>(m * m) / 2.0;
    v.require(std::abs(best.value - bound) <= 1e-6, "value m=" + std::to_string(m));
    v.require(best.stationarity_residual <= 1e-8, "residual m=" + std::to_string(m));
    v.detail << "m=" << m << " value " << best.value << " residual " << best.stationarity_residual
             << "; ";
  }
}

void sdp_certificate(Verdict& v) {
  double worst_gap = 0.0, worst_slack = 0.0;
  for (std::size_t m = 2; m <= 12; m += 2) {
    const double md = static_cast<double>(m);
    const auto ac = analytic_certificate(m, 1e-9);
    const auto& c = ac.certificate;
    const std::string tag = "m=" + std::to_string(m);
    v.require(std::abs(c.primal_value - md * md / 2.0) <= 1e-9, tag + " primal");
    v.require(std::abs(c.dual_value - md * md / 2.0) <= 1e-9, tag + " dual");
    v.require(std::abs(c.gap) <= 1e-9, tag + " gap");
    v.require(c.min_eig_slack >= -1e-9, tag + " slack");
    worst_gap = std::max(worst_gap, std::abs(c.gap));
    worst_slack = std::min(worst_slack, c.min_eig_slack);

    auto formula = structured_eigenvalues({m, 1.0 - md / 2.0, 1.0});
    std::sort(formula.begin(), formula.end());
    const auto numeric = symmetric_eigenvalues(bell_matrix(m).entries);
    for (std::size_t k = 0; k < m; ++k) {
      const double expected = k + 1 == m ? md / 2.0 : -md / 2.0;
      v.require(std::abs(formula[k] - expected) <= 1e-10, tag + " structured eigenvalue");
      v.require(std::abs(numeric[k] - expected) <= 1e-10, tag + " numeric eigenvalue");
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  double worst_rel = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const StructuredMatrixSpec spec{size(rng), coef(rng), coef(rng)};
    const double numeric = structured_matrix(spec).fullPivLu().determinant();
    const double rel =
        std::abs(structured_determinant(spec) - numeric) / std::max(1.0, std::abs(numeric));
    worst_rel = std::max(worst_rel, rel);
  }
  v.require(worst_rel <= 1e-8, "determinant");
  v.detail << "max |gap| " << worst_gap << ", min slack eig " << worst_slack
           << ", determinant rel err " << worst_rel;
}

void tsirelson_realization(Verdict& v) {
  const TsirelsonVectors tv = x_o_vectors(4);
  const QuantumRealization r = realize_from_vectors(tv.a, tv.b);
  const Behavior b = behavior_of(r);
  const double dev = (b.joints - closed_form_x_o(4).interior()).cwiseAbs().maxCoeff();
  const double marg = std::max(b.a_marginals.cwiseAbs().maxCoeff(), b.b_marginals.cwiseAbs().maxCoeff());
  v.require(r.dim_a == 4 && r.dim_b == 4, "local dimension");
  v.require(dev <= 1e-10, "deviation");
  v.require(marg <= 1e-10, "marginals");

  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto g = gamma_generators(n);
    const auto d = static_cast<Eigen::Index>(generator_dimension(n));
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, (g[i] * g[i] - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
      for (std::size_t j = i + 1; j < n; ++j) {
        worst = std::max(worst, (g[i] * g[j] + g[j] * g[i]).cwiseAbs().maxCoeff());
      }
    }
  }
  v.require(worst <= 1e-12, "generator algebra");
  v.detail << "local dim " << r.dim_a << ", deviation " << dev << ", marginals " << marg
           << ", generator residual " << worst;
}

void chsh_block(Verdict& v) {
  const Behavior b = behavior_of(chsh_realization());
  const double value = chsh_value(b);
  const double mag = (b.joints.array().abs() - 1.0 / std::sqrt(2.0)).abs().maxCoeff();
  v.require(std::abs(value - 2.0 * std::sqrt(2.0)) <= 1e-10, "CHSH value");
  v.require(mag <= 1e-10, "joint magnitudes");
  v.detail << "CHSH " << value << ", magnitude error " << mag;
}

void cone_separation(Verdict& v) {
  const std::size_t density = 64;
  const auto proj = projective_scan(density, 1e-6);
  const auto povm = povm_scan(density, 1e-6);

  std::size_t bad_lateral = 0, bad_z = 0;
  for (const auto& p : proj) {
    const double az = std::abs(p.point.z);
    if (p.cls == ConeClass::lateral_surface && az > 1e-6 && az < 1.0 - 1e-6) ++bad_lateral;
    if (az > 1e-10 && std::abs(az - 1.0) > 1e-10) ++bad_z;
  }
  v.require(bad_lateral == 0, "projective lateral points");
  v.require(bad_z == 0, "projective z quantization");

  const double resolution = surface_resolution(density);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const double r = 1e-3 + (1.0 - 2e-3) * unit(rng);
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    const double z = (trial % 2 == 0 ? 1.0 : -1.0) * (1.0 - r);
    double best = 1e300;
    for (const auto& p : povm) {
      best = std::min(best, std::hypot(p.point.x - r * std::cos(theta), p.point.y - r * std::sin(theta),
                                       p.point.z - z));
    }
    worst = std::max(worst, best);
  }
  v.require(worst <= resolution, "surface coverage");

  double interp = 0.0;
  for (std::size_t k = 0; k <= density; ++k) {
    const double lambda = static_cast<double>(k) / density;
    const ConePoint p = cone_point(interpolation_observable(lambda));
    interp = std::max({interp, std::abs(p.x), std::abs(p.y), std::abs(p.z - (2.0 * lambda - 1.0))});
  }
  // Exact up to the rounding of 1/sqrt(2)^2 in the state amplitudes.
  v.require(interp <= 4 * std::numeric_limits<double>::epsilon(), "interpolation points");
  v.detail << bad_lateral << " projective lateral points with fractional z, " << bad_z
           << " unquantized z, coverage " << worst << " <= " << resolution << ", interpolation err "
           << interp;
}

void property_suites(Verdict& v) {
  SeesawOptions opts;
  opts.record_history = true;
  double worst_drop = 0.0;
  for (std::size_t m : {2u, 4u, 6u}) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto r = seesaw_optimize(bell_matrix(m), seed, opts);
      for (std::size_t k = 1; k < r.history.size(); ++k) {
        worst_drop = std::max(worst_drop, r.history[k - 1] - r.history[k]);
      }
    }
  }
  v.require(worst_drop <= 1e-12, "see-saw monotonicity");

  std::mt19937_64 rng(7);
  double worst_duality = -1e300;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 6);
    const auto n = static_cast<Eigen::Index>(2 * m);
    const RealMatrix vecs = oracle::random_unit_columns(rng, n, n);
    RealMatrix gamma = vecs.transpose() * vecs;
    gamma.diagonal().setOnes();
    const auto c = certify_pair(bell_matrix(m), gamma,
                                RealVector::Constant(n, static_cast<double>(m) / 4.0));
    v.require(c.valid, "dual feasibility");
    worst_duality = std::max(worst_duality, c.primal_value - c.dual_value);
  }
  v.require(worst_duality <= 1e-9, "weak duality");

  double worst_gram = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const RealMatrix vecs = oracle::random_unit_columns(rng, 2 + trial % 6, 6);
    const RealMatrix g = vecs.transpose() * vecs;
    const RealMatrix w = gram_factorize(g, 1e-9);
    worst_gram = std::max(worst_gram, (w.transpose() * w - g).cwiseAbs().maxCoeff());
  }
  v.require(worst_gram <= 1e-10, "gram round trip");

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto strategies = enumerate_balanced_strategies(6);
  double worst_affine = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w1(strategies.size()), w2(strategies.size());
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      s1 += w1[k] = unit(rng);
      s2 += w2[k] = unit(rng);
    }
    const double t = unit(rng);
    ConvexCombination c1, c2, blend;
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      c1.terms.push_back({w1[k] / s1, strategies[k]});
      c2.terms.push_back({w2[k] / s2, strategies[k]});
      blend.terms.push_back({t * w1[k] / s1, strategies[k]});
      blend.terms.push_back({(1.0 - t) * w2[k] / s2, strategies[k]});
    }
    const Behavior lhs = mix(blend);
    const Behavior b1 = mix(c1), b2 = mix(c2);
    worst_affine = std::max(
        {worst_affine, (lhs.joints - (t * b1.joints + (1 - t) * b2.joints)).cwiseAbs().maxCoeff(),
         (lhs.a_marginals - (t * b1.a_marginals + (1 - t) * b2.a_marginals)).cwiseAbs().maxCoeff(),
         (lhs.b_marginals - (t * b1.b_marginals + (1 - t) * b2.b_marginals)).cwiseAbs().maxCoeff()});
  }
  v.require(worst_affine <= 1e-14, "mix affinity");
  v.detail << "max drop " << worst_drop << ", max primal-dual " << worst_duality << ", gram err "
           << worst_gram << ", affinity err " << worst_affine;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"AC1 witness construction", witness_construction},
      {"AC2 concavity witness", concavity_witness},
      {"AC3 Bell maximum via see-saw", bell_maximum},
      {"AC4 SDP certificate", sdp_certificate},
      {"AC5 Tsirelson realization", tsirelson_realization},
      {"AC6 CHSH block", chsh_block},
      {"AC7 cone separation", cone_separation},
      {"AC8 property suites", property_suites},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what();
    }
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.str().c_str());
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

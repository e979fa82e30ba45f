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
#include "qbody/serialize.hpp"

#include <iomanip>
#include <limits>
#include <string>

#include "qbody/errors.hpp"

namespace qbody {
namespace {

std::vector<double> to_std(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

RealVector vector_from_json(const Json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const RealVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Json columns_to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < m.cols(); ++k) out.push_back(to_std(m.col(k)));
  return out;
}

RealMatrix columns_from_json(const Json& j) {
  const auto cols = j.get<std::vector<std::vector<double>>>();
  if (cols.empty()) return {};
  RealMatrix m(static_cast<Eigen::Index>(cols.front().size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].size() != cols.front().size()) throw InvalidInputError("ragged vector list");
    m.col(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const RealVector>(cols[k].data(), static_cast<Eigen::Index>(cols[k].size()));
  }
  return m;
}

Json interleave(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.push_back(m(i, j).real());
      out.push_back(m(i, j).imag());
    }
  }
  return out;
}

ComplexMatrix deinterleave(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  const auto values = j.get<std::vector<double>>();
  if (values.size() != static_cast<std::size_t>(2 * rows * cols)) {
    throw InvalidInputError("complex array has the wrong length");
  }
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c, k += 2) m(r, c) = Complex(values[k], values[k + 1]);
  }
  return m;
}

Json observables_to_json(const std::vector<Observable>& obs) {
  Json out = Json::array();
  for (const auto& o : obs) {
    out.push_back({{"kind", o.kind() == ObservableKind::projective ? "projective" : "povm"},
                   {"matrix", interleave(o.matrix())}});
  }
  return out;
}

std::vector<Observable> observables_from_json(const Json& j, std::size_t dim) {
  std::vector<Observable> out;
  const auto d = static_cast<Eigen::Index>(dim);
  for (const auto& item : j) out.emplace_back(deinterleave(item.at("matrix"), d, d));
  return out;
}

}  // namespace

Json matrix_to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_std(m.row(i).transpose()));
  return out;
}

RealMatrix matrix_from_json(const Json& j) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) return {};
  RealMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) throw InvalidInputError("ragged matrix");
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
  }
  return m;
}

Json to_json(const Behavior& b) {
  std::vector<double> joints;
  joints.reserve(static_cast<std::size_t>(b.joints.size()));
  for (Eigen::Index i = 0; i < b.joints.rows(); ++i) {
    for (Eigen::Index k = 0; k < b.joints.cols(); ++k) joints.push_back(b.joints(i, k));
  }
  return {{"m_a", b.scenario.alice_settings},
          {"m_b", b.scenario.bob_settings},
          {"a_marginals", to_std(b.a_marginals)},
          {"b_marginals", to_std(b.b_marginals)},
          {"joints", joints}};
}

Behavior behavior_from_json(const Json& j) {
  Behavior b;
  b.scenario = {j.at("m_a").get<std::size_t>(), j.at("m_b").get<std::size_t>()};
  b.a_marginals = vector_from_json(j.at("a_marginals"));
  b.b_marginals = vector_from_json(j.at("b_marginals"));
  const auto flat = j.at("joints").get<std::vector<double>>();
  const auto ma = static_cast<Eigen::Index>(b.scenario.alice_settings);
  const auto mb = static_cast<Eigen::Index>(b.scenario.bob_settings);
  if (flat.size() != static_cast<std::size_t>(ma * mb)) {
    throw InvalidInputError("joints length does not match m_a * m_b");
  }
  b.joints.resize(ma, mb);
  for (Eigen::Index i = 0; i < ma; ++i) {
    for (Eigen::Index k = 0; k < mb; ++k) b.joints(i, k) = flat[static_cast<std::size_t>(i * mb + k)];
  }
  b.validate();
  return b;
}

Json to_json(const CorrelationMatrix& x) { return matrix_to_json(x.entries()); }

Json to_json(const WitnessVerdict& v) {
  return {{"rank", v.rank}, {"d", v.d}, {"threshold", v.threshold}, {"excluded", v.excluded}};
}

WitnessVerdict verdict_from_json(const Json& j) {
  return {j.at("rank").get<std::size_t>(), j.at("d").get<std::size_t>(),
          j.at("threshold").get<std::size_t>(), j.at("excluded").get<bool>()};
}

Json to_json(const SeesawResult& r) {
  return {{"m", r.config.count()},
          {"value", r.value},
          {"iterations", r.iterations},
          {"residual", r.stationarity_residual},
          {"converged", r.converged},
          {"dim", r.config.dim()},
          {"seed", r.seed},
          {"a_vectors", columns_to_json(r.config.a)},
          {"b_vectors", columns_to_json(r.config.b)}};
}

SeesawResult seesaw_result_from_json(const Json& j) {
  SeesawResult r;
  r.value = j.at("value").get<double>();
  r.iterations = j.at("iterations").get<std::size_t>();
  r.stationarity_residual = j.at("residual").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.seed = j.value("seed", std::uint64_t{0});
  r.config.a = columns_from_json(j.at("a_vectors"));
  r.config.b = columns_from_json(j.at("b_vectors"));
  if (r.config.count() != j.at("m").get<std::size_t>() ||
      r.config.dim() != j.at("dim").get<std::size_t>()) {
    throw InvalidInputError("see-saw result vectors do not match m and dim");
  }
  return r;
}

Json to_json(const SdpCertificate& c) {
  return {{"m", c.m},
          {"primal", c.primal_value},
          {"dual", c.dual_value},
          {"gap", c.gap},
          {"min_eig_slack", c.min_eig_slack},
          {"lambda", to_std(c.lambda)},
          {"valid", c.valid}};
}

SdpCertificate certificate_from_json(const Json& j) {
  SdpCertificate c;
  c.m = j.at("m").get<std::size_t>();
  c.primal_value = j.at("primal").get<double>();
  c.dual_value = j.at("dual").get<double>();
  c.gap = j.at("gap").get<double>();
  c.min_eig_slack = j.at("min_eig_slack").get<double>();
  c.lambda = vector_from_json(j.at("lambda"));
  c.valid = j.value("valid", false);
  return c;
}

Json to_json(const QuantumRealization& r) {
  ComplexMatrix state = r.state;
  return {{"dim_a", r.dim_a},
          {"dim_b", r.dim_b},
          {"state", interleave(state.transpose())},
          {"alice", observables_to_json(r.alice)},
          {"bob", observables_to_json(r.bob)}};
}

QuantumRealization realization_from_json(const Json& j) {
  QuantumRealization r;
  r.dim_a = j.at("dim_a").get<std::size_t>();
  r.dim_b = j.at("dim_b").get<std::size_t>();
  r.state = deinterleave(j.at("state"), 1, static_cast<Eigen::Index>(r.dim_a * r.dim_b)).transpose();
  r.alice = observables_from_json(j.at("alice"), r.dim_a);
  r.bob = observables_from_json(j.at("bob"), r.dim_b);
  r.validate();
  return r;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points, bool header) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  if (header) out << "kind,alpha,bloch1,bloch2,bloch3,x,y,z,classification\n";
  for (const auto& p : points) {
    const auto& t = p.measurement;
    out << to_string(p.kind) << ',' << t.alpha << ',' << t.bloch.x() << ',' << t.bloch.y() << ','
        << t.bloch.z() << ',' << p.point.x << ',' << p.point.y << ',' << p.point.z << ','
        << to_string(p.cls) << '\n';
  }
  out.precision(old_precision);
}

Json to_json(const ScanPoint& p) {
  return {{"kind", to_string(p.kind)},
          {"alpha", p.measurement.alpha},
          {"bloch", {p.measurement.bloch.x(), p.measurement.bloch.y(), p.measurement.bloch.z()}},
          {"x", p.point.x},
          {"y", p.point.y},
          {"z", p.point.z},
          {"classification", to_string(p.cls)}};
}

}  // namespace qbody

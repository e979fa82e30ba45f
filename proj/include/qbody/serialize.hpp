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

#include <ostream>
#include <vector>

#include "json.hpp"

#include "qbody/cone.hpp"
#include "qbody/model.hpp"
#include "qbody/realize.hpp"
#include "qbody/sdp.hpp"
#include "qbody/seesaw.hpp"
#include "qbody/witness.hpp"

namespace qbody {

using Json = nlohmann::json;

Json matrix_to_json(const RealMatrix& m);
RealMatrix matrix_from_json(const Json& j);

/// {m_a, m_b, a_marginals, b_marginals, joints} with joints flattened row-major.
Json to_json(const Behavior& b);
Behavior behavior_from_json(const Json& j);

Json to_json(const CorrelationMatrix& x);

/// {rank, d, threshold, excluded}
Json to_json(const WitnessVerdict& v);
WitnessVerdict verdict_from_json(const Json& j);

/// {m, value, iterations, residual, converged, dim, seed, a_vectors, b_vectors}
Json to_json(const SeesawResult& r);
SeesawResult seesaw_result_from_json(const Json& j);

/// {m, primal, dual, gap, min_eig_slack, lambda, valid}
Json to_json(const SdpCertificate& c);
SdpCertificate certificate_from_json(const Json& j);

/// Complex data is written as interleaved [re, im, re, im, ...]; matrices row-major.
Json to_json(const QuantumRealization& r);
QuantumRealization realization_from_json(const Json& j);

/// Header: kind,alpha,bloch1,bloch2,bloch3,x,y,z,classification
void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points, bool header = true);
Json to_json(const ScanPoint& p);

}  // namespace qbody

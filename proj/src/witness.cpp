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
#include "qbody/witness.hpp"

#include <algorithm>

#include "qbody/errors.hpp"

namespace qbody {

WitnessVerdict dimension_witness(const Behavior& b, std::size_t d, double eps) {
  if (d < 1) throw InvalidInputError("local dimension must be at least 1");
  WitnessVerdict v;
  v.rank = rank_with_tolerance(to_matrix(b).entries(), eps);
  v.d = d;
  v.threshold = d * d;
  v.excluded = v.rank > v.threshold;
  return v;
}

WitnessVerdict dimension_witness(const Behavior& b, std::size_t d_a, std::size_t d_b,
                                 double eps) {
  return dimension_witness(b, std::min(d_a, d_b), eps);
}

}  // namespace qbody

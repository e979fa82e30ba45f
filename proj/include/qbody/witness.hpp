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

#include "qbody/model.hpp"

namespace qbody {

/// Outcome of the rank test. excluded is true iff rank > threshold, in which
/// case no d-dimensional realization exists; a false value claims nothing.
struct WitnessVerdict {
  std::size_t rank = 0;
  std::size_t d = 0;
  std::size_t threshold = 0;
  bool excluded = false;
};

WitnessVerdict dimension_witness(const Behavior& b, std::size_t d, double eps = 1e-8);

/// Variant with separate local dimensions; uses min(d_a, d_b)^2 as the bound.
/// The reported d is min(d_a, d_b).
WitnessVerdict dimension_witness(const Behavior& b, std::size_t d_a, std::size_t d_b,
                                 double eps = 1e-8);

}  // namespace qbody

// Copyright 2026 The qdml Authors
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

#include <cstdint>
#include <vector>

#include "qdml/state.hpp"

namespace qdml {

// Exact joint distribution over an ordered subset of wires. Probabilities are
// indexed mixed-radix over wire_dims with the first listed wire as the most
// significant digit.
struct MeasurementDistribution {
  std::vector<int> wire_dims;
  RVector probabilities;

  Index flat_index(const std::vector<int>& outcome) const;
  std::vector<int> outcome(Index flat) const;
  Scalar probability(const std::vector<int>& outcome) const;
};

// Marginalizes |amplitude|^2 over the unmeasured wires. Wires may be listed
// in any order (it determines the outcome digit order) but not repeated.
MeasurementDistribution measure_probabilities(const QuditState& state,
                                              const std::vector<int>& wires);

// Multinomial sampling from measure_probabilities via inverse transform on a
// deterministic Rng stream; returns per-outcome counts summing to shots.
std::vector<std::int64_t> sample_measurement(const QuditState& state,
                                             const std::vector<int>& wires,
                                             std::int64_t shots, std::uint64_t seed);

}  // namespace qdml

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

#include "qdml/measure.hpp"

#include <algorithm>
#include <string>

#include "qdml/rng.hpp"

namespace qdml {

Index MeasurementDistribution::flat_index(const std::vector<int>& outcome) const {
  if (outcome.size() != wire_dims.size()) {
    throw std::invalid_argument("measurement outcome: one digit per measured wire required");
  }
  Index flat = 0;
  for (std::size_t i = 0; i < wire_dims.size(); ++i) {
    if (outcome[i] < 0 || outcome[i] >= wire_dims[i]) {
      throw std::invalid_argument("measurement outcome: digit out of range");
    }
    flat = flat * wire_dims[i] + outcome[i];
  }
  return flat;
}

std::vector<int> MeasurementDistribution::outcome(Index flat) const {
  if (flat < 0 || flat >= probabilities.size()) {
    throw std::invalid_argument("measurement outcome: flat index out of range");
  }
  std::vector<int> digits(wire_dims.size());
  for (std::size_t i = wire_dims.size(); i-- > 0;) {
    digits[i] = static_cast<int>(flat % wire_dims[i]);
    flat /= wire_dims[i];
  }
  return digits;
}

Scalar MeasurementDistribution::probability(const std::vector<int>& outcome) const {
  return probabilities[flat_index(outcome)];
}

MeasurementDistribution measure_probabilities(const QuditState& state,
                                              const std::vector<int>& wires) {
  if (wires.empty()) {
    throw std::invalid_argument("measure: at least one wire required");
  }
  std::vector<int> seen(wires.begin(), wires.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("measure: wires must not repeat");
  }

  MeasurementDistribution dist;
  dist.wire_dims.reserve(wires.size());
  Index total = 1;
  for (int w : wires) {
    dist.wire_dims.push_back(state.dim(w));
    total *= state.dim(w);
  }
  dist.probabilities = RVector::Zero(total);

  const CVector& amps = state.amplitudes();
  for (Index g = 0; g < amps.size(); ++g) {
    Index flat = 0;
    for (std::size_t i = 0; i < wires.size(); ++i) {
      flat = flat * dist.wire_dims[i] + state.digit(g, wires[i]);
    }
    dist.probabilities[flat] += std::norm(amps[g]);
  }
  return dist;
}

std::vector<std::int64_t> sample_measurement(const QuditState& state,
                                             const std::vector<int>& wires,
                                             std::int64_t shots, std::uint64_t seed) {
  if (shots <= 0) {
    throw std::invalid_argument("sample: shot count must be positive");
  }
  const MeasurementDistribution dist = measure_probabilities(state, wires);
  RVector cumulative(dist.probabilities.size());
  Scalar acc = 0.0;
  for (Index i = 0; i < dist.probabilities.size(); ++i) {
    acc += dist.probabilities[i];
    cumulative[i] = acc;
  }
  // Guards the final bucket against accumulated rounding below one.
  cumulative[cumulative.size() - 1] = std::max(acc, 1.0);

  Rng rng(seed);
  std::vector<std::int64_t> counts(dist.probabilities.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const Scalar u = rng.uniform();
    const auto it = std::upper_bound(cumulative.data(),
                                     cumulative.data() + cumulative.size(), u);
    Index idx = it - cumulative.data();
    if (idx >= cumulative.size()) idx = cumulative.size() - 1;
    counts[idx]++;
  }
  return counts;
}

}  // namespace qdml

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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdml/types.hpp"

namespace qdml {

// Deterministic random source with bit-identical output on every platform.
// std::mt19937_64 has a fully specified word sequence, but the standard
// distribution templates do not, so the derived draws are fixed here:
//   uniform:  top 53 bits of one word, scaled by 2^-53
//   normal:   Box-Muller on two uniforms, second value of each pair cached
//   integer:  rejection sampling to remove modulo bias
// Changing any of these rules is a breaking change for stored seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 bits of precision.
  Scalar uniform() {
    return static_cast<Scalar>(engine_() >> 11) * 0x1.0p-53;
  }

  Scalar uniform(Scalar lo, Scalar hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal. Draws are produced in Box-Muller pairs; the sine member
  // of each pair is held back and returned by the next call.
  Scalar normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const Scalar u1 = 1.0 - uniform();  // in (0, 1], keeps the log finite
    const Scalar u2 = uniform();
    const Scalar radius = std::sqrt(-2.0 * std::log(u1));
    const Scalar angle = 2.0 * std::numbers::pi_v<Scalar> * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Scalar normal(Scalar mean, Scalar stddev) { return mean + stddev * normal(); }

  // Uniform integer in [0, bound), bias-free.
  std::uint64_t integer(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::integer: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t word = engine_();
      if (word >= threshold) return word % bound;
    }
  }

  // Fisher-Yates shuffle driven by integer().
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(integer(i))]);
    }
  }

  std::uint64_t next_word() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  Scalar spare_ = 0.0;
};

}  // namespace qdml

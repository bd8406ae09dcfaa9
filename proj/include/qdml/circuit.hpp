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

#include <vector>

#include "qdml/gates.hpp"

namespace qdml {

// Ordered gate list over a fixed register layout. Gates are validated as
// they are appended; execution is a left fold of apply_gate over the list.
class Circuit {
 public:
  explicit Circuit(std::vector<int> dims);

  Circuit& shift(int wire, long exponent);
  Circuit& unitary(int wire, CMatrix matrix);
  Circuit& controlled(int control, int target, CMatrix matrix);
  Circuit& controlled_power(int control, int target, CMatrix matrix);
  Circuit& append(Gate gate);

  const std::vector<int>& dims() const { return dims_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

 private:
  void validate(const Gate& gate) const;

  std::vector<int> dims_;
  std::vector<Gate> gates_;
};

// Applies every gate in order to `initial`, which must share the circuit's
// register layout.
QuditState run_circuit(const Circuit& circuit, const QuditState& initial);

}  // namespace qdml

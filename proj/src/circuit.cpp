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

#include "qdml/circuit.hpp"

#include <string>
#include <utility>

namespace qdml {
namespace {

void check_wire(const std::vector<int>& dims, int wire) {
  if (wire < 0 || wire >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("circuit: wire " + std::to_string(wire) +
                                " out of range for " + std::to_string(dims.size()) +
                                " wires");
  }
}

void check_matrix(const std::vector<int>& dims, int wire, const CMatrix& u) {
  if (u.rows() != u.cols() || u.rows() != dims[wire]) {
    throw std::invalid_argument("circuit: matrix on wire " + std::to_string(wire) +
                                " must be " + std::to_string(dims[wire]) + "x" +
                                std::to_string(dims[wire]));
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument("circuit: matrix on wire " + std::to_string(wire) +
                                " is not unitary");
  }
}

}  // namespace

Circuit::Circuit(std::vector<int> dims) : dims_(std::move(dims)) {
  register_size(dims_);
}

void Circuit::validate(const Gate& gate) const {
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ShiftGate>) {
          check_wire(dims_, g.wire);
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          check_wire(dims_, g.wire);
          check_matrix(dims_, g.wire, g.matrix);
        } else {
          check_wire(dims_, g.control);
          check_wire(dims_, g.target);
          if (g.control == g.target) {
            throw std::invalid_argument("circuit: control and target must differ");
          }
          check_matrix(dims_, g.target, g.matrix);
        }
      },
      gate);
}

Circuit& Circuit::append(Gate gate) {
  validate(gate);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::shift(int wire, long exponent) {
  return append(ShiftGate{wire, exponent});
}

Circuit& Circuit::unitary(int wire, CMatrix matrix) {
  return append(UnitaryGate{wire, std::move(matrix)});
}

Circuit& Circuit::controlled(int control, int target, CMatrix matrix) {
  return append(ControlledGate{control, target, std::move(matrix)});
}

Circuit& Circuit::controlled_power(int control, int target, CMatrix matrix) {
  return append(ControlledPowerGate{control, target, std::move(matrix)});
}

QuditState run_circuit(const Circuit& circuit, const QuditState& initial) {
  if (initial.dims() != circuit.dims()) {
    throw std::invalid_argument("run_circuit: state layout does not match circuit");
  }
  QuditState state = initial;
  for (const Gate& gate : circuit.gates()) {
    state = apply_gate(state, gate);
  }
  return state;
}

}  // namespace qdml

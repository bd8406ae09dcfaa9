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

#include <variant>
#include <vector>

#include "qdml/state.hpp"

namespace qdml {

// Cyclic shift on a d-level system: X^m |i> = |(i + m) mod d>. Any integer
// exponent is accepted; X^-1 is the inverse shift.
CMatrix shift_matrix(int d, long exponent);

// U^k by repeated multiplication, k >= 0; k == 0 gives the identity.
CMatrix matrix_power(const Eigen::Ref<const CMatrix>& u, int k);

// Max-abs entry of U*U - I; zero for an exactly unitary square matrix.
Scalar unitarity_error(const Eigen::Ref<const CMatrix>& u);

bool is_unitary(const Eigen::Ref<const CMatrix>& u, Scalar tol = kUnitaryTol);

// Gate records. Wires index the register left to right; matrices act on a
// single target wire and must match its dimension.
struct ShiftGate {
  int wire;
  long exponent;
};

struct UnitaryGate {
  int wire;
  CMatrix matrix;
};

// Applies `matrix` to the target when the control wire reads |1>; all other
// control values leave the target untouched.
struct ControlledGate {
  int control;
  int target;
  CMatrix matrix;
};

// Applies matrix^k to the target when the control wire reads |k>, for every
// k in 0..d_control-1 (k == 0 acts as identity).
struct ControlledPowerGate {
  int control;
  int target;
  CMatrix matrix;
};

using Gate = std::variant<ShiftGate, UnitaryGate, ControlledGate, ControlledPowerGate>;

// Gate application. Each call validates wires and matrix shape, checks
// unitarity of supplied matrices, and returns a fresh state; the controlled
// forms visit each length-d slice of the target wire once through strided
// views, so cost is linear in the register size per gate.
QuditState apply_shift(const QuditState& state, int wire, long exponent);
QuditState apply_unitary(const QuditState& state, int wire,
                         const Eigen::Ref<const CMatrix>& u);
QuditState apply_controlled_unitary(const QuditState& state, int control, int target,
                                    const Eigen::Ref<const CMatrix>& u);
QuditState apply_controlled_power(const QuditState& state, int control, int target,
                                  const Eigen::Ref<const CMatrix>& u);
QuditState apply_gate(const QuditState& state, const Gate& gate);

}  // namespace qdml

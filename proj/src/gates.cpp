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

#include "qdml/gates.hpp"

#include <limits>
#include <string>
#include <utility>

namespace qdml {
namespace {

using StridedConst =
    Eigen::Map<const CVector, Eigen::Unaligned, Eigen::InnerStride<Eigen::Dynamic>>;
using StridedMut =
    Eigen::Map<CVector, Eigen::Unaligned, Eigen::InnerStride<Eigen::Dynamic>>;

void check_target_matrix(const QuditState& state, int wire,
                         const Eigen::Ref<const CMatrix>& u, const char* gate) {
  if (u.rows() != u.cols() || u.rows() != state.dim(wire)) {
    throw std::invalid_argument(std::string(gate) + ": matrix must be " +
                                std::to_string(state.dim(wire)) + "x" +
                                std::to_string(state.dim(wire)));
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument(std::string(gate) + ": matrix is not unitary");
  }
}

// Rewrites each target-wire slice by the matrix picked per slice. A slice is
// the set of d_target global indices sharing all other digits; pick receives
// the slice's base index (target digit zero) and returns nullptr to leave the
// slice unchanged. Slices are visited through strided views of the flat
// amplitude array, so no register-sized matrix is ever formed.
template <typename PickOp>
QuditState transform_slices(const QuditState& state, int target, PickOp&& pick) {
  const CVector& in = state.amplitudes();
  CVector out = in;
  const Index stride = state.stride(target);
  const int d = state.dim(target);
  const Index block = stride * d;
  for (Index outer = 0; outer < in.size(); outer += block) {
    for (Index base = outer; base < outer + stride; ++base) {
      const CMatrix* op = pick(base);
      if (op == nullptr) continue;
      StridedConst x(in.data() + base, d, Eigen::InnerStride<>(stride));
      StridedMut y(out.data() + base, d, Eigen::InnerStride<>(stride));
      y = (*op) * x;
    }
  }
  return QuditState::unchecked(state.dims(), std::move(out));
}

void check_control_target(const QuditState& state, int control, int target,
                          const char* gate) {
  state.dim(control);
  state.dim(target);
  if (control == target) {
    throw std::invalid_argument(std::string(gate) + ": control and target must differ");
  }
}

}  // namespace

CMatrix shift_matrix(int d, long exponent) {
  if (d < 2) throw std::invalid_argument("shift_matrix: dimension must be >= 2");
  const long m = ((exponent % d) + d) % d;
  CMatrix x = CMatrix::Zero(d, d);
  for (long i = 0; i < d; ++i) {
    x((i + m) % d, i) = Complex(1.0, 0.0);
  }
  return x;
}

CMatrix matrix_power(const Eigen::Ref<const CMatrix>& u, int k) {
  if (u.rows() != u.cols()) throw std::invalid_argument("matrix_power: matrix must be square");
  if (k < 0) throw std::invalid_argument("matrix_power: exponent must be >= 0");
  CMatrix acc = CMatrix::Identity(u.rows(), u.cols());
  for (int i = 0; i < k; ++i) acc = acc * u;
  return acc;
}

Scalar unitarity_error(const Eigen::Ref<const CMatrix>& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<Scalar>::infinity();
  const CMatrix gram = u.adjoint() * u;
  return (gram - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const Eigen::Ref<const CMatrix>& u, Scalar tol) {
  return unitarity_error(u) <= tol;
}

QuditState apply_shift(const QuditState& state, int wire, long exponent) {
  const int d = state.dim(wire);
  const long m = ((exponent % d) + d) % d;
  if (m == 0) return state;
  const CVector& in = state.amplitudes();
  CVector out(in.size());
  const Index stride = state.stride(wire);
  const Index block = stride * d;
  for (Index outer = 0; outer < in.size(); outer += block) {
    for (Index base = outer; base < outer + stride; ++base) {
      for (long i = 0; i < d; ++i) {
        out[base + ((i + m) % d) * stride] = in[base + i * stride];
      }
    }
  }
  return QuditState::unchecked(state.dims(), std::move(out));
}

QuditState apply_unitary(const QuditState& state, int wire,
                         const Eigen::Ref<const CMatrix>& u) {
  check_target_matrix(state, wire, u, "unitary");
  const CMatrix op = u;
  return transform_slices(state, wire, [&](Index) { return &op; });
}

QuditState apply_controlled_unitary(const QuditState& state, int control, int target,
                                    const Eigen::Ref<const CMatrix>& u) {
  check_control_target(state, control, target, "controlled unitary");
  check_target_matrix(state, target, u, "controlled unitary");
  const CMatrix op = u;
  return transform_slices(state, target, [&](Index base) -> const CMatrix* {
    return state.digit(base, control) == 1 ? &op : nullptr;
  });
}

QuditState apply_controlled_power(const QuditState& state, int control, int target,
                                  const Eigen::Ref<const CMatrix>& u) {
  check_control_target(state, control, target, "controlled power");
  check_target_matrix(state, target, u, "controlled power");
  const int dc = state.dim(control);
  std::vector<CMatrix> powers(dc);
  powers[1] = u;
  for (int k = 2; k < dc; ++k) powers[k] = powers[k - 1] * u;
  return transform_slices(state, target, [&](Index base) -> const CMatrix* {
    const int k = state.digit(base, control);
    return k == 0 ? nullptr : &powers[k];
  });
}

QuditState apply_gate(const QuditState& state, const Gate& gate) {
  return std::visit(
      [&](const auto& g) -> QuditState {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ShiftGate>) {
          return apply_shift(state, g.wire, g.exponent);
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          return apply_unitary(state, g.wire, g.matrix);
        } else if constexpr (std::is_same_v<G, ControlledGate>) {
          return apply_controlled_unitary(state, g.control, g.target, g.matrix);
        } else {
          return apply_controlled_power(state, g.control, g.target, g.matrix);
        }
      },
      gate);
}

}  // namespace qdml

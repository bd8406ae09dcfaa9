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

#include "qdml/types.hpp"

namespace qdml {

// Pure state of a register of qudits with per-wire dimensions dims[w] >= 2.
// Amplitudes are stored in mixed-radix order with the leftmost wire as the
// most significant digit: |i0 i1 ... i_{n-1}> lives at global index
// ((i0 * d1 + i1) * d2 + i2) * ... so stride(n-1) == 1 and
// stride(w) == stride(w+1) * dims[w+1].
class QuditState {
 public:
  // Validates that the amplitude count matches the product of dims and that
  // the 2-norm is within kStateNormTol of one, then renormalizes exactly.
  QuditState(std::vector<int> dims, CVector amplitudes);

  // Skips validation and renormalization. For gate kernels whose output norm
  // is guaranteed by the algebra; callers own the unit-norm invariant.
  static QuditState unchecked(std::vector<int> dims, CVector amplitudes);

  // |digits[0] digits[1] ... digits[n-1]>.
  static QuditState basis(std::vector<int> dims, const std::vector<int>& digits);

  const std::vector<int>& dims() const { return dims_; }
  const CVector& amplitudes() const { return amps_; }
  int num_wires() const { return static_cast<int>(dims_.size()); }
  Index size() const { return amps_.size(); }

  int dim(int wire) const { return dims_[check_wire(wire)]; }
  Index stride(int wire) const { return strides_[check_wire(wire)]; }

  // Digit of `global` on `wire`, i.e. the wire's basis index in the product
  // basis state with that global index.
  int digit(Index global, int wire) const {
    return static_cast<int>((global / strides_[check_wire(wire)]) %
                            static_cast<Index>(dims_[wire]));
  }

  Scalar norm() const { return amps_.norm(); }

 private:
  struct Unchecked {};
  QuditState(Unchecked, std::vector<int> dims, CVector amplitudes);

  int check_wire(int wire) const;
  static std::vector<Index> make_strides(const std::vector<int>& dims);

  std::vector<int> dims_;
  std::vector<Index> strides_;
  CVector amps_;
};

// Initial value for one wire: either a basis index or a full state vector.
using WireInit = std::variant<int, CVector>;

// Tensor product of per-wire initial states, leftmost factor slowest-varying.
QuditState init_register(const std::vector<int>& dims,
                         const std::vector<WireInit>& initial);

// Kronecker product a (x) b of column vectors.
CVector kron(const Eigen::Ref<const CVector>& a, const Eigen::Ref<const CVector>& b);

// Product of all wire dimensions, validating every entry is >= 2.
Index register_size(const std::vector<int>& dims);

}  // namespace qdml

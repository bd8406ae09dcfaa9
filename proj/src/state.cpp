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

#include "qdml/state.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qdml {

Index register_size(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("register: needs at least one wire");
  Index total = 1;
  for (int d : dims) {
    if (d < 2) {
      throw std::invalid_argument("register: wire dimension must be >= 2, got " +
                                  std::to_string(d));
    }
    total *= d;
  }
  return total;
}

std::vector<Index> QuditState::make_strides(const std::vector<int>& dims) {
  std::vector<Index> strides(dims.size());
  Index acc = 1;
  for (std::size_t w = dims.size(); w-- > 0;) {
    strides[w] = acc;
    acc *= dims[w];
  }
  return strides;
}

QuditState::QuditState(Unchecked, std::vector<int> dims, CVector amplitudes)
    : dims_(std::move(dims)), strides_(make_strides(dims_)), amps_(std::move(amplitudes)) {}

QuditState::QuditState(std::vector<int> dims, CVector amplitudes)
    : QuditState(Unchecked{}, std::move(dims), std::move(amplitudes)) {
  const Index expected = register_size(dims_);
  if (amps_.size() != expected) {
    throw std::invalid_argument("state: expected " + std::to_string(expected) +
                                " amplitudes, got " + std::to_string(amps_.size()));
  }
  const Scalar n = amps_.norm();
  if (std::abs(n - 1.0) > kStateNormTol) {
    throw std::invalid_argument("state: amplitude norm " + std::to_string(n) +
                                " is not 1 within tolerance");
  }
  amps_ /= n;
}

QuditState QuditState::unchecked(std::vector<int> dims, CVector amplitudes) {
  return QuditState(Unchecked{}, std::move(dims), std::move(amplitudes));
}

QuditState QuditState::basis(std::vector<int> dims, const std::vector<int>& digits) {
  const Index total = register_size(dims);
  if (digits.size() != dims.size()) {
    throw std::invalid_argument("basis: one digit per wire required");
  }
  Index flat = 0;
  for (std::size_t w = 0; w < dims.size(); ++w) {
    if (digits[w] < 0 || digits[w] >= dims[w]) {
      throw std::invalid_argument("basis: digit " + std::to_string(digits[w]) +
                                  " out of range for dimension " + std::to_string(dims[w]));
    }
    flat = flat * dims[w] + digits[w];
  }
  CVector amps = CVector::Zero(total);
  amps[flat] = Complex(1.0, 0.0);
  return QuditState(Unchecked{}, std::move(dims), std::move(amps));
}

int QuditState::check_wire(int wire) const {
  if (wire < 0 || wire >= num_wires()) {
    throw std::invalid_argument("wire index " + std::to_string(wire) +
                                " out of range for " + std::to_string(num_wires()) +
                                " wires");
  }
  return wire;
}

CVector kron(const Eigen::Ref<const CVector>& a, const Eigen::Ref<const CVector>& b) {
  CVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

QuditState init_register(const std::vector<int>& dims,
                         const std::vector<WireInit>& initial) {
  register_size(dims);
  if (initial.size() != dims.size()) {
    throw std::invalid_argument("init_register: one initial value per wire required");
  }
  CVector amps = CVector::Ones(1);
  for (std::size_t w = 0; w < dims.size(); ++w) {
    CVector factor;
    if (const int* idx = std::get_if<int>(&initial[w])) {
      if (*idx < 0 || *idx >= dims[w]) {
        throw std::invalid_argument("init_register: basis index " + std::to_string(*idx) +
                                    " out of range for dimension " + std::to_string(dims[w]));
      }
      factor = CVector::Zero(dims[w]);
      factor[*idx] = Complex(1.0, 0.0);
    } else {
      factor = std::get<CVector>(initial[w]);
      if (factor.size() != dims[w]) {
        throw std::invalid_argument("init_register: wire state length does not match dimension");
      }
      const Scalar n = factor.norm();
      if (std::abs(n - 1.0) > kStateNormTol) {
        throw std::invalid_argument("init_register: wire state norm is not 1 within tolerance");
      }
    }
    amps = kron(amps, factor);
  }
  return QuditState(dims, std::move(amps));
}

}  // namespace qdml

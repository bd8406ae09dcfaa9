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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdml {

using Scalar = double;
using Complex = std::complex<Scalar>;

template <typename T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using CVector = VectorT<Complex>;
using CMatrix = MatrixT<Complex>;
using RVector = VectorT<Scalar>;
using RMatrix = MatrixT<Scalar>;
using Index = Eigen::Index;

// Acceptance tolerances. Gate matrices and input states may deviate from
// their defining property by the first two; density matrices are held to the
// tighter bounds below, and eigenvalue clamping beyond kClampShiftTol is
// treated as invalid input rather than rounding noise.
inline constexpr Scalar kUnitaryTol = 1e-9;
inline constexpr Scalar kStateNormTol = 1e-9;
inline constexpr Scalar kHermitianTol = 1e-10;
inline constexpr Scalar kPsdTol = 1e-10;
inline constexpr Scalar kTraceTol = 1e-10;
inline constexpr Scalar kClampShiftTol = 1e-9;

// Raised when a numerical invariant fails at runtime (as opposed to malformed
// caller input, which raises std::invalid_argument).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdml

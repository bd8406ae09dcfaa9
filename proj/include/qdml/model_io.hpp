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

#include <string>

#include "qdml/density.hpp"

namespace qdml {

// Model files are versioned JSON. Every floating-point value is stored as a
// C99 hex-float string ("%a"), so save followed by load reproduces each bit;
// random Fourier weights are regenerated from the stored seed rather than
// stored themselves. Loading validates unitarity, eigenvalue and prior
// normalization, and dimension consistency before returning.
inline constexpr int kModelFormatVersion = 1;

void save_model(const std::string& path, const DensityModel& model);
DensityModel load_model(const std::string& path);

std::string to_hex_float(Scalar v);
Scalar from_hex_float(const std::string& s);

}  // namespace qdml

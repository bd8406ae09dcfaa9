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

#include <cstdint>
#include <vector>

#include "qdml/circuit.hpp"
#include "qdml/density.hpp"
#include "qdml/measure.hpp"

namespace qdml {

// Output of one circuit evaluation. For a single-class model joint holds the
// density estimate alone and the label is 0; for a classifier joint[j] is the
// readout P(class wire = j, sample wire = 0) = prior_j <psi|rho_j|psi>,
// posterior is joint normalized to sum 1, and label the argmax of joint with
// ties going to the smallest class index. When every joint entry underflows
// to zero the sample is flagged degenerate instead of being classified.
struct PredictionResult {
  RVector joint;
  RVector posterior;
  int label = -1;
  bool degenerate = false;
};

// Density-estimation circuit on two wires of dimension d: the adjoint of the
// eigenvector matrix on wire 0, the eigenvalue loader on wire 1, then an
// inverse-shift power gate controlled by wire 1 targeting wire 0. Running it
// on |psi> (x) |0> makes P(wire0 = 0) the density <psi|rho|psi>.
Circuit build_dmkde_circuit(const DensityModel& model);

// Runs the density circuit on the encoded sample and reads the wire-0
// marginal at outcome 0.
Scalar dmkde_predict(const DensityModel& model, const QuditState& psi);

// Classification circuit on three wires of dimension d (class, sample,
// eigenvalue). A unit shift moves the active class into the control slot,
// each class block applies its adjoint eigenvector matrix and eigenvalue
// loader under control, an inverse shift advances to the next class, the
// accumulated shift is undone, and a final controlled inverse-shift power
// transfers eigenvalue digits onto the sample wire. Gate count is 3D + 2.
Circuit build_dmkdc_circuit(const DensityModel& model);

// Runs the classifier circuit on sqrt(priors) (x) |psi> (x) |0> and reads
// the joint marginal of wires (0, 1): joint[j] = P(wire0 = j, wire1 = 0).
PredictionResult dmkdc_predict(const DensityModel& model, const QuditState& psi);

// Argmax over joint readouts; ties break to the smallest index.
int classify_from_joint(const Eigen::Ref<const RVector>& joint);

// Feature-maps every sample row, then runs the per-model circuit. Output
// order matches input order; rows are processed concurrently when the model
// has more than one class or the batch is large.
std::vector<PredictionResult> predict_batch(const DensityModel& model,
                                            const Eigen::Ref<const RMatrix>& samples);

// Shot-based variants: estimate probabilities from counted samples of the
// final state instead of exact marginals.
Scalar dmkde_predict_sampled(const DensityModel& model, const QuditState& psi,
                             std::int64_t shots, std::uint64_t seed);
PredictionResult dmkdc_predict_sampled(const DensityModel& model, const QuditState& psi,
                                       std::int64_t shots, std::uint64_t seed);

}  // namespace qdml

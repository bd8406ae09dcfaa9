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

#include "qdml/kde_circuits.hpp"

#include <cmath>
#include <string>

#include "qdml/parallel.hpp"

namespace qdml {
namespace {

void check_sample_state(const DensityModel& model, const QuditState& psi,
                        const char* what) {
  if (psi.num_wires() != 1 || psi.dim(0) != model.dim()) {
    throw std::invalid_argument(std::string(what) +
                                ": state must be a single wire of the model dimension");
  }
}

// sqrt(priors) on the class wire, zero-padded up to dimension d. Basis
// states j >= num_classes never acquire amplitude anywhere in the circuits.
CVector prior_state(const DensityModel& model) {
  CVector pi = CVector::Zero(model.dim());
  for (int j = 0; j < model.num_classes(); ++j) {
    pi[j] = Complex(std::sqrt(model.classes[j].prior), 0.0);
  }
  return pi;
}

}  // namespace

Circuit build_dmkde_circuit(const DensityModel& model) {
  if (model.num_classes() != 1) {
    throw std::invalid_argument("density circuit: model must have exactly one class");
  }
  const int d = model.dim();
  const ClassDensity& cls = model.classes[0];
  Circuit circuit({d, d});
  circuit.unitary(0, cls.spectral.eigenvectors.adjoint());
  circuit.unitary(1, cls.u_lambda);
  circuit.controlled_power(1, 0, shift_matrix(d, -1));
  return circuit;
}

Scalar dmkde_predict(const DensityModel& model, const QuditState& psi) {
  if (model.num_classes() != 1) {
    throw std::invalid_argument("density predict: model must have exactly one class");
  }
  check_sample_state(model, psi, "density predict");
  const Circuit circuit = build_dmkde_circuit(model);
  const QuditState initial =
      init_register({model.dim(), model.dim()}, {psi.amplitudes(), 0});
  const QuditState final_state = run_circuit(circuit, initial);
  return measure_probabilities(final_state, {0}).probabilities[0];
}

Circuit build_dmkdc_circuit(const DensityModel& model) {
  const int d = model.dim();
  const int num_classes = model.num_classes();
  if (num_classes > d) {
    throw std::invalid_argument("classifier circuit: class count exceeds wire dimension");
  }
  Circuit circuit({d, d, d});
  // Class j is processed while sitting in the control slot |1>: the initial
  // unit shift brings class 0 there, each inter-block inverse shift advances
  // the next class, and the closing shift undoes the accumulated total of
  // 1 - (num_classes - 1) so labels land back on |j>.
  circuit.shift(0, 1);
  for (int j = 0; j < num_classes; ++j) {
    if (j > 0) circuit.shift(0, -1);
    circuit.controlled(0, 1, model.classes[j].spectral.eigenvectors.adjoint());
    circuit.controlled(0, 2, model.classes[j].u_lambda);
  }
  circuit.shift(0, num_classes - 2);
  circuit.controlled_power(2, 1, shift_matrix(d, -1));
  return circuit;
}

int classify_from_joint(const Eigen::Ref<const RVector>& joint) {
  if (joint.size() < 1) throw std::invalid_argument("classify: empty joint vector");
  Index best = 0;
  for (Index j = 1; j < joint.size(); ++j) {
    if (joint[j] > joint[best]) best = j;
  }
  return static_cast<int>(best);
}

namespace {

PredictionResult result_from_joint(RVector joint) {
  PredictionResult res;
  res.joint = std::move(joint);
  const Scalar total = res.joint.sum();
  if (res.joint.size() > 1 && res.joint.maxCoeff() < 1e-300) {
    res.posterior = RVector::Zero(res.joint.size());
    res.degenerate = true;
    res.label = -1;
    return res;
  }
  if (res.joint.size() == 1) {
    res.posterior = RVector::Ones(1);
    res.label = 0;
    return res;
  }
  res.posterior = res.joint / total;
  res.label = classify_from_joint(res.joint);
  return res;
}

}  // namespace

PredictionResult dmkdc_predict(const DensityModel& model, const QuditState& psi) {
  check_sample_state(model, psi, "classifier predict");
  const int d = model.dim();
  const Circuit circuit = build_dmkdc_circuit(model);
  const QuditState initial =
      init_register({d, d, d}, {prior_state(model), psi.amplitudes(), 0});
  const QuditState final_state = run_circuit(circuit, initial);
  const MeasurementDistribution dist = measure_probabilities(final_state, {0, 1});

  RVector joint(model.num_classes());
  for (int j = 0; j < model.num_classes(); ++j) {
    joint[j] = dist.probability({j, 0});
  }
  return result_from_joint(std::move(joint));
}

std::vector<PredictionResult> predict_batch(const DensityModel& model,
                                            const Eigen::Ref<const RMatrix>& samples) {
  if (samples.rows() == 0) return {};
  if (samples.cols() != feature_input_dim(model.feature_map)) {
    throw std::invalid_argument("predict batch: sample width does not match feature map");
  }
  std::vector<PredictionResult> results(samples.rows());
  parallel_for(samples.rows(), [&](Index i) {
    const QuditState psi =
        apply_feature_map(model.feature_map, samples.row(i).transpose());
    if (model.num_classes() == 1) {
      RVector joint(1);
      joint[0] = dmkde_predict(model, psi);
      results[i] = result_from_joint(std::move(joint));
    } else {
      results[i] = dmkdc_predict(model, psi);
    }
  });
  return results;
}

Scalar dmkde_predict_sampled(const DensityModel& model, const QuditState& psi,
                             std::int64_t shots, std::uint64_t seed) {
  if (model.num_classes() != 1) {
    throw std::invalid_argument("density predict: model must have exactly one class");
  }
  check_sample_state(model, psi, "density predict");
  const Circuit circuit = build_dmkde_circuit(model);
  const QuditState initial =
      init_register({model.dim(), model.dim()}, {psi.amplitudes(), 0});
  const QuditState final_state = run_circuit(circuit, initial);
  const std::vector<std::int64_t> counts = sample_measurement(final_state, {0}, shots, seed);
  return static_cast<Scalar>(counts[0]) / static_cast<Scalar>(shots);
}

PredictionResult dmkdc_predict_sampled(const DensityModel& model, const QuditState& psi,
                                       std::int64_t shots, std::uint64_t seed) {
  check_sample_state(model, psi, "classifier predict");
  const int d = model.dim();
  const Circuit circuit = build_dmkdc_circuit(model);
  const QuditState initial =
      init_register({d, d, d}, {prior_state(model), psi.amplitudes(), 0});
  const QuditState final_state = run_circuit(circuit, initial);
  const std::vector<std::int64_t> counts =
      sample_measurement(final_state, {0, 1}, shots, seed);

  RVector joint(model.num_classes());
  for (int j = 0; j < model.num_classes(); ++j) {
    joint[j] = static_cast<Scalar>(counts[static_cast<Index>(j) * d]) /
               static_cast<Scalar>(shots);
  }
  return result_from_joint(std::move(joint));
}

}  // namespace qdml

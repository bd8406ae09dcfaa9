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

#include "qdml/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qdml {

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 2) {
    throw std::invalid_argument("density matrix: must be square with dim >= 2");
  }
  const Scalar herm = (entries_ - entries_.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw std::invalid_argument("density matrix: not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  const Scalar trace_err = std::abs(entries_.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw std::invalid_argument("density matrix: trace deviates from 1 by " +
                                std::to_string(trace_err));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("density matrix: eigenvalue computation failed");
  }
  const Scalar min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw std::invalid_argument("density matrix: not positive semidefinite (min eigenvalue " +
                                std::to_string(min_eig) + ")");
  }
}

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

DensityMatrix build_density_matrix(const std::vector<QuditState>& states) {
  if (states.empty()) {
    throw std::invalid_argument("build density matrix: needs >= 1 state");
  }
  if (states.front().num_wires() != 1) {
    throw std::invalid_argument("build density matrix: states must be single-wire");
  }
  const int d = states.front().dim(0);
  CMatrix acc = CMatrix::Zero(d, d);
  for (const QuditState& s : states) {
    if (s.num_wires() != 1 || s.dim(0) != d) {
      throw std::invalid_argument("build density matrix: all states must share dimension");
    }
    acc.noalias() += s.amplitudes() * s.amplitudes().adjoint();
  }
  acc /= static_cast<Scalar>(states.size());
  // Averaged outer products are Hermitian up to rounding; symmetrizing keeps
  // the construction inside the DensityMatrix tolerance for any N.
  acc = Scalar(0.5) * (acc + acc.adjoint().eval());
  return DensityMatrix(std::move(acc));
}

SpectralDecomposition spectral_decompose(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.entries());
  if (solver.info() != Eigen::Success) {
    throw NumericError("spectral decomposition failed to converge");
  }
  const int d = rho.dim();
  RVector raw = solver.eigenvalues();

  Scalar clamp_shift = 0.0;
  for (int i = 0; i < d; ++i) {
    if (raw[i] < 0.0) {
      clamp_shift += -raw[i];
      raw[i] = 0.0;
    }
  }
  if (clamp_shift >= kClampShiftTol) {
    throw NumericError("spectral decomposition: clamped eigenvalue mass " +
                       std::to_string(clamp_shift) + " exceeds tolerance");
  }
  if (clamp_shift > 0.0) {
    raw /= raw.sum();
  }

  // Descending order; stable sort keeps the solver's output order for ties.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return raw[a] > raw[b]; });

  SpectralDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  for (int i = 0; i < d; ++i) {
    out.eigenvalues[i] = raw[order[i]];
    out.eigenvectors.col(i) = solver.eigenvectors().col(order[i]);
  }

  // Phase fix: rotate each column so its first entry of magnitude > 1e-8 is
  // real positive, making the decomposition reproducible across solvers.
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) {
      const Complex v = out.eigenvectors(r, c);
      if (std::abs(v) > 1e-8) {
        out.eigenvectors.col(c) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return out;
}

CMatrix synthesize_u_lambda(const Eigen::Ref<const RVector>& lambda) {
  const Index d = lambda.size();
  if (d < 2) throw std::invalid_argument("u_lambda: needs dimension >= 2");
  for (Index i = 0; i < d; ++i) {
    if (lambda[i] < 0.0) {
      throw std::invalid_argument("u_lambda: eigenvalues must be nonnegative");
    }
  }
  if (std::abs(lambda.sum() - 1.0) > kTraceTol) {
    throw std::invalid_argument("u_lambda: eigenvalues must sum to 1");
  }

  const RVector target = lambda.cwiseSqrt();
  // Householder reflection H = I - 2 v v^T / <v,v> with v = target - e0 maps
  // e0 onto target. <v,v> = 2 (1 - sqrt(lambda_0)) is computed via the tail
  // sum to avoid cancellation when target is close to e0.
  const Scalar tail = lambda.tail(d - 1).sum();
  if (tail < 1e-30) {
    return CMatrix::Identity(d, d);
  }
  RVector v = target;
  v[0] -= 1.0;
  const Scalar vtv = 2.0 * tail / (1.0 + target[0]);
  RMatrix h = RMatrix::Identity(d, d);
  h.noalias() -= (2.0 / vtv) * (v * v.transpose());
  return h.cast<Complex>();
}

ClassDensity make_class_density(const DensityMatrix& rho, Scalar prior) {
  if (!(prior >= 0.0 && prior <= 1.0)) {
    throw std::invalid_argument("class density: prior must lie in [0, 1]");
  }
  ClassDensity cd;
  cd.spectral = spectral_decompose(rho);
  cd.u_lambda = synthesize_u_lambda(cd.spectral.eigenvalues);
  cd.prior = prior;
  return cd;
}

DensityModel fit(const Dataset& data, const FeatureMap& map, int num_classes) {
  if (num_classes < 1) throw std::invalid_argument("fit: class count must be >= 1");
  if (data.size() < 1) throw std::invalid_argument("fit: dataset is empty");
  const int d = feature_output_dim(map);
  if (num_classes > d) {
    throw std::invalid_argument("fit: class count " + std::to_string(num_classes) +
                                " exceeds feature dimension " + std::to_string(d));
  }
  if (!data.labeled() && num_classes != 1) {
    throw std::invalid_argument("fit: unlabeled data requires a single class");
  }

  std::vector<std::vector<QuditState>> per_class(num_classes);
  for (Index i = 0; i < data.size(); ++i) {
    const int label = data.labeled() ? data.labels[i] : 0;
    if (label < 0 || label >= num_classes) {
      throw std::invalid_argument("fit: label " + std::to_string(label) +
                                  " outside 0.." + std::to_string(num_classes - 1));
    }
    per_class[label].push_back(apply_feature_map(map, data.samples.row(i).transpose()));
  }

  DensityModel model;
  model.feature_map = map;
  model.classes.reserve(num_classes);
  for (int j = 0; j < num_classes; ++j) {
    if (per_class[j].empty()) {
      throw std::invalid_argument("fit: class " + std::to_string(j) + " has no samples");
    }
    const Scalar prior =
        static_cast<Scalar>(per_class[j].size()) / static_cast<Scalar>(data.size());
    model.classes.push_back(make_class_density(build_density_matrix(per_class[j]), prior));
  }
  return model;
}

Scalar expectation_value(const DensityMatrix& rho, const QuditState& psi) {
  if (psi.num_wires() != 1 || psi.dim(0) != rho.dim()) {
    throw std::invalid_argument("expectation: state must be single-wire of the matrix dimension");
  }
  const Complex val = psi.amplitudes().dot(rho.entries() * psi.amplitudes());
  return val.real();
}

Scalar expectation_value(const DensityModel& model, int cls, const QuditState& psi) {
  if (cls < 0 || cls >= model.num_classes()) {
    throw std::invalid_argument("expectation: class index out of range");
  }
  if (psi.num_wires() != 1 || psi.dim(0) != model.dim()) {
    throw std::invalid_argument("expectation: state dimension does not match model");
  }
  const CMatrix rho = model.classes[cls].density();
  const Complex val = psi.amplitudes().dot(rho * psi.amplitudes());
  return val.real();
}

}  // namespace qdml

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

#include <vector>

#include "qdml/datasets.hpp"
#include "qdml/feature_map.hpp"
#include "qdml/state.hpp"

namespace qdml {

// Hermitian, positive semidefinite, unit-trace matrix. Construction validates
// all three properties (Hermitian and trace to kHermitianTol/kTraceTol,
// minimum eigenvalue above -kPsdTol).
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  const CMatrix& entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()); }

 private:
  CMatrix entries_;
};

// rho = U diag(lambda) U* with eigenvalues sorted descending (ties keep the
// solver's original order), clamped at zero, summing to one, and eigenvector
// columns phase-fixed so the decomposition is deterministic.
struct SpectralDecomposition {
  CMatrix eigenvectors;
  RVector eigenvalues;

  CMatrix reconstruct() const;
};

// Average outer product (1/N) sum |psi_i><psi_i| of single-wire states that
// all share dimension d.
DensityMatrix build_density_matrix(const std::vector<QuditState>& states);

// Hermitian eigendecomposition of rho. Raises NumericError when clamping
// negative eigenvalues moves the total mass by kClampShiftTol or more, since
// that indicates an invalid input rather than rounding noise.
SpectralDecomposition spectral_decompose(const DensityMatrix& rho);

// Unitary whose first column is (sqrt(lambda_0), ..., sqrt(lambda_{d-1})),
// built as the Householder reflection exchanging |0> and the target vector;
// identity when the target already is |0>.
CMatrix synthesize_u_lambda(const Eigen::Ref<const RVector>& lambda);

// One class of a fitted model: decomposition, its eigenvalue-loading unitary
// and the class prior.
struct ClassDensity {
  SpectralDecomposition spectral;
  CMatrix u_lambda;
  Scalar prior = 1.0;

  CMatrix density() const { return spectral.reconstruct(); }
};

ClassDensity make_class_density(const DensityMatrix& rho, Scalar prior);

// Fitted estimator: one density matrix per class plus the feature map that
// produced the training states. num_classes == 1 is plain density estimation.
struct DensityModel {
  FeatureMap feature_map;
  std::vector<ClassDensity> classes;

  int dim() const { return feature_output_dim(feature_map); }
  int num_classes() const { return static_cast<int>(classes.size()); }
};

// Maps every sample, averages outer products per class, decomposes, and
// records priors as class frequencies. Labels must cover 0..num_classes-1;
// an unlabeled dataset is accepted only for num_classes == 1.
DensityModel fit(const Dataset& data, const FeatureMap& map, int num_classes);

// Exact <psi| rho_j |psi> by dense quadratic form.
Scalar expectation_value(const DensityModel& model, int cls, const QuditState& psi);
Scalar expectation_value(const DensityMatrix& rho, const QuditState& psi);

}  // namespace qdml

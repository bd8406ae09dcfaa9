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

#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qdml/density.hpp"

using namespace qdml;
using namespace qdml::testing;

namespace {

QuditState single_wire(const CVector& amps) {
  return QuditState({static_cast<int>(amps.size())}, amps);
}

RVector random_simplex(int d, Rng& rng) {
  RVector lambda(d);
  for (int i = 0; i < d; ++i) lambda[i] = rng.uniform();
  return lambda / lambda.sum();
}

// Valid density matrix whose clamped eigenvalue mass is large enough to be a
// modeling error rather than rounding noise: seventeen eigenvalues sit just
// inside the constructor's PSD tolerance while their total is not.
CMatrix near_psd_with_heavy_negative_mass(Rng& rng) {
  const int d = 18;
  RVector lambda = RVector::Constant(d, -9.9e-11);
  lambda[0] = 1.0 + 17.0 * 9.9e-11;
  const CMatrix u = random_unitary(d, rng);
  CMatrix rho = u * lambda.asDiagonal() * u.adjoint();
  return 0.5 * (rho + rho.adjoint().eval());
}

}  // namespace

TEST_CASE("build_density_matrix: pure and balanced-mixture examples") {
  const QuditState zero = QuditState::basis({3}, {0});
  const DensityMatrix pure = build_density_matrix({zero});
  CHECK(pure.entries()(0, 0) == Complex(1, 0));
  CHECK(pure.entries().cwiseAbs().sum() == 1.0);

  const QuditState one = QuditState::basis({3}, {1});
  const DensityMatrix mixed = build_density_matrix({zero, one});
  CHECK(mixed.entries()(0, 0) == Complex(0.5, 0));
  CHECK(mixed.entries()(1, 1) == Complex(0.5, 0));
  CHECK(std::abs(mixed.entries()(0, 1)) == 0.0);
}

TEST_CASE("build_density_matrix matches the entrywise double-loop oracle") {
  Rng rng(101);
  const int d = 9;
  std::vector<QuditState> states;
  states.reserve(200);
  for (int i = 0; i < 200; ++i) {
    states.push_back(single_wire(random_state_vector(d, rng)));
  }
  const DensityMatrix rho = build_density_matrix(states);

  CMatrix expected = CMatrix::Zero(d, d);
  for (const QuditState& s : states) {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        expected(r, c) += s.amplitudes()[r] * std::conj(s.amplitudes()[c]);
      }
    }
  }
  expected /= 200.0;
  CHECK((rho.entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(rho.entries().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("build_density_matrix validation") {
  CHECK_THROWS_AS(build_density_matrix({}), std::invalid_argument);
  const QuditState a = QuditState::basis({3}, {0});
  const QuditState b = QuditState::basis({4}, {0});
  CHECK_THROWS_AS(build_density_matrix({a, b}), std::invalid_argument);
  CHECK_THROWS_AS(build_density_matrix({QuditState::basis({2, 2}, {0, 0})}),
                  std::invalid_argument);
}

TEST_CASE("density matrix constructor rejects invalid entries") {
  CMatrix not_hermitian = CMatrix::Identity(2, 2) * Complex(0.5, 0);
  not_hermitian(0, 1) = Complex(0.3, 0.1);
  CHECK_THROWS_AS((DensityMatrix(not_hermitian)), std::invalid_argument);

  CHECK_THROWS_AS((DensityMatrix(CMatrix::Identity(3, 3))), std::invalid_argument);

  CMatrix indefinite = CMatrix::Zero(2, 2);
  indefinite(0, 0) = Complex(1.5, 0);
  indefinite(1, 1) = Complex(-0.5, 0);
  CHECK_THROWS_AS((DensityMatrix(indefinite)), std::invalid_argument);

  CHECK_THROWS_AS((DensityMatrix(CMatrix::Ones(2, 3))), std::invalid_argument);
  CHECK_THROWS_AS((DensityMatrix(CMatrix::Ones(1, 1))), std::invalid_argument);
}

TEST_CASE("spectral_decompose: diagonal and rank-one examples") {
  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = Complex(0.7, 0);
  diag(1, 1) = Complex(0.3, 0);
  const SpectralDecomposition sd = spectral_decompose(DensityMatrix(diag));
  CHECK(sd.eigenvalues[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(sd.eigenvalues[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(std::abs(sd.eigenvectors(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(sd.eigenvectors(1, 1) - Complex(1, 0)) < 1e-12);

  const Scalar r = std::sqrt(0.5);
  CVector plus(2);
  plus << Complex(r, 0), Complex(r, 0);
  const DensityMatrix rank1 = build_density_matrix({single_wire(plus)});
  const SpectralDecomposition sd1 = spectral_decompose(rank1);
  CHECK(sd1.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(sd1.eigenvalues[1]) < 1e-14);
  // Phase convention makes the leading entry real positive.
  CHECK(std::abs(sd1.eigenvectors(0, 0) - Complex(r, 0)) < 1e-12);
  CHECK(std::abs(sd1.eigenvectors(1, 0) - Complex(r, 0)) < 1e-12);
}

TEST_CASE("spectral_decompose: reconstruction, ordering, and normalization") {
  Rng rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho(random_density_entries(9, rng));
    const SpectralDecomposition sd = spectral_decompose(rho);

    CHECK((sd.reconstruct() - rho.entries()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(std::abs(sd.eigenvalues.sum() - 1.0) < 1e-12);
    CHECK(sd.eigenvalues.minCoeff() >= 0.0);
    for (Index i = 0; i + 1 < sd.eigenvalues.size(); ++i) {
      CHECK(sd.eigenvalues[i] >= sd.eigenvalues[i + 1]);
    }
    CHECK(unitarity_error(sd.eigenvectors) < 1e-10);
    // Deterministic phase: every leading nonzero column entry real positive.
    for (Index c = 0; c < sd.eigenvectors.cols(); ++c) {
      for (Index r = 0; r < sd.eigenvectors.rows(); ++r) {
        const Complex v = sd.eigenvectors(r, c);
        if (std::abs(v) > 1e-8) {
          CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
          CHECK(v.real() > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("spectral_decompose: tiny negative eigenvalues clamp and renormalize") {
  Rng rng(107);
  const int d = 4;
  RVector lambda(d);
  lambda << 1.0 + 5e-11, -5e-11, 0.0, 0.0;
  const CMatrix u = random_unitary(d, rng);
  CMatrix entries = u * lambda.asDiagonal() * u.adjoint();
  entries = 0.5 * (entries + entries.adjoint().eval());

  const SpectralDecomposition sd = spectral_decompose(DensityMatrix(entries));
  CHECK(sd.eigenvalues.minCoeff() >= 0.0);
  CHECK(std::abs(sd.eigenvalues.sum() - 1.0) < 1e-14);
}

TEST_CASE("spectral_decompose: clamped mass beyond tolerance raises NumericError") {
  Rng rng(109);
  const DensityMatrix rho(near_psd_with_heavy_negative_mass(rng));
  CHECK_THROWS_AS(spectral_decompose(rho), NumericError);
}

TEST_CASE("synthesize_u_lambda: identity and uniform examples") {
  RVector point = RVector::Zero(4);
  point[0] = 1.0;
  const CMatrix id = synthesize_u_lambda(point);
  CHECK((id - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const int d = 5;
  const CMatrix u = synthesize_u_lambda(RVector::Constant(d, 1.0 / d));
  const Scalar expect = 1.0 / std::sqrt(static_cast<Scalar>(d));
  for (int i = 0; i < d; ++i) {
    CHECK(std::abs(u(i, 0) - Complex(expect, 0)) < 1e-14);
  }
  CHECK(unitarity_error(u) < 1e-12);
}

TEST_CASE("synthesize_u_lambda: unitary and first-column contract across dimensions") {
  Rng rng(113);
  for (const int d : {2, 4, 9, 18}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const RVector lambda = random_simplex(d, rng);
      const CMatrix u = synthesize_u_lambda(lambda);
      CHECK(unitarity_error(u) < 1e-10);

      CVector e0 = CVector::Zero(d);
      e0[0] = Complex(1, 0);
      const CVector loaded = u * e0;
      Scalar worst = 0.0;
      for (int i = 0; i < d; ++i) {
        worst = std::max(worst, std::abs(loaded[i] - Complex(std::sqrt(lambda[i]), 0)));
      }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("synthesize_u_lambda validation") {
  RVector negative(2);
  negative << 1.5, -0.5;
  CHECK_THROWS_AS(synthesize_u_lambda(negative), std::invalid_argument);

  RVector off(2);
  off << 0.6, 0.3;
  CHECK_THROWS_AS(synthesize_u_lambda(off), std::invalid_argument);

  RVector scalar(1);
  scalar << 1.0;
  CHECK_THROWS_AS(synthesize_u_lambda(scalar), std::invalid_argument);
}

TEST_CASE("fit: priors are class frequencies") {
  RMatrix anchors(3, 2);
  anchors << 0, 0, 1, 0, 0, 1;
  const FeatureMap map = make_softmax_map(anchors, 2.0);

  Dataset data;
  data.samples = RMatrix::Random(10, 2);
  data.labels = {0, 0, 0, 0, 0, 0, 1, 1, 1, 1};
  const DensityModel model = fit(data, map, 2);
  REQUIRE(model.num_classes() == 2);
  CHECK(model.classes[0].prior == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(model.classes[1].prior == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(model.dim() == 3);
}

TEST_CASE("fit: unlabeled data trains a single density") {
  const FeatureMap map = make_rff_map(1, 8, 1.0, 5);
  Dataset data;
  data.samples = RMatrix::Random(50, 1);
  const DensityModel model = fit(data, map, 1);
  CHECK(model.num_classes() == 1);
  CHECK(model.classes[0].prior == 1.0);
  CHECK(std::abs(model.classes[0].spectral.eigenvalues.sum() - 1.0) < 1e-12);
}

TEST_CASE("fit validation") {
  const FeatureMap map = make_rff_map(1, 4, 1.0, 5);
  Dataset unlabeled;
  unlabeled.samples = RMatrix::Random(10, 1);
  CHECK_THROWS_AS(fit(unlabeled, map, 2), std::invalid_argument);
  CHECK_THROWS_AS(fit(unlabeled, map, 0), std::invalid_argument);

  Dataset labeled = unlabeled;
  labeled.labels = std::vector<int>(10, 0);
  labeled.labels[3] = 2;
  CHECK_THROWS_AS(fit(labeled, map, 2), std::invalid_argument);

  // A class with no samples cannot be fitted.
  Dataset gap = unlabeled;
  gap.labels = std::vector<int>(10, 0);
  CHECK_THROWS_AS(fit(gap, map, 2), std::invalid_argument);

  Dataset empty;
  empty.samples = RMatrix(0, 1);
  CHECK_THROWS_AS(fit(empty, map, 1), std::invalid_argument);

  Dataset wrong = unlabeled;
  wrong.samples = RMatrix::Random(10, 2);
  CHECK_THROWS_AS(fit(wrong, map, 1), std::invalid_argument);
}

TEST_CASE("fit: sample order does not change the model") {
  Rng rng(127);
  RMatrix anchors(4, 2);
  anchors << 0, 0, 2, 0, 0, 2, 2, 2;
  const FeatureMap map = make_softmax_map(anchors, 1.0);

  Dataset data;
  data.samples = RMatrix(100, 2);
  data.labels.resize(100);
  for (int i = 0; i < 100; ++i) {
    data.samples(i, 0) = rng.uniform(0, 2);
    data.samples(i, 1) = rng.uniform(0, 2);
    data.labels[i] = i % 2;
  }
  const DensityModel a = fit(data, map, 2);

  std::vector<Index> perm(100);
  std::iota(perm.begin(), perm.end(), Index{0});
  rng.shuffle(perm);
  Dataset shuffled;
  shuffled.samples = RMatrix(100, 2);
  shuffled.labels.resize(100);
  for (int i = 0; i < 100; ++i) {
    shuffled.samples.row(i) = data.samples.row(perm[i]);
    shuffled.labels[i] = data.labels[perm[i]];
  }
  const DensityModel b = fit(shuffled, map, 2);

  for (int j = 0; j < 2; ++j) {
    CHECK(a.classes[j].prior == b.classes[j].prior);
    CHECK((a.classes[j].density() - b.classes[j].density()).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("fit: expectation-value classifier beats chance on separated data") {
  // Two clusters; argmax_j prior * <psi|rho_j|psi> should recover the labels.
  Rng rng(131);
  Dataset data;
  const int n = 200;
  data.samples = RMatrix(n, 2);
  data.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    const int label = i % 2;
    const Scalar cx = label == 0 ? -1.0 : 1.0;
    data.samples(i, 0) = cx + rng.normal(0, 0.3);
    data.samples(i, 1) = rng.normal(0, 0.3);
    data.labels[i] = label;
  }
  RMatrix anchors(3, 2);
  anchors << -1, 0, 0, 0, 1, 0;
  const FeatureMap map = make_softmax_map(anchors, 4.0);
  const DensityModel model = fit(data, map, 2);

  int correct = 0;
  for (int i = 0; i < n; ++i) {
    const QuditState psi = apply_feature_map(map, RVector(data.samples.row(i)));
    const Scalar s0 = model.classes[0].prior * expectation_value(model, 0, psi);
    const Scalar s1 = model.classes[1].prior * expectation_value(model, 1, psi);
    if ((s1 > s0 ? 1 : 0) == data.labels[i]) ++correct;
  }
  CHECK(correct >= 0.9 * n);
}

TEST_CASE("expectation_value: pure-state and maximally mixed examples") {
  const QuditState zero = QuditState::basis({4}, {0});
  const DensityMatrix pure = build_density_matrix({zero});
  CHECK(expectation_value(pure, zero) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expectation_value(pure, QuditState::basis({4}, {2})) ==
        doctest::Approx(0.0).epsilon(1e-14));

  Rng rng(137);
  const int d = 4;
  const DensityMatrix mixed(CMatrix::Identity(d, d) / static_cast<Scalar>(d));
  for (int trial = 0; trial < 10; ++trial) {
    const QuditState psi = single_wire(random_state_vector(d, rng));
    CHECK(expectation_value(mixed, psi) == doctest::Approx(0.25).epsilon(1e-13));
  }
}

TEST_CASE("expectation_value equals the spectral-sum oracle and stays in range") {
  Rng rng(139);
  for (int d = 2; d <= 18; ++d) {
    const DensityMatrix rho(random_density_entries(d, rng));
    const SpectralDecomposition sd = spectral_decompose(rho);
    for (int trial = 0; trial < 5; ++trial) {
      const QuditState psi = single_wire(random_state_vector(d, rng));
      const Scalar direct = expectation_value(rho, psi);

      Scalar oracle = 0.0;
      for (Index i = 0; i < d; ++i) {
        const Complex overlap = sd.eigenvectors.col(i).dot(psi.amplitudes());
        oracle += sd.eigenvalues[i] * std::norm(overlap);
      }
      CHECK(std::abs(direct - oracle) < 1e-12);
      CHECK(direct >= 0.0);
      CHECK(direct <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("expectation_value validates dimensions") {
  const DensityMatrix rho(CMatrix::Identity(3, 3) / 3.0);
  CHECK_THROWS_AS(expectation_value(rho, QuditState::basis({4}, {0})),
                  std::invalid_argument);
}

TEST_CASE("make_class_density pairs decomposition with loading unitary") {
  Rng rng(149);
  const DensityMatrix rho(random_density_entries(6, rng));
  const ClassDensity cd = make_class_density(rho, 0.25);
  CHECK(cd.prior == 0.25);
  CHECK(unitarity_error(cd.u_lambda) < 1e-10);
  // First column of u_lambda carries the eigenvalue square roots.
  for (Index i = 0; i < 6; ++i) {
    CHECK(std::abs(cd.u_lambda(i, 0) -
                   Complex(std::sqrt(cd.spectral.eigenvalues[i]), 0)) < 1e-12);
  }
  CHECK((cd.density() - rho.entries()).cwiseAbs().maxCoeff() < 1e-9);

  CHECK_THROWS_AS(make_class_density(rho, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_class_density(rho, 1.5), std::invalid_argument);
}

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

#include "qdml/datasets.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "qdml/rng.hpp"

namespace qdml {
namespace {

constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

Scalar normal_pdf(Scalar x, Scalar mean, Scalar stddev) {
  const Scalar z = (x - mean) / stddev;
  return std::exp(-0.5 * z * z) / (stddev * std::sqrt(2.0 * kPi));
}

void add_noise(RMatrix& samples, Scalar noise, Rng& rng) {
  if (noise == 0.0) return;
  for (Index i = 0; i < samples.rows(); ++i) {
    for (Index j = 0; j < samples.cols(); ++j) {
      samples(i, j) += rng.normal(0.0, noise);
    }
  }
}

}  // namespace

Scalar GaussianMixture1d::pdf(Scalar x) const {
  return weights[0] * normal_pdf(x, means[0], stddevs[0]) +
         weights[1] * normal_pdf(x, means[1], stddevs[1]);
}

Dataset sample_gaussian_mixture_1d(Index n, const GaussianMixture1d& mix,
                                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mixture: sample count must be >= 1");
  if (std::abs(mix.weights[0] + mix.weights[1] - 1.0) > 1e-12 ||
      mix.weights[0] < 0.0 || mix.weights[1] < 0.0) {
    throw std::invalid_argument("mixture: weights must be nonnegative and sum to 1");
  }
  if (!(mix.stddevs[0] > 0.0) || !(mix.stddevs[1] > 0.0)) {
    throw std::invalid_argument("mixture: stddevs must be positive");
  }

  Rng rng(seed);
  Dataset data;
  data.samples.resize(n, 1);
  for (Index i = 0; i < n; ++i) {
    const int k = rng.uniform() < mix.weights[0] ? 0 : 1;
    data.samples(i, 0) = rng.normal(mix.means[k], mix.stddevs[k]);
  }
  data.params = nlohmann::json{{"kind", "mixture1d"},
                               {"n", n},
                               {"weights", mix.weights},
                               {"means", mix.means},
                               {"stddevs", mix.stddevs},
                               {"seed", seed}}
                    .dump();
  return data;
}

Dataset make_grid_1d(Scalar lo, Scalar hi, Index n) {
  if (!(lo < hi)) throw std::invalid_argument("grid: bounds must satisfy lo < hi");
  if (n < 2) throw std::invalid_argument("grid: needs >= 2 points");
  Dataset data;
  data.samples.resize(n, 1);
  for (Index i = 0; i < n; ++i) {
    data.samples(i, 0) =
        lo + (hi - lo) * static_cast<Scalar>(i) / static_cast<Scalar>(n - 1);
  }
  data.params = nlohmann::json{
      {"kind", "grid1d"}, {"lo", lo}, {"hi", hi}, {"n", n}}.dump();
  return data;
}

Dataset make_moons(Index n, Scalar noise, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("moons: needs >= 2 points");
  if (noise < 0.0) throw std::invalid_argument("moons: noise must be >= 0");
  const Index n_out = n / 2;
  const Index n_in = n - n_out;

  const auto arc_t = [](Index i, Index count) {
    return count > 1 ? kPi * static_cast<Scalar>(i) / static_cast<Scalar>(count - 1) : 0.0;
  };
  Dataset data;
  data.samples.resize(n, 2);
  data.labels.assign(n, 0);
  for (Index i = 0; i < n_out; ++i) {
    const Scalar t = arc_t(i, n_out);
    data.samples(i, 0) = std::cos(t);
    data.samples(i, 1) = std::sin(t);
  }
  for (Index i = 0; i < n_in; ++i) {
    const Scalar t = arc_t(i, n_in);
    data.samples(n_out + i, 0) = 1.0 - std::cos(t);
    data.samples(n_out + i, 1) = 0.5 - std::sin(t);
    data.labels[n_out + i] = 1;
  }

  Rng rng(seed);
  add_noise(data.samples, noise, rng);
  data.params = nlohmann::json{
      {"kind", "moons"}, {"n", n}, {"noise", noise}, {"seed", seed}}.dump();
  return data;
}

Dataset make_circles(Index n, Scalar noise, Scalar factor, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("circles: needs >= 2 points");
  if (noise < 0.0) throw std::invalid_argument("circles: noise must be >= 0");
  if (!(factor > 0.0) || !(factor < 1.0)) {
    throw std::invalid_argument("circles: factor must lie in (0, 1)");
  }
  const Index n_out = n / 2;
  const Index n_in = n - n_out;

  Dataset data;
  data.samples.resize(n, 2);
  data.labels.assign(n, 0);
  for (Index i = 0; i < n_out; ++i) {
    const Scalar t = 2.0 * kPi * static_cast<Scalar>(i) / static_cast<Scalar>(n_out);
    data.samples(i, 0) = std::cos(t);
    data.samples(i, 1) = std::sin(t);
  }
  for (Index i = 0; i < n_in; ++i) {
    const Scalar t = 2.0 * kPi * static_cast<Scalar>(i) / static_cast<Scalar>(n_in);
    data.samples(n_out + i, 0) = factor * std::cos(t);
    data.samples(n_out + i, 1) = factor * std::sin(t);
    data.labels[n_out + i] = 1;
  }

  Rng rng(seed);
  add_noise(data.samples, noise, rng);
  data.params = nlohmann::json{{"kind", "circles"},
                               {"n", n},
                               {"noise", noise},
                               {"factor", factor},
                               {"seed", seed}}
                    .dump();
  return data;
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& data, Index train_count,
                                             std::uint64_t seed) {
  if (train_count < 1 || train_count >= data.size()) {
    throw std::invalid_argument("split: train count must leave both parts nonempty");
  }
  std::vector<Index> order(data.size());
  std::iota(order.begin(), order.end(), Index{0});
  Rng rng(seed);
  rng.shuffle(order);

  const auto take = [&](Index begin, Index count) {
    Dataset part;
    part.samples.resize(count, data.samples.cols());
    if (data.labeled()) part.labels.resize(count);
    for (Index i = 0; i < count; ++i) {
      part.samples.row(i) = data.samples.row(order[begin + i]);
      if (data.labeled()) part.labels[i] = data.labels[order[begin + i]];
    }
    part.params = data.params;
    return part;
  };
  return {take(0, train_count), take(train_count, data.size() - train_count)};
}

}  // namespace qdml

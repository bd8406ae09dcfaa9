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

// Command-line harness: dataset generation, training, circuit prediction,
// evaluation, and plot-grid emission. Every command is deterministic given
// its flags; all randomness flows from explicit seeds. Exit codes: 0 on
// success, 2 for malformed input, 3 for numerical-invariant failures.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdml/csv.hpp"
#include "qdml/datasets.hpp"
#include "qdml/density.hpp"
#include "qdml/feature_map.hpp"
#include "qdml/kde_circuits.hpp"
#include "qdml/metrics.hpp"
#include "qdml/model_io.hpp"
#include "qdml/parallel.hpp"

namespace {

using nlohmann::json;
using namespace qdml;

constexpr int kExitInputError = 2;
constexpr int kExitNumericError = 3;

struct GenerateArgs {
  std::string kind;
  std::string out;
  long long n = 1000;
  std::uint64_t seed = 1;
  double noise = 0.1;
  double factor = 0.5;
  std::vector<double> weights{0.4, 0.6};
  std::vector<double> means{-1.0, 1.5};
  std::vector<double> stddevs{0.6, 0.4};
  double lo = -4.0;
  double hi = 4.0;
  long long split = -1;
  std::uint64_t split_seed = 7;
  std::string train_out;
  std::string test_out;
};

GaussianMixture1d mixture_from(const GenerateArgs& args) {
  if (args.weights.size() != 2 || args.means.size() != 2 || args.stddevs.size() != 2) {
    throw std::invalid_argument("mixture parameters need exactly two components");
  }
  GaussianMixture1d mix;
  mix.weights = {args.weights[0], args.weights[1]};
  mix.means = {args.means[0], args.means[1]};
  mix.stddevs = {args.stddevs[0], args.stddevs[1]};
  return mix;
}

int cmd_generate(const GenerateArgs& args) {
  Dataset data;
  if (args.kind == "moons") {
    data = make_moons(args.n, args.noise, args.seed);
  } else if (args.kind == "circles") {
    data = make_circles(args.n, args.noise, args.factor, args.seed);
  } else if (args.kind == "mixture") {
    data = sample_gaussian_mixture_1d(args.n, mixture_from(args), args.seed);
  } else if (args.kind == "grid") {
    data = make_grid_1d(args.lo, args.hi, args.n);
  } else if (args.kind == "mixture-pdf") {
    const GaussianMixture1d mix = mixture_from(args);
    const Dataset grid = make_grid_1d(args.lo, args.hi, args.n);
    RMatrix values(grid.size(), 2);
    for (Index i = 0; i < grid.size(); ++i) {
      values(i, 0) = grid.samples(i, 0);
      values(i, 1) = mix.pdf(grid.samples(i, 0));
    }
    write_csv(args.out, {"x0", "pdf"}, values);
    std::cout << "wrote " << grid.size() << " reference densities to " << args.out << "\n";
    return 0;
  } else {
    throw std::invalid_argument("unknown dataset kind '" + args.kind +
                                "' (moons, circles, mixture, grid, mixture-pdf)");
  }

  write_dataset_csv(args.out, data);
  std::cout << "wrote " << data.size() << " samples to " << args.out << "\n";

  if (args.split >= 0) {
    if (args.train_out.empty() || args.test_out.empty()) {
      throw std::invalid_argument("--split requires --train-out and --test-out");
    }
    auto [train, test] = train_test_split(data, args.split, args.split_seed);
    json split_info{{"split_train_count", args.split}, {"split_seed", args.split_seed}};
    json train_params = json::parse(train.params);
    train_params.update(split_info);
    train_params["part"] = "train";
    train.params = train_params.dump();
    json test_params = json::parse(test.params);
    test_params.update(split_info);
    test_params["part"] = "test";
    test.params = test_params.dump();
    write_dataset_csv(args.train_out, train);
    write_dataset_csv(args.test_out, test);
    std::cout << "split " << train.size() << "/" << test.size() << " into "
              << args.train_out << ", " << args.test_out << "\n";
  }
  return 0;
}

struct FitArgs {
  std::string data_path;
  std::string out;
  std::string map_kind = "softmax";
  int classes = 0;  // 0 = infer from labels
  int dim = 18;
  double gamma = 2.0;
  std::uint64_t map_seed = 11;
  double beta = 8.0;
  std::vector<int> grid{3, 3};
};

int cmd_fit(const FitArgs& args) {
  const Dataset data = read_dataset_csv(args.data_path);

  int num_classes = args.classes;
  if (num_classes == 0) {
    num_classes = 1;
    if (data.labeled()) {
      num_classes = *std::max_element(data.labels.begin(), data.labels.end()) + 1;
    }
  }

  FeatureMap map;
  if (args.map_kind == "rff") {
    map = make_rff_map(static_cast<int>(data.point_dim()), args.dim, args.gamma,
                       args.map_seed);
  } else if (args.map_kind == "softmax") {
    if (static_cast<Index>(args.grid.size()) != data.point_dim()) {
      throw std::invalid_argument("--grid needs one count per input column");
    }
    std::vector<std::pair<Scalar, Scalar>> bounds;
    for (Index c = 0; c < data.point_dim(); ++c) {
      bounds.emplace_back(data.samples.col(c).minCoeff(), data.samples.col(c).maxCoeff());
    }
    map = make_softmax_map(make_anchor_grid(bounds, args.grid), args.beta);
  } else {
    throw std::invalid_argument("unknown feature map kind '" + args.map_kind +
                                "' (rff, softmax)");
  }

  const DensityModel model = fit(data, map, num_classes);
  save_model(args.out, model);
  std::cout << "fitted " << model.num_classes() << "-class model, dim " << model.dim()
            << ", saved to " << args.out << "\n";
  return 0;
}

struct PredictArgs {
  std::string model_path;
  std::string data_path;
  std::string out;
  std::string mode = "exact";
  long long shots = 4096;
  std::uint64_t shot_seed = 17;
  bool with_oracle = false;
};

int cmd_predict(const PredictArgs& args) {
  if (args.mode != "exact" && args.mode != "shots") {
    throw std::invalid_argument("--mode must be exact or shots");
  }
  const DensityModel model = load_model(args.model_path);
  const Dataset data = read_dataset_csv(args.data_path);
  if (data.point_dim() != feature_input_dim(model.feature_map)) {
    throw std::invalid_argument("data width does not match the model's feature map");
  }
  const int num_classes = model.num_classes();

  std::vector<PredictionResult> results(data.size());
  if (args.mode == "exact") {
    results = predict_batch(model, data.samples);
  } else {
    parallel_for(data.size(), [&](Index i) {
      const QuditState psi =
          apply_feature_map(model.feature_map, data.samples.row(i).transpose());
      // Per-row seed offset keeps rows independent yet reproducible.
      const std::uint64_t row_seed = args.shot_seed + static_cast<std::uint64_t>(i);
      if (num_classes == 1) {
        PredictionResult res;
        res.joint = RVector::Constant(1, dmkde_predict_sampled(model, psi, args.shots, row_seed));
        res.posterior = RVector::Ones(1);
        res.label = 0;
        results[i] = std::move(res);
      } else {
        results[i] = dmkdc_predict_sampled(model, psi, args.shots, row_seed);
      }
    });
  }

  std::vector<std::string> header;
  Index cols;
  if (num_classes == 1) {
    header = {"density"};
    cols = args.with_oracle ? 2 : 1;
    if (args.with_oracle) header.push_back("oracle");
  } else {
    header = {"label"};
    for (int j = 0; j < num_classes; ++j) header.push_back("p_joint_" + std::to_string(j));
    for (int j = 0; j < num_classes; ++j) header.push_back("p_post_" + std::to_string(j));
    cols = 1 + 2 * num_classes + (args.with_oracle ? num_classes : 0);
    if (args.with_oracle) {
      for (int j = 0; j < num_classes; ++j) header.push_back("oracle_" + std::to_string(j));
    }
  }

  RMatrix out(data.size(), cols);
  for (Index i = 0; i < data.size(); ++i) {
    const PredictionResult& res = results[i];
    if (num_classes == 1) {
      out(i, 0) = res.joint[0];
      if (args.with_oracle) {
        const QuditState psi =
            apply_feature_map(model.feature_map, data.samples.row(i).transpose());
        out(i, 1) = expectation_value(model, 0, psi);
      }
    } else {
      out(i, 0) = static_cast<Scalar>(res.label);
      for (int j = 0; j < num_classes; ++j) out(i, 1 + j) = res.joint[j];
      for (int j = 0; j < num_classes; ++j) {
        out(i, 1 + num_classes + j) = res.posterior[j];
      }
      if (args.with_oracle) {
        const QuditState psi =
            apply_feature_map(model.feature_map, data.samples.row(i).transpose());
        for (int j = 0; j < num_classes; ++j) {
          out(i, 1 + 2 * num_classes + j) =
              model.classes[j].prior * expectation_value(model, j, psi);
        }
      }
    }
  }
  write_csv(args.out, header, out);
  std::cout << "wrote " << data.size() << " predictions to " << args.out << "\n";
  return 0;
}

struct EvaluateArgs {
  std::string predictions;
  std::string truth;
  std::string out;
  std::string mode = "classification";
  int classes = 0;
};

int cmd_evaluate(const EvaluateArgs& args) {
  const CsvTable pred = read_csv(args.predictions);
  const CsvTable truth = read_csv(args.truth);
  if (pred.values.rows() != truth.values.rows()) {
    throw std::invalid_argument("prediction and truth files disagree on row count");
  }
  json report;

  if (args.mode == "classification") {
    const Index pc = pred.column("label");
    const Index tc = truth.column("label");
    if (pc < 0 || tc < 0) {
      throw std::invalid_argument("classification mode needs a 'label' column in both files");
    }
    std::vector<int> predicted(pred.values.rows()), actual(truth.values.rows());
    int max_label = 0;
    for (Index i = 0; i < pred.values.rows(); ++i) {
      predicted[i] = static_cast<int>(pred.values(i, pc));
      actual[i] = static_cast<int>(truth.values(i, tc));
      max_label = std::max({max_label, predicted[i], actual[i]});
    }
    const int num_classes = args.classes > 0 ? args.classes : max_label + 1;
    const ClassificationReport rep = evaluate_classification(predicted, actual, num_classes);

    report["mode"] = "classification";
    report["accuracy"] = rep.accuracy;
    report["num_classes"] = num_classes;
    json confusion = json::array();
    for (int t = 0; t < num_classes; ++t) {
      json row = json::array();
      for (int p = 0; p < num_classes; ++p) row.push_back(rep.confusion(t, p));
      confusion.push_back(std::move(row));
    }
    report["confusion"] = std::move(confusion);
    report["precision"] = std::vector<Scalar>(rep.precision.data(),
                                              rep.precision.data() + rep.precision.size());
    report["recall"] =
        std::vector<Scalar>(rep.recall.data(), rep.recall.data() + rep.recall.size());

    std::cout << "accuracy " << rep.accuracy << " over " << predicted.size()
              << " samples, " << num_classes << " classes\n";
  } else if (args.mode == "density") {
    const Index dc = pred.column("density");
    const Index rc = truth.column("pdf");
    if (dc < 0) throw std::invalid_argument("density mode needs a 'density' column in predictions");
    if (rc < 0) throw std::invalid_argument("density mode needs a 'pdf' column in the truth file");
    const DensityReport rep =
        evaluate_density(pred.values.col(dc), truth.values.col(rc));
    report["mode"] = "density";
    report["pearson"] = rep.pearson;
    report["mean_abs_error"] = rep.mean_abs_error;
    std::cout << "pearson " << rep.pearson << ", mean abs error " << rep.mean_abs_error
              << " over " << pred.values.rows() << " points\n";
  } else {
    throw std::invalid_argument("--mode must be classification or density");
  }

  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write report file: " + args.out);
    out << report.dump(2) << '\n';
  }
  return 0;
}

struct PlotdataArgs {
  std::string model_path;
  std::string out;
  std::vector<double> lo{-4.0};
  std::vector<double> hi{4.0};
  std::vector<long long> n{1000};
};

int cmd_plotdata(const PlotdataArgs& args) {
  const DensityModel model = load_model(args.model_path);
  const int in_dim = feature_input_dim(model.feature_map);
  if (static_cast<int>(args.lo.size()) != in_dim ||
      static_cast<int>(args.hi.size()) != in_dim ||
      static_cast<int>(args.n.size()) != in_dim) {
    throw std::invalid_argument("--lo/--hi/--n need one value per model input dimension (" +
                                std::to_string(in_dim) + ")");
  }
  Index total = 1;
  for (int a = 0; a < in_dim; ++a) {
    if (args.n[a] < 2) throw std::invalid_argument("--n entries must be >= 2");
    if (!(args.lo[a] < args.hi[a])) throw std::invalid_argument("--lo must be below --hi");
    total *= args.n[a];
  }

  RMatrix points(total, in_dim);
  for (Index row = 0; row < total; ++row) {
    Index rest = row;
    for (int a = in_dim; a-- > 0;) {
      const Index k = rest % args.n[a];
      rest /= args.n[a];
      points(row, a) = args.lo[a] + (args.hi[a] - args.lo[a]) * static_cast<Scalar>(k) /
                                        static_cast<Scalar>(args.n[a] - 1);
    }
  }

  const std::vector<PredictionResult> results = predict_batch(model, points);
  const int num_classes = model.num_classes();

  std::vector<std::string> header;
  for (int a = 0; a < in_dim; ++a) header.push_back("x" + std::to_string(a));
  Index extra;
  if (num_classes == 1) {
    header.push_back("density");
    extra = 1;
  } else {
    for (int j = 0; j < num_classes; ++j) header.push_back("p_" + std::to_string(j));
    header.push_back("label");
    extra = num_classes + 1;
  }

  RMatrix out(total, in_dim + extra);
  out.leftCols(in_dim) = points;
  for (Index i = 0; i < total; ++i) {
    if (num_classes == 1) {
      out(i, in_dim) = results[i].joint[0];
    } else {
      for (int j = 0; j < num_classes; ++j) out(i, in_dim + j) = results[i].posterior[j];
      out(i, in_dim + num_classes) = static_cast<Scalar>(results[i].label);
    }
  }
  write_csv(args.out, header, out);
  std::cout << "wrote " << total << " grid evaluations to " << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix kernel density estimation and classification "
               "with qudit circuit execution"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic dataset CSV");
  generate->add_option("--kind", gen.kind, "moons, circles, mixture, grid, mixture-pdf")
      ->required();
  generate->add_option("--out", gen.out, "Output CSV path")->required();
  generate->add_option("--n", gen.n, "Sample or grid point count");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--noise", gen.noise, "Gaussian noise stddev (moons, circles)");
  generate->add_option("--factor", gen.factor, "Inner circle radius ratio (circles)");
  generate->add_option("--weights", gen.weights, "Mixture weights")->expected(2);
  generate->add_option("--means", gen.means, "Mixture means")->expected(2);
  generate->add_option("--stddevs", gen.stddevs, "Mixture stddevs")->expected(2);
  generate->add_option("--lo", gen.lo, "Grid lower bound");
  generate->add_option("--hi", gen.hi, "Grid upper bound");
  generate->add_option("--split", gen.split, "Also split: train row count");
  generate->add_option("--split-seed", gen.split_seed, "Seed for the split shuffle");
  generate->add_option("--train-out", gen.train_out, "Train split CSV path");
  generate->add_option("--test-out", gen.test_out, "Test split CSV path");

  FitArgs fit_args;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Train a density model from a CSV");
  fit_cmd->add_option("--data", fit_args.data_path, "Training CSV")->required();
  fit_cmd->add_option("--out", fit_args.out, "Output model path")->required();
  fit_cmd->add_option("--map", fit_args.map_kind, "Feature map: rff or softmax");
  fit_cmd->add_option("--classes", fit_args.classes,
                      "Class count (default: inferred from labels)");
  fit_cmd->add_option("--dim", fit_args.dim, "Feature dimension (rff)");
  fit_cmd->add_option("--gamma", fit_args.gamma, "Gaussian kernel bandwidth (rff)");
  fit_cmd->add_option("--map-seed", fit_args.map_seed, "Feature sampling seed (rff)");
  fit_cmd->add_option("--beta", fit_args.beta, "Softmax sharpness (softmax)");
  fit_cmd->add_option("--grid", fit_args.grid,
                      "Anchor counts per input axis (softmax)")
      ->delimiter(',');

  PredictArgs pred_args;
  CLI::App* predict = app.add_subcommand("predict", "Run the prediction circuit per sample");
  predict->add_option("--model", pred_args.model_path, "Model file")->required();
  predict->add_option("--data", pred_args.data_path, "Input CSV")->required();
  predict->add_option("--out", pred_args.out, "Output CSV path")->required();
  predict->add_option("--mode", pred_args.mode, "exact (default) or shots");
  predict->add_option("--shots", pred_args.shots, "Shot count for shots mode");
  predict->add_option("--shot-seed", pred_args.shot_seed, "Base seed for shots mode");
  predict->add_flag("--with-oracle", pred_args.with_oracle,
                    "Also emit closed-form expectation columns");

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against truth");
  evaluate->add_option("--predictions", eval_args.predictions, "Prediction CSV")->required();
  evaluate->add_option("--truth", eval_args.truth, "Truth CSV")->required();
  evaluate->add_option("--out", eval_args.out, "Machine-readable report path (JSON)");
  evaluate->add_option("--mode", eval_args.mode, "classification (default) or density");
  evaluate->add_option("--classes", eval_args.classes, "Class count override");

  PlotdataArgs plot_args;
  CLI::App* plotdata = app.add_subcommand("plotdata", "Evaluate the model on a dense grid");
  plotdata->add_option("--model", plot_args.model_path, "Model file")->required();
  plotdata->add_option("--out", plot_args.out, "Output CSV path")->required();
  plotdata->add_option("--lo", plot_args.lo, "Lower bound per axis")->delimiter(',');
  plotdata->add_option("--hi", plot_args.hi, "Upper bound per axis")->delimiter(',');
  plotdata->add_option("--n", plot_args.n, "Point count per axis")->delimiter(',');

  try {
    app.parse(argc, argv);
    if (generate->parsed()) return cmd_generate(gen);
    if (fit_cmd->parsed()) return cmd_fit(fit_args);
    if (predict->parsed()) return cmd_predict(pred_args);
    if (evaluate->parsed()) return cmd_evaluate(eval_args);
    if (plotdata->parsed()) return cmd_plotdata(plot_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
  return 0;
}

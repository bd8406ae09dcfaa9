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

#include "qdml/model_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "qdml/gates.hpp"

namespace qdml {

using nlohmann::json;

std::string to_hex_float(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

Scalar from_hex_float(const std::string& s) {
  char* end = nullptr;
  const Scalar v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("model file: malformed float '" + s + "'");
  }
  return v;
}

namespace {

json encode_real_vector(const Eigen::Ref<const RVector>& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(to_hex_float(v[i]));
  return arr;
}

json encode_real_matrix(const Eigen::Ref<const RMatrix>& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    rows.push_back(encode_real_vector(m.row(r).transpose()));
  }
  return rows;
}

json encode_complex_matrix(const Eigen::Ref<const CMatrix>& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({to_hex_float(m(r, c).real()),
                                 to_hex_float(m(r, c).imag())}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RVector decode_real_vector(const json& arr, Index expected) {
  if (!arr.is_array() || (expected >= 0 && static_cast<Index>(arr.size()) != expected)) {
    throw std::invalid_argument("model file: vector has wrong shape");
  }
  RVector v(static_cast<Index>(arr.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v[i] = from_hex_float(arr.at(static_cast<std::size_t>(i)).get<std::string>());
  }
  return v;
}

RMatrix decode_real_matrix(const json& rows, Index nrows, Index ncols) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != nrows) {
    throw std::invalid_argument("model file: matrix has wrong row count");
  }
  RMatrix m(nrows, ncols);
  for (Index r = 0; r < nrows; ++r) {
    m.row(r) = decode_real_vector(rows.at(static_cast<std::size_t>(r)), ncols).transpose();
  }
  return m;
}

CMatrix decode_complex_matrix(const json& rows, Index dim) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != dim) {
    throw std::invalid_argument("model file: matrix has wrong row count");
  }
  CMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const json& row = rows.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
      throw std::invalid_argument("model file: matrix has wrong column count");
    }
    for (Index c = 0; c < dim; ++c) {
      const json& pair = row.at(static_cast<std::size_t>(c));
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("model file: matrix entry is not a (re, im) pair");
      }
      m(r, c) = Complex(from_hex_float(pair.at(0).get<std::string>()),
                        from_hex_float(pair.at(1).get<std::string>()));
    }
  }
  return m;
}

json encode_feature_map(const FeatureMap& map) {
  return std::visit(
      [](const auto& m) -> json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, RffMap>) {
          return json{{"kind", "rff"},
                      {"input_dim", m.input_dim},
                      {"output_dim", m.output_dim},
                      {"gamma", to_hex_float(m.gamma)},
                      {"seed", m.seed}};
        } else {
          return json{{"kind", "softmax"},
                      {"beta", to_hex_float(m.beta)},
                      {"anchors", encode_real_matrix(m.anchors)}};
        }
      },
      map);
}

FeatureMap decode_feature_map(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rff") {
    return make_rff_map(j.at("input_dim").get<int>(), j.at("output_dim").get<int>(),
                        from_hex_float(j.at("gamma").get<std::string>()),
                        j.at("seed").get<std::uint64_t>());
  }
  if (kind == "softmax") {
    const json& rows = j.at("anchors");
    if (!rows.is_array() || rows.empty()) {
      throw std::invalid_argument("model file: softmax anchors missing");
    }
    const Index nrows = static_cast<Index>(rows.size());
    const Index ncols = static_cast<Index>(rows.at(0).size());
    return make_softmax_map(decode_real_matrix(rows, nrows, ncols),
                            from_hex_float(j.at("beta").get<std::string>()));
  }
  throw std::invalid_argument("model file: unknown feature map kind '" + kind + "'");
}

}  // namespace

void save_model(const std::string& path, const DensityModel& model) {
  json classes = json::array();
  for (const ClassDensity& cls : model.classes) {
    classes.push_back(json{{"prior", to_hex_float(cls.prior)},
                           {"eigenvalues", encode_real_vector(cls.spectral.eigenvalues)},
                           {"eigenvectors", encode_complex_matrix(cls.spectral.eigenvectors)},
                           {"u_lambda", encode_complex_matrix(cls.u_lambda)}});
  }
  const json doc{{"format", "qdml-model"},
                 {"version", kModelFormatVersion},
                 {"dim", model.dim()},
                 {"num_classes", model.num_classes()},
                 {"feature_map", encode_feature_map(model.feature_map)},
                 {"classes", std::move(classes)}};

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write model file: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw std::invalid_argument("write failed for model file: " + path);
}

DensityModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": model file is not valid JSON: " + e.what());
  }

  if (doc.value("format", "") != "qdml-model") {
    throw std::invalid_argument(path + ": not a model file");
  }
  if (doc.at("version").get<int>() != kModelFormatVersion) {
    throw std::invalid_argument(path + ": unsupported model format version");
  }

  DensityModel model;
  model.feature_map = decode_feature_map(doc.at("feature_map"));
  const int d = feature_output_dim(model.feature_map);
  if (doc.at("dim").get<int>() != d) {
    throw std::invalid_argument(path + ": dim does not match feature map");
  }

  const json& classes = doc.at("classes");
  const int num_classes = doc.at("num_classes").get<int>();
  if (!classes.is_array() || static_cast<int>(classes.size()) != num_classes ||
      num_classes < 1) {
    throw std::invalid_argument(path + ": class list does not match num_classes");
  }
  if (num_classes > d) {
    throw std::invalid_argument(path + ": more classes than feature dimensions");
  }

  Scalar prior_sum = 0.0;
  for (const json& jc : classes) {
    ClassDensity cls;
    cls.prior = from_hex_float(jc.at("prior").get<std::string>());
    cls.spectral.eigenvalues = decode_real_vector(jc.at("eigenvalues"), d);
    cls.spectral.eigenvectors = decode_complex_matrix(jc.at("eigenvectors"), d);
    cls.u_lambda = decode_complex_matrix(jc.at("u_lambda"), d);

    if (cls.prior < 0.0 || cls.prior > 1.0) {
      throw std::invalid_argument(path + ": class prior outside [0, 1]");
    }
    if (cls.spectral.eigenvalues.minCoeff() < 0.0) {
      throw std::invalid_argument(path + ": negative eigenvalue");
    }
    if (std::abs(cls.spectral.eigenvalues.sum() - 1.0) > kTraceTol) {
      throw std::invalid_argument(path + ": eigenvalues do not sum to 1");
    }
    if (!is_unitary(cls.spectral.eigenvectors) || !is_unitary(cls.u_lambda)) {
      throw std::invalid_argument(path + ": stored matrix is not unitary");
    }
    prior_sum += cls.prior;
    model.classes.push_back(std::move(cls));
  }
  if (std::abs(prior_sum - 1.0) > 1e-12) {
    throw std::invalid_argument(path + ": class priors do not sum to 1");
  }
  return model;
}

}  // namespace qdml

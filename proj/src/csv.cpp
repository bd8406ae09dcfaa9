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

#include "qdml/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qdml {
namespace {

std::string format_value(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Scalar parse_value(const std::string& field, const std::string& path) {
  char* end = nullptr;
  const Scalar v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0') {
    throw std::invalid_argument(path + ": non-numeric CSV field '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

Index CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<Index>(i);
  }
  return -1;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open CSV file: " + path);

  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(path + ": empty CSV file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  CsvTable table;
  table.header = split_line(line);
  if (table.header.empty()) {
    throw std::invalid_argument(path + ": CSV header row is empty");
  }

  std::vector<std::vector<Scalar>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != table.header.size()) {
      throw std::invalid_argument(path + ": CSV row has " + std::to_string(fields.size()) +
                                  " fields, header has " + std::to_string(table.header.size()));
    }
    std::vector<Scalar> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      row[i] = parse_value(fields[i], path);
    }
    rows.push_back(std::move(row));
  }

  table.values.resize(static_cast<Index>(rows.size()),
                      static_cast<Index>(table.header.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      table.values(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
  }
  return table;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Eigen::Ref<const RMatrix>& values) {
  if (header.empty() || static_cast<Index>(header.size()) != values.cols()) {
    throw std::invalid_argument("write csv: header must name every column");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write CSV file: " + path);

  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out << ',';
    out << header[i];
  }
  out << '\n';
  for (Index r = 0; r < values.rows(); ++r) {
    for (Index c = 0; c < values.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_value(values(r, c));
    }
    out << '\n';
  }
  if (!out) throw std::invalid_argument("write failed for CSV file: " + path);
}

void write_dataset_csv(const std::string& path, const Dataset& data) {
  std::vector<std::string> header;
  for (Index c = 0; c < data.point_dim(); ++c) {
    header.push_back("x" + std::to_string(c));
  }
  RMatrix values = data.samples;
  if (data.labeled()) {
    header.push_back("label");
    values.conservativeResize(Eigen::NoChange, values.cols() + 1);
    for (Index r = 0; r < values.rows(); ++r) {
      values(r, values.cols() - 1) = static_cast<Scalar>(data.labels[r]);
    }
  }
  write_csv(path, header, values);

  if (!data.params.empty()) {
    std::ofstream meta(path + ".meta.json", std::ios::binary);
    if (!meta) throw std::invalid_argument("cannot write sidecar for: " + path);
    meta << data.params << '\n';
  }
}

Dataset read_dataset_csv(const std::string& path) {
  const CsvTable table = read_csv(path);
  const Index label_col = table.column("label");
  Dataset data;
  if (label_col < 0) {
    data.samples = table.values;
  } else {
    if (label_col != table.values.cols() - 1) {
      throw std::invalid_argument(path + ": label column must be last");
    }
    data.samples = table.values.leftCols(table.values.cols() - 1);
    data.labels.resize(table.values.rows());
    for (Index r = 0; r < table.values.rows(); ++r) {
      const Scalar v = table.values(r, label_col);
      if (v != std::floor(v) || v < 0.0) {
        throw std::invalid_argument(path + ": labels must be nonnegative integers");
      }
      data.labels[r] = static_cast<int>(v);
    }
  }
  if (data.samples.rows() == 0 || data.samples.cols() == 0) {
    throw std::invalid_argument(path + ": CSV contains no samples");
  }
  return data;
}

}  // namespace qdml

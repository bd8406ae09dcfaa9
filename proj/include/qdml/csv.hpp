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
#include <vector>

#include "qdml/datasets.hpp"

namespace qdml {

// Purely numeric CSV with a mandatory header row. Values are written with 17
// significant digits so doubles survive a write/read round trip exactly.
struct CsvTable {
  std::vector<std::string> header;
  RMatrix values;

  // Column position for `name`, or -1 when absent.
  Index column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Eigen::Ref<const RMatrix>& values);

// Dataset columns are named x0..x{k-1} plus a final integer `label` column
// when the dataset is labeled. Generator parameters travel in a JSON sidecar
// next to the CSV, named <path>.meta.json.
void write_dataset_csv(const std::string& path, const Dataset& data);
Dataset read_dataset_csv(const std::string& path);

}  // namespace qdml

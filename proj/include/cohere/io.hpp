// Copyright 2026 The totalcoherence Authors
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

#include "cohere/measures.hpp"
#include "cohere/qmat.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace cohere {

// Matrix files are JSON documents with an integer `dim` and a row-major
// `entries` array of [re, im] pairs.

ComplexMatrix load_matrix(const std::string& path);
DensityMatrix load_density(const std::string& path);
UnitaryMatrix load_unitary(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

ComplexMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Fixed field order (schema, dim, purity, c2, c_re, c_skew, c_trace,
/// [c1,] log_base) so golden files stay stable.
nlohmann::ordered_json report_to_json(const MeasureReport& report);

/// Fixed 12-significant-digit formatting for CSV cells.
std::string format_real(double value);

}  // namespace cohere

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

#include "cohere/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cohere {

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open matrix file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    std::ostringstream os;
    os << "malformed matrix file " << path << ": " << e.what();
    throw ValidationError(os.str());
  }
  return doc;
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw ValidationError(
        "matrix document must be an object with 'dim' and 'entries' fields");
  }
  const int n = doc.at("dim").get<int>();
  if (n < 1) {
    throw ValidationError("matrix document: 'dim' must be a positive integer");
  }
  const auto& entries = doc.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    std::ostringstream os;
    os << "matrix document: 'entries' must hold dim*dim = " << n * n
       << " [re, im] pairs, got " << entries.size();
    throw ValidationError(os.str());
  }
  ComplexMatrix m(n, n);
  size_t idx = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c, ++idx) {
      const auto& pair = entries.at(idx);
      if (!pair.is_array() || pair.size() != 2) {
        std::ostringstream os;
        os << "matrix document: entry " << idx << " is not a [re, im] pair";
        throw ValidationError(os.str());
      }
      m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return nlohmann::json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_file(path));
}

DensityMatrix load_density(const std::string& path) {
  try {
    return DensityMatrix(load_matrix(path));
  } catch (const ValidationError& e) {
    std::ostringstream os;
    os << path << ": " << e.what();
    throw ValidationError(os.str());
  }
}

UnitaryMatrix load_unitary(const std::string& path) {
  try {
    return UnitaryMatrix(load_matrix(path));
  } catch (const ValidationError& e) {
    std::ostringstream os;
    os << path << ": " << e.what();
    throw ValidationError(os.str());
  }
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write matrix file: " + path);
  }
  out << matrix_to_json(m).dump(2) << "\n";
}

nlohmann::ordered_json report_to_json(const MeasureReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["dim"] = report.dim;
  doc["purity"] = report.purity;
  doc["c2"] = report.c2;
  doc["c_re"] = report.c_re;
  doc["c_skew"] = report.c_skew;
  doc["c_trace"] = report.c_trace;
  if (report.c1.has_value()) {
    doc["c1"] = *report.c1;
  }
  doc["log_base"] = report.log_base;
  return doc;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

}  // namespace cohere

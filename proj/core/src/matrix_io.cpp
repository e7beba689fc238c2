//
// Copyright 2026 The dpopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "dpopt/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace dpopt {

namespace {

[[noreturn]] void malformed(const std::filesystem::path& path, int line, int column,
                            const std::string& message) {
  std::ostringstream os;
  os << path.string() << ":" << line << ":" << column << ": " << message;
  throw MalformedFile(os.str());
}

// Split a CSV line; fields may not themselves contain commas.
std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void save_matrix_csv(const DenseMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << m.rows() << "," << m.cols() << "\n";
  char buf[48];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

DenseMatrix load_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());

  std::string line;
  if (!std::getline(in, line)) malformed(path, 1, 1, "missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_fields(line);
  if (header.size() != 2) malformed(path, 1, 1, "header must be \"rows,cols\"");
  long rows = 0, cols = 0;
  try {
    size_t used = 0;
    rows = std::stol(header[0], &used);
    if (used != header[0].size()) throw std::invalid_argument("");
    cols = std::stol(header[1], &used);
    if (used != header[1].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    malformed(path, 1, 1, "header must contain two integers");
  }
  if (rows < 1 || cols < 1) malformed(path, 1, 1, "dimensions must be positive");

  DenseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < rows; ++i) {
    const int lineno = i + 2;
    if (!std::getline(in, line)) malformed(path, lineno, 1, "unexpected end of file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (static_cast<long>(fields.size()) != cols)
      malformed(path, lineno, 1,
                "expected " + std::to_string(cols) + " fields, found " +
                    std::to_string(fields.size()));
    for (int j = 0; j < cols; ++j) {
      const std::string& f = fields[j];
      const char* begin = f.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin || *end != '\0')
        malformed(path, lineno, j + 1, "not a number: \"" + f + "\"");
      if (!std::isfinite(v))
        malformed(path, lineno, j + 1, "entry is not finite");
      m(i, j) = v;
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty())
      malformed(path, static_cast<int>(rows) + 2, 1, "trailing content after last row");
  }
  return m;
}

}  // namespace dpopt

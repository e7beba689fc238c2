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

#ifndef DPOPT_MATRIX_IO_HPP
#define DPOPT_MATRIX_IO_HPP

#include <filesystem>

#include "dpopt/matrix.hpp"

namespace dpopt {

/// Matrix CSV format: first line "rows,cols", then one comma-separated line
/// per row. Values are written with 17 significant digits so a save/load
/// round trip reproduces every double exactly.
void save_matrix_csv(const DenseMatrix& m, const std::filesystem::path& path);

/// Throws MalformedFile (with line/column diagnostics) on any format
/// violation, including non-finite entries.
DenseMatrix load_matrix_csv(const std::filesystem::path& path);

}  // namespace dpopt

#endif  // DPOPT_MATRIX_IO_HPP

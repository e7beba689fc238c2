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

#ifndef DPOPT_ERRORS_HPP
#define DPOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpopt {

/// A matrix that was required to be positive definite is not.
class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(const std::string& what)
      : std::runtime_error(what) {}
};

/// The Gram matrix handed to the solver failed its Cholesky check;
/// the caller must raise the regularization parameter.
class InfeasibleGram : public std::runtime_error {
 public:
  explicit InfeasibleGram(const std::string& what)
      : std::runtime_error(what) {}
};

/// A matrix file violates the CSV matrix format; the message carries
/// line/column diagnostics.
class MalformedFile : public std::runtime_error {
 public:
  explicit MalformedFile(const std::string& what)
      : std::runtime_error(what) {}
};

/// A strategy matrix with no nonzero column cannot be normalized.
class ZeroStrategy : public std::runtime_error {
 public:
  explicit ZeroStrategy(const std::string& what)
      : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] void check_failed(const char* expr, const char* file, int line);
}

// Argument/contract violations are caller defects; the check stays active in
// release builds.
#define DPOPT_CHECK(expr)                                     \
  do {                                                        \
    if (!(expr)) ::dpopt::detail::check_failed(#expr, __FILE__, __LINE__); \
  } while (0)

}  // namespace dpopt

#endif  // DPOPT_ERRORS_HPP

// Copyright 2026 The pishape Authors
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

#ifndef PISHAPE_COMMON_ERROR_HPP
#define PISHAPE_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pishape {

enum class ErrorKind {
  invalid_argument,  // precondition violated by the caller
  computation,       // numerical failure (non-convergence, overflow, ...)
};

// Single exception type used by the core library. The C API translates the
// kind into a status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::invalid_argument, what);
}

[[noreturn]] inline void throw_computation(const std::string& what) {
  throw Error(ErrorKind::computation, what);
}

}  // namespace pishape

#endif  // PISHAPE_COMMON_ERROR_HPP

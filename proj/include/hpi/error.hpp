// Copyright 2026 The hpi Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hpi {

enum class ErrorCode {
  Parse,
  Type,
  Domain,     // e.g. non-orthogonal input, not a permutation
  Index,      // out-of-range or duplicate generator / level indices
  Dimension,  // operand dimensions disagree
  Step,       // a derivation step does not apply
  Unsupported,
  Internal,   // a documented invariant was violated
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported as hpi::Error; the code selects the
/// C API status and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hpi

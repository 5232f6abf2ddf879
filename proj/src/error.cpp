// Copyright 2026 The opmgr Authors
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

#include "opmgr/error.hpp"

namespace opmgr {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::DimensionMismatch: return "dimension mismatch";
    case ParseErrorKind::NonInteger: return "non-integer token";
    case ParseErrorKind::Truncated: return "truncated file";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at line " +
                         std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + detail),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace opmgr

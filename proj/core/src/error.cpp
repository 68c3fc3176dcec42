// Copyright 2026 The oometric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oometric/error.hpp"

namespace oometric::classfile {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::BadConstantTag: return "BadConstantTag";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadDescriptor: return "BadDescriptor";
    case ErrorKind::BadCode: return "BadCode";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::TrailingData: return "TrailingData";
  }
  return "Unknown";
}

ClassFormatError::ClassFormatError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace oometric::classfile

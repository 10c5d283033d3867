// Copyright 2026 The Cospectra Authors
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

#include "cospectra/errors.hpp"

namespace cospectra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kEmptyArcSet: return "EmptyArcSet";
    case ErrorKind::kNotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::kSetMismatch: return "SetMismatch";
    case ErrorKind::kInvalidModification: return "InvalidModification";
    case ErrorKind::kConstantPrefix: return "ConstantPrefix";
    case ErrorKind::kNotAPermutation: return "NotAPermutation";
    case ErrorKind::kOverlapConflict: return "OverlapConflict";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kUnsupportedScale: return "UnsupportedScale";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      detail_(what) {}

}  // namespace cospectra

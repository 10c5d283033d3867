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

#ifndef COSPECTRA_ERRORS_HPP_
#define COSPECTRA_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cospectra {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kEmptyArcSet,
  kNotStronglyConnected,
  kSetMismatch,
  kInvalidModification,
  kConstantPrefix,
  kNotAPermutation,
  kOverlapConflict,
  kTooLarge,
  kUnsupportedScale,
};

std::string_view to_string(ErrorKind kind);

// All domain failures surface as this exception type; kind() identifies the
// violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace cospectra

#endif  // COSPECTRA_ERRORS_HPP_

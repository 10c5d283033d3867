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

// Command-line front end. Exit codes: 0 success or "true", 1 "false" from a
// boolean check, 2 usage error, 3 domain error.

#ifndef COSPECTRA_CLI_HPP_
#define COSPECTRA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cospectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cospectra::cli

#endif  // COSPECTRA_CLI_HPP_

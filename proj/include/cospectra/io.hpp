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

// File formats.
//
// Graph JSON: {"n": 8, "labels": [[0,0,0], ...], "arcs": [[0,0], [0,1], ...]}
// with "labels" optional and arcs written in lexicographic order.
//
// Modification JSON: {"X": [...], "removed": [[u,v], ...],
// "added": [[u,v], ...], "side": "out" | "in"}. Vertices may be given as
// indices or as label strings ("101") resolved against the host; output
// always uses indices.

#ifndef COSPECTRA_IO_HPP_
#define COSPECTRA_IO_HPP_

#include <istream>
#include <string>

#include <json.hpp>

#include "cospectra/digraph.hpp"
#include "cospectra/modify.hpp"

namespace cospectra {

using Json = nlohmann::ordered_json;

Json to_json(const Digraph& g);
// Throws Error(kParse) on malformed input.
Digraph digraph_from_json(const Json& j);

std::string to_dot(const Digraph& g);

Json to_json(const Modification& m);
Modification modification_from_json(const Json& j, const Digraph& host);

// Reads a whole JSON document from a file; "-" reads the given stream.
Json read_json(const std::string& path, std::istream& stdin_stream);

}  // namespace cospectra

#endif  // COSPECTRA_IO_HPP_

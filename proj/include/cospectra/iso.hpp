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

#ifndef COSPECTRA_ISO_HPP_
#define COSPECTRA_ISO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cospectra/digraph.hpp"

namespace cospectra {

inline constexpr std::size_t kMaxIsoOrder = 64;

struct CanonicalForm {
  std::size_t n = 0;
  std::vector<Arc> arcs;  // under the canonical labeling, sorted
  // Big-endian order followed by the row-major adjacency bits of the
  // canonical labeling, MSB first. Equal iff the digraphs are isomorphic.
  std::string cert;

  std::string hex() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.cert == b.cert;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.cert <=> b.cert;
  }
};

// Unlabeled digraph with the canonical arcs.
Digraph to_digraph(const CanonicalForm& form);

// Throws Error(kTooLarge) above kMaxIsoOrder vertices.
CanonicalForm canonical_form(const Digraph& g);

// Backtracking over refined color classes, independent of canonical_form.
// Throws Error(kTooLarge) above kMaxIsoOrder vertices.
bool isomorphic(const Digraph& a, const Digraph& b);

// phi with arc u->v of a iff phi[u]->phi[v] of b.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& a, const Digraph& b);

struct VertexInvariant {
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  bool loop = false;
  std::uint64_t closed_walks2 = 0;
  std::uint64_t closed_walks3 = 0;

  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

struct InvariantVector {
  std::vector<VertexInvariant> vertices;  // indexed by vertex
  CycleCensus cycles;                     // lengths 1..min(n, 6)

  // Relabeling-invariant comparison: sorted vertex rows plus the census.
  bool compatible_with(const InvariantVector& other) const;
};

InvariantVector invariant_vector(const Digraph& g);

}  // namespace cospectra

#endif  // COSPECTRA_ISO_HPP_

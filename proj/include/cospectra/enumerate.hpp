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

#ifndef COSPECTRA_ENUMERATE_HPP_
#define COSPECTRA_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cospectra/digraph.hpp"
#include "cospectra/iso.hpp"
#include "cospectra/modify.hpp"
#include "cospectra/spectral.hpp"

namespace cospectra {

struct SearchSpec {
  enum class Mode { kUppFull, kPermSweep };
  std::size_t d = 2;
  std::size_t ell = 3;
  Mode mode = Mode::kUppFull;

  std::size_t order() const;  // d^ell
};

struct UppEnumeration {
  std::vector<CanonicalForm> classes;  // sorted by certificate
  std::uint64_t leaves = 0;            // complete matrices satisfying A^l = J
};

// Every d-regular digraph on d^ell vertices with A^ell = J, one per
// isomorphism class. Supported for d = 2, ell <= 3; Error(kUnsupportedScale)
// otherwise. `jobs` > 1 splits the search over worker threads; the result
// does not depend on it.
UppEnumeration enumerate_upp(const SearchSpec& spec, unsigned jobs = 1);

struct PermSweepClass {
  CanonicalForm form;
  PermutationFamily representative;
  std::size_t members = 0;
  bool contains_base = false;  // isomorphic to B(d, ell)
};

struct PermSweepReport {
  std::size_t d = 0;
  std::size_t ell = 0;
  VertexWord prefix;
  std::size_t families = 0;
  bool all_cospectral = true;  // with B(d, ell)
  bool all_upp = true;         // A^ell = J
  bool all_diameter_ell = true;
  std::vector<PermSweepClass> classes;  // sorted by certificate
};

// Applies every permutation family to B(d, ell) on the given prefix and
// groups the results up to isomorphism. Supported for 2 <= d <= 3,
// 2 <= ell <= 4 and d^ell <= 64; Error(kUnsupportedScale) otherwise.
PermSweepReport perm_sweep(std::size_t d, std::size_t ell, const VertexWord& prefix);

}  // namespace cospectra

#endif  // COSPECTRA_ENUMERATE_HPP_

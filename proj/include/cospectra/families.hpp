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

#ifndef COSPECTRA_FAMILIES_HPP_
#define COSPECTRA_FAMILIES_HPP_

#include <cstddef>

#include "cospectra/digraph.hpp"

namespace cospectra {

struct FamilyParams {
  std::size_t d = 2;
  std::size_t ell = 1;
};

// B(d, ell): words of length ell over {0..d-1}, x1..xl -> x2..xl k.
// Vertices are numbered in lexicographic word order.
Digraph de_bruijn(FamilyParams p);

// K(d, ell): words of length ell over {0..d} with distinct consecutive
// symbols, same shift adjacency. Vertices in lexicographic word order.
Digraph kautz(FamilyParams p);

}  // namespace cospectra

#endif  // COSPECTRA_FAMILIES_HPP_

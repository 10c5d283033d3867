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

#include "cospectra/families.hpp"

#include <map>

#include "cospectra/errors.hpp"

namespace cospectra {
namespace {

// Caps both families well below the point where adjacency storage matters.
constexpr std::size_t kMaxOrder = 1u << 20;

void check_params(FamilyParams p, std::size_t alphabet) {
  if (p.d < 1 || p.ell < 1) {
    throw Error(ErrorKind::kInvalidArgument, "family parameters need d >= 1 and ell >= 1");
  }
  if (alphabet > 256) throw Error(ErrorKind::kInvalidArgument, "alphabet too large");
}

// Words of length ell over {0..q-1} in lexicographic order, optionally
// restricted to those with distinct consecutive symbols.
std::vector<VertexWord> words(std::size_t q, std::size_t ell, bool distinct_neighbors) {
  std::vector<VertexWord> out;
  VertexWord w{std::vector<std::uint8_t>(ell, 0)};
  while (true) {
    bool ok = true;
    if (distinct_neighbors) {
      for (std::size_t i = 1; i < ell && ok; ++i) ok = w.symbols[i] != w.symbols[i - 1];
    }
    if (ok) {
      out.push_back(w);
      if (out.size() > kMaxOrder) throw Error(ErrorKind::kTooLarge, "family instance too large");
    }
    std::size_t pos = ell;
    while (pos > 0 && w.symbols[pos - 1] == q - 1) w.symbols[--pos] = 0;
    if (pos == 0) break;
    ++w.symbols[pos - 1];
  }
  return out;
}

Digraph shift_digraph(std::vector<VertexWord> labels, std::size_t q) {
  std::map<VertexWord, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < labels.size(); ++u) {
    VertexWord next{std::vector<std::uint8_t>(labels[u].symbols.begin() + 1,
                                              labels[u].symbols.end())};
    next.symbols.push_back(0);
    for (std::size_t k = 0; k < q; ++k) {
      next.symbols.back() = static_cast<std::uint8_t>(k);
      // Words missing from the index (Kautz words with a repeated last
      // symbol) are simply not vertices.
      if (auto it = index.find(next); it != index.end()) arcs.push_back({u, it->second});
    }
  }
  const std::size_t n = labels.size();
  return Digraph(n, std::move(arcs), std::move(labels));
}

}  // namespace

Digraph de_bruijn(FamilyParams p) {
  check_params(p, p.d);
  return shift_digraph(words(p.d, p.ell, false), p.d);
}

Digraph kautz(FamilyParams p) {
  check_params(p, p.d + 1);
  auto labels = words(p.d + 1, p.ell, true);
  if (p.ell == 1) {
    // Single-symbol words: the shift condition is vacuous, so adjacency is
    // "different symbol", giving the complete digraph without loops.
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < labels.size(); ++u) {
      for (Vertex v = 0; v < labels.size(); ++v) {
        if (u != v) arcs.push_back({u, v});
      }
    }
    const std::size_t n = labels.size();
    return Digraph(n, std::move(arcs), std::move(labels));
  }
  return shift_digraph(std::move(labels), p.d + 1);
}

}  // namespace cospectra

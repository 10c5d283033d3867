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

#ifndef COSPECTRA_DIGRAPH_HPP_
#define COSPECTRA_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cospectra/bit_matrix.hpp"
#include "cospectra/int_matrix.hpp"

namespace cospectra {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A word x1 x2 ... xl over a small alphabet, used as a vertex label.
struct VertexWord {
  std::vector<std::uint8_t> symbols;

  std::size_t length() const noexcept { return symbols.size(); }
  // Symbols concatenated ("101"); dot-separated when a symbol exceeds 9.
  std::string to_string() const;
  static VertexWord parse(std::string_view text);

  friend auto operator<=>(const VertexWord&, const VertexWord&) = default;
};

// Immutable digraph on vertices 0..n-1. Loops and digons are allowed,
// multi-arcs are not. Labels are decoration only.
class Digraph {
 public:
  Digraph() = default;
  // Throws Error(kInvalidArgument) on out-of-range endpoints, duplicate arcs,
  // or labels that are not n pairwise distinct words.
  Digraph(std::size_t n, std::vector<Arc> arcs,
          std::optional<std::vector<VertexWord>> labels = std::nullopt);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }
  bool has_arc(Vertex u, Vertex v) const { return adjacency_.test(u, v); }

  // Sorted lexicographically.
  std::vector<Arc> arcs() const;

  // Row u holds the out-neighborhood of u.
  const BitMatrix& adjacency() const noexcept { return adjacency_; }
  // Row v holds the in-neighborhood of v.
  const BitMatrix& in_adjacency() const noexcept { return in_adjacency_; }

  bool has_labels() const noexcept { return labels_.has_value(); }
  const std::optional<std::vector<VertexWord>>& labels() const noexcept { return labels_; }
  // Label text, or the decimal index when unlabeled.
  std::string vertex_name(Vertex v) const;
  std::optional<Vertex> find(const VertexWord& word) const;
  // Resolves a label ("101") or, failing that, a decimal index.
  Vertex resolve(std::string_view name) const;

  Digraph with_labels(std::optional<std::vector<VertexWord>> labels) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }
  bool same_arcs(const Digraph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
  BitMatrix adjacency_;
  BitMatrix in_adjacency_;
  std::optional<std::vector<VertexWord>> labels_;
};

// Directed simple cycles keyed by length; length 1 counts loops.
struct CycleCensus {
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t count(std::size_t length) const {
    auto it = counts.find(length);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

Digraph converse(const Digraph& g);

// Vertices of the result are the arcs of g in lexicographic order. Labels:
// when every arc u->v has label(v) = shift of label(u), the arc is labeled by
// the merged word x1..xl y; otherwise by the concatenation label(u)label(v).
// Unlabeled inputs give the pair (u, v) as a two-symbol word when n <= 256.
// Throws Error(kEmptyArcSet) when g has no arcs.
Digraph line_digraph(const Digraph& g);

// Heuchenne's condition on out-neighborhoods.
bool is_line_digraph(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

// Shortest-path distances from `source`; unreachable vertices hold -1.
std::vector<int> distances_from(const Digraph& g, Vertex source);

std::vector<std::size_t> eccentricities(const Digraph& g);

// Throws Error(kNotStronglyConnected).
std::size_t diameter(const Digraph& g);

// Counts simple cycles of every length 1..max_len (max_len <= n).
CycleCensus cycle_census(const Digraph& g, std::size_t max_len);

// Simple cycles of exactly `length`, each rotated to start at its smallest
// vertex, in lexicographic order.
std::vector<std::vector<Vertex>> simple_cycles(const Digraph& g, std::size_t length);

// A^len, exact.
IntMatrix walk_matrix(const Digraph& g, unsigned len);

IntMatrix adjacency_matrix(const Digraph& g);

// Vertex v of g becomes vertex perm[v] of the result; labels follow.
Digraph relabel(const Digraph& g, std::span<const Vertex> perm);

}  // namespace cospectra

#endif  // COSPECTRA_DIGRAPH_HPP_

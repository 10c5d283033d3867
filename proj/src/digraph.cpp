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

#include "cospectra/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>

#include "cospectra/errors.hpp"
#include "cospectra/kernels.hpp"

namespace cospectra {

std::string VertexWord::to_string() const {
  const bool wide = std::any_of(symbols.begin(), symbols.end(),
                                [](std::uint8_t s) { return s > 9; });
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(static_cast<unsigned>(symbols[i]));
  }
  return out;
}

VertexWord VertexWord::parse(std::string_view text) {
  VertexWord word;
  auto push = [&](std::string_view part) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value > 255) {
      throw Error(ErrorKind::kParse, "bad word symbol '" + std::string(part) + "'");
    }
    word.symbols.push_back(static_cast<std::uint8_t>(value));
  };
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t dot = std::min(text.find('.', start), text.size());
      push(text.substr(start, dot - start));
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
  }
  return word;
}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs,
                 std::optional<std::vector<VertexWord>> labels)
    : out_(n), in_(n), adjacency_(n), labels_(std::move(labels)) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "digraph needs at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorKind::kInvalidArgument, "too many vertices");
  }
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                      ") out of range for n=" + std::to_string(n));
    }
    if (adjacency_.test(a.tail, a.head)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate arc (" + std::to_string(a.tail) + "," +
                      std::to_string(a.head) + ")");
    }
    adjacency_.set(a.tail, a.head);
  }
  arc_count_ = arcs.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (adjacency_.test(u, v)) {
        out_[u].push_back(v);
        in_[v].push_back(u);
      }
    }
  }
  in_adjacency_ = adjacency_.transpose();
  if (labels_) {
    if (labels_->size() != n) {
      throw Error(ErrorKind::kInvalidArgument, "label count differs from vertex count");
    }
    std::set<VertexWord> seen(labels_->begin(), labels_->end());
    if (seen.size() != n) throw Error(ErrorKind::kInvalidArgument, "labels are not distinct");
  }
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) out.push_back({u, v});
  }
  return out;
}

std::string Digraph::vertex_name(Vertex v) const {
  return labels_ ? (*labels_)[v].to_string() : std::to_string(v);
}

std::optional<Vertex> Digraph::find(const VertexWord& word) const {
  if (!labels_) return std::nullopt;
  auto it = std::find(labels_->begin(), labels_->end(), word);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_->begin());
}

Vertex Digraph::resolve(std::string_view name) const {
  if (labels_) {
    try {
      if (auto v = find(VertexWord::parse(name))) return *v;
    } catch (const Error&) {
    }
  }
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (ec != std::errc() || ptr != name.data() + name.size() || value >= order()) {
    throw Error(ErrorKind::kInvalidArgument, "unknown vertex '" + std::string(name) + "'");
  }
  return static_cast<Vertex>(value);
}

Digraph Digraph::with_labels(std::optional<std::vector<VertexWord>> labels) const {
  return Digraph(order(), arcs(), std::move(labels));
}

Digraph converse(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs) std::swap(a.tail, a.head);
  return Digraph(g.order(), std::move(arcs), g.labels());
}

Digraph line_digraph(const Digraph& g) {
  const std::vector<Arc> arcs = g.arcs();
  if (arcs.empty()) throw Error(ErrorKind::kEmptyArcSet, "line digraph of an arcless digraph");

  // Arcs are sorted, so the arcs leaving v form one contiguous block.
  std::vector<std::size_t> first_out(g.order() + 1, 0);
  for (const Arc& a : arcs) ++first_out[a.tail + 1];
  for (std::size_t v = 0; v < g.order(); ++v) first_out[v + 1] += first_out[v];

  std::vector<Arc> line_arcs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Vertex v = arcs[i].head;
    for (std::size_t j = first_out[v]; j < first_out[v + 1]; ++j) {
      line_arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }

  std::optional<std::vector<VertexWord>> labels;
  if (g.has_labels()) {
    const auto& words = *g.labels();
    auto is_shift = [&](const Arc& a) {
      const auto& x = words[a.tail].symbols;
      const auto& y = words[a.head].symbols;
      return !x.empty() && x.size() == y.size() &&
             std::equal(x.begin() + 1, x.end(), y.begin());
    };
    const bool shifted = std::all_of(arcs.begin(), arcs.end(), is_shift);
    labels.emplace();
    for (const Arc& a : arcs) {
      VertexWord w = words[a.tail];
      const auto& y = words[a.head].symbols;
      if (shifted) {
        w.symbols.push_back(y.back());
      } else {
        w.symbols.insert(w.symbols.end(), y.begin(), y.end());
      }
      labels->push_back(std::move(w));
    }
  } else if (g.order() <= 256) {
    labels.emplace();
    for (const Arc& a : arcs) {
      labels->push_back(VertexWord{{static_cast<std::uint8_t>(a.tail),
                                    static_cast<std::uint8_t>(a.head)}});
    }
  }
  return Digraph(arcs.size(), std::move(line_arcs), std::move(labels));
}

bool is_line_digraph(const Digraph& g) {
  const BitMatrix& adj = g.adjacency();
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u) {
    const auto ru = adj.row(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto rv = adj.row(v);
      bool equal = true;
      bool disjoint = true;
      for (std::size_t w = 0; w < ru.size(); ++w) {
        equal = equal && ru[w] == rv[w];
        disjoint = disjoint && (ru[w] & rv[w]) == 0;
      }
      if (!equal && !disjoint) return false;
    }
  }
  return true;
}

namespace {

std::size_t reach_count(const Digraph& g, Vertex source, bool forward) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{source};
  seen[source] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : forward ? g.out_neighbors(u) : g.in_neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  return reach_count(g, 0, true) == g.order() && reach_count(g, 0, false) == g.order();
}

std::vector<int> distances_from(const Digraph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.out_neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> eccentricities(const Digraph& g) {
  std::vector<std::size_t> ecc(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (int d : distances_from(g, u)) {
      if (d < 0) {
        throw Error(ErrorKind::kNotStronglyConnected,
                    "vertex " + g.vertex_name(u) + " does not reach every vertex");
      }
      ecc[u] = std::max(ecc[u], static_cast<std::size_t>(d));
    }
  }
  return ecc;
}

std::size_t diameter(const Digraph& g) {
  const auto ecc = eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

namespace {

// Bounded DFS over vertices > root; every simple cycle is found exactly once,
// from its smallest vertex.
template <typename OnCycle>
void rooted_cycles(const Digraph& g, std::size_t max_len, OnCycle&& on_cycle) {
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  for (Vertex root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    // Explicit stack of (vertex, next neighbor index).
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto nbrs = g.out_neighbors(u);
      if (next == nbrs.size()) {
        on_path[u] = 0;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      const Vertex v = nbrs[next++];
      if (v == root) {
        on_cycle(std::span<const Vertex>(path));
      } else if (v > root && !on_path[v] && path.size() < max_len) {
        on_path[v] = 1;
        path.push_back(v);
        stack.emplace_back(v, 0);
      }
    }
    on_path[root] = 0;
  }
}

}  // namespace

CycleCensus cycle_census(const Digraph& g, std::size_t max_len) {
  if (max_len > g.order()) {
    throw Error(ErrorKind::kInvalidArgument, "max_len exceeds vertex count");
  }
  CycleCensus census;
  for (std::size_t k = 1; k <= max_len; ++k) census.counts[k] = 0;
  rooted_cycles(g, max_len, [&](std::span<const Vertex> cycle) {
    ++census.counts[cycle.size()];
  });
  return census;
}

std::vector<std::vector<Vertex>> simple_cycles(const Digraph& g, std::size_t length) {
  std::vector<std::vector<Vertex>> cycles;
  if (length == 0 || length > g.order()) return cycles;
  rooted_cycles(g, length, [&](std::span<const Vertex> cycle) {
    if (cycle.size() == length) cycles.emplace_back(cycle.begin(), cycle.end());
  });
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

IntMatrix adjacency_matrix(const Digraph& g) { return IntMatrix::from_bits(g.adjacency()); }

IntMatrix walk_matrix(const Digraph& g, unsigned len) {
  const std::size_t n = g.order();
  std::size_t max_out = 0;
  for (Vertex v = 0; v < n; ++v) max_out = std::max(max_out, g.out_degree(v));

  // Entries of A^len are bounded by max_out^len; take the int64 path when that
  // bound stays below 2^62.
  bool fits = true;
  if (max_out > 1) {
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < len && fits; ++i) {
      if (bound > (std::uint64_t{1} << 62) / max_out) fits = false;
      bound *= max_out;
    }
  }
  if (!fits) return adjacency_matrix(g).power(len);

  std::vector<std::int64_t> current(n * n, 0), next(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) current[i * n + i] = 1;
  const auto& table = kernels::active();
  for (unsigned step = 0; step < len; ++step) {
    table.adjacency_times(g.adjacency().data(), current.data(), next.data(), n,
                          g.adjacency().words_per_row());
    current.swap(next);
  }
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = current[i * n + j];
  }
  return out;
}

Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw Error(ErrorKind::kInvalidArgument, "permutation size differs from vertex count");
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex p : perm) {
    if (p >= g.order() || hit[p]) {
      throw Error(ErrorKind::kInvalidArgument, "not a permutation of the vertices");
    }
    hit[p] = 1;
  }
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs) a = {perm[a.tail], perm[a.head]};
  std::optional<std::vector<VertexWord>> labels;
  if (g.has_labels()) {
    labels.emplace(g.order());
    for (Vertex v = 0; v < g.order(); ++v) (*labels)[perm[v]] = (*g.labels())[v];
  }
  return Digraph(g.order(), std::move(arcs), std::move(labels));
}

}  // namespace cospectra

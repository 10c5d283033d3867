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

#include "cospectra/iso.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "cospectra/errors.hpp"

namespace cospectra {
namespace {

using Coloring = std::vector<std::uint32_t>;

void check_size(const Digraph& g) {
  if (g.order() > kMaxIsoOrder) {
    throw Error(ErrorKind::kTooLarge, "isomorphism is limited to " +
                                          std::to_string(kMaxIsoOrder) + " vertices");
  }
}

std::uint64_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

std::vector<VertexInvariant> vertex_invariants(const Digraph& g) {
  const BitMatrix& out = g.adjacency();
  const BitMatrix& in = g.in_adjacency();
  std::vector<VertexInvariant> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexInvariant& r = rows[v];
    r.in_degree = g.in_degree(v);
    r.out_degree = g.out_degree(v);
    r.loop = g.has_arc(v, v);
    r.closed_walks2 = popcount_and(out.row(v), in.row(v));
    for (Vertex u : g.out_neighbors(v)) r.closed_walks3 += popcount_and(out.row(u), in.row(v));
  }
  return rows;
}

// Joint color refinement: a vertex's new color is its old color together with
// the multisets of out- and in-neighbor colors. Colors are renumbered by
// sorted signature, so numbering depends only on structure and the order of
// old colors is preserved.
void refine(const std::vector<const Digraph*>& graphs, std::vector<Coloring>& colors) {
  auto distinct = [&] {
    std::vector<std::uint32_t> all;
    for (const auto& c : colors) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };
  std::size_t classes = distinct();
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::vector<std::uint32_t>>> sigs(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Digraph& g = *graphs[gi];
      sigs[gi].resize(g.order());
      for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::uint32_t> outs, ins;
        for (Vertex u : g.out_neighbors(v)) outs.push_back(colors[gi][u]);
        for (Vertex u : g.in_neighbors(v)) ins.push_back(colors[gi][u]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        auto& sig = sigs[gi][v];
        sig.push_back(colors[gi][v]);
        sig.push_back(static_cast<std::uint32_t>(outs.size()));
        sig.insert(sig.end(), outs.begin(), outs.end());
        sig.insert(sig.end(), ins.begin(), ins.end());
        ids.emplace(sig, 0);
      }
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (std::size_t v = 0; v < colors[gi].size(); ++v) colors[gi][v] = ids[sigs[gi][v]];
    }
    if (ids.size() == classes) return;
    classes = ids.size();
  }
}

std::vector<Coloring> initial_colors(const std::vector<const Digraph*>& graphs) {
  std::vector<std::vector<VertexInvariant>> inv;
  std::map<VertexInvariant, std::uint32_t> ids;
  for (const Digraph* g : graphs) {
    inv.push_back(vertex_invariants(*g));
    for (const auto& r : inv.back()) ids.emplace(r, 0);
  }
  std::uint32_t next = 0;
  for (auto& [r, id] : ids) id = next++;
  std::vector<Coloring> colors(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    for (const auto& r : inv[gi]) colors[gi].push_back(ids[r]);
  }
  refine(graphs, colors);
  return colors;
}

// Packed adjacency under labeling pos (vertex -> position).
std::string leaf_string(const Digraph& g, const std::vector<Vertex>& pos) {
  const std::size_t n = g.order();
  std::string bits((n * n + 7) / 8, '\0');
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      const std::size_t bit = static_cast<std::size_t>(pos[u]) * n + pos[v];
      bits[bit / 8] = static_cast<char>(static_cast<unsigned char>(bits[bit / 8]) |
                                        (0x80u >> (bit % 8)));
    }
  }
  return bits;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& g) : g_(g) {}

  std::vector<Vertex> run() {
    std::vector<const Digraph*> graphs{&g_};
    Coloring colors = initial_colors(graphs).front();
    std::vector<Vertex> fixed;
    search(colors, fixed);
    return best_pos_;
  }

 private:
  void search(const Coloring& colors, std::vector<Vertex>& fixed) {
    const std::size_t n = g_.order();
    std::vector<std::size_t> cell_size(n, 0);
    for (std::uint32_t c : colors) ++cell_size[c];
    // Target: the lowest-colored non-singleton cell.
    std::uint32_t target = static_cast<std::uint32_t>(n);
    for (std::uint32_t c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == n) {
      std::vector<Vertex> pos(colors.begin(), colors.end());
      std::string s = leaf_string(g_, pos);
      if (best_pos_.empty() || s < best_) {
        best_ = std::move(s);
        best_pos_ = std::move(pos);
      } else if (s == best_) {
        record_automorphism(pos);
      }
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (equivalent_to_explored(v, explored, fixed)) continue;
      explored.push_back(v);

      Coloring child(n);
      for (Vertex u = 0; u < n; ++u) child[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      std::vector<const Digraph*> graphs{&g_};
      std::vector<Coloring> wrapped{std::move(child)};
      refine(graphs, wrapped);
      fixed.push_back(v);
      search(wrapped.front(), fixed);
      fixed.pop_back();
    }
  }

  // An automorphism maps the leaf best_pos_ onto pos: gamma = best^-1 o pos.
  void record_automorphism(const std::vector<Vertex>& pos) {
    const std::size_t n = g_.order();
    std::vector<Vertex> at_best(n);
    for (Vertex v = 0; v < n; ++v) at_best[best_pos_[v]] = v;
    std::vector<Vertex> gamma(n);
    for (Vertex v = 0; v < n; ++v) gamma[v] = at_best[pos[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  // True when some stored automorphism fixing `fixed` pointwise links v to an
  // already explored sibling; such a subtree only repeats known leaves.
  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& fixed) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    const std::size_t n = g_.order();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool stabilizes = std::all_of(fixed.begin(), fixed.end(),
                                          [&](Vertex f) { return gamma[f] == f; });
      if (!stabilizes) continue;
      for (Vertex x = 0; x < n; ++x) parent[find(x)] = find(gamma[x]);
    }
    const Vertex root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex w) { return find(w) == root; });
  }

  const Digraph& g_;
  std::string best_;
  std::vector<Vertex> best_pos_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(cert.size() * 2);
  for (unsigned char c : cert) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

Digraph to_digraph(const CanonicalForm& form) { return Digraph(form.n, form.arcs); }

CanonicalForm canonical_form(const Digraph& g) {
  check_size(g);
  const std::vector<Vertex> pos = CanonicalSearch(g).run();
  CanonicalForm form;
  form.n = g.order();
  for (const Arc& a : g.arcs()) form.arcs.push_back({pos[a.tail], pos[a.head]});
  std::sort(form.arcs.begin(), form.arcs.end());
  form.cert.push_back(static_cast<char>((g.order() >> 8) & 0xff));
  form.cert.push_back(static_cast<char>(g.order() & 0xff));
  form.cert += leaf_string(g, pos);
  return form;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& a, const Digraph& b) {
  check_size(a);
  check_size(b);
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
  const std::size_t n = a.order();
  std::vector<const Digraph*> graphs{&a, &b};
  const std::vector<Coloring> colors = initial_colors(graphs);
  {
    Coloring ca = colors[0], cb = colors[1];
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  // Match vertices of a in order of increasing class size, preferring
  // vertices adjacent to those already placed.
  std::vector<std::size_t> class_size(2 * n + 1, 0);
  for (std::uint32_t c : colors[0]) ++class_size[c];
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  while (order.size() < n) {
    Vertex best = 0;
    bool found = false;
    std::pair<std::size_t, std::size_t> best_key{};
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : order) links += a.has_arc(u, v) + a.has_arc(v, u);
      const std::pair<std::size_t, std::size_t> key{class_size[colors[0][v]], n * 2 - links};
      if (!found || key < best_key) {
        best = v;
        best_key = key;
        found = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<Vertex> phi(n, 0);
  std::vector<char> used(n, 0);
  std::vector<Vertex> next_candidate(n, 0);
  std::size_t depth = 0;
  auto consistent = [&](std::size_t d, Vertex w) {
    const Vertex v = order[d];
    if (colors[1][w] != colors[0][v]) return false;
    if (a.has_arc(v, v) != b.has_arc(w, w)) return false;
    for (std::size_t i = 0; i < d; ++i) {
      const Vertex u = order[i];
      if (a.has_arc(u, v) != b.has_arc(phi[u], w)) return false;
      if (a.has_arc(v, u) != b.has_arc(w, phi[u])) return false;
    }
    return true;
  };
  while (true) {
    if (depth == n) return phi;
    bool advanced = false;
    for (Vertex w = next_candidate[depth]; w < n; ++w) {
      if (used[w] || !consistent(depth, w)) continue;
      phi[order[depth]] = w;
      used[w] = 1;
      next_candidate[depth] = w + 1;
      ++depth;
      if (depth < n) next_candidate[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    next_candidate[depth] = 0;
    --depth;
    used[phi[order[depth]]] = 0;
  }
}

bool isomorphic(const Digraph& a, const Digraph& b) { return find_isomorphism(a, b).has_value(); }

bool InvariantVector::compatible_with(const InvariantVector& other) const {
  auto sorted = [](std::vector<VertexInvariant> rows) {
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  return cycles == other.cycles && sorted(vertices) == sorted(other.vertices);
}

InvariantVector invariant_vector(const Digraph& g) {
  InvariantVector inv;
  inv.vertices = vertex_invariants(g);
  inv.cycles = cycle_census(g, std::min<std::size_t>(g.order(), 6));
  return inv;
}

}  // namespace cospectra

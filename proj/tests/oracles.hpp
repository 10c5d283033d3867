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

// Brute-force reference computations used to check the library. They work
// from plain arc lists and share no code with the implementation beyond the
// Digraph accessors.

#ifndef COSPECTRA_TESTS_ORACLES_HPP_
#define COSPECTRA_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cospectra/digraph.hpp"

namespace cospectra::testing {

// Simple cycles by length: every vertex subset, every cyclic order starting
// at the subset's minimum. Exponential; n <= 8.
inline std::map<std::size_t, std::uint64_t> brute_force_cycles(const Digraph& g) {
  const std::size_t n = g.order();
  std::map<std::size_t, std::uint64_t> counts;
  for (std::size_t k = 1; k <= n; ++k) counts[k] = 0;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (subset & (1u << v)) members.push_back(v);
    }
    std::vector<Vertex> rest(members.begin() + 1, members.end());
    do {
      std::vector<Vertex> cyc{members.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
        ok = g.has_arc(cyc[i], cyc[(i + 1) % cyc.size()]);
      }
      if (ok) ++counts[members.size()];
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return counts;
}

using Poly = std::vector<long long>;  // c_0..c_n

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

namespace detail {

inline void poly_add(Poly& acc, const Poly& p, long long sign) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += sign * p[i];
}

inline Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc{0};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    poly_add(acc, poly_mul(m[0][col], cofactor_det(minor)), col % 2 == 0 ? 1 : -1);
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace detail

// det(xI - A) by Laplace expansion along the first row; n <= 8 or so.
inline Poly cofactor_char_poly(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Poly{-a[i][j], 1} : Poly{-a[i][j]};
  }
  return detail::cofactor_det(m);
}

// reach[k][u][v]: a walk of length exactly k from u to v, k = 0..max_len.
inline std::vector<std::vector<std::vector<char>>> walk_reach(const Digraph& g,
                                                              std::size_t max_len) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::vector<char>>> reach(
      max_len + 1, std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
  for (Vertex u = 0; u < n; ++u) reach[0][u][u] = 1;
  const auto arcs = g.arcs();
  for (std::size_t k = 1; k <= max_len; ++k) {
    for (Vertex u = 0; u < n; ++u) {
      for (const Arc& a : arcs) {
        if (reach[k - 1][u][a.tail]) reach[k][u][a.head] = 1;
      }
    }
  }
  return reach;
}

struct WalkViolation {
  std::size_t length = 0;
  Vertex from = 0;
  Vertex to = 0;
};

// Theorem 2.1 walk checks for an out-side rewiring on members X, over walk
// lengths min_len..max_len of `host`:
//   (a) u outside X: an l-walk u -> v survives as an l-walk;
//   (b) u in X: an l-walk u -> v gives an l- or (l+1)-walk in `modified`.
// Returns the first violation of the requested part.
inline std::optional<WalkViolation> walk_violation(const Digraph& host, const Digraph& modified,
                                                   const std::vector<Vertex>& members,
                                                   bool members_part, std::size_t min_len,
                                                   std::size_t max_len) {
  const auto before = walk_reach(host, max_len);
  const auto after = walk_reach(modified, max_len + 1);
  const std::size_t n = host.order();
  for (std::size_t len = min_len; len <= max_len; ++len) {
    for (Vertex u = 0; u < n; ++u) {
      const bool in_x = std::find(members.begin(), members.end(), u) != members.end();
      if (in_x != members_part) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (!before[len][u][v]) continue;
        const bool ok = after[len][u][v] || (in_x && after[len + 1][u][v]);
        if (!ok) return WalkViolation{len, u, v};
      }
    }
  }
  return std::nullopt;
}

// Diameter by repeated relaxation over the arc list; -1 when some pair is
// unreachable.
inline long oracle_diameter(const Digraph& g) {
  const std::size_t n = g.order();
  const long inf = static_cast<long>(n) + 1;
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, inf));
  for (Vertex v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Arc& a : g.arcs()) {
    if (a.tail != a.head) dist[a.tail][a.head] = 1;
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    }
  }
  long diam = 0;
  for (const auto& row : dist) {
    for (long d : row) {
      if (d >= inf) return -1;
      diam = std::max(diam, d);
    }
  }
  return diam;
}

}  // namespace cospectra::testing

#endif  // COSPECTRA_TESTS_ORACLES_HPP_

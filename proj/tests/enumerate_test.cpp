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

#include <doctest.h>

#include <set>

#include "cospectra/enumerate.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/families.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace cospectra {
namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::kInvalidArgument;
}

// All 0/1 matrices of order n with every row and column summing to d.
std::vector<Digraph> line_sum_matrices(std::size_t n, std::size_t d) {
  std::vector<Digraph> out;
  for (std::uint64_t bits = 0; bits < (1ull << (n * n)); ++bits) {
    if (static_cast<std::size_t>(__builtin_popcountll(bits)) != n * d) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::size_t row = 0, col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row += bits >> (i * n + j) & 1;
        col += bits >> (j * n + i) & 1;
      }
      ok = row == d && col == d;
    }
    if (!ok) continue;
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (bits >> (u * n + v) & 1) arcs.push_back({u, v});
      }
    }
    out.emplace_back(n, std::move(arcs));
  }
  return out;
}

bool upp(const Digraph& g, unsigned ell) {
  // Walk counts straight from the arc list.
  std::vector<std::vector<long long>> count(g.order(), std::vector<long long>(g.order(), 0));
  for (Vertex u = 0; u < g.order(); ++u) count[u][u] = 1;
  for (unsigned k = 0; k < ell; ++k) {
    std::vector<std::vector<long long>> next(g.order(), std::vector<long long>(g.order(), 0));
    for (Vertex u = 0; u < g.order(); ++u) {
      for (const Arc& a : g.arcs()) next[u][a.head] += count[u][a.tail];
    }
    count = std::move(next);
  }
  for (const auto& row : count) {
    for (long long c : row) {
      if (c != 1) return false;
    }
  }
  return true;
}

TEST_CASE("UPP enumeration for d = 2, l = 2 matches brute force") {
  const auto all = line_sum_matrices(4, 2);
  REQUIRE(all.size() == 90);
  std::vector<Digraph> reps;
  for (const Digraph& g : all) {
    if (!upp(g, 2)) continue;
    if (std::none_of(reps.begin(), reps.end(), [&](const Digraph& r) { return isomorphic(r, g); })) {
      reps.push_back(g);
    }
  }
  const UppEnumeration e = enumerate_upp({2, 2});
  REQUIRE(e.classes.size() == reps.size());
  for (const auto& form : e.classes) {
    CHECK(std::any_of(reps.begin(), reps.end(),
                      [&](const Digraph& r) { return isomorphic(r, to_digraph(form)); }));
  }
  CHECK(isomorphic(to_digraph(e.classes.front()), de_bruijn({2, 2})));
}

TEST_CASE("UPP enumeration for d = 2, l = 3") {
  const UppEnumeration e = enumerate_upp({2, 3});
  REQUIRE(e.classes.size() == 3);
  CHECK(std::is_sorted(e.classes.begin(), e.classes.end()));
  const std::vector<Digraph> paper{testing::b23(), testing::b23_prime(),
                                   converse(testing::b23_prime())};
  std::set<std::size_t> matched;
  for (const auto& form : e.classes) {
    const Digraph g = to_digraph(form);
    CHECK(upp(g, 3));
    CHECK(testing::oracle_diameter(g) == 3);
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(g.out_degree(v) == 2);
      CHECK(g.in_degree(v) == 2);
    }
    CHECK(char_poly(g) == char_poly(testing::b23()));
    for (std::size_t i = 0; i < paper.size(); ++i) {
      if (isomorphic(g, paper[i])) matched.insert(i);
    }
  }
  CHECK(matched.size() == 3);

  const UppEnumeration parallel = enumerate_upp({2, 3}, 4);
  CHECK(parallel.leaves == e.leaves);
  REQUIRE(parallel.classes.size() == e.classes.size());
  for (std::size_t i = 0; i < e.classes.size(); ++i) {
    CHECK(parallel.classes[i].cert == e.classes[i].cert);
  }
}

TEST_CASE("UPP enumeration small and unsupported cases") {
  const UppEnumeration one = enumerate_upp({2, 1});
  REQUIRE(one.classes.size() == 1);
  CHECK(to_digraph(one.classes[0]).arc_count() == 4);
  CHECK(kind_of([] { (void)enumerate_upp({3, 2}); }) == ErrorKind::kUnsupportedScale);
  CHECK(kind_of([] { (void)enumerate_upp({2, 4}); }) == ErrorKind::kUnsupportedScale);
  CHECK(kind_of([] { (void)enumerate_upp({2, 3, SearchSpec::Mode::kPermSweep}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("permutation sweep on B(2,3)") {
  const PermSweepReport r = perm_sweep(2, 3, VertexWord::parse("10"));
  CHECK(r.families == 4);
  CHECK(r.all_cospectral);
  CHECK(r.all_upp);
  CHECK(r.all_diameter_ell);
  std::size_t members = 0;
  bool base_seen = false;
  for (const auto& c : r.classes) {
    members += c.members;
    base_seen = base_seen || c.contains_base;
    const Digraph g =
        de_bruijn_permutation_modify(2, 3, VertexWord::parse("10"), c.representative);
    CHECK(canonical_form(g) == c.form);
    CHECK(c.contains_base == isomorphic(g, testing::b23()));
  }
  CHECK(members == 4);
  CHECK(base_seen);
  // Iso classes found by the sweep, counted independently.
  std::vector<Digraph> reps;
  for (const auto& fam : PermutationFamily::all(2)) {
    const Digraph g = de_bruijn_permutation_modify(2, 3, VertexWord::parse("10"), fam);
    if (std::none_of(reps.begin(), reps.end(), [&](const Digraph& x) { return isomorphic(x, g); })) {
      reps.push_back(g);
    }
  }
  CHECK(r.classes.size() == reps.size());
}

TEST_CASE("permutation sweep on B(3,3)") {
  const PermSweepReport r = perm_sweep(3, 3, VertexWord::parse("01"));
  CHECK(r.families == 216);
  CHECK(r.all_cospectral);
  CHECK(r.all_upp);
  CHECK(r.all_diameter_ell);
  std::size_t members = 0;
  for (const auto& c : r.classes) members += c.members;
  CHECK(members == 216);
  CHECK(r.classes.size() >= 2);
}

TEST_CASE("permutation sweep guards") {
  CHECK(kind_of([] { (void)perm_sweep(3, 4, VertexWord::parse("012")); }) ==
        ErrorKind::kUnsupportedScale);
  CHECK(kind_of([] { (void)perm_sweep(4, 2, VertexWord::parse("0")); }) ==
        ErrorKind::kUnsupportedScale);
  CHECK(kind_of([] { (void)perm_sweep(2, 3, VertexWord::parse("00")); }) ==
        ErrorKind::kConstantPrefix);
}

}  // namespace
}  // namespace cospectra

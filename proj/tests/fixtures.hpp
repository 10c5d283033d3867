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

// The named digraphs used across the test suites, built through the public
// modification API from explicit arc lists.

#ifndef COSPECTRA_TESTS_FIXTURES_HPP_
#define COSPECTRA_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cospectra/digraph.hpp"
#include "cospectra/families.hpp"
#include "cospectra/modify.hpp"

namespace cospectra::testing {

inline Arc arc(const Digraph& g, const std::string& from, const std::string& to) {
  return {g.resolve(from), g.resolve(to)};
}

inline std::vector<Vertex> vertices(const Digraph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> out;
  for (const char* name : names) out.push_back(g.resolve(name));
  return out;
}

inline Digraph b23() { return de_bruijn({2, 3}); }
inline Digraph k23() { return kautz({2, 3}); }

// X = {100, 101}: 100->001, 101->011 become 100->011, 101->001.
inline Modification b23_prime_plan() {
  const Digraph b = b23();
  return Modification(b, vertices(b, {"100", "101"}),
                      {arc(b, "100", "001"), arc(b, "101", "011")},
                      {arc(b, "100", "011"), arc(b, "101", "001")});
}
inline Digraph b23_prime() { return apply(b23_prime_plan()); }

// The same arcs reversed, as an in-side plan on the converse of B(2,3).
inline Modification b23_double_prime_plan() {
  const Digraph cb = converse(b23());
  return Modification(cb, vertices(cb, {"100", "101"}),
                      {arc(cb, "001", "100"), arc(cb, "011", "101")},
                      {arc(cb, "011", "100"), arc(cb, "001", "101")}, Side::kIn);
}
inline Digraph b23_double_prime() { return apply(b23_double_prime_plan()); }

// In-side partner of the B'(2,3) plan: X' = Y = {010, 110}, Y' = X.
inline Modification b23_star_in_plan() {
  const Digraph b = b23();
  return Modification(b, vertices(b, {"010", "110"}),
                      {arc(b, "001", "010"), arc(b, "011", "110")},
                      {arc(b, "001", "110"), arc(b, "011", "010")}, Side::kIn);
}
inline Digraph b23_star() { return double_modify(b23(), b23_prime_plan(), b23_star_in_plan()); }

inline Modification k23_prime_plan() {
  const Digraph k = k23();
  return Modification(k, vertices(k, {"101", "102"}),
                      {arc(k, "101", "012"), arc(k, "102", "020")},
                      {arc(k, "101", "020"), arc(k, "102", "012")});
}
inline Digraph k23_prime() { return apply(k23_prime_plan()); }

inline Modification k23_double_prime_plan() {
  const Digraph k = k23();
  return Modification(k, vertices(k, {"101", "102"}),
                      {arc(k, "101", "012"), arc(k, "102", "021")},
                      {arc(k, "101", "021"), arc(k, "102", "012")});
}
inline Digraph k23_double_prime() { return apply(k23_double_prime_plan()); }

inline Digraph directed_cycle(std::size_t k) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < k; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % k)});
  return Digraph(k, std::move(arcs));
}

inline Digraph random_digraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (coin(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace cospectra::testing

#endif  // COSPECTRA_TESTS_FIXTURES_HPP_

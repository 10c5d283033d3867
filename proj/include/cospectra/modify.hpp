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

// Arc rewiring of locally line digraphs.
//
// A set X of at least two vertices sharing one in-neighborhood Y may have its
// outgoing arcs e(X, Z), Z = out(X), replaced by another arc set e'(X, Z).
// Provided (i) the arcs from X ∩ Y back into X are kept and (ii) every vertex
// of X keeps an arc into Z and every vertex of Z keeps an arc from X, walks in
// the host survive (with at most one extra step when starting inside X). If
// in addition each vertex of Z keeps its in-degree, the result is cospectral
// with the host.
//
// The in-side variant works on the converse: X' shares an out-neighborhood
// Y', Z' = in(X'), and the arcs e(Z', X') are rewired.

#ifndef COSPECTRA_MODIFY_HPP_
#define COSPECTRA_MODIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cospectra/digraph.hpp"
#include "cospectra/errors.hpp"

namespace cospectra {

enum class Side {
  kOut,  // X shares in-neighbors; rewire arcs leaving X.
  kIn,   // X' shares out-neighbors; rewire arcs entering X'.
};

std::string_view to_string(Side side);

struct LocalLineSet {
  Side side = Side::kOut;
  std::vector<Vertex> members;   // X, |X| >= 2
  std::vector<Vertex> shared;    // Y: the common in- (or out-) neighborhood
  std::vector<Vertex> frontier;  // Z = out(X)  (or Z' = in(X'))

  friend bool operator==(const LocalLineSet&, const LocalLineSet&) = default;
};

// Throws Error(kSetMismatch) unless `members` has >= 2 distinct vertices with
// identical in- (kOut) or out- (kIn) neighborhoods.
LocalLineSet make_local_line_set(const Digraph& g, std::vector<Vertex> members,
                                 Side side = Side::kOut);

// Classes of the partition of V by in-neighborhood (out-neighborhood for
// kIn) that have at least two members, ordered by smallest member.
std::vector<LocalLineSet> find_local_line_sets(const Digraph& g, Side side = Side::kOut);

// A rewiring plan. Arcs are always stored in host orientation, so for kIn
// they run from Z' to X'.
class Modification {
 public:
  // Throws Error(kSetMismatch) when the set is not locally line, a removed arc
  // is absent from the host or outside the rewirable block, an added arc is
  // outside the block or already present after removal, or arcs repeat.
  Modification(Digraph host, std::vector<Vertex> members, std::vector<Arc> removed,
               std::vector<Arc> added, Side side = Side::kOut);

  const Digraph& host() const noexcept { return host_; }
  const LocalLineSet& set() const noexcept { return set_; }
  const std::vector<Arc>& removed() const noexcept { return removed_; }
  const std::vector<Arc>& added() const noexcept { return added_; }
  Side side() const noexcept { return set_.side; }
  bool is_identity() const noexcept { return removed_.empty() && added_.empty(); }

  // The block e(X, Z) of the host (before) and e'(X, Z) after rewiring.
  std::vector<Arc> block_before() const;
  std::vector<Arc> block_after() const;

 private:
  Digraph host_;
  LocalLineSet set_;
  std::vector<Arc> removed_;
  std::vector<Arc> added_;
};

struct DegreeChange {
  Vertex vertex = 0;
  std::size_t before = 0;
  std::size_t after = 0;

  friend bool operator==(const DegreeChange&, const DegreeChange&) = default;
};

struct ValidationReport {
  bool loops_preserved = false;           // condition (i)
  bool covering = false;                  // condition (ii)
  // Every frontier vertex keeps its in-degree (out-degree for kIn).
  bool indegree_preserved = false;
  bool strongly_connected_result = false;
  // Members whose out-degree (in-degree for kIn) changed; allowed, reported.
  std::vector<DegreeChange> member_degree_changes;

  bool applicable() const noexcept { return loops_preserved && covering; }
  bool cospectral_guaranteed() const noexcept { return applicable() && indegree_preserved; }
  std::string describe() const;
};

class InvalidModificationError : public Error {
 public:
  explicit InvalidModificationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate(const Modification& m);

// Host with the plan's arcs swapped. Throws InvalidModificationError when (i)
// or (ii) fails. Strong connectivity of the result is reported by validate()
// but not required here.
Digraph apply(const Modification& m);

// The same plan expressed on converse(host) with the opposite side.
Modification mirror(const Modification& m);

// converse(apply(mirror(m))).
Digraph converse_modify(const Modification& m);

// Applies an out-side plan on (Y, X, Z) and an in-side plan on (Z', Y, X)
// together. Throws Error(kSetMismatch) if the sets are not paired that way or
// the hosts differ, InvalidModificationError if either plan is invalid, and
// Error(kOverlapConflict) when one plan adds an arc the other removes.
Digraph double_modify(const Digraph& g, const Modification& out_mod,
                      const Modification& in_mod);

// Permutations alpha_0..alpha_{d-1} of {0..d-1}.
class PermutationFamily {
 public:
  // Throws Error(kNotAPermutation).
  explicit PermutationFamily(std::vector<std::vector<std::uint8_t>> alphas);

  static PermutationFamily identity(std::size_t d);
  // "01;10": alpha_j given as its image string, j in order. Symbols above 9
  // are written dot-separated ("0.1.10...").
  static PermutationFamily parse(std::string_view text);
  // Every family for degree d, (d!)^d of them, in lexicographic order.
  static std::vector<PermutationFamily> all(std::size_t d);

  std::size_t degree() const noexcept { return alphas_.size(); }
  std::uint8_t apply(std::size_t j, std::uint8_t k) const { return alphas_[j][k]; }
  const std::vector<std::uint8_t>& operator[](std::size_t j) const { return alphas_[j]; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const PermutationFamily&, const PermutationFamily&) = default;

 private:
  std::vector<std::vector<std::uint8_t>> alphas_;
};

// Rewiring of B(d, ell) on X = {prefix k : k in Z_d}: the vertex prefix·k is
// sent to x2..x_{l-1} alpha_j(k) j for every j. Throws
// Error(kInvalidArgument) for d < 2, ell < 2 or a malformed prefix,
// Error(kConstantPrefix) when all prefix symbols are equal, and
// Error(kNotAPermutation) on a family of the wrong degree.
Modification de_bruijn_permutation_plan(std::size_t d, std::size_t ell,
                                        const VertexWord& prefix,
                                        const PermutationFamily& perms);

Digraph de_bruijn_permutation_modify(std::size_t d, std::size_t ell,
                                     const VertexWord& prefix,
                                     const PermutationFamily& perms);

struct RandomModificationOptions {
  Side side = Side::kOut;
  // Keep frontier degrees (the cospectral case).
  bool preserve_degrees = true;
  std::size_t max_attempts = 10000;
};

// Rejection-samples a plan satisfying (i) and (ii) on `set`; nullopt when the
// attempt cap is hit.
std::optional<Modification> random_modification(const Digraph& g, const LocalLineSet& set,
                                                std::mt19937_64& rng,
                                                const RandomModificationOptions& opts = {});

// Picks a local line set of the requested side uniformly first.
std::optional<Modification> random_modification(const Digraph& g, std::mt19937_64& rng,
                                                const RandomModificationOptions& opts = {});

}  // namespace cospectra

#endif  // COSPECTRA_MODIFY_HPP_

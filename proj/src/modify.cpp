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

#include "cospectra/modify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cospectra/families.hpp"

namespace cospectra {
namespace {

// The end of an arc lying in X and the end lying in Z, per side.
Vertex member_end(const Arc& a, Side side) { return side == Side::kOut ? a.tail : a.head; }
Vertex frontier_end(const Arc& a, Side side) { return side == Side::kOut ? a.head : a.tail; }
Arc oriented(Vertex member, Vertex frontier, Side side) {
  return side == Side::kOut ? Arc{member, frontier} : Arc{frontier, member};
}

std::vector<char> mask_of(std::size_t n, const std::vector<Vertex>& vs) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vs) mask[v] = 1;
  return mask;
}

std::string arc_text(const Digraph& g, const Arc& a) {
  return g.vertex_name(a.tail) + "->" + g.vertex_name(a.head);
}

Digraph rewired(const Modification& m) {
  std::set<Arc> arcs;
  for (const Arc& a : m.host().arcs()) arcs.insert(a);
  for (const Arc& a : m.removed()) arcs.erase(a);
  for (const Arc& a : m.added()) arcs.insert(a);
  return Digraph(m.host().order(), std::vector<Arc>(arcs.begin(), arcs.end()),
                 m.host().labels());
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::kOut ? "out" : "in"; }

LocalLineSet make_local_line_set(const Digraph& g, std::vector<Vertex> members, Side side) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() < 2) {
    throw Error(ErrorKind::kSetMismatch, "a local line set needs at least two vertices");
  }
  for (Vertex v : members) {
    if (v >= g.order()) throw Error(ErrorKind::kSetMismatch, "vertex out of range");
  }
  const BitMatrix& shared_rows = side == Side::kOut ? g.in_adjacency() : g.adjacency();
  const auto first = shared_rows.row(members.front());
  for (Vertex v : members) {
    const auto row = shared_rows.row(v);
    if (!std::equal(row.begin(), row.end(), first.begin())) {
      throw Error(ErrorKind::kSetMismatch,
                  std::string("vertices ") + g.vertex_name(members.front()) + " and " +
                      g.vertex_name(v) + " have different " +
                      (side == Side::kOut ? "in" : "out") + "-neighborhoods");
    }
  }
  LocalLineSet set;
  set.side = side;
  set.members = members;
  const auto shared = side == Side::kOut ? g.in_neighbors(members.front())
                                         : g.out_neighbors(members.front());
  set.shared.assign(shared.begin(), shared.end());
  std::set<Vertex> frontier;
  for (Vertex x : members) {
    for (Vertex z : side == Side::kOut ? g.out_neighbors(x) : g.in_neighbors(x)) {
      frontier.insert(z);
    }
  }
  set.frontier.assign(frontier.begin(), frontier.end());
  return set;
}

std::vector<LocalLineSet> find_local_line_sets(const Digraph& g, Side side) {
  const BitMatrix& rows = side == Side::kOut ? g.in_adjacency() : g.adjacency();
  std::map<std::vector<std::uint64_t>, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto row = rows.row(v);
    classes[std::vector<std::uint64_t>(row.begin(), row.end())].push_back(v);
  }
  std::vector<LocalLineSet> out;
  for (auto& [key, members] : classes) {
    if (members.size() >= 2) out.push_back(make_local_line_set(g, members, side));
  }
  std::sort(out.begin(), out.end(), [](const LocalLineSet& a, const LocalLineSet& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

Modification::Modification(Digraph host, std::vector<Vertex> members,
                           std::vector<Arc> removed, std::vector<Arc> added, Side side)
    : host_(std::move(host)), set_(make_local_line_set(host_, std::move(members), side)) {
  const auto in_x = mask_of(host_.order(), set_.members);
  const auto in_z = mask_of(host_.order(), set_.frontier);
  auto in_block = [&](const Arc& a) {
    return a.tail < host_.order() && a.head < host_.order() && in_x[member_end(a, side)] &&
           in_z[frontier_end(a, side)];
  };
  auto normalize = [&](std::vector<Arc>& arcs, const char* what) {
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
      throw Error(ErrorKind::kSetMismatch, std::string("repeated ") + what + " arc");
    }
    for (const Arc& a : arcs) {
      if (!in_block(a)) {
        throw Error(ErrorKind::kSetMismatch,
                    std::string(what) + " arc " + std::to_string(a.tail) + "->" +
                        std::to_string(a.head) + " is outside the rewirable block");
      }
    }
  };
  normalize(removed, "removed");
  normalize(added, "added");
  for (const Arc& a : removed) {
    if (!host_.has_arc(a.tail, a.head)) {
      throw Error(ErrorKind::kSetMismatch, "removed arc " + arc_text(host_, a) + " is not in the host");
    }
  }
  // An arc listed as both removed and added is a no-op.
  std::vector<Arc> both;
  std::set_intersection(removed.begin(), removed.end(), added.begin(), added.end(),
                        std::back_inserter(both));
  for (const Arc& a : both) {
    removed.erase(std::find(removed.begin(), removed.end(), a));
    added.erase(std::find(added.begin(), added.end(), a));
  }
  for (const Arc& a : added) {
    if (host_.has_arc(a.tail, a.head)) {
      throw Error(ErrorKind::kSetMismatch, "added arc " + arc_text(host_, a) + " already exists");
    }
  }
  removed_ = std::move(removed);
  added_ = std::move(added);
}

std::vector<Arc> Modification::block_before() const {
  const auto in_x = mask_of(host_.order(), set_.members);
  const auto in_z = mask_of(host_.order(), set_.frontier);
  std::vector<Arc> out;
  for (const Arc& a : host_.arcs()) {
    if (in_x[member_end(a, side())] && in_z[frontier_end(a, side())]) out.push_back(a);
  }
  return out;
}

std::vector<Arc> Modification::block_after() const {
  std::set<Arc> block;
  for (const Arc& a : block_before()) block.insert(a);
  for (const Arc& a : removed_) block.erase(a);
  for (const Arc& a : added_) block.insert(a);
  return {block.begin(), block.end()};
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os << "loops_preserved=" << loops_preserved << " covering=" << covering
     << " indegree_preserved=" << indegree_preserved
     << " strongly_connected_result=" << strongly_connected_result;
  return os.str();
}

InvalidModificationError::InvalidModificationError(ValidationReport report)
    : Error(ErrorKind::kInvalidModification, report.describe()), report_(std::move(report)) {}

ValidationReport validate(const Modification& m) {
  const Side side = m.side();
  const Digraph& g = m.host();
  const LocalLineSet& set = m.set();
  const auto in_x = mask_of(g.order(), set.members);
  const auto in_y = mask_of(g.order(), set.shared);

  // Arcs from X ∩ Y back into X: the ones condition (i) freezes.
  auto is_loop_type = [&](const Arc& a) {
    return in_y[member_end(a, side)] && in_x[frontier_end(a, side)];
  };
  const auto before = m.block_before();
  const auto after = m.block_after();

  ValidationReport report;
  {
    std::vector<Arc> loops_before, loops_after;
    std::copy_if(before.begin(), before.end(), std::back_inserter(loops_before), is_loop_type);
    std::copy_if(after.begin(), after.end(), std::back_inserter(loops_after), is_loop_type);
    report.loops_preserved = loops_before == loops_after;
  }

  std::map<Vertex, std::size_t> member_free, frontier_free;
  std::map<Vertex, std::size_t> frontier_before, frontier_after, member_before, member_after;
  for (const Arc& a : before) {
    ++frontier_before[frontier_end(a, side)];
    ++member_before[member_end(a, side)];
  }
  for (const Arc& a : after) {
    ++frontier_after[frontier_end(a, side)];
    ++member_after[member_end(a, side)];
    if (!is_loop_type(a)) {
      ++member_free[member_end(a, side)];
      ++frontier_free[frontier_end(a, side)];
    }
  }
  report.covering = std::all_of(set.members.begin(), set.members.end(),
                                [&](Vertex x) { return member_free[x] > 0; }) &&
                    std::all_of(set.frontier.begin(), set.frontier.end(),
                                [&](Vertex z) { return frontier_free[z] > 0; });
  // Only block arcs change, so comparing block counts compares degrees.
  report.indegree_preserved =
      std::all_of(set.frontier.begin(), set.frontier.end(),
                  [&](Vertex z) { return frontier_before[z] == frontier_after[z]; });
  for (Vertex x : set.members) {
    if (member_before[x] != member_after[x]) {
      report.member_degree_changes.push_back({x, member_before[x], member_after[x]});
    }
  }
  report.strongly_connected_result = is_strongly_connected(rewired(m));
  return report;
}

Digraph apply(const Modification& m) {
  if (m.is_identity()) return m.host();
  ValidationReport report = validate(m);
  if (!report.applicable()) throw InvalidModificationError(std::move(report));
  return rewired(m);
}

Modification mirror(const Modification& m) {
  auto flip = [](std::vector<Arc> arcs) {
    for (Arc& a : arcs) std::swap(a.tail, a.head);
    return arcs;
  };
  return Modification(converse(m.host()), m.set().members, flip(m.removed()),
                      flip(m.added()), m.side() == Side::kOut ? Side::kIn : Side::kOut);
}

Digraph converse_modify(const Modification& m) { return converse(apply(mirror(m))); }

Digraph double_modify(const Digraph& g, const Modification& out_mod,
                      const Modification& in_mod) {
  if (out_mod.side() != Side::kOut || in_mod.side() != Side::kIn) {
    throw Error(ErrorKind::kSetMismatch, "double modification needs an out-side and an in-side plan");
  }
  if (!out_mod.host().same_arcs(g) || !in_mod.host().same_arcs(g)) {
    throw Error(ErrorKind::kSetMismatch, "both plans must be built on the same host");
  }
  if (in_mod.set().members != out_mod.set().shared ||
      in_mod.set().shared != out_mod.set().members) {
    throw Error(ErrorKind::kSetMismatch,
                "in-side set must be X' = Y with shared out-neighborhood Y' = X");
  }
  for (const Modification* m : {&out_mod, &in_mod}) {
    ValidationReport report = validate(*m);
    if (!report.applicable()) throw InvalidModificationError(std::move(report));
  }
  // A pair inside both rewirable domains must end up in the same state
  // under both plans.
  auto in_domain = [&](const Modification& m, const Arc& a) {
    const auto& tails = m.side() == Side::kOut ? m.set().members : m.set().frontier;
    const auto& heads = m.side() == Side::kOut ? m.set().frontier : m.set().members;
    return std::binary_search(tails.begin(), tails.end(), a.tail) &&
           std::binary_search(heads.begin(), heads.end(), a.head);
  };
  auto clash = [&](const Modification& a, const Modification& b) {
    for (const auto* list : {&a.removed(), &a.added()}) {
      const auto& mate = list == &a.removed() ? b.removed() : b.added();
      for (const Arc& arc : *list) {
        if (in_domain(b, arc) && !std::binary_search(mate.begin(), mate.end(), arc)) {
          throw Error(ErrorKind::kOverlapConflict,
                      "arc " + arc_text(g, arc) + " is rewired by one plan but not the other");
        }
      }
    }
  };
  clash(out_mod, in_mod);
  clash(in_mod, out_mod);

  std::set<Arc> arcs;
  for (const Arc& a : g.arcs()) arcs.insert(a);
  for (const Modification* m : {&out_mod, &in_mod}) {
    for (const Arc& a : m->removed()) arcs.erase(a);
  }
  for (const Modification* m : {&out_mod, &in_mod}) {
    for (const Arc& a : m->added()) arcs.insert(a);
  }
  return Digraph(g.order(), std::vector<Arc>(arcs.begin(), arcs.end()), g.labels());
}

PermutationFamily::PermutationFamily(std::vector<std::vector<std::uint8_t>> alphas)
    : alphas_(std::move(alphas)) {
  const std::size_t d = alphas_.size();
  if (d == 0) throw Error(ErrorKind::kNotAPermutation, "empty permutation family");
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::uint8_t> sorted = alphas_[j];
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == d;
    for (std::size_t i = 0; ok && i < d; ++i) ok = sorted[i] == i;
    if (!ok) {
      throw Error(ErrorKind::kNotAPermutation,
                  "alpha_" + std::to_string(j) + " is not a permutation of 0.." +
                      std::to_string(d - 1));
    }
  }
}

PermutationFamily PermutationFamily::identity(std::size_t d) {
  std::vector<std::uint8_t> id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<std::uint8_t>(i);
  return PermutationFamily(std::vector<std::vector<std::uint8_t>>(d, id));
}

PermutationFamily PermutationFamily::parse(std::string_view text) {
  std::vector<std::vector<std::uint8_t>> alphas;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = std::min(text.find(';', start), text.size());
    alphas.push_back(VertexWord::parse(text.substr(start, semi - start)).symbols);
    start = semi + 1;
  }
  return PermutationFamily(std::move(alphas));
}

std::vector<PermutationFamily> PermutationFamily::all(std::size_t d) {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<std::uint8_t>(i);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<PermutationFamily> out;
  std::vector<std::size_t> choice(d, 0);
  while (true) {
    std::vector<std::vector<std::uint8_t>> alphas;
    for (std::size_t j = 0; j < d; ++j) alphas.push_back(perms[choice[j]]);
    out.emplace_back(std::move(alphas));
    std::size_t pos = d;
    while (pos > 0 && choice[pos - 1] + 1 == perms.size()) choice[--pos] = 0;
    if (pos == 0) break;
    ++choice[pos - 1];
  }
  return out;
}

bool PermutationFamily::is_identity() const { return *this == identity(degree()); }

std::string PermutationFamily::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < alphas_.size(); ++j) {
    if (j > 0) out += ';';
    out += VertexWord{alphas_[j]}.to_string();
  }
  return out;
}

Modification de_bruijn_permutation_plan(std::size_t d, std::size_t ell,
                                        const VertexWord& prefix,
                                        const PermutationFamily& perms) {
  if (d < 2 || ell < 2) {
    throw Error(ErrorKind::kInvalidArgument, "permutation rewiring needs d >= 2 and ell >= 2");
  }
  if (prefix.length() != ell - 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "prefix must have length ell-1 = " + std::to_string(ell - 1));
  }
  for (std::uint8_t s : prefix.symbols) {
    if (s >= d) throw Error(ErrorKind::kInvalidArgument, "prefix symbol outside Z_d");
  }
  if (std::adjacent_find(prefix.symbols.begin(), prefix.symbols.end(),
                         std::not_equal_to<>()) == prefix.symbols.end()) {
    throw Error(ErrorKind::kConstantPrefix, "prefix symbols are all equal");
  }
  if (perms.degree() != d) {
    throw Error(ErrorKind::kNotAPermutation, "family degree differs from d");
  }

  Digraph host = de_bruijn({d, ell});
  std::vector<Vertex> members;
  std::vector<Arc> removed, added;
  for (std::size_t k = 0; k < d; ++k) {
    VertexWord x = prefix;
    x.symbols.push_back(static_cast<std::uint8_t>(k));
    const Vertex u = *host.find(x);
    members.push_back(u);
    std::set<Vertex> targets;
    for (std::size_t j = 0; j < d; ++j) {
      VertexWord y{std::vector<std::uint8_t>(x.symbols.begin() + 1, x.symbols.end() - 1)};
      y.symbols.push_back(perms.apply(j, static_cast<std::uint8_t>(k)));
      y.symbols.push_back(static_cast<std::uint8_t>(j));
      targets.insert(*host.find(y));
    }
    for (Vertex v : host.out_neighbors(u)) {
      if (!targets.count(v)) removed.push_back({u, v});
    }
    for (Vertex v : targets) {
      if (!host.has_arc(u, v)) added.push_back({u, v});
    }
  }
  return Modification(std::move(host), std::move(members), std::move(removed),
                      std::move(added), Side::kOut);
}

Digraph de_bruijn_permutation_modify(std::size_t d, std::size_t ell,
                                     const VertexWord& prefix,
                                     const PermutationFamily& perms) {
  return apply(de_bruijn_permutation_plan(d, ell, prefix, perms));
}

std::optional<Modification> random_modification(const Digraph& g, const LocalLineSet& set,
                                                std::mt19937_64& rng,
                                                const RandomModificationOptions& opts) {
  const Side side = set.side;
  const auto in_x = mask_of(g.order(), set.members);
  const auto in_y = mask_of(g.order(), set.shared);

  // Free pairs per frontier vertex; pairs frozen by condition (i) stay as is.
  std::map<Vertex, std::vector<Vertex>> candidates;
  std::map<Vertex, std::size_t> host_free_degree;
  for (Vertex z : set.frontier) {
    for (Vertex x : set.members) {
      const bool frozen = in_y[x] && in_x[z];
      if (frozen) continue;
      candidates[z].push_back(x);
      const Arc a = oriented(x, z, side);
      if (g.has_arc(a.tail, a.head)) ++host_free_degree[z];
    }
    if (candidates[z].empty()) return std::nullopt;
    if (opts.preserve_degrees && host_free_degree[z] == 0) return std::nullopt;
  }

  std::bernoulli_distribution coin(0.5);
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::set<Arc> chosen;
    std::map<Vertex, std::size_t> member_hits;
    bool frontier_ok = true;
    for (Vertex z : set.frontier) {
      std::vector<Vertex> pick = candidates[z];
      if (opts.preserve_degrees) {
        std::shuffle(pick.begin(), pick.end(), rng);
        pick.resize(host_free_degree[z]);
      } else {
        std::erase_if(pick, [&](Vertex) { return !coin(rng); });
      }
      frontier_ok = frontier_ok && !pick.empty();
      for (Vertex x : pick) {
        chosen.insert(oriented(x, z, side));
        ++member_hits[x];
      }
    }
    if (!frontier_ok) continue;
    if (!std::all_of(set.members.begin(), set.members.end(),
                     [&](Vertex x) { return member_hits[x] > 0; })) {
      continue;
    }
    std::vector<Arc> removed, added;
    for (Vertex z : set.frontier) {
      for (Vertex x : candidates[z]) {
        const Arc a = oriented(x, z, side);
        const bool present = g.has_arc(a.tail, a.head);
        const bool wanted = chosen.count(a) > 0;
        if (present && !wanted) removed.push_back(a);
        if (!present && wanted) added.push_back(a);
      }
    }
    return Modification(g, set.members, std::move(removed), std::move(added), side);
  }
  return std::nullopt;
}

std::optional<Modification> random_modification(const Digraph& g, std::mt19937_64& rng,
                                                const RandomModificationOptions& opts) {
  const auto sets = find_local_line_sets(g, opts.side);
  if (sets.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  return random_modification(g, sets[pick(rng)], rng, opts);
}

}  // namespace cospectra

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

#include "cospectra/enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cospectra/errors.hpp"
#include "cospectra/families.hpp"

namespace cospectra {
namespace {

std::size_t checked_power(std::size_t d, std::size_t ell) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < ell; ++i) {
    if (n > 4096 / std::max<std::size_t>(d, 1)) {
      throw Error(ErrorKind::kUnsupportedScale, "d^ell too large");
    }
    n *= d;
  }
  return n;
}

// All d-subsets of {0..n-1} as bit masks, lexicographic on element lists.
std::vector<std::uint64_t> subsets(std::size_t n, std::size_t d) {
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : pick) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Row-by-row search. A^ell = J with out-degree >= 1 forces every power
// A^k, k <= ell, to be 0/1, and the walks counted by the partial matrix
// (unassigned rows zero) only grow as rows are added; so any partial power
// entry >= 2 prunes the branch.
class UppSearch {
 public:
  UppSearch(std::size_t n, std::size_t d, std::size_t ell)
      : n_(n), d_(d), ell_(ell), rows_(subsets(n, d)), assigned_(n) {}

  const std::vector<std::uint64_t>& candidates() const { return rows_; }

  // Explores all completions with row 0 = {0..d-1} and row 1 = rows_[row1].
  void run_branch(std::size_t row1) {
    std::fill(assigned_.begin(), assigned_.end(), 0);
    colsum_.assign(n_, 0);
    assign(0, rows_.front());
    if (feasible(0)) {
      if (fits(rows_[row1])) {
        assign(1, rows_[row1]);
        if (feasible(1)) descend(2);
        unassign(1, rows_[row1]);
      }
    }
  }

  std::map<std::string, CanonicalForm>& found() { return found_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  bool fits(std::uint64_t mask) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (((mask >> c) & 1u) && colsum_[c] + 1 > d_) return false;
    }
    return true;
  }
  void assign(std::size_t r, std::uint64_t mask) {
    assigned_[r] = mask;
    for (std::size_t c = 0; c < n_; ++c) colsum_[c] += (mask >> c) & 1u;
  }
  void unassign(std::size_t r, std::uint64_t mask) {
    assigned_[r] = 0;
    for (std::size_t c = 0; c < n_; ++c) colsum_[c] -= (mask >> c) & 1u;
  }

  // Returns false when a walk count of length <= ell already exceeds one.
  // On a complete matrix also records whether A^ell == J in last_full_.
  bool feasible(std::size_t r) {
    BitMatrix p(n_);
    for (std::size_t i = 0; i <= r; ++i) p.row(i)[0] = assigned_[i];
    BitMatrix power = p;
    for (std::size_t k = 2; k <= ell_; ++k) {
      SaturatedProduct next = saturating_product(power, p);
      if (next.at_least_two.any()) return false;
      power = std::move(next.at_least_one);
    }
    last_full_ = power.all();
    return true;
  }

  void descend(std::size_t r) {
    if (r == n_) {
      if (!last_full_) return;
      ++leaves_;
      std::vector<Arc> arcs;
      for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
          if ((assigned_[u] >> v) & 1u) arcs.push_back({u, v});
        }
      }
      CanonicalForm form = canonical_form(Digraph(n_, std::move(arcs)));
      found_.emplace(form.cert, std::move(form));
      return;
    }
    for (std::uint64_t mask : rows_) {
      if (!fits(mask)) continue;
      assign(r, mask);
      if (feasible(r)) descend(r + 1);
      unassign(r, mask);
    }
  }

  std::size_t n_, d_, ell_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> assigned_;
  std::vector<std::size_t> colsum_;
  bool last_full_ = false;
  std::uint64_t leaves_ = 0;
  std::map<std::string, CanonicalForm> found_;
};

}  // namespace

std::size_t SearchSpec::order() const { return checked_power(d, ell); }

UppEnumeration enumerate_upp(const SearchSpec& spec, unsigned jobs) {
  if (spec.mode != SearchSpec::Mode::kUppFull) {
    throw Error(ErrorKind::kInvalidArgument, "enumerate_upp needs mode upp_full");
  }
  if (spec.d != 2 || spec.ell < 1 || spec.ell > 3) {
    throw Error(ErrorKind::kUnsupportedScale, "UPP enumeration supports d = 2, ell <= 3");
  }
  const std::size_t n = spec.order();
  jobs = std::max(1u, jobs);

  // Every A with A^ell = J has trace d (its spectrum is {d, 0^(n-1)}), so
  // some vertex has a loop; relabel it 0 and its other out-neighbors 1..d-1.
  const std::size_t branches = UppSearch(n, spec.d, spec.ell).candidates().size();
  std::vector<UppSearch> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(n, spec.d, spec.ell);
  auto work = [&](unsigned j) {
    for (std::size_t b = j; b < branches; b += jobs) workers[j].run_branch(b);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  std::map<std::string, CanonicalForm> merged;
  UppEnumeration result;
  for (auto& w : workers) {
    result.leaves += w.leaves();
    for (auto& [cert, form] : w.found()) merged.emplace(cert, form);
  }
  for (auto& [cert, form] : merged) result.classes.push_back(std::move(form));

  // Certificates should already separate classes; confirm pairwise.
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < result.classes.size(); ++j) {
      if (isomorphic(to_digraph(result.classes[i]), to_digraph(result.classes[j]))) {
        throw Error(ErrorKind::kInvalidArgument, "canonical certificates disagree with isomorphism");
      }
    }
  }
  return result;
}

PermSweepReport perm_sweep(std::size_t d, std::size_t ell, const VertexWord& prefix) {
  if (d < 2 || d > 3 || ell < 2 || ell > 4 || checked_power(d, ell) > kMaxIsoOrder) {
    throw Error(ErrorKind::kUnsupportedScale,
                "permutation sweep supports 2 <= d <= 3, 2 <= ell <= 4, d^ell <= 64");
  }
  const Digraph base = de_bruijn({d, ell});
  const CharPoly base_poly = char_poly(base);
  const CanonicalForm base_form = canonical_form(base);

  PermSweepReport report;
  report.d = d;
  report.ell = ell;
  report.prefix = prefix;
  std::map<std::string, PermSweepClass> classes;
  for (const PermutationFamily& family : PermutationFamily::all(d)) {
    const Digraph g = de_bruijn_permutation_modify(d, ell, prefix, family);
    ++report.families;
    report.all_cospectral = report.all_cospectral && char_poly(g) == base_poly;
    report.all_upp = report.all_upp &&
                     check_reachability_equation(g, static_cast<unsigned>(ell),
                                                 ReachabilityEquation::upp());
    report.all_diameter_ell = report.all_diameter_ell && is_strongly_connected(g) &&
                              diameter(g) == ell;
    CanonicalForm form = canonical_form(g);
    auto it = classes.find(form.cert);
    if (it == classes.end()) {
      PermSweepClass c{form, family, 0, form == base_form};
      it = classes.emplace(form.cert, std::move(c)).first;
    }
    ++it->second.members;
  }
  for (auto& [cert, c] : classes) report.classes.push_back(std::move(c));
  return report;
}

}  // namespace cospectra

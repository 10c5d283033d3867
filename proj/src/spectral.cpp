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

#include "cospectra/spectral.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cospectra/errors.hpp"

namespace cospectra {
namespace {

std::string term(const Integer& c, std::size_t power, bool leading) {
  std::ostringstream os;
  const Integer mag = abs(c);
  if (!leading) os << (c < 0 ? " - " : " + ");
  else if (c < 0) os << "-";
  if (mag != 1 || power == 0) os << mag;
  if (power >= 1) os << "x";
  if (power >= 2) os << "^" << power;
  return os.str();
}

// Smallest R with R^k >= |c_{n-k}| for every k; all roots satisfy
// |root| <= 2R (Fujiwara).
Integer root_bound(const CharPoly& p) {
  const std::size_t n = p.degree();
  Integer bound = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer target = abs(p.coeffs[n - k]);
    if (target == 0) continue;
    Integer lo = 1, hi = 1;
    while (pow(hi, static_cast<unsigned>(k)) < target) hi *= 2;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (pow(mid, static_cast<unsigned>(k)) >= target) hi = mid;
      else lo = mid + 1;
    }
    bound = std::max(bound, lo);
  }
  return 2 * bound;
}

// Divides p by (x - r) when r is a root; returns false otherwise.
bool divide_root(std::vector<Integer>& coeffs, const Integer& r) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Integer> q(n);
  Integer carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = coeffs[i + 1] + carry * r;
    q[i] = carry;
  }
  if (coeffs[0] + carry * r != 0) return false;
  coeffs = std::move(q);
  return true;
}

}  // namespace

std::string CharPoly::to_string() const {
  std::string out;
  bool leading = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    out += term(coeffs[i], i, leading);
    leading = false;
  }
  return out.empty() ? "0" : out;
}

std::size_t IntSpectrum::multiplicity(const Integer& lambda) const {
  for (const auto& [value, mult] : eigenvalues) {
    if (value == lambda) return mult;
  }
  return 0;
}

std::string IntSpectrum::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    os << (i ? ", " : "") << eigenvalues[i].first << "^" << eigenvalues[i].second;
  }
  os << "}";
  if (!residual.is_one()) os << " * (" << residual.to_string() << ")";
  return os.str();
}

CharPoly char_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  CharPoly p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[n] = 1;
  // M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I.
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    const Integer tr = am.trace();
    if (tr % static_cast<long long>(k) != 0) {
      throw Error(ErrorKind::kInvalidArgument, "inexact Faddeev-LeVerrier step");
    }
    const Integer c = -tr / static_cast<long long>(k);
    p.coeffs[n - k] = c;
    if (k < n) {
      am.add_diagonal(c);
      m = std::move(am);
    }
  }
  return p;
}

CharPoly char_poly(const Digraph& g) { return char_poly(adjacency_matrix(g)); }

bool cospectral(const Digraph& a, const Digraph& b) {
  return a.order() == b.order() && char_poly(a) == char_poly(b);
}

std::size_t zero_multiplicity(const CharPoly& p) {
  std::size_t m = 0;
  while (m < p.coeffs.size() && p.coeffs[m] == 0) ++m;
  return m;
}

IntSpectrum integer_spectrum(const CharPoly& p) {
  IntSpectrum spec;
  std::vector<Integer> rest = p.coeffs;
  const std::size_t zeros = zero_multiplicity(p);
  if (zeros > 0) {
    rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(zeros));
    spec.eigenvalues.emplace_back(0, zeros);
  }
  // Monic with nonzero constant term: integer roots divide c_0 and lie within
  // the Fujiwara bound.
  if (rest.size() > 1) {
    const Integer bound = root_bound(CharPoly{rest});
    for (Integer t = 1; t <= bound && rest.size() > 1; ++t) {
      if (rest[0] % t != 0) continue;
      for (const Integer& r : {Integer(-t), t}) {
        std::size_t mult = 0;
        while (rest.size() > 1 && divide_root(rest, r)) ++mult;
        if (mult > 0) spec.eigenvalues.emplace_back(r, mult);
      }
    }
  }
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  spec.residual.coeffs = std::move(rest);
  return spec;
}

IntMatrix evaluate(const std::vector<Integer>& coeffs, const IntMatrix& a) {
  IntMatrix result(a.size());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    result = result * a;
    result.add_diagonal(coeffs[i]);
  }
  return result;
}

bool check_reachability_equation(const Digraph& g, unsigned ell, const ReachabilityEquation& eq) {
  const IntMatrix power = walk_matrix(g, ell);
  switch (eq.kind) {
    case ReachabilityEquation::Kind::kUpp:
      return power.is_constant(1);
    case ReachabilityEquation::Kind::kScaled:
      return power.is_constant(eq.scale);
    case ReachabilityEquation::Kind::kKautz:
      if (ell == 0) return false;
      return (power + walk_matrix(g, ell - 1)).is_constant(1);
  }
  return false;
}

bool verify_polynomial_identity(const Digraph& g, const Digraph& g_mod, std::size_t q_degree,
                                std::uint64_t seed) {
  if (g.order() != g_mod.order()) return false;
  const IntMatrix a = adjacency_matrix(g);
  const IntMatrix a_mod = adjacency_matrix(g_mod);
  if (a_mod * a != a_mod * a_mod) return false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  constexpr int kDraws = 4;
  for (int draw = 0; draw < kDraws; ++draw) {
    std::vector<Integer> q(q_degree + 1);
    for (auto& c : q) c = coeff(rng);
    if (a_mod * evaluate(q, a_mod) != a_mod * evaluate(q, a)) return false;
  }
  return true;
}

}  // namespace cospectra

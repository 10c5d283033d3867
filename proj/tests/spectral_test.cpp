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

#include <random>

#include "cospectra/families.hpp"
#include "cospectra/spectral.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace cospectra {
namespace {

using testing::Poly;
using testing::poly_mul;

Poly oracle_char_poly(const std::vector<std::vector<long long>>& a) {
  return testing::cofactor_char_poly(a);
}

CharPoly to_char_poly(const Poly& p) {
  CharPoly c;
  for (long long v : p) c.coeffs.emplace_back(v);
  return c;
}

TEST_CASE("char_poly agrees with cofactor expansion on every 0/1 matrix up to 4x4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t cells = n * n;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
      std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
      for (std::size_t k = 0; k < cells; ++k) rows[k / n][k % n] = (mask >> k) & 1;
      const CharPoly got = char_poly(IntMatrix::from_rows(rows));
      if (got != to_char_poly(oracle_char_poly(rows))) {
        FAIL("mismatch for n=" << n << " mask=" << mask);
      }
    }
  }
}

TEST_CASE("char_poly agrees with cofactor expansion on random integer 6x6 matrices") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<long long>> rows(6, std::vector<long long>(6));
    for (auto& r : rows) {
      for (auto& v : r) v = trial % 2 == 0 ? entry(rng) & 1 : entry(rng);
    }
    CHECK(char_poly(IntMatrix::from_rows(rows)) == to_char_poly(oracle_char_poly(rows)));
  }
}

TEST_CASE("Newton identities and Cayley-Hamilton") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph g = testing::random_digraph(8, 0.3, rng);
    const IntMatrix a = adjacency_matrix(g);
    const CharPoly p = char_poly(a);
    const std::size_t n = g.order();
    REQUIRE(p.degree() == n);
    CHECK(p.coeffs[n] == 1);
    // p_k + c_{n-1} p_{k-1} + ... + c_{n-k+1} p_1 + k c_{n-k} = 0.
    std::vector<Integer> traces(n + 1);
    for (std::size_t k = 1; k <= n; ++k) traces[k] = a.power(k).trace();
    for (std::size_t k = 1; k <= n; ++k) {
      Integer sum = traces[k] + Integer(k) * p.coeffs[n - k];
      for (std::size_t i = 1; i < k; ++i) sum += p.coeffs[n - i] * traces[k - i];
      CHECK(sum == 0);
    }
    CHECK(evaluate(p.coeffs, a) == IntMatrix(n));
  }
}

TEST_CASE("De Bruijn characteristic polynomial is x^(N-1) (x - d)") {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      const Digraph g = de_bruijn({d, ell});
      const std::size_t n = g.order();
      CharPoly expect;
      expect.coeffs.assign(n + 1, 0);
      expect.coeffs[n] = 1;
      expect.coeffs[n - 1] = -Integer(d);
      CHECK(char_poly(g) == expect);
      CHECK(zero_multiplicity(char_poly(g)) == n - 1);
    }
  }
}

TEST_CASE("spectra of the worked examples") {
  const IntSpectrum b = integer_spectrum(char_poly(testing::b23()));
  CHECK(b.to_string() == "{0^7, 2^1}");
  CHECK(integer_spectrum(char_poly(testing::b23_prime())).to_string() == "{0^7, 2^1}");
  const IntSpectrum k = integer_spectrum(char_poly(testing::k23()));
  CHECK(k.to_string() == "{-1^2, 0^9, 2^1}");
  CHECK(k.multiplicity(-1) == 2);
  CHECK(k.multiplicity(5) == 0);
  CHECK(char_poly(testing::b23()).to_string() == "x^8 - 2x^7");
}

TEST_CASE("integer_spectrum factors out every integer root") {
  // (x - 3)^2 (x + 2) (x^2 + 1) x
  Poly p = poly_mul(poly_mul(Poly{-3, 1}, Poly{-3, 1}), Poly{2, 1});
  p = poly_mul(poly_mul(p, Poly{1, 0, 1}), Poly{0, 1});
  const IntSpectrum s = integer_spectrum(to_char_poly(p));
  CHECK(s.multiplicity(3) == 2);
  CHECK(s.multiplicity(-2) == 1);
  CHECK(s.multiplicity(0) == 1);
  CHECK(s.residual == to_char_poly(Poly{1, 0, 1}));
  CHECK(s.to_string() == "{-2^1, 0^1, 3^2} * (x^2 + 1)");

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> root(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Poly q{1};
    std::map<long long, std::size_t> expect;
    for (int i = 0; i < 1 + trial % 7; ++i) {
      const long long r = root(rng);
      q = poly_mul(q, Poly{-r, 1});
      ++expect[r];
    }
    const IntSpectrum got = integer_spectrum(to_char_poly(q));
    CHECK(got.residual.is_one());
    for (const auto& [r, m] : expect) CHECK(got.multiplicity(r) == m);
    CHECK(got.eigenvalues.size() == expect.size());
  }
}

TEST_CASE("cospectrality") {
  CHECK(cospectral(testing::b23(), testing::b23_prime()));
  CHECK(cospectral(testing::b23(), testing::b23_star()));
  CHECK_FALSE(cospectral(testing::b23(), testing::k23()));
  CHECK_FALSE(cospectral(testing::directed_cycle(3), Digraph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("reachability equations") {
  using Eq = ReachabilityEquation;
  CHECK(check_reachability_equation(testing::b23(), 3, Eq::upp()));
  CHECK_FALSE(check_reachability_equation(testing::b23(), 2, Eq::upp()));
  CHECK(check_reachability_equation(testing::b23_prime(), 3, Eq::upp()));
  CHECK(check_reachability_equation(testing::k23(), 3, Eq::kautz()));
  CHECK_FALSE(check_reachability_equation(testing::k23(), 3, Eq::upp()));
  CHECK_FALSE(check_reachability_equation(testing::b23_star(), 3, Eq::upp()));
  CHECK(check_reachability_equation(testing::b23_star(), 4, Eq::scaled(2)));
  CHECK(check_reachability_equation(testing::b23(), 4, Eq::scaled(2)));
  CHECK_FALSE(check_reachability_equation(testing::b23(), 4, Eq::scaled(3)));
}

TEST_CASE("polynomial identity check") {
  CHECK(verify_polynomial_identity(testing::b23(), testing::b23_prime(), 8));
  CHECK(verify_polynomial_identity(testing::k23(), apply(testing::k23_prime_plan()), 12));
  CHECK_FALSE(verify_polynomial_identity(testing::b23(), testing::k23(), 8));
  // Cospectral, but A^T A != A^T A^T.
  CHECK_FALSE(verify_polynomial_identity(testing::b23(), converse(testing::b23()), 8));
}

}  // namespace
}  // namespace cospectra

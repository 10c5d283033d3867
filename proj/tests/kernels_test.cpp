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
#include <vector>

#include "cospectra/kernels.hpp"

namespace cospectra::kernels {
namespace {

std::vector<std::uint64_t> random_packed(std::size_t n, double density, std::mt19937_64& rng) {
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> m(n * words, 0);
  std::bernoulli_distribution coin(density);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (coin(rng)) m[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  return m;
}

// Sizes straddle the 4-row lane width and the 64-bit word boundary.
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 13, 16, 63, 64, 65, 100, 130};

TEST_CASE("active table is one of the known variants") {
  const KernelTable& t = active();
  const bool known = &t == &scalar_kernels() || &t == avx2_kernels();
  CHECK(known);
}

TEST_CASE("bool product: scalar matches a direct triple loop") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 3, 9, 70}) {
    const std::size_t words = (n + 63) / 64;
    auto a = random_packed(n, 0.3, rng);
    auto b = random_packed(n, 0.3, rng);
    std::vector<std::uint64_t> c(n * words);
    scalar_kernels().bool_product(a.data(), b.data(), c.data(), n, words);
    auto bit = [&](const std::vector<std::uint64_t>& m, std::size_t r, std::size_t col) {
      return ((m[r * words + col / 64] >> (col % 64)) & 1u) != 0;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool expect = false;
        for (std::size_t k = 0; k < n; ++k) expect = expect || (bit(a, i, k) && bit(b, k, j));
        CHECK(bit(c, i, j) == expect);
      }
    }
  }
}

TEST_CASE("saturating product: scalar matches exact counts") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {2, 5, 66}) {
    const std::size_t words = (n + 63) / 64;
    auto a = random_packed(n, 0.4, rng);
    auto b = random_packed(n, 0.4, rng);
    std::vector<std::uint64_t> ones(n * words), twos(n * words);
    scalar_kernels().saturating_product(a.data(), b.data(), ones.data(), twos.data(), n, words);
    auto bit = [&](const std::vector<std::uint64_t>& m, std::size_t r, std::size_t col) {
      return ((m[r * words + col / 64] >> (col % 64)) & 1u) != 0;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        int count = 0;
        for (std::size_t k = 0; k < n; ++k) count += bit(a, i, k) && bit(b, k, j);
        CHECK(bit(ones, i, j) == (count >= 1));
        CHECK(bit(twos, i, j) == (count >= 2));
      }
    }
  }
}

TEST_CASE("avx2 variants are bit-identical to scalar") {
  const KernelTable* wide = avx2_kernels();
  if (wide == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this build or CPU; skipping");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(2026);
  for (std::size_t n : kSizes) {
    for (double density : {0.0, 0.05, 0.3, 0.9}) {
      CAPTURE(n);
      CAPTURE(density);
      const std::size_t words = (n + 63) / 64;
      auto a = random_packed(n, density, rng);
      auto b = random_packed(n, 0.5, rng);

      std::vector<std::uint64_t> c1(n * words, 7), c2(n * words, 9);
      ref.bool_product(a.data(), b.data(), c1.data(), n, words);
      wide->bool_product(a.data(), b.data(), c2.data(), n, words);
      CHECK(c1 == c2);

      std::vector<std::uint64_t> o1(n * words), t1(n * words), o2(n * words, 5), t2(n * words, 5);
      ref.saturating_product(a.data(), b.data(), o1.data(), t1.data(), n, words);
      wide->saturating_product(a.data(), b.data(), o2.data(), t2.data(), n, words);
      CHECK(o1 == o2);
      CHECK(t1 == t2);

      std::uniform_int_distribution<std::int64_t> entry(-1000, 1000);
      std::vector<std::int64_t> m(n * n);
      for (auto& e : m) e = entry(rng);
      std::vector<std::int64_t> r1(n * n), r2(n * n, 3);
      ref.adjacency_times(a.data(), m.data(), r1.data(), n, words);
      wide->adjacency_times(a.data(), m.data(), r2.data(), n, words);
      CHECK(r1 == r2);
    }
  }
}

}  // namespace
}  // namespace cospectra::kernels

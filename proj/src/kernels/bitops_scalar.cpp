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

#include <cstring>

#include "cospectra/kernels.hpp"

namespace cospectra::kernels {
namespace {

void bool_product_scalar(const std::uint64_t* a, const std::uint64_t* b,
                         std::uint64_t* c, std::size_t n, std::size_t words) {
  std::memset(c, 0, n * words * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t* out = c + i * words;
    const std::uint64_t* row = a + i * words;
    for (std::size_t k = 0; k < n; ++k) {
      if (((row[k / 64] >> (k % 64)) & 1u) == 0) continue;
      const std::uint64_t* src = b + k * words;
      for (std::size_t w = 0; w < words; ++w) out[w] |= src[w];
    }
  }
}

void saturating_product_scalar(const std::uint64_t* a, const std::uint64_t* b,
                               std::uint64_t* ones, std::uint64_t* twos,
                               std::size_t n, std::size_t words) {
  std::memset(ones, 0, n * words * sizeof(std::uint64_t));
  std::memset(twos, 0, n * words * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t* o = ones + i * words;
    std::uint64_t* t = twos + i * words;
    const std::uint64_t* row = a + i * words;
    for (std::size_t k = 0; k < n; ++k) {
      if (((row[k / 64] >> (k % 64)) & 1u) == 0) continue;
      const std::uint64_t* src = b + k * words;
      for (std::size_t w = 0; w < words; ++w) {
        t[w] |= o[w] & src[w];
        o[w] |= src[w];
      }
    }
  }
}

void adjacency_times_scalar(const std::uint64_t* adj, const std::int64_t* m,
                            std::int64_t* out, std::size_t n,
                            std::size_t words) {
  std::memset(out, 0, n * n * sizeof(std::int64_t));
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* dst = out + i * n;
    const std::uint64_t* row = adj + i * words;
    for (std::size_t k = 0; k < n; ++k) {
      if (((row[k / 64] >> (k % 64)) & 1u) == 0) continue;
      const std::int64_t* src = m + k * n;
      for (std::size_t j = 0; j < n; ++j) dst[j] += src[j];
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static constexpr KernelTable table{"scalar", &bool_product_scalar,
                                     &saturating_product_scalar,
                                     &adjacency_times_scalar};
  return table;
}

}  // namespace cospectra::kernels

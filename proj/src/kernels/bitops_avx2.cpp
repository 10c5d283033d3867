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

// AVX2 variants. This translation unit is compiled with -mavx2 and is only
// reached through avx2_kernels() after a runtime CPU check.
//
// The boolean products vectorize across rows: four consecutive rows of `a`
// occupy the four 64-bit lanes, each lane's bit k is turned into an all-ones
// mask and used to select row k of `b`.

#include <immintrin.h>

#include <array>
#include <cstring>
#include <vector>

#include "cospectra/kernels.hpp"

namespace cospectra::kernels {
namespace {

constexpr std::size_t kLanes = 4;

// Wrapper so the vector type can live in std::vector without dropping its
// alignment attribute.
struct alignas(32) Acc {
  __m256i v;
};

inline __m256i lane_mask(const std::uint64_t* a, std::size_t row0,
                         std::size_t words, std::size_t k) {
  const std::size_t w = k / 64;
  const __m256i v = _mm256_set_epi64x(
      static_cast<long long>(a[(row0 + 3) * words + w]),
      static_cast<long long>(a[(row0 + 2) * words + w]),
      static_cast<long long>(a[(row0 + 1) * words + w]),
      static_cast<long long>(a[row0 * words + w]));
  const __m256i shifted =
      _mm256_srlv_epi64(v, _mm256_set1_epi64x(static_cast<long long>(k % 64)));
  const __m256i one = _mm256_and_si256(shifted, _mm256_set1_epi64x(1));
  return _mm256_sub_epi64(_mm256_setzero_si256(), one);
}

inline void scatter_lanes(const __m256i v, std::uint64_t* dst,
                          std::size_t row0, std::size_t words, std::size_t w) {
  alignas(32) std::array<std::uint64_t, kLanes> tmp;
  _mm256_store_si256(reinterpret_cast<__m256i*>(tmp.data()), v);
  for (std::size_t r = 0; r < kLanes; ++r) dst[(row0 + r) * words + w] = tmp[r];
}

void bool_product_avx2(const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* c, std::size_t n, std::size_t words) {
  const std::size_t full = n - n % kLanes;
  std::vector<Acc> acc(words);
  for (std::size_t i0 = 0; i0 < full; i0 += kLanes) {
    for (auto& x : acc) x.v = _mm256_setzero_si256();
    for (std::size_t k = 0; k < n; ++k) {
      const __m256i mask = lane_mask(a, i0, words, k);
      if (_mm256_testz_si256(mask, mask)) continue;
      const std::uint64_t* src = b + k * words;
      for (std::size_t w = 0; w < words; ++w) {
        const __m256i bk = _mm256_set1_epi64x(static_cast<long long>(src[w]));
        acc[w].v = _mm256_or_si256(acc[w].v, _mm256_and_si256(mask, bk));
      }
    }
    for (std::size_t w = 0; w < words; ++w) scatter_lanes(acc[w].v, c, i0, words, w);
  }
  if (full < n) {
    const std::size_t rest = n - full;
    // Tail rows go through the reference path on a shifted view.
    std::vector<std::uint64_t> tail(rest * words);
    for (std::size_t r = 0; r < rest; ++r) {
      std::uint64_t* out = tail.data() + r * words;
      std::memset(out, 0, words * sizeof(std::uint64_t));
      const std::uint64_t* row = a + (full + r) * words;
      for (std::size_t k = 0; k < n; ++k) {
        if (((row[k / 64] >> (k % 64)) & 1u) == 0) continue;
        for (std::size_t w = 0; w < words; ++w) out[w] |= b[k * words + w];
      }
    }
    std::memcpy(c + full * words, tail.data(), rest * words * sizeof(std::uint64_t));
  }
}

void saturating_product_avx2(const std::uint64_t* a, const std::uint64_t* b,
                             std::uint64_t* ones, std::uint64_t* twos,
                             std::size_t n, std::size_t words) {
  const std::size_t full = n - n % kLanes;
  std::vector<Acc> acc1(words), acc2(words);
  for (std::size_t i0 = 0; i0 < full; i0 += kLanes) {
    for (std::size_t w = 0; w < words; ++w) {
      acc1[w].v = _mm256_setzero_si256();
      acc2[w].v = _mm256_setzero_si256();
    }
    for (std::size_t k = 0; k < n; ++k) {
      const __m256i mask = lane_mask(a, i0, words, k);
      if (_mm256_testz_si256(mask, mask)) continue;
      const std::uint64_t* src = b + k * words;
      for (std::size_t w = 0; w < words; ++w) {
        const __m256i t = _mm256_and_si256(
            mask, _mm256_set1_epi64x(static_cast<long long>(src[w])));
        acc2[w].v = _mm256_or_si256(acc2[w].v, _mm256_and_si256(acc1[w].v, t));
        acc1[w].v = _mm256_or_si256(acc1[w].v, t);
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      scatter_lanes(acc1[w].v, ones, i0, words, w);
      scatter_lanes(acc2[w].v, twos, i0, words, w);
    }
  }
  for (std::size_t i = full; i < n; ++i) {
    std::uint64_t* o = ones + i * words;
    std::uint64_t* t = twos + i * words;
    std::memset(o, 0, words * sizeof(std::uint64_t));
    std::memset(t, 0, words * sizeof(std::uint64_t));
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

void adjacency_times_avx2(const std::uint64_t* adj, const std::int64_t* m,
                          std::int64_t* out, std::size_t n, std::size_t words) {
  std::memset(out, 0, n * n * sizeof(std::int64_t));
  const std::size_t full = n - n % kLanes;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* dst = out + i * n;
    const std::uint64_t* row = adj + i * words;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const std::int64_t* src = m + k * n;
        std::size_t j = 0;
        for (; j < full; j += kLanes) {
          const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
          __m256i* d = reinterpret_cast<__m256i*>(dst + j);
          _mm256_storeu_si256(d, _mm256_add_epi64(_mm256_loadu_si256(d), s));
        }
        for (; j < n; ++j) dst[j] += src[j];
      }
    }
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{"avx2", &bool_product_avx2,
                                     &saturating_product_avx2,
                                     &adjacency_times_avx2};
  return table;
}

}  // namespace cospectra::kernels

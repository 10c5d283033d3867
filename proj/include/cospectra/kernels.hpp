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

// Low-level kernels over packed 0/1 matrices.
//
// A packed matrix with n rows stores each row as `words` consecutive
// 64-bit words (bit c of row r lives in word c / 64, bit c % 64). Padding bits
// past column n-1 are zero on input and stay zero on output.
//
// Every kernel has a portable scalar reference implementation. Vector
// variants are compiled separately and chosen at runtime; they must produce
// bit-identical results to the scalar path.

#ifndef COSPECTRA_KERNELS_HPP_
#define COSPECTRA_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

namespace cospectra::kernels {

// c = a (x) b over the boolean semiring: c[i][j] = OR_k a[i][k] AND b[k][j].
using BoolProductFn = void (*)(const std::uint64_t* a, const std::uint64_t* b,
                               std::uint64_t* c, std::size_t n,
                               std::size_t words);

// Saturating walk-count product of two 0/1 matrices. On return
// ones[i][j] = (sum_k a[i][k] b[k][j] >= 1) and twos[i][j] = (sum >= 2).
using SaturatingProductFn = void (*)(const std::uint64_t* a,
                                     const std::uint64_t* b,
                                     std::uint64_t* ones, std::uint64_t* twos,
                                     std::size_t n, std::size_t words);

// out = A * m where A is a packed 0/1 n x n matrix and m, out are dense
// row-major int64 n x n matrices. The caller guarantees no overflow.
using AdjacencyTimesFn = void (*)(const std::uint64_t* adj,
                                  const std::int64_t* m, std::int64_t* out,
                                  std::size_t n, std::size_t words);

struct KernelTable {
  const char* name;
  BoolProductFn bool_product;
  SaturatingProductFn saturating_product;
  AdjacencyTimesFn adjacency_times;
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by the rest of the library. Picks the widest supported
// variant unless the environment variable COSPECTRA_KERNELS=scalar is set.
const KernelTable& active();

}  // namespace cospectra::kernels

#endif  // COSPECTRA_KERNELS_HPP_

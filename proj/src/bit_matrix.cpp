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

#include "cospectra/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

#include "cospectra/kernels.hpp"

namespace cospectra {

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::all_ones(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) noexcept {
  std::uint64_t& word = bits_[r * words_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = value ? (word | bit) : (word & ~bit);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (test(r, c)) t.set(c, r);
    }
  }
  return t;
}

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::row_count(std::size_t r) const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitMatrix::any() const noexcept {
  for (std::uint64_t w : bits_) {
    if (w != 0) return true;
  }
  return false;
}

bool BitMatrix::all() const noexcept { return count() == n_ * n_; }

BitMatrix BitMatrix::operator|(const BitMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("BitMatrix size mismatch");
  BitMatrix out(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BitMatrix size mismatch");
  BitMatrix c(a.size());
  kernels::active().bool_product(a.data(), b.data(), c.data(), a.size(),
                                 a.words_per_row());
  return c;
}

SaturatedProduct saturating_product(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BitMatrix size mismatch");
  SaturatedProduct out{BitMatrix(a.size()), BitMatrix(a.size())};
  kernels::active().saturating_product(a.data(), b.data(),
                                       out.at_least_one.data(),
                                       out.at_least_two.data(), a.size(),
                                       a.words_per_row());
  return out;
}

}  // namespace cospectra

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

#ifndef COSPECTRA_BIT_MATRIX_HPP_
#define COSPECTRA_BIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cospectra {

// Square 0/1 matrix with each row packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);
  static BitMatrix all_ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return ((bits_[r * words_ + c / 64] >> (c % 64)) & 1u) != 0;
  }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept;

  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) noexcept {
    return {bits_.data() + r * words_, words_};
  }
  const std::uint64_t* data() const noexcept { return bits_.data(); }
  std::uint64_t* data() noexcept { return bits_.data(); }

  BitMatrix transpose() const;
  std::size_t count() const noexcept;
  std::size_t row_count(std::size_t r) const noexcept;
  bool any() const noexcept;
  bool all() const noexcept;
  BitMatrix operator|(const BitMatrix& other) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Boolean semiring product through the active kernel table.
BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b);

struct SaturatedProduct {
  BitMatrix at_least_one;
  BitMatrix at_least_two;
};

// Walk-count product of 0/1 matrices, saturated at two.
SaturatedProduct saturating_product(const BitMatrix& a, const BitMatrix& b);

}  // namespace cospectra

#endif  // COSPECTRA_BIT_MATRIX_HPP_

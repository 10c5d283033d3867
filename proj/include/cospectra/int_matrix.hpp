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

#ifndef COSPECTRA_INT_MATRIX_HPP_
#define COSPECTRA_INT_MATRIX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cospectra/bit_matrix.hpp"

namespace cospectra {

using Integer = boost::multiprecision::cpp_int;

// Square matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n);
  static IntMatrix from_bits(const BitMatrix& bits);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t size() const noexcept { return n_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * n_ + c];
  }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix scaled(const Integer& c) const;
  IntMatrix transpose() const;
  IntMatrix power(unsigned exponent) const;

  Integer trace() const;
  // Adds c to every diagonal entry.
  void add_diagonal(const Integer& c);
  bool is_constant(const Integer& c) const;
  // Entrywise positivity pattern.
  BitMatrix support() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace cospectra

#endif  // COSPECTRA_INT_MATRIX_HPP_

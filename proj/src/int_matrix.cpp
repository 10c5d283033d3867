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

#include "cospectra/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cospectra {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
  IntMatrix m(n);
  for (auto& e : m.entries_) e = 1;
  return m;
}

IntMatrix IntMatrix::from_bits(const BitMatrix& bits) {
  IntMatrix m(bits.size());
  for (std::size_t r = 0; r < bits.size(); ++r) {
    for (std::size_t c = 0; c < bits.size(); ++c) {
      if (bits.test(r, c)) m(r, c) = 1;
    }
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("IntMatrix size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const Integer& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("IntMatrix size mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("IntMatrix size mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const Integer& c) const {
  IntMatrix out(*this);
  for (auto& e : out.entries_) e *= c;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::power(unsigned exponent) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

void IntMatrix::add_diagonal(const Integer& c) {
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += c;
}

bool IntMatrix::is_constant(const Integer& c) const {
  for (const auto& e : entries_) {
    if (e != c) return false;
  }
  return true;
}

BitMatrix IntMatrix::support() const {
  BitMatrix bits(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) > 0) bits.set(i, j);
    }
  }
  return bits;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace cospectra

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

#include "cospectra/bit_matrix.hpp"

namespace cospectra {
namespace {

TEST_CASE("identity is neutral for the boolean product") {
  BitMatrix m(70);
  m.set(0, 69);
  m.set(69, 3);
  m.set(12, 12);
  CHECK(bool_product(m, BitMatrix::identity(70)) == m);
  CHECK(bool_product(BitMatrix::identity(70), m) == m);
}

TEST_CASE("transpose, counts and set/clear") {
  BitMatrix m(3);
  m.set(0, 1);
  m.set(2, 0);
  CHECK(m.count() == 2);
  CHECK(m.transpose().test(1, 0));
  CHECK(m.transpose().test(0, 2));
  m.set(0, 1, false);
  CHECK(m.count() == 1);
  CHECK(m.row_count(2) == 1);
  CHECK_FALSE(m.all());
  CHECK(BitMatrix::all_ones(5).all());
}

TEST_CASE("saturating product separates one walk from two") {
  // 0 -> 1 -> 3 and 0 -> 2 -> 3: two walks of length 2 from 0 to 3.
  BitMatrix a(4);
  a.set(0, 1);
  a.set(0, 2);
  a.set(1, 3);
  a.set(2, 3);
  const auto p = saturating_product(a, a);
  CHECK(p.at_least_one.test(0, 3));
  CHECK(p.at_least_two.test(0, 3));
  CHECK(p.at_least_two.count() == 1);
}

}  // namespace
}  // namespace cospectra

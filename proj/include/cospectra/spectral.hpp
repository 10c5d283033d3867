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

#ifndef COSPECTRA_SPECTRAL_HPP_
#define COSPECTRA_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cospectra/digraph.hpp"
#include "cospectra/int_matrix.hpp"

namespace cospectra {

// Monic integer polynomial, coefficients c_0..c_n (c_n == 1).
struct CharPoly {
  std::vector<Integer> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }
  // "x^8 - 2x^7".
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

struct IntSpectrum {
  // Ascending by eigenvalue.
  std::vector<std::pair<Integer, std::size_t>> eigenvalues;
  CharPoly residual;  // factor without integer roots; {1} when fully split

  std::size_t multiplicity(const Integer& lambda) const;
  // "{0^7, 2^1}", with " * (residual)" appended when it is not 1.
  std::string to_string() const;
};

// det(xI - A) by the Faddeev-LeVerrier recurrence; every division is exact.
CharPoly char_poly(const IntMatrix& a);
CharPoly char_poly(const Digraph& g);

bool cospectral(const Digraph& a, const Digraph& b);

IntSpectrum integer_spectrum(const CharPoly& p);

std::size_t zero_multiplicity(const CharPoly& p);

// Evaluates p at a square matrix by Horner's rule.
IntMatrix evaluate(const std::vector<Integer>& coeffs, const IntMatrix& a);

struct ReachabilityEquation {
  enum class Kind { kUpp, kKautz, kScaled };
  Kind kind = Kind::kUpp;
  Integer scale = 1;  // only for kScaled

  static ReachabilityEquation upp() { return {Kind::kUpp, 1}; }
  static ReachabilityEquation kautz() { return {Kind::kKautz, 1}; }
  static ReachabilityEquation scaled(Integer c) { return {Kind::kScaled, std::move(c)}; }
};

// upp: A^l = J; kautz: A^l + A^(l-1) = J; scaled(c): A^l = cJ.
bool check_reachability_equation(const Digraph& g, unsigned ell, const ReachabilityEquation& eq);

// A' A == A' A', and then A' q(A') == A' q(A) for randomly drawn integer q of
// degree <= q_degree (fixed seed, a few draws).
bool verify_polynomial_identity(const Digraph& g, const Digraph& g_mod, std::size_t q_degree,
                                std::uint64_t seed = 0x5eed);

}  // namespace cospectra

#endif  // COSPECTRA_SPECTRAL_HPP_

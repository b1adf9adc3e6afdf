// Copyright 2026 The mixradix Authors
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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixradix/error.hpp"

namespace mixradix {

using Radix = std::uint32_t;
using Digit = std::uint32_t;
using BigInt = mpz_class;

/// A pair of digits returned by the two-slot maps. For psi(p, q, u, v) the
/// pair is (v', u'): `first` lives in {0..q-1}, `second` in {0..p-1}.
using DigitPair = std::pair<Digit, Digit>;

/// Finite mixed radix basis b = (b_1, ..., b_K). Place values
/// pi_0 = 1, pi_i = b_1 * ... * b_i are cached.
class MixedRadixBasis {
 public:
  MixedRadixBasis();
  explicit MixedRadixBasis(std::vector<Radix> radices);

  /// Constant radix basis (p, p, ..., p) of the given length.
  static MixedRadixBasis constant(Radix p, std::size_t length);

  std::size_t size() const noexcept { return radices_.size(); }
  bool empty() const noexcept { return radices_.empty(); }
  std::span<const Radix> radices() const noexcept { return radices_; }

  /// b_i with 1-based i, matching the place-value formulas.
  Radix radix(std::size_t i) const;
  /// pi_i for 0 <= i <= K.
  const BigInt& product(std::size_t i) const;
  /// pi_K: every n < capacity() has a digit string in this basis.
  const BigInt& capacity() const noexcept { return products_.back(); }

  /// tau_{k,k+1}(b), k is 1-based.
  MixedRadixBasis transposed(std::size_t k) const;

  bool operator==(const MixedRadixBasis& other) const noexcept {
    return radices_ == other.radices_;
  }

 private:
  std::vector<Radix> radices_;
  std::vector<BigInt> products_;
};

/// Little-endian digits a_0..a_{K-1} bound to a basis, 0 <= a_i < b_{i+1}.
class DigitString {
 public:
  DigitString() = default;
  DigitString(MixedRadixBasis basis, std::vector<Digit> digits);

  const MixedRadixBasis& basis() const noexcept { return basis_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit operator[](std::size_t i) const { return digits_.at(i); }
  std::size_t size() const noexcept { return digits_.size(); }

  bool operator==(const DigitString& other) const noexcept {
    return basis_ == other.basis_ && digits_ == other.digits_;
  }

 private:
  MixedRadixBasis basis_;
  std::vector<Digit> digits_;
};

/// Elementary transposition tau_{k,k+1}. The position is 1-based: it swaps
/// radices b_k and b_{k+1} and rewrites digits a_{k-1} and a_k.
struct TranspositionStep {
  std::size_t position = 1;
};

/// psi_{p,q}(u, v) = (v', u') with u + p v = v' + q u', 0 <= v' < q, 0 <= u' < p.
DigitPair psi(Radix p, Radix q, Digit u, Digit v);

/// Inverse of psi_{p,q}: maps (v', u') back to (u, v). Equals psi(q, p, v', u').
DigitPair psi_inverse(Radix p, Radix q, Digit v_prime, Digit u_prime);

/// Map along the other diagonal of a cell, defined through the CRT when
/// gcd(p, q) = 1: returns (u_N, u_E) such that (u_W, u_N) = psi(p, q, u_S, u_E).
/// Requires u_W < q and u_S < p.
DigitPair psi_ne(Radix p, Radix q, Digit u_west, Digit u_south);

/// Digits of n by successive Euclidean division by b_1, ..., b_K.
/// Throws OverflowError when n >= pi_K.
DigitString decompose(const BigInt& n, const MixedRadixBasis& basis);

/// sum_i a_i pi_i.
BigInt recompose(const DigitString& d);

/// Change of basis under one adjacent transposition; only digits k-1 and k move.
DigitString transpose_digits(const DigitString& d, TranspositionStep step);

/// Sequential application of transpositions. A bad step raises
/// PreconditionError naming its index in `steps`.
DigitString apply_permutation(const DigitString& d, std::span<const TranspositionStep> steps);

/// Canonical JSON: {"radices":[...],"digits":[a0,...]} (digits little-endian).
std::string to_json(const DigitString& d);
DigitString digit_string_from_json(const std::string& text);

/// Human format: big-endian digits joined by ':' followed by "(basis b1,...,bK)".
std::string to_human(const DigitString& d);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace mixradix

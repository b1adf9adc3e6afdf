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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mixradix/core.hpp"
#include "mixradix/poly.hpp"

namespace mixradix {

/// A tuple entry tagged with the set S_set it currently belongs to.
template <class T>
struct TaggedValue {
  std::size_t set = 0;
  T value{};
  bool operator==(const TaggedValue&) const = default;
};

/// F : S_a x S_b -> S_b x S_a. `card_*` bound the digits of finite sets;
/// zero means the set is unbounded (the rational line).
template <class T>
struct TwoSlotMap {
  std::size_t set_a = 0;
  std::size_t set_b = 0;
  std::uint64_t card_a = 0;
  std::uint64_t card_b = 0;
  std::function<std::pair<T, T>(const T&, const T&)> f;
};

/// The swap (x, y) -> (y, x) between two sets.
template <class T>
TwoSlotMap<T> swap_map(std::size_t set_a, std::uint64_t card_a, std::size_t set_b, std::uint64_t card_b) {
  return {set_a, set_b, card_a, card_b, [](const T& x, const T& y) { return std::pair<T, T>{y, x}; }};
}

/// psi_{p,q} as a map S_a x S_b -> S_b x S_a with |S_a| = p, |S_b| = q.
TwoSlotMap<Digit> psi_map(std::size_t set_a, Radix p, std::size_t set_b, Radix q);
/// phi_{a,b} on K x K.
TwoSlotMap<Rational> phi_map(std::size_t set_a, const Rational& a, std::size_t set_b, const Rational& b);

namespace detail {

template <class T>
bool in_range(const T& value, std::uint64_t card) {
  if constexpr (std::is_integral_v<T>) {
    return card == 0 || static_cast<std::uint64_t>(value) < card;
  } else {
    (void)value;
    (void)card;
    return true;
  }
}

}  // namespace detail

/// iota_i(F) in place, 1-based i: slots i and i+1 must hold S_a and S_b.
template <class T>
void iota_apply_inplace(const TwoSlotMap<T>& map, std::size_t i, std::span<TaggedValue<T>> tuple) {
  if (i < 1 || i >= tuple.size()) {
    throw PreconditionError("iota index " + std::to_string(i) + " outside 1.." +
                            std::to_string(tuple.empty() ? 0 : tuple.size() - 1));
  }
  TaggedValue<T>& x = tuple[i - 1];
  TaggedValue<T>& y = tuple[i];
  if (x.set != map.set_a || y.set != map.set_b) {
    throw PreconditionError("iota_" + std::to_string(i) + ": slots hold (S_" + std::to_string(x.set) + ", S_" +
                            std::to_string(y.set) + "), map expects (S_" + std::to_string(map.set_a) + ", S_" +
                            std::to_string(map.set_b) + ")");
  }
  if (!detail::in_range(x.value, map.card_a) || !detail::in_range(y.value, map.card_b)) {
    throw PreconditionError("iota_" + std::to_string(i) + ": value outside the map's domain");
  }
  auto [first, second] = map.f(x.value, y.value);
  x = {map.set_b, std::move(first)};
  y = {map.set_a, std::move(second)};
}

template <class T>
std::vector<TaggedValue<T>> iota_apply(const TwoSlotMap<T>& map, std::size_t i,
                                       std::span<const TaggedValue<T>> tuple) {
  std::vector<TaggedValue<T>> out(tuple.begin(), tuple.end());
  iota_apply_inplace<T>(map, i, out);
  return out;
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

struct YbReport {
  bool holds = true;
  /// Both composites are bijections S1 x S2 x S3 -> S3 x S2 x S1.
  bool bijective = true;
  std::uint64_t checked = 0;
  /// First input (x1, x2, x3) on which the two sides differ.
  std::optional<std::array<Digit, 3>> counterexample;
};

/// Exhaustive check of
/// iota1(psi23) iota2(psi13) iota1(psi12) = iota2(psi12) iota1(psi13) iota2(psi23).
YbReport yb_check_psi(Radix p1, Radix p2, Radix p3, std::uint64_t budget = kDefaultEnumerationBudget);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

struct PhiYbReport {
  bool holds = true;
  bool matrices_equal = true;
  bool matches_closed_form = true;
  bool pointwise = true;
  Matrix3 lhs;
  Matrix3 rhs;
  std::size_t samples = 0;
};

/// [[1, a3-a1, (a3-a1)(a3-a2)], [0, 1, a3-a1], [0, 0, 1]].
Matrix3 phi_yb_closed_form(const Rational& a1, const Rational& a2, const Rational& a3);

/// Matrices of both composites (images of the unit vectors), the closed form,
/// and pointwise agreement on random rational triples.
PhiYbReport yb_check_phi(const Rational& a1, const Rational& a2, const Rational& a3, std::size_t samples = 100,
                         std::uint64_t seed = 1);

struct BraidReport {
  bool holds = true;
  DigitString start;
  DigitString route_a;  // tau_1 tau_2 tau_1
  DigitString route_b;  // tau_2 tau_1 tau_2
  DigitString expected;
};

BraidReport braid_transform_consistency(const BigInt& n, Radix p1, Radix p2, Radix p3);

struct HypercubeOptions {
  /// Above this many words, check a seeded random sample instead.
  std::uint64_t max_words = 100000;
  std::size_t samples = 2000;
  std::uint64_t seed = 1;
};

struct HypercubeReport {
  bool holds = true;
  bool sampled = false;
  std::uint64_t words_checked = 0;
  /// Word as indices into the radix list, for the first disagreement.
  std::optional<std::vector<std::size_t>> counterexample_word;
};

/// For words in B_{p_1..p_N}(l_1..l_N), compares decompose(n, word basis)
/// with the digits obtained from the reference word p_1^{l_1}...p_N^{l_N}
/// by adjacent transpositions.
HypercubeReport hypercube_consistency(const BigInt& n, std::span<const Radix> radices,
                                      std::span<const std::size_t> multiplicities,
                                      const HypercubeOptions& options = {});

/// Transpositions (1-based positions) taking word `from` to word `to`.
std::vector<TranspositionStep> transposition_chain(std::span<const std::size_t> from,
                                                   std::span<const std::size_t> to);

}  // namespace mixradix

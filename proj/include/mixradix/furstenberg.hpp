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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixradix/core.hpp"
#include "mixradix/grid.hpp"

namespace mixradix {

/// num / den in [0, 1), reduced.
class UnitRational {
 public:
  UnitRational() : num_(0), den_(1) {}
  UnitRational(BigInt num, BigInt den);
  /// "k/r" or "0".
  static UnitRational parse(const std::string& text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  std::string to_string() const;

  bool operator==(const UnitRational& other) const { return num_ == other.num_ && den_ == other.den_; }

 private:
  BigInt num_;
  BigInt den_;
};

/// prefix followed by `period` repeated forever (an empty period repeats P).
struct InfiniteWord {
  std::vector<Letter> prefix;
  std::vector<Letter> period;
  Letter at(std::size_t i) const;
};

/// a_i = floor(b_{i+1} x_i), x_{i+1} = {b_{i+1} x_i}, one digit per radix.
std::vector<Digit> expand_real(const UnitRational& x, std::span<const Radix> radices);
std::vector<Digit> expand_real(const UnitRational& x, const InfiniteWord& word, Radix p, Radix q, std::size_t depth);

/// Window {-m..0} x {-n..0} of the corner decoration, stored with
/// (i, j) = (-x, -y):
///   beta_h(i, j): edge (-i-1,-j)-(-i,-j), 0 <= i < m, 0 <= j <= n, digit < p
///   beta_v(i, j): edge (-i,-j-1)-(-i,-j), 0 <= i <= m, 0 <= j < n, digit < q
/// Face (i, j) has N = beta_h(i,j), E = beta_v(i,j), S = beta_h(i,j+1),
/// W = beta_v(i+1,j) and (W, N) = psi_{p,q}(S, E).
struct QuadrantWindow {
  Radix p = 2;
  Radix q = 2;
  std::size_t m = 0;
  std::size_t n = 0;
  EdgeArray<Digit> beta_h;
  EdgeArray<Digit> beta_v;

  QuadrantWindow() = default;
  QuadrantWindow(Radix p_, Radix q_, std::size_t m_, std::size_t n_)
      : p(p_), q(q_), m(m_), n(n_), beta_h(m_, n_ + 1), beta_v(m_ + 1, n_) {}

  bool is_compatible() const;
  bool operator==(const QuadrantWindow&) const = default;
};

/// Seeds the East column and South row from the word Q^n P^m, propagates
/// towards the North-West, then checks the top row and East column against
/// the pure base-p and base-q expansions.
QuadrantWindow quadrant(const UnitRational& x, Radix p, Radix q, std::size_t m, std::size_t n);

/// Digits along a SW path given by a word of at most m P's and n Q's.
std::vector<Digit> read_quadrant_path(const QuadrantWindow& w, std::span<const Letter> word);

/// p x mod 1.
UnitRational T_map(const UnitRational& x, Radix p);

enum class Axis { horizontal, vertical };

/// Drops the column i = 0 (horizontal) or the row j = 0 (vertical).
QuadrantWindow shift(const QuadrantWindow& w, Axis axis);

struct OrbitTable {
  BigInt r;
  Radix p = 2;
  std::vector<BigInt> numerators;
};

/// k, pk, p^2 k, ... mod r up to the return to k. Needs gcd(r, p) = gcd(k, r) = 1.
OrbitTable orbit(const BigInt& k, const BigInt& r, Radix p);

/// Two layers of the corner decoration of k/r over the enriched basis
/// {p, q, r}. Transversal edges sit on the vertices of the window.
struct LayerStack {
  Radix p = 2;
  Radix q = 2;
  std::uint64_t r = 1;
  std::size_t m = 0;
  std::size_t n = 0;
  QuadrantWindow layer1;
  QuadrantWindow layer2;
  /// transversal(i, j), 0 <= i <= m, 0 <= j <= n.
  EdgeArray<std::uint64_t> transversal;
  std::uint64_t cubes_checked = 0;
};

/// Fills every elementary cube by both Yang-Baxter routes; throws
/// InvariantViolation if they disagree anywhere.
LayerStack layer_fill(std::uint64_t k, std::uint64_t r, Radix p, Radix q, std::size_t m, std::size_t n);

/// Moves the real digits at 1-based positions k, k+1 to the transposed radices.
struct RealSlot {
  std::uint64_t radix;
  std::uint64_t digit;
  bool operator==(const RealSlot&) const = default;
};
void transpose_real(std::span<RealSlot> slots, std::size_t k);

/// Upsilon(i, j) = S + p E = W + q N per face, m x n.
EdgeArray<std::uint64_t> rudolph_array(const QuadrantWindow& w);
/// Upsilon(i, i) for i < min(m, n).
std::vector<std::uint64_t> rudolph_diagonal(const QuadrantWindow& w);

/// 1 iff u_S + p u_E = u_W + q u_N.
int face_weight(Radix p, Radix q, Digit u_s, Digit u_n, Digit u_w, Digit u_e);

/// Longest run of maximal digits (radix - 1) in a digit sequence.
std::size_t longest_maximal_run(std::span<const Digit> digits, std::span<const Radix> radices);

struct UniformityReport {
  /// Each (W, N) reached exactly once over all (S, E).
  bool single_cell_exact = true;
  std::uint64_t trials = 0;
  /// Frequencies of the North and West digits of the corner face of a
  /// window seeded with uniform digits.
  std::vector<std::uint64_t> north_counts;
  std::vector<std::uint64_t> west_counts;
  double chi2_north = 0;
  double chi2_west = 0;
  bool within_3_sigma = true;
};

UniformityReport uniformity_check(Radix p, Radix q, std::uint64_t trials, std::uint64_t seed);

struct CubePushforward {
  /// counts[N1 * q + W1] over all (t, layer-2 digits) inputs.
  std::vector<std::uint64_t> counts;
  bool exact = true;
};

/// Pushes the uniform law of (transversal t < r, North and West digits of a
/// layer-2 face) through the cube to the North and West digits on layer 1.
CubePushforward layer_cube_pushforward(Radix p, Radix q, std::uint64_t r);

std::string quadrant_to_json(const QuadrantWindow& w);
std::string layers_to_json(const LayerStack& s);
std::string render_quadrant(const QuadrantWindow& w);

}  // namespace mixradix

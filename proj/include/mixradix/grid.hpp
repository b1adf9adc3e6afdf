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

#include <barrier>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mixradix/core.hpp"

namespace mixradix {

/// Letter of a word in B_{p,q}(l1, l2): P moves the path right, Q moves it up.
enum class Letter : unsigned char { P, Q };

/// A basis of B_{p,q}(l1, l2) spelled over {P, Q}. Using letters instead of
/// radix values keeps p == q meaningful.
class BasisWord {
 public:
  BasisWord() = default;
  BasisWord(std::vector<Letter> letters, Radix p, Radix q);

  /// Parses "PPQ..." (case-insensitive).
  static BasisWord parse(std::string_view text, Radix p, Radix q);
  /// b^SE = P^{l1} Q^{l2} and b^NW = Q^{l2} P^{l1}.
  static BasisWord south_east(std::size_t l1, std::size_t l2, Radix p, Radix q);
  static BasisWord north_west(std::size_t l1, std::size_t l2, Radix p, Radix q);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t l1() const noexcept { return l1_; }
  std::size_t l2() const noexcept { return l2_; }
  Radix p() const noexcept { return p_; }
  Radix q() const noexcept { return q_; }

  MixedRadixBasis basis() const;
  std::string to_string() const;

  bool operator==(const BasisWord&) const = default;

 private:
  std::vector<Letter> letters_;
  Radix p_ = 2;
  Radix q_ = 2;
  std::size_t l1_ = 0;
  std::size_t l2_ = 0;
};

/// All C(l1 + l2, l1) words of B_{p,q}(l1, l2) in lexicographic order (P < Q).
std::vector<BasisWord> all_words(std::size_t l1, std::size_t l2, Radix p, Radix q);

struct LatticePoint {
  std::size_t x = 0;
  std::size_t y = 0;
  bool operator==(const LatticePoint&) const = default;
};

/// Monotone lattice path gamma(0) = (0,0), ..., gamma(l1 + l2) = (l1, l2) with
/// unit increments (1,0) or (0,1).
class LatticePath {
 public:
  explicit LatticePath(std::vector<LatticePoint> vertices);
  std::span<const LatticePoint> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size() - 1; }

 private:
  std::vector<LatticePoint> vertices_;
};

LatticePath path_from_word(const BasisWord& w);
BasisWord word_from_path(const LatticePath& path, Radix p, Radix q);

/// Dense 2D array indexed (i, j), i-major.
template <class T>
class EdgeArray {
 public:
  EdgeArray() = default;
  EdgeArray(std::size_t extent_i, std::size_t extent_j, const T& fill = T{})
      : extent_i_(extent_i), extent_j_(extent_j), data_(extent_i * extent_j, fill) {}

  std::size_t extent_i() const noexcept { return extent_i_; }
  std::size_t extent_j() const noexcept { return extent_j_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * extent_j_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * extent_j_ + j]; }

  bool operator==(const EdgeArray&) const = default;

 private:
  std::size_t extent_i_ = 0;
  std::size_t extent_j_ = 0;
  std::vector<T> data_;
};

/// Edge labels of R(l1, l2), array convention of the fill algorithms:
///   alpha_h(i, j) labels {(i,j),(i+1,j)}, 0 <= i < l1, 0 <= j <= l2
///   alpha_v(i, j) labels {(i,j),(i,j+1)}, 0 <= i <= l1, 0 <= j < l2
template <class H, class V = H>
struct EdgeDecoration {
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  EdgeArray<H> alpha_h;
  EdgeArray<V> alpha_v;

  EdgeDecoration() = default;
  EdgeDecoration(std::size_t l1_, std::size_t l2_)
      : l1(l1_), l2(l2_), alpha_h(l1_, l2_ + 1), alpha_v(l1_ + 1, l2_) {}

  bool operator==(const EdgeDecoration&) const = default;
};

/// Order in which cells are visited by the fills. Every schedule respects the
/// cell dependencies and yields identical output.
enum class FillSchedule { columns, rows, wavefront };

struct FillOptions {
  FillSchedule schedule = FillSchedule::columns;
  /// Worker threads for the wavefront schedule; ignored otherwise.
  unsigned threads = 1;
};

namespace detail {

template <class Cell>
void run_wavefront(std::size_t l1, std::size_t l2, unsigned threads, Cell&& cell) {
  // Cell (i, j) of a SE fill depends on (i+1, j) and (i, j-1): the anti-diagonal
  // d = (l1 - 1 - i) + j is a valid front.
  if (l1 == 0 || l2 == 0) return;
  const std::size_t fronts = l1 + l2 - 1;
  auto front_cells = [&](std::size_t d, std::size_t begin_rank, std::size_t stride) {
    const std::size_t j_lo = d >= l1 ? d - (l1 - 1) : 0;
    const std::size_t j_hi = std::min(d, l2 - 1);
    for (std::size_t j = j_lo + begin_rank; j <= j_hi; j += stride) {
      const std::size_t i = l1 - 1 - (d - j);
      cell(i, j);
    }
  };
  if (threads <= 1) {
    for (std::size_t d = 0; d < fronts; ++d) front_cells(d, 0, 1);
    return;
  }
  std::barrier sync(static_cast<std::ptrdiff_t>(threads));
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t d = 0; d < fronts; ++d) {
        front_cells(d, t, threads);
        sync.arrive_and_wait();
      }
    });
  }
}

}  // namespace detail

/// Fills R(l1, l2) from the South row and East column:
/// (alpha_v(i,j), alpha_h(i,j+1)) = f(alpha_h(i,j), alpha_v(i+1,j)).
/// `f` maps (H, V) to std::pair<V, H>. Exactly l1 * l2 calls.
template <class H, class V, class F>
EdgeDecoration<H, V> fill_south_east_with(std::span<const H> south, std::span<const V> east, F&& f,
                                          FillOptions options = {}) {
  const std::size_t l1 = south.size();
  const std::size_t l2 = east.size();
  EdgeDecoration<H, V> dec(l1, l2);
  for (std::size_t i = 0; i < l1; ++i) dec.alpha_h(i, 0) = south[i];
  for (std::size_t j = 0; j < l2; ++j) dec.alpha_v(l1, j) = east[j];
  auto cell = [&](std::size_t i, std::size_t j) {
    auto [west, north] = f(dec.alpha_h(i, j), dec.alpha_v(i + 1, j));
    dec.alpha_v(i, j) = std::move(west);
    dec.alpha_h(i, j + 1) = std::move(north);
  };
  switch (options.schedule) {
    case FillSchedule::columns:
      for (std::size_t i = l1; i-- > 0;)
        for (std::size_t j = 0; j < l2; ++j) cell(i, j);
      break;
    case FillSchedule::rows:
      for (std::size_t j = 0; j < l2; ++j)
        for (std::size_t i = l1; i-- > 0;) cell(i, j);
      break;
    case FillSchedule::wavefront:
      detail::run_wavefront(l1, l2, options.threads, cell);
      break;
  }
  return dec;
}

/// Inverse-direction fill from the North row and West column using
/// (alpha_h(i,j), alpha_v(i+1,j)) = g(alpha_v(i,j), alpha_h(i,j+1)), where
/// g is the inverse of the SE map and returns std::pair<H, V>.
template <class H, class V, class G>
EdgeDecoration<H, V> fill_north_west_with(std::span<const H> north, std::span<const V> west, G&& g) {
  const std::size_t l1 = north.size();
  const std::size_t l2 = west.size();
  EdgeDecoration<H, V> dec(l1, l2);
  for (std::size_t i = 0; i < l1; ++i) dec.alpha_h(i, l2) = north[i];
  for (std::size_t j = 0; j < l2; ++j) dec.alpha_v(0, j) = west[j];
  for (std::size_t i = 0; i < l1; ++i) {
    for (std::size_t j = l2; j-- > 0;) {
      auto [south, east] = g(dec.alpha_v(i, j), dec.alpha_h(i, j + 1));
      dec.alpha_h(i, j) = std::move(south);
      dec.alpha_v(i + 1, j) = std::move(east);
    }
  }
  return dec;
}

/// Edge-labelled rectangle whose every cell satisfies
/// psi(p, q, alpha_h(i,j), alpha_v(i+1,j)) = (alpha_v(i,j), alpha_h(i,j+1)).
class RectDecoration {
 public:
  /// Validates digit ranges and local compatibility.
  RectDecoration(Radix p, Radix q, EdgeDecoration<Digit> edges);

  Radix p() const noexcept { return p_; }
  Radix q() const noexcept { return q_; }
  std::size_t l1() const noexcept { return edges_.l1; }
  std::size_t l2() const noexcept { return edges_.l2; }
  Digit alpha_h(std::size_t i, std::size_t j) const { return edges_.alpha_h(i, j); }
  Digit alpha_v(std::size_t i, std::size_t j) const { return edges_.alpha_v(i, j); }
  const EdgeDecoration<Digit>& edges() const noexcept { return edges_; }

  std::vector<Digit> south() const;
  std::vector<Digit> north() const;
  std::vector<Digit> west() const;
  std::vector<Digit> east() const;

  bool operator==(const RectDecoration&) const = default;

 private:
  Radix p_;
  Radix q_;
  EdgeDecoration<Digit> edges_;
};

/// True when every cell of `edges` satisfies the psi_{p,q} rule and digits are in range.
bool is_psi_compatible(Radix p, Radix q, const EdgeDecoration<Digit>& edges);

RectDecoration fill_from_south_east(Radix p, Radix q, std::span<const Digit> south,
                                    std::span<const Digit> east, FillOptions options = {});
RectDecoration fill_from_north_west(Radix p, Radix q, std::span<const Digit> north,
                                    std::span<const Digit> west);
/// CRT fill from the South row and West column; requires gcd(p, q) = 1.
RectDecoration fill_from_south_west(Radix p, Radix q, std::span<const Digit> south,
                                    std::span<const Digit> west);

/// Rebuilds the whole decoration from the digits along one path, applying psi
/// to the cells North-West of the path and its inverse to those South-East.
RectDecoration fill_from_path(const BasisWord& w, std::span<const Digit> digits);

/// Digit i is the label of edge {gamma(i), gamma(i+1)}.
DigitString read_along_path(const RectDecoration& dec, const BasisWord& w);

/// Psi_n: decomposes n along b^SE and fills the rectangle.
RectDecoration decoration_of_integer(const BigInt& n, Radix p, Radix q, std::size_t l1, std::size_t l2);

enum class RenderStyle { ascii, json };
std::string render_grid(const RectDecoration& dec, RenderStyle style);
RectDecoration rect_decoration_from_json(const std::string& text);

}  // namespace mixradix

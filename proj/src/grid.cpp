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

#include "mixradix/grid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace mixradix {

namespace {

void check_digits(std::span<const Digit> digits, Radix bound, const char* side) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= bound) {
      throw PreconditionError(std::string(side) + " digit " + std::to_string(i) + " = " +
                              std::to_string(digits[i]) + " must be < " + std::to_string(bound));
    }
  }
}

void check_radices(Radix p, Radix q) {
  detail::require(p >= 2 && q >= 2, "radices must be >= 2, got p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
}

}  // namespace

BasisWord::BasisWord(std::vector<Letter> letters, Radix p, Radix q)
    : letters_(std::move(letters)), p_(p), q_(q) {
  check_radices(p, q);
  l1_ = static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::P));
  l2_ = letters_.size() - l1_;
}

BasisWord BasisWord::parse(std::string_view text, Radix p, Radix q) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'P': letters.push_back(Letter::P); break;
      case 'Q': letters.push_back(Letter::Q); break;
      default: throw PreconditionError(std::string("basis word letter must be P or Q, got '") + c + "'");
    }
  }
  return BasisWord(std::move(letters), p, q);
}

BasisWord BasisWord::south_east(std::size_t l1, std::size_t l2, Radix p, Radix q) {
  std::vector<Letter> letters(l1, Letter::P);
  letters.insert(letters.end(), l2, Letter::Q);
  return BasisWord(std::move(letters), p, q);
}

BasisWord BasisWord::north_west(std::size_t l1, std::size_t l2, Radix p, Radix q) {
  std::vector<Letter> letters(l2, Letter::Q);
  letters.insert(letters.end(), l1, Letter::P);
  return BasisWord(std::move(letters), p, q);
}

MixedRadixBasis BasisWord::basis() const {
  std::vector<Radix> radices;
  radices.reserve(letters_.size());
  for (Letter l : letters_) radices.push_back(l == Letter::P ? p_ : q_);
  return MixedRadixBasis(std::move(radices));
}

std::string BasisWord::to_string() const {
  std::string s;
  for (Letter l : letters_) s.push_back(l == Letter::P ? 'P' : 'Q');
  return s;
}

std::vector<BasisWord> all_words(std::size_t l1, std::size_t l2, Radix p, Radix q) {
  std::vector<Letter> letters(l1, Letter::P);
  letters.insert(letters.end(), l2, Letter::Q);
  std::vector<BasisWord> out;
  do {
    out.emplace_back(letters, p, q);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

LatticePath::LatticePath(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  detail::require(!vertices_.empty(), "lattice path needs at least one vertex");
  detail::require(vertices_.front() == LatticePoint{0, 0}, "lattice path must start at (0,0)");
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    const auto& a = vertices_[k - 1];
    const auto& b = vertices_[k];
    const bool right = b.x == a.x + 1 && b.y == a.y;
    const bool up = b.x == a.x && b.y == a.y + 1;
    detail::require(right || up, "lattice path increment " + std::to_string(k - 1) + " is not (1,0) or (0,1)");
  }
}

LatticePath path_from_word(const BasisWord& w) {
  std::vector<LatticePoint> vertices;
  vertices.reserve(w.size() + 1);
  LatticePoint at{0, 0};
  vertices.push_back(at);
  for (Letter l : w.letters()) {
    if (l == Letter::P) ++at.x; else ++at.y;
    vertices.push_back(at);
  }
  return LatticePath(std::move(vertices));
}

BasisWord word_from_path(const LatticePath& path, Radix p, Radix q) {
  std::vector<Letter> letters;
  const auto v = path.vertices();
  for (std::size_t k = 1; k < v.size(); ++k) letters.push_back(v[k].x != v[k - 1].x ? Letter::P : Letter::Q);
  return BasisWord(std::move(letters), p, q);
}

bool is_psi_compatible(Radix p, Radix q, const EdgeDecoration<Digit>& e) {
  if (e.alpha_h.extent_i() != e.l1 || e.alpha_h.extent_j() != e.l2 + 1) return false;
  if (e.alpha_v.extent_i() != e.l1 + 1 || e.alpha_v.extent_j() != e.l2) return false;
  for (std::size_t i = 0; i < e.l1; ++i)
    for (std::size_t j = 0; j <= e.l2; ++j)
      if (e.alpha_h(i, j) >= p) return false;
  for (std::size_t i = 0; i <= e.l1; ++i)
    for (std::size_t j = 0; j < e.l2; ++j)
      if (e.alpha_v(i, j) >= q) return false;
  for (std::size_t i = 0; i < e.l1; ++i) {
    for (std::size_t j = 0; j < e.l2; ++j) {
      const auto [west, north] = psi(p, q, e.alpha_h(i, j), e.alpha_v(i + 1, j));
      if (west != e.alpha_v(i, j) || north != e.alpha_h(i, j + 1)) return false;
    }
  }
  return true;
}

RectDecoration::RectDecoration(Radix p, Radix q, EdgeDecoration<Digit> edges)
    : p_(p), q_(q), edges_(std::move(edges)) {
  check_radices(p, q);
  detail::require(is_psi_compatible(p, q, edges_), "decoration is not psi_{p,q}-compatible");
}

std::vector<Digit> RectDecoration::south() const {
  std::vector<Digit> out(l1());
  for (std::size_t i = 0; i < l1(); ++i) out[i] = edges_.alpha_h(i, 0);
  return out;
}

std::vector<Digit> RectDecoration::north() const {
  std::vector<Digit> out(l1());
  for (std::size_t i = 0; i < l1(); ++i) out[i] = edges_.alpha_h(i, l2());
  return out;
}

std::vector<Digit> RectDecoration::west() const {
  std::vector<Digit> out(l2());
  for (std::size_t j = 0; j < l2(); ++j) out[j] = edges_.alpha_v(0, j);
  return out;
}

std::vector<Digit> RectDecoration::east() const {
  std::vector<Digit> out(l2());
  for (std::size_t j = 0; j < l2(); ++j) out[j] = edges_.alpha_v(l1(), j);
  return out;
}

RectDecoration fill_from_south_east(Radix p, Radix q, std::span<const Digit> south,
                                    std::span<const Digit> east, FillOptions options) {
  check_radices(p, q);
  check_digits(south, p, "south");
  check_digits(east, q, "east");
  auto edges = fill_south_east_with<Digit, Digit>(
      south, east, [p, q](Digit u, Digit v) { return psi(p, q, u, v); }, options);
  return RectDecoration(p, q, std::move(edges));
}

RectDecoration fill_from_north_west(Radix p, Radix q, std::span<const Digit> north,
                                    std::span<const Digit> west) {
  check_radices(p, q);
  check_digits(north, p, "north");
  check_digits(west, q, "west");
  auto edges = fill_north_west_with<Digit, Digit>(north, west, [p, q](Digit w, Digit n) {
    return psi_inverse(p, q, w, n);
  });
  return RectDecoration(p, q, std::move(edges));
}

RectDecoration fill_from_south_west(Radix p, Radix q, std::span<const Digit> south,
                                    std::span<const Digit> west) {
  check_radices(p, q);
  if (gcd_u64(p, q) != 1) {
    throw UnsupportedPairError("fill_from_south_west requires gcd(p, q) = 1, got p=" +
                               std::to_string(p) + " q=" + std::to_string(q));
  }
  check_digits(south, p, "south");
  check_digits(west, q, "west");
  const std::size_t l1 = south.size();
  const std::size_t l2 = west.size();
  EdgeDecoration<Digit> e(l1, l2);
  for (std::size_t i = 0; i < l1; ++i) e.alpha_h(i, 0) = south[i];
  for (std::size_t j = 0; j < l2; ++j) e.alpha_v(0, j) = west[j];
  // Staircase sweep: cell (i, j) needs its West and South labels.
  for (std::size_t j = 0; j < l2; ++j) {
    for (std::size_t i = 0; i < l1; ++i) {
      const auto [north, east] = psi_ne(p, q, e.alpha_v(i, j), e.alpha_h(i, j));
      e.alpha_h(i, j + 1) = north;
      e.alpha_v(i + 1, j) = east;
    }
  }
  return RectDecoration(p, q, std::move(e));
}

RectDecoration fill_from_path(const BasisWord& w, std::span<const Digit> digits) {
  detail::require(digits.size() == w.size(), "fill_from_path: need one digit per letter");
  const Radix p = w.p();
  const Radix q = w.q();
  const std::size_t l1 = w.l1();
  const std::size_t l2 = w.l2();
  EdgeDecoration<Digit> e(l1, l2);
  {
    LatticePoint at{0, 0};
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w.letters()[k] == Letter::P) {
        detail::require(digits[k] < p, "fill_from_path: digit " + std::to_string(k) + " must be < p");
        e.alpha_h(at.x, at.y) = digits[k];
        ++at.x;
      } else {
        detail::require(digits[k] < q, "fill_from_path: digit " + std::to_string(k) + " must be < q");
        e.alpha_v(at.x, at.y) = digits[k];
        ++at.y;
      }
    }
  }
  // Push the path towards b^NW (PQ -> QP via psi), then towards b^SE
  // (QP -> PQ via psi^{-1}); every cell is visited exactly once.
  auto sweep = [&](Letter first, Letter second, auto&& cell) {
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    bool changed = true;
    while (changed) {
      changed = false;
      LatticePoint at{0, 0};
      for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
        if (letters[k] == first && letters[k + 1] == second) {
          cell(at.x, at.y);
          std::swap(letters[k], letters[k + 1]);
          changed = true;
        }
        if (letters[k] == Letter::P) ++at.x; else ++at.y;
      }
    }
  };
  sweep(Letter::P, Letter::Q, [&](std::size_t x, std::size_t y) {
    const auto [west, north] = psi(p, q, e.alpha_h(x, y), e.alpha_v(x + 1, y));
    e.alpha_v(x, y) = west;
    e.alpha_h(x, y + 1) = north;
  });
  sweep(Letter::Q, Letter::P, [&](std::size_t x, std::size_t y) {
    const auto [south, east] = psi_inverse(p, q, e.alpha_v(x, y), e.alpha_h(x, y + 1));
    e.alpha_h(x, y) = south;
    e.alpha_v(x + 1, y) = east;
  });
  return RectDecoration(p, q, std::move(e));
}

DigitString read_along_path(const RectDecoration& dec, const BasisWord& w) {
  if (w.l1() != dec.l1() || w.l2() != dec.l2() || w.p() != dec.p() || w.q() != dec.q()) {
    throw PreconditionError("read_along_path: word B_{" + std::to_string(w.p()) + "," + std::to_string(w.q()) +
                            "}(" + std::to_string(w.l1()) + "," + std::to_string(w.l2()) +
                            ") does not match decoration R(" + std::to_string(dec.l1()) + "," +
                            std::to_string(dec.l2()) + ") with p=" + std::to_string(dec.p()) +
                            " q=" + std::to_string(dec.q()));
  }
  std::vector<Digit> digits;
  digits.reserve(w.size());
  LatticePoint at{0, 0};
  for (Letter l : w.letters()) {
    if (l == Letter::P) {
      digits.push_back(dec.alpha_h(at.x, at.y));
      ++at.x;
    } else {
      digits.push_back(dec.alpha_v(at.x, at.y));
      ++at.y;
    }
  }
  return DigitString(w.basis(), std::move(digits));
}

RectDecoration decoration_of_integer(const BigInt& n, Radix p, Radix q, std::size_t l1, std::size_t l2) {
  check_radices(p, q);
  const DigitString se = decompose(n, BasisWord::south_east(l1, l2, p, q).basis());
  const auto digits = se.digits();
  return fill_from_south_east(p, q, digits.subspan(0, l1), digits.subspan(l1));
}

std::string render_grid(const RectDecoration& dec, RenderStyle style) {
  const std::size_t l1 = dec.l1();
  const std::size_t l2 = dec.l2();
  if (style == RenderStyle::json) {
    nlohmann::json j;
    j["p"] = dec.p();
    j["q"] = dec.q();
    j["l1"] = l1;
    j["l2"] = l2;
    auto h = nlohmann::json::array();
    for (std::size_t i = 0; i < l1; ++i) {
      auto col = nlohmann::json::array();
      for (std::size_t jj = 0; jj <= l2; ++jj) col.push_back(dec.alpha_h(i, jj));
      h.push_back(std::move(col));
    }
    auto v = nlohmann::json::array();
    for (std::size_t i = 0; i <= l1; ++i) {
      auto col = nlohmann::json::array();
      for (std::size_t jj = 0; jj < l2; ++jj) col.push_back(dec.alpha_v(i, jj));
      v.push_back(std::move(col));
    }
    j["alpha_h"] = std::move(h);
    j["alpha_v"] = std::move(v);
    return j.dump();
  }
  // Horizontal labels sit between the columns of vertical labels, rows from
  // North (y = l2) down to South (y = 0).
  const std::size_t width =
      std::max(std::to_string(dec.p() - 1).size(), std::to_string(dec.q() - 1).size());
  auto cell = [width](Digit d) {
    std::string s = std::to_string(d);
    return std::string(width - s.size(), ' ') + s;
  };
  const std::string half((width + 1) / 2, ' ');
  std::ostringstream out;
  out << "R(" << l1 << "," << l2 << ") p=" << dec.p() << " q=" << dec.q() << '\n';
  for (std::size_t y = l2 + 1; y-- > 0;) {
    out << half;
    for (std::size_t i = 0; i < l1; ++i) {
      if (i) out << ' ';
      out << cell(dec.alpha_h(i, y));
    }
    out << '\n';
    if (y == 0) break;
    for (std::size_t i = 0; i <= l1; ++i) {
      if (i) out << ' ';
      out << cell(dec.alpha_v(i, y - 1));
    }
    out << '\n';
  }
  return out.str();
}

RectDecoration rect_decoration_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const Radix p = j.at("p").get<Radix>();
    const Radix q = j.at("q").get<Radix>();
    const std::size_t l1 = j.at("l1").get<std::size_t>();
    const std::size_t l2 = j.at("l2").get<std::size_t>();
    const auto h = j.at("alpha_h").get<std::vector<std::vector<Digit>>>();
    const auto v = j.at("alpha_v").get<std::vector<std::vector<Digit>>>();
    detail::require(h.size() == l1, "alpha_h must have l1 columns");
    detail::require(v.size() == l1 + 1, "alpha_v must have l1 + 1 columns");
    EdgeDecoration<Digit> e(l1, l2);
    for (std::size_t i = 0; i < l1; ++i) {
      detail::require(h[i].size() == l2 + 1, "alpha_h column must have l2 + 1 entries");
      for (std::size_t jj = 0; jj <= l2; ++jj) e.alpha_h(i, jj) = h[i][jj];
    }
    for (std::size_t i = 0; i <= l1; ++i) {
      detail::require(v[i].size() == l2, "alpha_v column must have l2 entries");
      for (std::size_t jj = 0; jj < l2; ++jj) e.alpha_v(i, jj) = v[i][jj];
    }
    return RectDecoration(p, q, std::move(e));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed decoration JSON: ") + e.what());
  }
}

}  // namespace mixradix

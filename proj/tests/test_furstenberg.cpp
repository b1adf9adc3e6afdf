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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "mixradix/furstenberg.hpp"
#include "oracles.hpp"

using namespace mixradix;

namespace {
using Row = std::vector<Digit>;

// Edge labels of the first layer for 7/13, p = 3, q = 5, indexed by j.
const std::vector<Row> kBetaH{{1, 1, 2, 1, 1}, {2, 0, 0, 2, 0}, {1, 1, 0, 1, 1},
                              {0, 2, 2, 0, 2}, {1, 1, 2, 1, 1}, {2, 0, 0, 2, 0}};
const std::vector<Row> kBetaV{{2, 3, 4, 2, 3, 4}, {3, 0, 1, 3, 0, 1}, {2, 1, 0, 2, 1, 0},
                              {1, 4, 3, 1, 4, 3}, {2, 3, 4, 2, 3, 4}, {3, 0, 1, 3, 0, 1}};

struct Frac {
  std::uint64_t k, r;
};

Frac random_frac(std::mt19937_64& rng, std::uint64_t max_den, std::uint64_t coprime_to) {
  for (;;) {
    const std::uint64_t r = 1 + rng() % max_den;
    if (std::gcd(r, coprime_to) != 1) continue;
    return {rng() % r, r};
  }
}

UnitRational U(Frac f) { return UnitRational(BigInt(std::to_string(f.k)), BigInt(std::to_string(f.r))); }

std::uint64_t order_mod(std::uint64_t a, std::uint64_t r) {
  if (r == 1) return 1;
  std::uint64_t x = a % r, k = 1;
  while (x != 1) {
    x = x * a % r;
    ++k;
  }
  return k;
}

std::vector<Letter> random_word(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::vector<Letter> w(m, Letter::P);
  w.insert(w.end(), n, Letter::Q);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Digits of k/r along a word by the floor recursion, in plain integers.
Row expand_by_hand(Frac f, std::span<const Letter> w, Radix p, Radix q) {
  Row out;
  std::uint64_t k = f.k;
  for (const Letter l : w) {
    const std::uint64_t b = l == Letter::P ? p : q;
    out.push_back(static_cast<Digit>(k * b / f.r));
    k = k * b % f.r;
  }
  return out;
}
}  // namespace

TEST_CASE("unit rationals") {
  const UnitRational x(BigInt(14), BigInt(26));
  CHECK(x.num() == 7);
  CHECK(x.den() == 13);
  CHECK(x.to_string() == "7/13");
  CHECK(UnitRational::parse("7/13") == x);
  CHECK(UnitRational::parse("0") == UnitRational());
  CHECK_THROWS_AS(UnitRational(BigInt(13), BigInt(13)), PreconditionError);
  CHECK_THROWS_AS(UnitRational::parse("1/0"), PreconditionError);
  CHECK_THROWS_AS(UnitRational::parse("-1/3"), PreconditionError);
}

TEST_CASE("real expansions") {
  const std::vector<Radix> r6(6, 3);
  CHECK(expand_real(UnitRational(), r6) == Row(6, 0));
  const InfiniteWord pq{{}, {Letter::P, Letter::Q}};
  CHECK(expand_real(UnitRational::parse("1/2"), pq, 3, 5, 6) == Row{1, 2, 1, 2, 1, 2});
  const InfiniteWord pp{{}, {}};
  const auto d = expand_real(UnitRational::parse("7/13"), pp, 3, 5, 12);
  const auto ld = oracle::long_division(7, 13, 3, 12);
  CHECK(Row(ld.begin(), ld.end()) == d);
  for (std::size_t i = 3; i < 12; ++i) CHECK(d[i] == d[i - 3]);
  const InfiniteWord mixed{{Letter::Q, Letter::Q}, {Letter::P}};
  CHECK(mixed.at(0) == Letter::Q);
  CHECK(mixed.at(5) == Letter::P);
}

TEST_CASE("quadrant of 7/13, known window") {
  const auto w = quadrant(UnitRational::parse("7/13"), 3, 5, 5, 6);
  CHECK(w.is_compatible());
  for (std::size_t j = 0; j <= 5; ++j)
    for (std::size_t i = 0; i < 5; ++i) CHECK(w.beta_h(i, j) == kBetaH[j][i]);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i <= 5; ++i) CHECK(w.beta_v(i, j) == kBetaV[j][i]);

  const auto z = quadrant(UnitRational(), 3, 5, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j <= 4; ++j) CHECK(z.beta_h(i, j) == 0);
}

TEST_CASE("quadrant paths are floor expansions") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Radix p = 2 + rng() % 6, q = 2 + rng() % 6;
    const Frac f = random_frac(rng, 500, 1);
    const std::size_t m = rng() % 7, n = rng() % 7;
    const auto win = quadrant(U(f), p, q, m, n);
    REQUIRE(win.is_compatible());
    for (int s = 0; s < 5; ++s) {
      const auto word = random_word(rng, m, n);
      const auto got = read_quadrant_path(win, word);
      REQUIRE(got == expand_by_hand(f, word, p, q));
      // truncated series bound: sum a_i / pi_{i+1} <= x < sum + 1 / pi_L
      mpq_class sum = 0, place = 1;
      for (std::size_t i = 0; i < word.size(); ++i) {
        place *= word[i] == Letter::P ? p : q;
        sum += mpq_class(got[i]) / place;
      }
      const mpq_class x(static_cast<unsigned long>(f.k), static_cast<unsigned long>(f.r));
      REQUIRE(sum <= x);
      REQUIRE(x < sum + 1 / place);
    }
  }
}

TEST_CASE("T map") {
  CHECK(T_map(UnitRational::parse("7/13"), 3) == UnitRational::parse("8/13"));
  CHECK(T_map(UnitRational::parse("7/13"), 5) == UnitRational::parse("9/13"));
  CHECK(T_map(UnitRational(), 7) == UnitRational());
  CHECK(T_map(UnitRational::parse("1/2"), 2) == UnitRational());
}

TEST_CASE("shifts conjugate the T maps") {
  const auto x = UnitRational::parse("7/13");
  CHECK(shift(quadrant(x, 3, 5, 4, 4), Axis::horizontal) == quadrant(T_map(x, 3), 3, 5, 3, 4));
  CHECK(shift(quadrant(x, 3, 5, 4, 4), Axis::vertical) == quadrant(T_map(x, 5), 3, 5, 4, 3));
  const auto z = quadrant(UnitRational(), 2, 3, 3, 3);
  CHECK(shift(z, Axis::horizontal) == quadrant(UnitRational(), 2, 3, 2, 3));
  CHECK_THROWS_AS(shift(quadrant(x, 3, 5, 1, 4), Axis::horizontal), PreconditionError);
  CHECK_THROWS_AS(shift(quadrant(x, 3, 5, 4, 1), Axis::vertical), PreconditionError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto y = U(random_frac(rng, 10000, 15));
    const auto w = quadrant(y, 3, 5, 6, 6);
    REQUIRE(shift(w, Axis::horizontal) == quadrant(T_map(y, 3), 3, 5, 5, 6));
    REQUIRE(shift(w, Axis::vertical) == quadrant(T_map(y, 5), 3, 5, 6, 5));
  }
}

TEST_CASE("rows and columns are periodic with the multiplicative orders") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Frac f = random_frac(rng, 60, 15);
    const std::uint64_t op = order_mod(3, f.r), oq = order_mod(5, f.r);
    const std::size_t m = op + 4, n = oq + 4;
    const auto w = quadrant(U(f), 3, 5, m, n);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i + op < m; ++i) REQUIRE(w.beta_h(i, j) == w.beta_h(i + op, j));
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j + oq < n; ++j) REQUIRE(w.beta_v(i, j) == w.beta_v(i, j + oq));
  }
}

TEST_CASE("no forbidden tails") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Frac f = random_frac(rng, 2000, 1);
    const Radix p = 2 + rng() % 5, q = 2 + rng() % 5;
    const std::size_t bound = f.r <= 1 ? 0 : static_cast<std::size_t>(std::floor(std::log2(double(f.r))));
    const auto word = random_word(rng, 20, 20);
    const auto d = expand_by_hand(f, word, p, q);
    std::vector<Radix> radices;
    for (const Letter l : word) radices.push_back(l == Letter::P ? p : q);
    REQUIRE(longest_maximal_run(d, radices) <= bound);
    const auto w = quadrant(U(f), p, q, 20, 20);
    REQUIRE(longest_maximal_run(read_quadrant_path(w, word), radices) <= bound);
  }
  const Row nines{9, 9, 1, 9, 9, 9};
  const std::vector<Radix> tens(6, 10);
  CHECK(longest_maximal_run(nines, tens) == 3);
}

TEST_CASE("orbits") {
  const auto a = orbit(7, 13, 3);
  CHECK(a.numerators == std::vector<BigInt>{7, 8, 11});
  CHECK(orbit(7, 13, 5).numerators == std::vector<BigInt>{7, 9, 6, 4});
  CHECK(orbit(0, 1, 3).numerators == std::vector<BigInt>{0});
  CHECK_THROWS_AS(orbit(7, 12, 3), PreconditionError);
  CHECK_THROWS_AS(orbit(2, 14, 3), PreconditionError);
  for (std::uint64_t r : {7u, 11u, 13u, 31u, 121u}) CHECK(orbit(1, r, 2).numerators.size() == order_mod(2, r));
}

TEST_CASE("layer construction") {
  for (const auto [m, n] : {std::pair<std::size_t, std::size_t>{4, 4}, {6, 6}, {2, 5}}) {
    const auto s = layer_fill(7, 13, 3, 5, m, n);
    CHECK(s.layer1 == quadrant(UnitRational::parse("7/13"), 3, 5, m, n));
    CHECK(s.cubes_checked == m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= n; ++j) CHECK(s.layer2.beta_h(i, j) == 0);
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(s.layer2.beta_v(i, j) == 0);
    // transversal at (-i, -j) is the numerator of T_p^i T_q^j (7/13)
    for (std::size_t i = 0; i <= m; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        std::uint64_t k = 7;
        for (std::size_t a = 0; a < i; ++a) k = k * 3 % 13;
        for (std::size_t b = 0; b < j; ++b) k = k * 5 % 13;
        CHECK(s.transversal(i, j) == k);
      }
    }
  }
  const auto s = layer_fill(7, 13, 3, 5, 4, 4);
  CHECK(std::vector<std::uint64_t>{s.transversal(0, 0), s.transversal(1, 0), s.transversal(2, 0),
                                   s.transversal(3, 0)} == std::vector<std::uint64_t>{7, 8, 11, 7});
  const auto zero = layer_fill(0, 1, 3, 5, 3, 3);
  CHECK(zero.layer1 == quadrant(UnitRational(), 3, 5, 3, 3));
  CHECK(zero.transversal(2, 2) == 0);
  CHECK_THROWS_AS(layer_fill(7, 15, 3, 5, 2, 2), PreconditionError);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Radix p = 2 + rng() % 6, q = 2 + rng() % 6;
    Frac f = random_frac(rng, 200, std::uint64_t{p} * q);
    if (std::gcd(f.k, f.r) != 1) continue;
    const auto st = layer_fill(f.k, f.r, p, q, 4, 3);
    REQUIRE(st.layer1 == quadrant(U(f), p, q, 4, 3));
  }
}

TEST_CASE("real transpositions") {
  // slots (3: 1/3 digit) then (5: digit): swap to (5, 3) keeping the value
  std::vector<RealSlot> s{{3, 2}, {5, 1}, {13, 7}};
  transpose_real(s, 1);
  CHECK(s[0].radix == 5);
  CHECK(s[1].radix == 3);
  // 2/3 + 1/15 = 11/15 = a/5 + b/15 -> a = 3, b = 2
  CHECK(s[0].digit == 3);
  CHECK(s[1].digit == 2);
  CHECK(s[2] == RealSlot{13, 7});
  CHECK_THROWS_AS(transpose_real(s, 3), PreconditionError);
}

TEST_CASE("Rudolph array") {
  const auto w = quadrant(UnitRational::parse("7/13"), 3, 5, 6, 6);
  CHECK(rudolph_diagonal(w) == std::vector<std::uint64_t>{8, 1, 2, 4, 9, 3});
  const auto z = rudolph_array(quadrant(UnitRational(), 3, 5, 3, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(z(i, j) == 0);

  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Radix p = 2 + rng() % 7, q = 2 + rng() % 7;
    const Frac f = random_frac(rng, 100000, 1);
    const auto win = quadrant(U(f), p, q, 8, 8);
    const auto ld = oracle::long_division(f.k, f.r, std::uint64_t{p} * q, 8);
    REQUIRE(rudolph_diagonal(win) == ld);
  }
}

TEST_CASE("quadrant matches grid decorations for integers") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Radix p = 2 + rng() % 5, q = 2 + rng() % 5;
    const std::size_t l1 = 1 + rng() % 4, l2 = 1 + rng() % 4;
    mpz_class cap, a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), p, l1);
    mpz_ui_pow_ui(b.get_mpz_t(), q, l2);
    cap = a * b;
    const mpz_class n = oracle::random_below(rng, cap);
    const auto dec = decoration_of_integer(n, p, q, l1, l2);
    const auto w = quadrant(UnitRational(n, cap), p, q, l1, l2);
    for (std::size_t i = 0; i < l1; ++i)
      for (std::size_t j = 0; j <= l2; ++j) REQUIRE(w.beta_h(i, j) == dec.alpha_h(l1 - 1 - i, l2 - j));
    for (std::size_t i = 0; i <= l1; ++i)
      for (std::size_t j = 0; j < l2; ++j) REQUIRE(w.beta_v(i, j) == dec.alpha_v(l1 - i, l2 - 1 - j));
    // faces agree with the per-cell value of the grid as well
    const auto u = rudolph_array(w);
    for (std::size_t i = 0; i < l1; ++i)
      for (std::size_t j = 0; j < l2; ++j) {
        const std::size_t gi = l1 - 1 - i, gj = l2 - 1 - j;
        REQUIRE(u(i, j) == dec.alpha_h(gi, gj) + std::uint64_t{p} * dec.alpha_v(gi + 1, gj));
      }
  }
}

TEST_CASE("face weights") {
  CHECK(face_weight(3, 5, 1, 0, 4, 1) == 1);
  CHECK(face_weight(3, 5, 0, 0, 0, 0) == 1);
  CHECK(face_weight(3, 5, 1, 0, 0, 1) == 0);
  CHECK_THROWS_AS(face_weight(3, 5, 3, 0, 0, 0), PreconditionError);
  for (Radix p = 2; p <= 7; ++p)
    for (Radix q = 2; q <= 7; ++q)
      for (Digit s = 0; s < p; ++s)
        for (Digit e = 0; e < q; ++e) {
          int total = 0;
          for (Digit w = 0; w < q; ++w)
            for (Digit n = 0; n < p; ++n) {
              const int fw = face_weight(p, q, s, n, w, e);
              REQUIRE((fw == 1) == (psi(p, q, s, e) == DigitPair{w, n}));
              total += fw;
            }
          REQUIRE(total == 1);
        }
}

TEST_CASE("uniformity") {
  const auto r = uniformity_check(3, 5, 100000, 1);
  CHECK(r.single_cell_exact);
  CHECK(r.within_3_sigma);
  CHECK(r.north_counts.size() == 3);
  CHECK(r.west_counts.size() == 5);
  CHECK(std::accumulate(r.north_counts.begin(), r.north_counts.end(), std::uint64_t{0}) == 100000);
  const auto again = uniformity_check(3, 5, 1000, 9);
  const auto again2 = uniformity_check(3, 5, 1000, 9);
  CHECK(again.north_counts == again2.north_counts);
  for (Radix p = 2; p <= 12; ++p)
    for (Radix q = 2; q <= 12; ++q) CHECK(uniformity_check(p, q, 1, 1).single_cell_exact);

  const auto c = layer_cube_pushforward(2, 3, 5);
  CHECK(c.exact);
  CHECK(c.counts.size() == 6);
  for (const auto v : c.counts) CHECK(v == 5);
}

TEST_CASE("serialisation") {
  const auto w = quadrant(UnitRational::parse("7/13"), 3, 5, 3, 2);
  const auto j = nlohmann::json::parse(quadrant_to_json(w));
  CHECK(j["p"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["beta_h"].size() == 3);
  CHECK(j["beta_v"].size() == 4);
  const auto l = nlohmann::json::parse(layers_to_json(layer_fill(7, 13, 3, 5, 3, 2)));
  CHECK(l["r"] == 13);
  CHECK(l["transversal"][1][0] == 8);
  CHECK(l["cubes_checked"] == 6);
  CHECK_FALSE(render_quadrant(w).empty());
}

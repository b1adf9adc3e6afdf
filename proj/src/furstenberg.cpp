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

#include "mixradix/furstenberg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

namespace mixradix {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;


constexpr Digit kUnset = ~Digit{0};

void check_radices(Radix p, Radix q) {
  detail::require(p >= 2 && q >= 2, "radices must be >= 2, got p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t r) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % r);
}

// Propagates (S, E) -> (W, N) from the East column j < n and South row j = n.
void fill_towards_north_west(QuadrantWindow& w) {
  for (std::size_t j = w.n; j-- > 0;) {
    for (std::size_t i = 0; i < w.m; ++i) {
      const auto [west, north] = psi(w.p, w.q, w.beta_h(i, j + 1), w.beta_v(i, j));
      w.beta_v(i + 1, j) = west;
      w.beta_h(i, j) = north;
    }
  }
}

void assign_or_check(EdgeArray<Digit>& a, std::size_t i, std::size_t j, Digit value, const char* what) {
  Digit& slot = a(i, j);
  if (slot == kUnset) {
    slot = value;
  } else {
    detail::ensure(slot == value, std::string("layer_fill: conflicting ") + what + " at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
  }
}

nlohmann::json array_json(const EdgeArray<Digit>& a) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < a.extent_i(); ++i) {
    auto col = nlohmann::json::array();
    for (std::size_t j = 0; j < a.extent_j(); ++j) col.push_back(a(i, j));
    out.push_back(std::move(col));
  }
  return out;
}

nlohmann::json window_json(const QuadrantWindow& w) {
  return {{"p", w.p}, {"q", w.q}, {"m", w.m}, {"n", w.n}, {"beta_h", array_json(w.beta_h)},
          {"beta_v", array_json(w.beta_v)}};
}

}  // namespace

UnitRational::UnitRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  detail::require(sgn(den_) > 0, "denominator must be positive");
  detail::require(sgn(num_) >= 0 && num_ < den_,
                  "need 0 <= num < den, got " + num_.get_str() + "/" + den_.get_str());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  num_ /= g;
  den_ /= g;
}

UnitRational UnitRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [&text](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw PreconditionError("not a rational in [0,1): '" + text + "'");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return UnitRational(number(text), BigInt(1));
  return UnitRational(number(text.substr(0, slash)), number(text.substr(slash + 1)));
}

std::string UnitRational::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

Letter InfiniteWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  if (period.empty()) return Letter::P;
  return period[(i - prefix.size()) % period.size()];
}

std::vector<Digit> expand_real(const UnitRational& x, std::span<const Radix> radices) {
  std::vector<Digit> out;
  out.reserve(radices.size());
  BigInt num = x.num();
  BigInt digit;
  for (Radix b : radices) {
    detail::require(b >= 2, "expand_real: radices must be >= 2");
    num *= static_cast<unsigned long>(b);
    mpz_fdiv_qr(digit.get_mpz_t(), num.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
    out.push_back(static_cast<Digit>(digit.get_ui()));
  }
  return out;
}

std::vector<Digit> expand_real(const UnitRational& x, const InfiniteWord& word, Radix p, Radix q, std::size_t depth) {
  check_radices(p, q);
  std::vector<Radix> radices(depth);
  for (std::size_t i = 0; i < depth; ++i) radices[i] = word.at(i) == Letter::P ? p : q;
  return expand_real(x, radices);
}

bool QuadrantWindow::is_compatible() const {
  if (beta_h.extent_i() != m || beta_h.extent_j() != n + 1) return false;
  if (beta_v.extent_i() != m + 1 || beta_v.extent_j() != n) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (beta_h(i, j) >= p) return false;
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (beta_v(i, j) >= q) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto [west, north] = psi(p, q, beta_h(i, j + 1), beta_v(i, j));
      if (west != beta_v(i + 1, j) || north != beta_h(i, j)) return false;
    }
  }
  return true;
}

QuadrantWindow quadrant(const UnitRational& x, Radix p, Radix q, std::size_t m, std::size_t n) {
  check_radices(p, q);
  QuadrantWindow w(p, q, m, n);
  std::vector<Radix> seed(n, q);
  seed.insert(seed.end(), m, p);
  const std::vector<Digit> digits = expand_real(x, seed);
  for (std::size_t j = 0; j < n; ++j) w.beta_v(0, j) = digits[j];
  for (std::size_t i = 0; i < m; ++i) w.beta_h(i, n) = digits[n + i];
  fill_towards_north_west(w);

  const std::vector<Digit> top = expand_real(x, std::vector<Radix>(m, p));
  for (std::size_t i = 0; i < m; ++i) {
    detail::ensure(w.beta_h(i, 0) == top[i], "quadrant: top row differs from the base-p expansion at " +
                                                 std::to_string(i));
  }
  const std::vector<Digit> east = expand_real(x, std::vector<Radix>(n, q));
  for (std::size_t j = 0; j < n; ++j) {
    detail::ensure(w.beta_v(0, j) == east[j], "quadrant: East column differs from the base-q expansion");
  }
  return w;
}

std::vector<Digit> read_quadrant_path(const QuadrantWindow& w, std::span<const Letter> word) {
  std::vector<Digit> out;
  out.reserve(word.size());
  std::size_t i = 0, j = 0;
  for (Letter l : word) {
    if (l == Letter::P) {
      detail::require(i < w.m, "read_quadrant_path: path leaves the window to the West");
      out.push_back(w.beta_h(i++, j));
    } else {
      detail::require(j < w.n, "read_quadrant_path: path leaves the window to the South");
      out.push_back(w.beta_v(i, j++));
    }
  }
  return out;
}

UnitRational T_map(const UnitRational& x, Radix p) {
  detail::require(p >= 1, "T_map: multiplier must be positive");
  BigInt num = x.num() * static_cast<unsigned long>(p);
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
  return UnitRational(num, x.den());
}

QuadrantWindow shift(const QuadrantWindow& w, Axis axis) {
  if (axis == Axis::horizontal) {
    detail::require(w.m >= 2, "shift: horizontal depth must be >= 2, got " + std::to_string(w.m));
    QuadrantWindow out(w.p, w.q, w.m - 1, w.n);
    for (std::size_t i = 0; i < out.m; ++i)
      for (std::size_t j = 0; j <= out.n; ++j) out.beta_h(i, j) = w.beta_h(i + 1, j);
    for (std::size_t i = 0; i <= out.m; ++i)
      for (std::size_t j = 0; j < out.n; ++j) out.beta_v(i, j) = w.beta_v(i + 1, j);
    return out;
  }
  detail::require(w.n >= 2, "shift: vertical depth must be >= 2, got " + std::to_string(w.n));
  QuadrantWindow out(w.p, w.q, w.m, w.n - 1);
  for (std::size_t i = 0; i < out.m; ++i)
    for (std::size_t j = 0; j <= out.n; ++j) out.beta_h(i, j) = w.beta_h(i, j + 1);
  for (std::size_t i = 0; i <= out.m; ++i)
    for (std::size_t j = 0; j < out.n; ++j) out.beta_v(i, j) = w.beta_v(i, j + 1);
  return out;
}

OrbitTable orbit(const BigInt& k, const BigInt& r, Radix p) {
  detail::require(sgn(r) > 0, "orbit: r must be positive");
  detail::require(sgn(k) >= 0 && k < r, "orbit: need 0 <= k < r");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), r.get_mpz_t());
  detail::require(g == 1, "orbit: gcd(k, r) must be 1, got " + g.get_str());
  const BigInt pb = static_cast<unsigned long>(p);
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pb.get_mpz_t());
  detail::require(g == 1, "orbit: gcd(r, p) must be 1, got " + g.get_str());
  OrbitTable t{r, p, {}};
  BigInt cur = k;
  do {
    t.numerators.push_back(cur);
    cur *= pb;
    mpz_fdiv_r(cur.get_mpz_t(), cur.get_mpz_t(), r.get_mpz_t());
  } while (cur != k);
  return t;
}

void transpose_real(std::span<RealSlot> slots, std::size_t k) {
  detail::require(k >= 1 && k < slots.size(), "transpose_real: position " + std::to_string(k) + " out of range");
  const RealSlot a = slots[k - 1];
  const RealSlot b = slots[k];
  detail::require(a.digit < a.radix && b.digit < b.radix, "transpose_real: digit out of range");
  // a/ra + b/(ra rb) = a'/rb + b'/(rb ra), i.e. psi_{rb,ra}(b, a) = (b', a').
  const u128 combined = static_cast<u128>(a.digit) * b.radix + b.digit;
  slots[k - 1] = {b.radix, static_cast<std::uint64_t>(combined / a.radix)};
  slots[k] = {a.radix, static_cast<std::uint64_t>(combined % a.radix)};
}

LayerStack layer_fill(std::uint64_t k, std::uint64_t r, Radix p, Radix q, std::size_t m, std::size_t n) {
  check_radices(p, q);
  detail::require(r >= 1 && k < r, "layer_fill: need 0 <= k < r");
  detail::require(gcd_u64(k, r) == 1, "layer_fill: gcd(k, r) must be 1");
  detail::require(gcd_u64(r, std::uint64_t{p} * q) == 1, "layer_fill: gcd(r, pq) must be 1");

  LayerStack s;
  s.p = p;
  s.q = q;
  s.r = r;
  s.m = m;
  s.n = n;
  s.layer1 = QuadrantWindow(p, q, m, n);
  s.layer2 = QuadrantWindow(p, q, m, n);
  s.layer1.beta_h = EdgeArray<Digit>(m, n + 1, kUnset);
  s.layer1.beta_v = EdgeArray<Digit>(m + 1, n, kUnset);
  s.transversal = EdgeArray<std::uint64_t>(m + 1, n + 1);
  // Orbit numerators k p^i q^j mod r on the vertices.
  for (std::size_t j = 0; j <= n; ++j) {
    s.transversal(0, j) = j == 0 ? k % r : mul_mod(s.transversal(0, j - 1), q, r);
    for (std::size_t i = 1; i <= m; ++i) s.transversal(i, j) = mul_mod(s.transversal(i - 1, j), p, r);
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t t = s.transversal(i, j);
      // Route through the North-West transversal edge.
      std::array<RealSlot, 3> a{{{r, t}, {p, s.layer2.beta_h(i, j)}, {q, s.layer2.beta_v(i + 1, j)}}};
      transpose_real(a, 1);
      detail::ensure(a[1].digit == s.transversal(i + 1, j), "layer_fill: transversal mismatch after tau_p");
      const Digit north = static_cast<Digit>(a[0].digit);
      transpose_real(a, 2);
      const Digit west = static_cast<Digit>(a[1].digit);
      transpose_real(a, 1);
      // Route through the South-East transversal edge.
      std::array<RealSlot, 3> b{{{r, t}, {p, s.layer2.beta_h(i, j)}, {q, s.layer2.beta_v(i + 1, j)}}};
      transpose_real(b, 2);
      detail::ensure(b[1].digit == s.layer2.beta_v(i, j) && b[2].digit == s.layer2.beta_h(i, j + 1),
                     "layer_fill: second layer is not preserved");
      transpose_real(b, 1);
      detail::ensure(b[1].digit == s.transversal(i, j + 1), "layer_fill: transversal mismatch after tau_q");
      transpose_real(b, 2);

      detail::ensure(a == b, "layer_fill: the two Yang-Baxter routes disagree on cube (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
      detail::ensure(a[2].digit == s.transversal(i + 1, j + 1), "layer_fill: transversal mismatch at the SW corner");
      assign_or_check(s.layer1.beta_h, i, j, north, "North digit");
      assign_or_check(s.layer1.beta_v, i + 1, j, west, "West digit");
      assign_or_check(s.layer1.beta_v, i, j, static_cast<Digit>(a[0].digit), "East digit");
      assign_or_check(s.layer1.beta_h, i, j + 1, static_cast<Digit>(a[1].digit), "South digit");
      ++s.cubes_checked;
    }
  }
  // Degenerate windows without cubes: single-step transpositions still
  // determine the boundary edges.
  if (n == 0) {
    for (std::size_t i = 0; i < m; ++i) {
      std::array<RealSlot, 2> a{{{r, s.transversal(i, 0)}, {p, 0}}};
      transpose_real(a, 1);
      s.layer1.beta_h(i, 0) = static_cast<Digit>(a[0].digit);
    }
  }
  if (m == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      std::array<RealSlot, 2> a{{{r, s.transversal(0, j)}, {q, 0}}};
      transpose_real(a, 1);
      s.layer1.beta_v(0, j) = static_cast<Digit>(a[0].digit);
    }
  }
  detail::ensure(s.layer1.is_compatible(), "layer_fill: first layer is not psi-compatible");
  return s;
}

EdgeArray<std::uint64_t> rudolph_array(const QuadrantWindow& w) {
  EdgeArray<std::uint64_t> u(w.m, w.n);
  for (std::size_t i = 0; i < w.m; ++i) {
    for (std::size_t j = 0; j < w.n; ++j) {
      const std::uint64_t se = w.beta_h(i, j + 1) + std::uint64_t{w.p} * w.beta_v(i, j);
      const std::uint64_t nw = w.beta_v(i + 1, j) + std::uint64_t{w.q} * w.beta_h(i, j);
      detail::ensure(se == nw, "rudolph_array: face (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") is inconsistent");
      u(i, j) = se;
    }
  }
  return u;
}

std::vector<std::uint64_t> rudolph_diagonal(const QuadrantWindow& w) {
  const auto u = rudolph_array(w);
  std::vector<std::uint64_t> d(std::min(w.m, w.n));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = u(i, i);
  return d;
}

int face_weight(Radix p, Radix q, Digit u_s, Digit u_n, Digit u_w, Digit u_e) {
  check_radices(p, q);
  detail::require(u_s < p && u_n < p && u_w < q && u_e < q, "face_weight: digit out of range");
  return std::uint64_t{u_s} + std::uint64_t{p} * u_e == std::uint64_t{u_w} + std::uint64_t{q} * u_n ? 1 : 0;
}

std::size_t longest_maximal_run(std::span<const Digit> digits, std::span<const Radix> radices) {
  detail::require(digits.size() == radices.size(), "longest_maximal_run: length mismatch");
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    run = digits[i] + 1 == radices[i] ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

UniformityReport uniformity_check(Radix p, Radix q, std::uint64_t trials, std::uint64_t seed) {
  check_radices(p, q);
  detail::require(trials >= 1, "uniformity_check: need trials >= 1");
  UniformityReport rep;
  std::vector<std::uint64_t> hits(std::uint64_t{p} * q);
  for (Digit s = 0; s < p; ++s) {
    for (Digit e = 0; e < q; ++e) {
      const auto [w, n] = psi(p, q, s, e);
      ++hits[std::uint64_t{w} * p + n];
    }
  }
  rep.single_cell_exact = std::all_of(hits.begin(), hits.end(), [](std::uint64_t c) { return c == 1; });

  constexpr std::size_t kSide = 3;
  rep.trials = trials;
  rep.north_counts.assign(p, 0);
  rep.west_counts.assign(q, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Digit> dp(0, p - 1), dq(0, q - 1);
  QuadrantWindow w(p, q, kSide, kSide);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t j = 0; j < kSide; ++j) w.beta_v(0, j) = dq(rng);
    for (std::size_t i = 0; i < kSide; ++i) w.beta_h(i, kSide) = dp(rng);
    fill_towards_north_west(w);
    ++rep.north_counts[w.beta_h(0, 0)];
    ++rep.west_counts[w.beta_v(1, 0)];
  }
  auto stats = [&](const std::vector<std::uint64_t>& counts, double& chi2) {
    const double k = static_cast<double>(counts.size());
    const double expected = static_cast<double>(trials) / k;
    const double sigma = std::sqrt(static_cast<double>(trials) * (1 / k) * (1 - 1 / k));
    bool ok = true;
    chi2 = 0;
    for (std::uint64_t c : counts) {
      const double diff = static_cast<double>(c) - expected;
      chi2 += diff * diff / expected;
      if (std::abs(diff) > 3 * sigma) ok = false;
    }
    return ok;
  };
  const bool north_ok = stats(rep.north_counts, rep.chi2_north);
  const bool west_ok = stats(rep.west_counts, rep.chi2_west);
  rep.within_3_sigma = north_ok && west_ok;
  return rep;
}

CubePushforward layer_cube_pushforward(Radix p, Radix q, std::uint64_t r) {
  check_radices(p, q);
  detail::require(r >= 1, "layer_cube_pushforward: r must be positive");
  CubePushforward out;
  out.counts.assign(std::uint64_t{p} * q, 0);
  for (std::uint64_t t = 0; t < r; ++t) {
    for (Digit north2 = 0; north2 < p; ++north2) {
      for (Digit west2 = 0; west2 < q; ++west2) {
        std::array<RealSlot, 3> a{{{r, t}, {p, north2}, {q, west2}}};
        transpose_real(a, 1);
        transpose_real(a, 2);
        ++out.counts[a[0].digit * q + a[1].digit];
      }
    }
  }
  out.exact = std::all_of(out.counts.begin(), out.counts.end(), [r](std::uint64_t c) { return c == r; });
  return out;
}

std::string quadrant_to_json(const QuadrantWindow& w) { return window_json(w).dump(); }

std::string layers_to_json(const LayerStack& s) {
  nlohmann::json j = window_json(s.layer1);
  j["r"] = s.r;
  j["layer2"] = window_json(s.layer2);
  auto tr = nlohmann::json::array();
  for (std::size_t i = 0; i < s.transversal.extent_i(); ++i) {
    auto col = nlohmann::json::array();
    for (std::size_t jj = 0; jj < s.transversal.extent_j(); ++jj) col.push_back(s.transversal(i, jj));
    tr.push_back(std::move(col));
  }
  j["transversal"] = std::move(tr);
  j["cubes_checked"] = s.cubes_checked;
  return j.dump();
}

std::string render_quadrant(const QuadrantWindow& w) {
  // West on the left: column i = m is drawn first. Row j = 0 is the top.
  const std::size_t width = std::max(std::to_string(w.p - 1).size(), std::to_string(w.q - 1).size());
  auto cell = [width](Digit d) {
    std::string s = std::to_string(d);
    return std::string(width - s.size(), ' ') + s;
  };
  std::ostringstream out;
  out << "window " << w.m << "x" << w.n << " p=" << w.p << " q=" << w.q << '\n';
  for (std::size_t j = 0; j <= w.n; ++j) {
    out << std::string((width + 1) / 2, ' ');
    for (std::size_t i = w.m; i-- > 0;) {
      out << cell(w.beta_h(i, j));
      if (i) out << ' ';
    }
    out << '\n';
    if (j == w.n) break;
    for (std::size_t i = w.m + 1; i-- > 0;) {
      out << cell(w.beta_v(i, j));
      if (i) out << ' ';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mixradix

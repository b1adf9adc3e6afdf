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

#include "mixradix/yangbaxter.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mixradix {

TwoSlotMap<Digit> psi_map(std::size_t set_a, Radix p, std::size_t set_b, Radix q) {
  detail::require(p >= 2 && q >= 2, "psi_map: radices must be >= 2");
  return {set_a, set_b, p, q, [p, q](const Digit& u, const Digit& v) { return psi(p, q, u, v); }};
}

TwoSlotMap<Rational> phi_map(std::size_t set_a, const Rational& a, std::size_t set_b, const Rational& b) {
  return {set_a, set_b, 0, 0, [a, b](const Rational& u, const Rational& v) { return phi(a, b, u, v); }};
}

YbReport yb_check_psi(Radix p1, Radix p2, Radix p3, std::uint64_t budget) {
  detail::require(p1 >= 2 && p2 >= 2 && p3 >= 2, "yb_check_psi: radices must be >= 2");
  const std::uint64_t total = std::uint64_t{p1} * p2 * p3;
  if (total > budget) {
    throw CapacityError("yb_check_psi: " + std::to_string(total) + " triples exceed budget " + std::to_string(budget));
  }
  const auto r12 = psi_map(1, p1, 2, p2);
  const auto r13 = psi_map(1, p1, 3, p3);
  const auto r23 = psi_map(2, p2, 3, p3);
  // Output tuples live in S3 x S2 x S1; index them for the bijectivity check.
  auto index = [p2, p1](const std::array<TaggedValue<Digit>, 3>& t) {
    return (static_cast<std::uint64_t>(t[0].value) * p2 + t[1].value) * p1 + t[2].value;
  };
  std::vector<bool> seen_lhs(total), seen_rhs(total);
  YbReport report;
  for (Digit x1 = 0; x1 < p1; ++x1) {
    for (Digit x2 = 0; x2 < p2; ++x2) {
      for (Digit x3 = 0; x3 < p3; ++x3) {
        std::array<TaggedValue<Digit>, 3> lhs{{{1, x1}, {2, x2}, {3, x3}}};
        std::array<TaggedValue<Digit>, 3> rhs = lhs;
        iota_apply_inplace<Digit>(r12, 1, lhs);
        iota_apply_inplace<Digit>(r13, 2, lhs);
        iota_apply_inplace<Digit>(r23, 1, lhs);
        iota_apply_inplace<Digit>(r23, 2, rhs);
        iota_apply_inplace<Digit>(r13, 1, rhs);
        iota_apply_inplace<Digit>(r12, 2, rhs);
        ++report.checked;
        if (lhs != rhs && !report.counterexample) {
          report.holds = false;
          report.counterexample = std::array<Digit, 3>{x1, x2, x3};
        }
        const auto il = index(lhs);
        const auto ir = index(rhs);
        if (seen_lhs[il] || seen_rhs[ir]) report.bijective = false;
        seen_lhs[il] = true;
        seen_rhs[ir] = true;
      }
    }
  }
  return report;
}

Matrix3 phi_yb_closed_form(const Rational& a1, const Rational& a2, const Rational& a3) {
  Matrix3 m;
  for (auto& row : m) row.fill(Rational(0));
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  m[0][1] = a3 - a1;
  m[1][2] = a3 - a1;
  m[0][2] = (a3 - a1) * (a3 - a2);
  return m;
}

namespace {

using RTuple = std::array<TaggedValue<Rational>, 3>;

struct PhiSides {
  TwoSlotMap<Rational> r12, r13, r23;

  RTuple lhs(const std::array<Rational, 3>& x) const {
    RTuple t{{{1, x[0]}, {2, x[1]}, {3, x[2]}}};
    iota_apply_inplace<Rational>(r12, 1, t);
    iota_apply_inplace<Rational>(r13, 2, t);
    iota_apply_inplace<Rational>(r23, 1, t);
    return t;
  }
  RTuple rhs(const std::array<Rational, 3>& x) const {
    RTuple t{{{1, x[0]}, {2, x[1]}, {3, x[2]}}};
    iota_apply_inplace<Rational>(r23, 2, t);
    iota_apply_inplace<Rational>(r13, 1, t);
    iota_apply_inplace<Rational>(r12, 2, t);
    return t;
  }
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

PhiYbReport yb_check_phi(const Rational& a1, const Rational& a2, const Rational& a3, std::size_t samples,
                         std::uint64_t seed) {
  const PhiSides sides{phi_map(1, a1, 2, a2), phi_map(1, a1, 3, a3), phi_map(2, a2, 3, a3)};
  PhiYbReport report;
  for (int c = 0; c < 3; ++c) {
    std::array<Rational, 3> e{Rational(0), Rational(0), Rational(0)};
    e[c] = 1;
    const RTuple l = sides.lhs(e);
    const RTuple r = sides.rhs(e);
    for (int row = 0; row < 3; ++row) {
      report.lhs[row][c] = l[row].value;
      report.rhs[row][c] = r[row].value;
    }
  }
  report.matrices_equal = report.lhs == report.rhs;
  report.matches_closed_form = report.lhs == phi_yb_closed_form(a1, a2, a3);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::array<Rational, 3> x{random_rational(rng), random_rational(rng), random_rational(rng)};
    if (sides.lhs(x) != sides.rhs(x)) report.pointwise = false;
    ++report.samples;
  }
  report.holds = report.matrices_equal && report.matches_closed_form && report.pointwise;
  return report;
}

BraidReport braid_transform_consistency(const BigInt& n, Radix p1, Radix p2, Radix p3) {
  const MixedRadixBasis basis({p1, p2, p3});
  BraidReport report;
  report.start = decompose(n, basis);
  report.expected = decompose(n, MixedRadixBasis({p3, p2, p1}));
  auto run = [&](std::array<std::size_t, 3> positions) {
    DigitString d = report.start;
    for (std::size_t k : positions) {
      d = transpose_digits(d, {k});
      if (recompose(d) != n) report.holds = false;
    }
    return d;
  };
  report.route_a = run({1, 2, 1});
  report.route_b = run({2, 1, 2});
  report.holds = report.holds && report.route_a == report.expected && report.route_b == report.expected;
  return report;
}

std::vector<TranspositionStep> transposition_chain(std::span<const std::size_t> from,
                                                   std::span<const std::size_t> to) {
  detail::require(from.size() == to.size(), "transposition_chain: words differ in length");
  std::vector<std::size_t> current(from.begin(), from.end());
  std::vector<TranspositionStep> steps;
  for (std::size_t t = 0; t < to.size(); ++t) {
    std::size_t j = t;
    while (j < current.size() && current[j] != to[t]) ++j;
    detail::require(j < current.size(), "transposition_chain: words are not rearrangements");
    for (; j > t; --j) {
      std::swap(current[j - 1], current[j]);
      steps.push_back({j});
    }
  }
  return steps;
}

HypercubeReport hypercube_consistency(const BigInt& n, std::span<const Radix> radices,
                                      std::span<const std::size_t> multiplicities, const HypercubeOptions& options) {
  detail::require(!radices.empty() && radices.size() == multiplicities.size(),
                  "hypercube_consistency: need one multiplicity per radix");
  std::vector<std::size_t> reference;
  for (std::size_t i = 0; i < radices.size(); ++i) reference.insert(reference.end(), multiplicities[i], i);
  auto basis_of = [&](const std::vector<std::size_t>& word) {
    std::vector<Radix> b;
    b.reserve(word.size());
    for (std::size_t idx : word) b.push_back(radices[idx]);
    return MixedRadixBasis(std::move(b));
  };
  const DigitString ref_digits = decompose(n, basis_of(reference));

  // Multinomial word count.
  BigInt count = 1;
  {
    std::size_t placed = 0;
    for (std::size_t l : multiplicities) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), placed + l, l);
      count *= c;
      placed += l;
    }
  }

  HypercubeReport report;
  auto check = [&](const std::vector<std::size_t>& word) {
    const auto steps = transposition_chain(reference, word);
    const DigitString moved = apply_permutation(ref_digits, steps);
    const DigitString direct = decompose(n, basis_of(word));
    ++report.words_checked;
    if (!(moved == direct) || recompose(moved) != n) {
      report.holds = false;
      if (!report.counterexample_word) report.counterexample_word = word;
    }
  };

  if (count <= BigInt(std::to_string(options.max_words))) {
    std::vector<std::size_t> word = reference;
    do {
      check(word);
    } while (std::next_permutation(word.begin(), word.end()));
  } else {
    report.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> word = reference;
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::shuffle(word.begin(), word.end(), rng);
      check(word);
    }
  }
  return report;
}

}  // namespace mixradix

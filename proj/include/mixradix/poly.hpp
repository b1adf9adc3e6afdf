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

#include "mixradix/grid.hpp"

namespace mixradix {

using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (d != 0) into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Monomial-basis polynomial p_0 + p_1 X + ... + p_d X^d with exact rational
/// coefficients. Trailing zeros are dropped; the zero polynomial is empty.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs);

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  bool operator==(const ExactPoly& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Nodes a_1..a_K of the Newton basis pi_n = prod_{k<=n} (X - a_k).
struct PolyBasis {
  std::vector<Rational> nodes;
  std::size_t size() const noexcept { return nodes.size(); }
  bool operator==(const PolyBasis&) const = default;
};

/// P = sum_n coeffs[n] * prod_{k<=n} (X - a_k).
struct NewtonCoeffs {
  PolyBasis basis;
  std::vector<Rational> coeffs;

  NewtonCoeffs() = default;
  NewtonCoeffs(PolyBasis b, std::vector<Rational> c);
  bool operator==(const NewtonCoeffs&) const = default;
};

struct OpCounter {
  std::uint64_t multiplications = 0;
  std::uint64_t phi_applications = 0;
};

/// phi_{a,b}(u, v) = (u + (b - a) v, v).
std::pair<Rational, Rational> phi(const Rational& a, const Rational& b, const Rational& u, const Rational& v);

/// P(b) from the coefficients of P in powers of (X - a):
/// u_d = c_d, u_{k-1} = (b - a) u_k + c_{k-1}. Uses d multiplications.
Rational horner_eval(std::span<const Rational> coeffs_at_a, const Rational& a, const Rational& b,
                     OpCounter* counter = nullptr);
Rational horner_eval(const ExactPoly& p, const Rational& b, OpCounter* counter = nullptr);

/// Newton coefficients by repeated synthetic division by (X - a_k); repeated
/// nodes are fine. Needs basis.size() >= deg(P) + 1.
NewtonCoeffs to_newton(const ExactPoly& p, const PolyBasis& basis);
ExactPoly from_newton(const NewtonCoeffs& c);

/// Swaps nodes k and k+1 (1-based) and applies phi_{a_k,a_{k+1}} to
/// coefficients k-1 and k.
NewtonCoeffs transpose_newton(const NewtonCoeffs& c, std::size_t k);

/// (P(y), P'(y)/1!, ..., P^{(k-1)}(y)/(k-1)!) via the triangular sweep.
std::vector<Rational> taylor_coeffs(const ExactPoly& p, const Rational& y, std::size_t k,
                                    OpCounter* counter = nullptr);
/// (P(y), P'(y), ..., P^{(k-1)}(y)): taylor_coeffs scaled by i!.
std::vector<Rational> derivatives(const ExactPoly& p, const Rational& y, std::size_t k);

/// Full R(l1, l2) decoration with f = phi_{x,y}: South carries the
/// coefficients of P in powers of (X - x), East is zero. Needs l1 >= deg(P) + 1.
EdgeDecoration<Rational> fill_poly_grid(const ExactPoly& p, const Rational& x, const Rational& y, std::size_t l1,
                                        std::size_t l2);

/// Newton coefficients read along a word; letter P contributes node x, Q node y.
NewtonCoeffs read_poly_path(const EdgeDecoration<Rational>& grid, std::span<const Letter> word, const Rational& x,
                            const Rational& y);

}  // namespace mixradix

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

#include "mixradix/core.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mixradix {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;


void check_radix(Radix r, const char* name) {
  if (r < 2) {
    throw PreconditionError(std::string(name) + " must be >= 2, got " + std::to_string(r));
  }
}

// Modular inverse of a mod m for gcd(a, m) = 1, m >= 2.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  i128 old_r = static_cast<i128>(a % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 quotient = old_r / r;
    const i128 next_r = old_r - quotient * r;
    old_r = r;
    r = next_r;
    const i128 next_s = old_s - quotient * s;
    old_s = s;
    s = next_s;
  }
  i128 result = old_s % static_cast<i128>(m);
  if (result < 0) result += m;
  return static_cast<std::uint64_t>(result);
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

MixedRadixBasis::MixedRadixBasis() : products_{BigInt(1)} {}

MixedRadixBasis::MixedRadixBasis(std::vector<Radix> radices) : radices_(std::move(radices)) {
  products_.reserve(radices_.size() + 1);
  products_.emplace_back(1);
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (radices_[i] < 2) {
      throw PreconditionError("radix b_" + std::to_string(i + 1) + " must be >= 2, got " +
                              std::to_string(radices_[i]));
    }
    BigInt next = products_.back();
    next *= static_cast<unsigned long>(radices_[i]);
    products_.push_back(std::move(next));
  }
}

MixedRadixBasis MixedRadixBasis::constant(Radix p, std::size_t length) {
  return MixedRadixBasis(std::vector<Radix>(length, p));
}

Radix MixedRadixBasis::radix(std::size_t i) const {
  detail::require(i >= 1 && i <= radices_.size(),
                  "radix index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
  return radices_[i - 1];
}

const BigInt& MixedRadixBasis::product(std::size_t i) const {
  detail::require(i < products_.size(),
                  "product index " + std::to_string(i) + " outside 0.." + std::to_string(size()));
  return products_[i];
}

MixedRadixBasis MixedRadixBasis::transposed(std::size_t k) const {
  detail::require(k >= 1 && k < radices_.size(),
                  "transposition position " + std::to_string(k) + " outside 1.." +
                      std::to_string(radices_.size() == 0 ? 0 : radices_.size() - 1));
  MixedRadixBasis out = *this;
  std::swap(out.radices_[k - 1], out.radices_[k]);
  // Only pi_k changes: pi'_k = pi_{k-1} * b_{k+1}.
  out.products_[k] = products_[k - 1] * static_cast<unsigned long>(out.radices_[k - 1]);
  return out;
}

DigitString::DigitString(MixedRadixBasis basis, std::vector<Digit> digits)
    : basis_(std::move(basis)), digits_(std::move(digits)) {
  detail::require(digits_.size() == basis_.size(),
                  "digit count " + std::to_string(digits_.size()) + " does not match basis length " +
                      std::to_string(basis_.size()));
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    const Radix b = basis_.radices()[i];
    if (digits_[i] >= b) {
      throw PreconditionError("digit a_" + std::to_string(i) + " = " + std::to_string(digits_[i]) +
                              " must be < b_" + std::to_string(i + 1) + " = " + std::to_string(b));
    }
  }
}

DigitPair psi(Radix p, Radix q, Digit u, Digit v) {
  check_radix(p, "p");
  check_radix(q, "q");
  if (u >= p || v >= q) {
    throw PreconditionError("psi(" + std::to_string(p) + "," + std::to_string(q) + "): need u < p and v < q, got (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
  }
  const std::uint64_t n = std::uint64_t{u} + std::uint64_t{p} * v;
  return {static_cast<Digit>(n % q), static_cast<Digit>(n / q)};
}

DigitPair psi_inverse(Radix p, Radix q, Digit v_prime, Digit u_prime) {
  check_radix(p, "p");
  check_radix(q, "q");
  if (v_prime >= q || u_prime >= p) {
    throw PreconditionError("psi_inverse(" + std::to_string(p) + "," + std::to_string(q) +
                            "): need v' < q and u' < p, got (" + std::to_string(v_prime) + "," +
                            std::to_string(u_prime) + ")");
  }
  return psi(q, p, v_prime, u_prime);
}

DigitPair psi_ne(Radix p, Radix q, Digit u_west, Digit u_south) {
  check_radix(p, "p");
  check_radix(q, "q");
  if (gcd_u64(p, q) != 1) {
    throw UnsupportedPairError("psi_ne requires gcd(p, q) = 1, got p=" + std::to_string(p) +
                               " q=" + std::to_string(q));
  }
  if (u_west >= q || u_south >= p) {
    throw PreconditionError("psi_ne: need u_W < q and u_S < p, got (" + std::to_string(u_west) + "," +
                            std::to_string(u_south) + ")");
  }
  // n = u_S + p t with t = (u_W - u_S) p^{-1} mod q.
  const std::uint64_t diff = (std::uint64_t{u_west} + q - (u_south % q)) % q;
  const std::uint64_t t = static_cast<std::uint64_t>(
      (static_cast<u128>(diff) * inverse_mod(p % q, q)) % q);
  const std::uint64_t n = std::uint64_t{u_south} + std::uint64_t{p} * t;
  return {static_cast<Digit>(n / q), static_cast<Digit>(t)};
}

DigitString decompose(const BigInt& n, const MixedRadixBasis& basis) {
  if (sgn(n) < 0) throw PreconditionError("decompose: n must be nonnegative");
  if (n >= basis.capacity()) {
    throw OverflowError("decompose: n = " + n.get_str() + " does not fit, need n < pi_K = " +
                        basis.capacity().get_str());
  }
  std::vector<Digit> digits(basis.size());
  BigInt rest = n;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    digits[i] = static_cast<Digit>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), basis.radices()[i]));
  }
  return DigitString(basis, std::move(digits));
}

BigInt recompose(const DigitString& d) {
  // Horner from the most significant digit.
  BigInt n = 0;
  const auto radices = d.basis().radices();
  for (std::size_t i = d.size(); i-- > 0;) {
    n *= static_cast<unsigned long>(radices[i]);
    n += static_cast<unsigned long>(d.digits()[i]);
  }
  return n;
}

DigitString transpose_digits(const DigitString& d, TranspositionStep step) {
  const std::size_t k = step.position;
  const std::size_t size = d.size();
  if (k < 1 || k >= size) {
    throw PreconditionError("transposition position " + std::to_string(k) + " outside 1.." +
                            std::to_string(size == 0 ? 0 : size - 1));
  }
  const auto radices = d.basis().radices();
  std::vector<Digit> digits(d.digits().begin(), d.digits().end());
  const auto [low, high] = psi(radices[k - 1], radices[k], digits[k - 1], digits[k]);
  digits[k - 1] = low;
  digits[k] = high;
  return DigitString(d.basis().transposed(k), std::move(digits));
}

DigitString apply_permutation(const DigitString& d, std::span<const TranspositionStep> steps) {
  DigitString current = d;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    try {
      current = transpose_digits(current, steps[s]);
    } catch (const PreconditionError& e) {
      throw PreconditionError("step " + std::to_string(s) + ": " + e.what());
    }
  }
  return current;
}

std::string to_json(const DigitString& d) {
  nlohmann::json j;
  j["radices"] = std::vector<Radix>(d.basis().radices().begin(), d.basis().radices().end());
  j["digits"] = std::vector<Digit>(d.digits().begin(), d.digits().end());
  return j.dump();
}

DigitString digit_string_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return DigitString(MixedRadixBasis(j.at("radices").get<std::vector<Radix>>()),
                       j.at("digits").get<std::vector<Digit>>());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed digit string JSON: ") + e.what());
  }
}

std::string to_human(const DigitString& d) {
  std::ostringstream out;
  for (std::size_t i = d.size(); i-- > 0;) {
    out << d.digits()[i];
    if (i != 0) out << ':';
  }
  out << " (basis ";
  const auto radices = d.basis().radices();
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (i) out << ',';
    out << radices[i];
  }
  out << ')';
  return out.str();
}

}  // namespace mixradix

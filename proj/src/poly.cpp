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

#include "mixradix/poly.hpp"

#include <algorithm>

namespace mixradix {

Rational parse_rational(const std::string& text) {
  const std::string body = text.empty() || text[0] != '+' ? text : text.substr(1);
  const auto slash = body.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = s.size() > 0 && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw PreconditionError("not a rational: '" + text + "'");
  }
  const BigInt d(den);
  if (sgn(d) == 0) throw PreconditionError("zero denominator in '" + text + "'");
  Rational r(BigInt(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

NewtonCoeffs::NewtonCoeffs(PolyBasis b, std::vector<Rational> c) : basis(std::move(b)), coeffs(std::move(c)) {
  detail::require(coeffs.size() == basis.size(), "Newton coefficient count " + std::to_string(coeffs.size()) +
                                                     " does not match basis length " +
                                                     std::to_string(basis.size()));
}

std::pair<Rational, Rational> phi(const Rational& a, const Rational& b, const Rational& u, const Rational& v) {
  return {u + (b - a) * v, v};
}

Rational horner_eval(std::span<const Rational> coeffs_at_a, const Rational& a, const Rational& b,
                     OpCounter* counter) {
  std::size_t d = coeffs_at_a.size();
  while (d > 0 && sgn(coeffs_at_a[d - 1]) == 0) --d;
  if (d == 0) return 0;
  const Rational step = b - a;
  Rational u = coeffs_at_a[d - 1];
  for (std::size_t k = d - 1; k-- > 0;) {
    u = step * u + coeffs_at_a[k];
    if (counter) ++counter->multiplications;
  }
  return u;
}

Rational horner_eval(const ExactPoly& p, const Rational& b, OpCounter* counter) {
  return horner_eval(p.coeffs(), Rational(0), b, counter);
}

NewtonCoeffs to_newton(const ExactPoly& p, const PolyBasis& basis) {
  const long deg = p.degree();
  if (static_cast<long>(basis.size()) < deg + 1) {
    throw PreconditionError("Newton basis of length " + std::to_string(basis.size()) +
                            " is too short for degree " + std::to_string(deg));
  }
  std::vector<Rational> rest(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> out(basis.size(), Rational(0));
  for (std::size_t n = 0; n < basis.size() && !rest.empty(); ++n) {
    // rest = (X - a) * quotient + remainder
    const Rational& a = basis.nodes[n];
    for (std::size_t i = rest.size() - 1; i-- > 0;) rest[i] += a * rest[i + 1];
    out[n] = rest.front();
    rest.erase(rest.begin());
  }
  return NewtonCoeffs(basis, std::move(out));
}

ExactPoly from_newton(const NewtonCoeffs& c) {
  const std::size_t K = c.coeffs.size();
  if (K == 0) return ExactPoly();
  std::vector<Rational> acc{c.coeffs[K - 1]};
  for (std::size_t n = K - 1; n-- > 0;) {
    // acc = acc * (X - a_{n+1}) + c_n
    const Rational& a = c.basis.nodes[n];
    acc.emplace_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] - a * acc[i];
    acc[0] = -a * acc[0] + c.coeffs[n];
  }
  return ExactPoly(std::move(acc));
}

NewtonCoeffs transpose_newton(const NewtonCoeffs& c, std::size_t k) {
  const std::size_t K = c.coeffs.size();
  if (k < 1 || k >= K) {
    throw PreconditionError("transposition position " + std::to_string(k) + " outside 1.." +
                            std::to_string(K == 0 ? 0 : K - 1));
  }
  NewtonCoeffs out = c;
  const Rational& ak = c.basis.nodes[k - 1];
  const Rational& ak1 = c.basis.nodes[k];
  auto [u, v] = phi(ak, ak1, c.coeffs[k - 1], c.coeffs[k]);
  out.coeffs[k - 1] = std::move(u);
  out.coeffs[k] = std::move(v);
  std::swap(out.basis.nodes[k - 1], out.basis.nodes[k]);
  return out;
}

std::vector<Rational> taylor_coeffs(const ExactPoly& p, const Rational& y, std::size_t k, OpCounter* counter) {
  detail::require(k >= 1, "taylor_coeffs: need k >= 1");
  std::vector<Rational> u(k, Rational(0));
  if (p.is_zero()) return u;
  const auto c = p.coeffs();
  const std::size_t d = c.size() - 1;
  u[0] = c[d];
  for (std::size_t kk = d; kk-- > 0;) {
    Rational v = c[kk];
    // Entries above index d - kk are still zero.
    const std::size_t top = std::min(k - 1, d - kk);
    for (std::size_t i = 0; i <= top; ++i) {
      Rational next = v + u[i] * y;
      v = std::move(u[i]);
      u[i] = std::move(next);
      if (counter) {
        ++counter->phi_applications;
        ++counter->multiplications;
      }
    }
  }
  return u;
}

std::vector<Rational> derivatives(const ExactPoly& p, const Rational& y, std::size_t k) {
  std::vector<Rational> u = taylor_coeffs(p, y, k);
  BigInt fact = 1;
  for (std::size_t i = 1; i < u.size(); ++i) {
    fact *= static_cast<unsigned long>(i);
    u[i] *= fact;
  }
  return u;
}

EdgeDecoration<Rational> fill_poly_grid(const ExactPoly& p, const Rational& x, const Rational& y, std::size_t l1,
                                        std::size_t l2) {
  if (static_cast<long>(l1) < p.degree() + 1) {
    throw PreconditionError("fill_poly_grid: l1 = " + std::to_string(l1) + " must be >= deg(P) + 1 = " +
                            std::to_string(p.degree() + 1));
  }
  std::vector<Rational> south =
      l1 == 0 ? std::vector<Rational>{} : taylor_coeffs(p, x, l1);
  const std::vector<Rational> east(l2, Rational(0));
  const Rational step = y - x;
  return fill_south_east_with<Rational, Rational>(
      south, east, [&step](const Rational& s, const Rational& e) {
        return std::pair<Rational, Rational>{s + step * e, e};
      });
}

NewtonCoeffs read_poly_path(const EdgeDecoration<Rational>& grid, std::span<const Letter> word, const Rational& x,
                            const Rational& y) {
  const auto l1 = static_cast<std::size_t>(std::count(word.begin(), word.end(), Letter::P));
  const std::size_t l2 = word.size() - l1;
  if (l1 != grid.l1 || l2 != grid.l2) {
    throw PreconditionError("word with (" + std::to_string(l1) + "," + std::to_string(l2) +
                            ") steps does not match R(" + std::to_string(grid.l1) + "," +
                            std::to_string(grid.l2) + ")");
  }
  PolyBasis basis;
  std::vector<Rational> coeffs;
  std::size_t i = 0, j = 0;
  for (Letter l : word) {
    if (l == Letter::P) {
      basis.nodes.push_back(x);
      coeffs.push_back(grid.alpha_h(i++, j));
    } else {
      basis.nodes.push_back(y);
      coeffs.push_back(grid.alpha_v(i, j++));
    }
  }
  return NewtonCoeffs(std::move(basis), std::move(coeffs));
}

}  // namespace mixradix

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

#include "mixradix/convert.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "mixradix/grid.hpp"

namespace mixradix {

namespace {

thread_local ConversionStats g_last_stats;

void check_pair(Radix p, Radix q) {
  detail::require(p >= 2 && q >= 2, "radices must be >= 2, got p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
}

void check_input(std::span<const Digit> digits, Radix p) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p) {
      throw PreconditionError("digit a_" + std::to_string(i) + " = " + std::to_string(digits[i]) +
                              " must be < " + std::to_string(p));
    }
  }
}

std::size_t significant_length(std::span<const Digit> digits) {
  std::size_t k = digits.size();
  while (k > 0 && digits[k - 1] == 0) --k;
  return k;
}

void finish_output(std::vector<Digit>& out, const std::optional<std::size_t>& pad) {
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  if (out.empty()) out.push_back(0);
  if (pad) {
    if (out.size() > *pad) {
      throw PreconditionError("value needs " + std::to_string(out.size()) + " digits, pad is " +
                              std::to_string(*pad));
    }
    out.resize(*pad, 0);
  }
}

}  // namespace

std::uint64_t table_budget() {
  if (const char* env = std::getenv("MIXRADIX_TABLE_MAX_ENTRIES")) {
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  return kDefaultTableBudget;
}

DigitPair PsiTable::entry(Digit u, Digit v) const {
  detail::require(u < p_ && v < q_, "table entry (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside " + std::to_string(p_) + "x" + std::to_string(q_));
  const Slot s = slots_[std::size_t{u} * q_ + v];
  return {s.digit, s.next / q_};
}

PsiTable build_table(Radix p, Radix q) {
  check_pair(p, q);
  const std::uint64_t entries = std::uint64_t{p} * q;
  const std::uint64_t budget = table_budget();
  if (entries > budget || entries > UINT32_MAX) {
    throw CapacityError("psi table " + std::to_string(p) + "x" + std::to_string(q) + " has " +
                        std::to_string(entries) + " entries, budget is " + std::to_string(budget));
  }
  PsiTable t(p, q);
  t.slots_.resize(entries);
  for (Digit u = 0; u < p; ++u) {
    for (Digit v = 0; v < q; ++v) {
      const auto [low, high] = psi(p, q, u, v);
      t.slots_[std::size_t{u} * q + v] = {low, high * q};
    }
  }
  t.build_divisions_ = entries;
  return t;
}

std::vector<std::size_t> column_heights(std::size_t k_total, Radix p, Radix q) {
  check_pair(p, q);
  std::vector<std::size_t> heights(k_total);
  BigInt pk = 1;
  BigInt qh = 1;
  std::size_t h = 0;
  for (std::size_t t = 1; t <= k_total; ++t) {
    pk *= static_cast<unsigned long>(p);
    while (qh < pk) {
      qh *= static_cast<unsigned long>(q);
      ++h;
    }
    heights[t - 1] = h;
  }
  return heights;
}

std::size_t column_height(std::size_t k_total, std::size_t m, Radix p, Radix q) {
  detail::require(m < k_total, "column_height: need m < k, got m=" + std::to_string(m) +
                                   " k=" + std::to_string(k_total));
  return column_heights(k_total - m, p, q).back();
}

RadixConverter::RadixConverter(Radix p, Radix q) : p_(p), q_(q) {
  check_pair(p, q);
  if (std::uint64_t{p} * q <= table_budget()) {
    table_ = std::make_shared<const PsiTable>(build_table(p, q));
  }
}

std::vector<Digit> RadixConverter::convert_fallback(std::span<const Digit> digits, std::size_t k,
                                                    HeightMode mode) {
  stats_.used_fallback = true;
  std::vector<Digit> out;
  std::vector<std::size_t> heights;
  if (mode == HeightMode::exact) {
    heights = column_heights(k, p_, q_);
    out.assign(heights.back(), 0);
  }
  for (std::size_t m = k; m-- > 0;) {
    Digit c = digits[m];
    const std::size_t h = mode == HeightMode::exact ? heights[k - 1 - m] : out.size();
    for (std::size_t i = 0; i < h; ++i) {
      const auto [low, high] = psi(p_, q_, c, out[i]);
      out[i] = low;
      c = high;
    }
    stats_.psi_applications += h;
    stats_.divisions_in_inner_loop += h;
    if (mode == HeightMode::carry) {
      while (c != 0) {
        const auto [low, high] = psi(p_, q_, c, 0);
        out.push_back(low);
        c = high;
        ++stats_.psi_applications;
        ++stats_.divisions_in_inner_loop;
      }
    }
    detail::ensure(c == 0, "nonzero carry above column height");
    ++stats_.columns;
  }
  return out;
}

std::vector<Digit> RadixConverter::convert(std::span<const Digit> digits, const ConvertOptions& options) {
  check_input(digits, p_);
  stats_ = {};
  const std::size_t k = significant_length(digits);
  std::vector<Digit> out;
  if (k == 0) {
    out.push_back(0);
  } else if (!table_) {
    out = convert_fallback(digits, k, options.mode);
  } else if (options.threads > 1) {
    const std::size_t h = column_heights(k, p_, q_).back();
    const std::vector<Digit> east(h, 0);
    const PsiTable::Slot* t = table_->data();
    const std::uint32_t q = q_;
    auto f = [t, q](Digit u, Digit v) {
      const PsiTable::Slot s = t[u * q + v];
      return std::pair<Digit, Digit>{s.digit, s.next / q};
    };
    auto edges = fill_south_east_with<Digit, Digit>(digits.first(k), east, f,
                                                    {FillSchedule::wavefront, options.threads});
    for (std::size_t i = 0; i < k; ++i) {
      detail::ensure(edges.alpha_h(i, h) == 0, "nonzero digit on the North side of the conversion rectangle");
    }
    out.resize(h);
    for (std::size_t j = 0; j < h; ++j) out[j] = edges.alpha_v(0, j);
    stats_.psi_applications = std::uint64_t{k} * h;
    stats_.columns = k;
  } else if (options.mode == HeightMode::exact) {
    const std::vector<std::size_t> heights = column_heights(k, p_, q_);
    out.assign(heights.back(), 0);
    const PsiTable::Slot* t = table_->data();
    const std::uint32_t q = q_;
    Digit* o = out.data();
    std::size_t m = k;
    // Two columns at a time: column m-1 trails column m by one cell, giving
    // two independent lookup chains.
    while (m >= 2) {
      const std::size_t h1 = heights[k - m];
      const std::size_t h2 = heights[k - m + 1];
      std::uint32_t c1 = digits[m - 1] * q;
      std::uint32_t c2 = digits[m - 2] * q;
      PsiTable::Slot s = t[c1 + o[0]];
      o[0] = s.digit;
      c1 = s.next;
      for (std::size_t i = 1; i < h1; ++i) {
        const PsiTable::Slot s1 = t[c1 + o[i]];
        const PsiTable::Slot s2 = t[c2 + o[i - 1]];
        o[i] = s1.digit;
        c1 = s1.next;
        o[i - 1] = s2.digit;
        c2 = s2.next;
      }
      for (std::size_t i = h1 - 1; i < h2; ++i) {
        s = t[c2 + o[i]];
        o[i] = s.digit;
        c2 = s.next;
      }
      detail::ensure(c1 == 0 && c2 == 0, "nonzero carry above column height");
      stats_.psi_applications += h1 + h2;
      stats_.columns += 2;
      m -= 2;
    }
    if (m == 1) {
      const std::size_t h = heights[k - 1];
      std::uint32_t c = digits[0] * q;
      for (std::size_t i = 0; i < h; ++i) {
        const PsiTable::Slot s = t[c + o[i]];
        o[i] = s.digit;
        c = s.next;
      }
      detail::ensure(c == 0, "nonzero carry above column height");
      stats_.psi_applications += h;
      ++stats_.columns;
    }
  } else {
    const PsiTable::Slot* t = table_->data();
    const std::uint32_t q = q_;
    for (std::size_t m = k; m-- > 0;) {
      std::uint32_t c = digits[m] * q;
      for (std::size_t i = 0; i < out.size(); ++i) {
        const PsiTable::Slot s = t[c + out[i]];
        out[i] = s.digit;
        c = s.next;
      }
      stats_.psi_applications += out.size();
      while (c != 0) {
        const PsiTable::Slot s = t[c];
        out.push_back(s.digit);
        c = s.next;
        ++stats_.psi_applications;
      }
      ++stats_.columns;
    }
  }
  finish_output(out, options.pad);
  return out;
}

std::vector<Digit> convert_radix(std::span<const Digit> digits, Radix p, Radix q, const ConvertOptions& options) {
  RadixConverter conv(p, q);
  auto out = conv.convert(digits, options);
  g_last_stats = conv.last_stats();
  return out;
}

ConversionStats last_conversion_stats() { return g_last_stats; }

std::vector<Digit> digits_of(const BigInt& n, Radix base) {
  check_pair(base, base);
  detail::require(sgn(n) >= 0, "digits_of: n must be nonnegative");
  std::vector<Digit> out;
  BigInt rest = n;
  do {
    out.push_back(static_cast<Digit>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base)));
  } while (sgn(rest) != 0);
  return out;
}

BigInt value_of(std::span<const Digit> digits, Radix base) {
  check_pair(base, base);
  check_input(digits, base);
  BigInt n = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    n *= static_cast<unsigned long>(base);
    n += static_cast<unsigned long>(digits[i]);
  }
  return n;
}

}  // namespace mixradix

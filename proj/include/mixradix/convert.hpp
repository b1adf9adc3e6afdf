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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mixradix/core.hpp"

namespace mixradix {

/// Default cap on p * q table entries. Overridden by MIXRADIX_TABLE_MAX_ENTRIES.
inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 24;

/// Current budget: the environment override when set and valid, else the default.
std::uint64_t table_budget();

/// Dense psi_{p,q} table, flat index u * q + v. Each slot stores the output
/// digit v' and the premultiplied next index u' * q, so the conversion kernel
/// needs one add and one load per cell.
class PsiTable {
 public:
  struct Slot {
    std::uint32_t digit;
    std::uint32_t next;
  };

  Radix p() const noexcept { return p_; }
  Radix q() const noexcept { return q_; }
  std::size_t size() const noexcept { return slots_.size(); }
  /// Division-based psi evaluations spent building the table (always p * q).
  std::uint64_t build_divisions() const noexcept { return build_divisions_; }

  /// (v', u') for u < p, v < q.
  DigitPair entry(Digit u, Digit v) const;
  const Slot* data() const noexcept { return slots_.data(); }

 private:
  friend PsiTable build_table(Radix p, Radix q);
  PsiTable(Radix p, Radix q) : p_(p), q_(q) {}

  Radix p_;
  Radix q_;
  std::vector<Slot> slots_;
  std::uint64_t build_divisions_ = 0;
};

/// Throws CapacityError when p * q exceeds table_budget().
PsiTable build_table(Radix p, Radix q);

struct ConversionStats {
  std::uint64_t psi_applications = 0;
  std::uint64_t divisions_in_inner_loop = 0;
  std::uint64_t columns = 0;
  /// True when p * q was over budget and core psi was used per cell.
  bool used_fallback = false;

  bool operator==(const ConversionStats&) const = default;
};

enum class HeightMode {
  /// Precomputed column heights: smallest h with q^h >= p^(k-m).
  exact,
  /// Sweep the current length, then extend while the carry is nonzero.
  carry,
};

struct ConvertOptions {
  HeightMode mode = HeightMode::exact;
  /// When set, the output is zero-padded to this length (PreconditionError if too short).
  std::optional<std::size_t> pad;
  /// More than one thread fills the full k x h rectangle with the wavefront
  /// schedule. Output is identical; psi_applications then counts k * h cells.
  unsigned threads = 1;
};

/// Smallest h with q^h >= p^(k_total - m), exact integer arithmetic.
std::size_t column_height(std::size_t k_total, std::size_t m, Radix p, Radix q);

/// Heights for k - m = 1..k, index t - 1. Non-decreasing.
std::vector<std::size_t> column_heights(std::size_t k_total, Radix p, Radix q);

/// Converts little-endian base-p digits to base-q digits of the same value.
class RadixConverter {
 public:
  RadixConverter(Radix p, Radix q);

  Radix from() const noexcept { return p_; }
  Radix to() const noexcept { return q_; }
  bool has_table() const noexcept { return table_ != nullptr; }

  std::vector<Digit> convert(std::span<const Digit> digits, const ConvertOptions& options = {});
  const ConversionStats& last_stats() const noexcept { return stats_; }

 private:
  std::vector<Digit> convert_fallback(std::span<const Digit> digits, std::size_t k, HeightMode mode);

  Radix p_;
  Radix q_;
  std::shared_ptr<const PsiTable> table_;
  ConversionStats stats_;
};

/// One-shot conversion; the stats are also kept for last_conversion_stats().
std::vector<Digit> convert_radix(std::span<const Digit> digits, Radix p, Radix q,
                                 const ConvertOptions& options = {});

/// Stats of the most recent convert_radix call on this thread.
ConversionStats last_conversion_stats();

/// Little-endian base-b digits of n >= 0; zero gives (0).
std::vector<Digit> digits_of(const BigInt& n, Radix base);
/// sum a_i b^i.
BigInt value_of(std::span<const Digit> digits, Radix base);

}  // namespace mixradix

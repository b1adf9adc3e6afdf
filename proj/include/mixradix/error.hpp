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

#include <stdexcept>
#include <string>

namespace mixradix {

/// Raised when an argument violates an operation's documented precondition
/// (digit out of range, index out of bounds, malformed input).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value does not fit the capacity of the target basis (n >= pi_K).
class OverflowError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The operation is undefined for the given radix pair, e.g. gcd(p, q) != 1
/// for the CRT-based maps.
class UnsupportedPairError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A table or enumeration would exceed its configured budget.
class CapacityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace mixradix

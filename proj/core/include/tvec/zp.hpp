// Copyright 2026 The tvec Authors
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

// Integer helpers for Z/p^k arithmetic and the error types shared by every
// module.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tvec {

using i64 = std::int64_t;
using i128 = __int128;

// Valuation used for zero.
inline constexpr int kInfVal = 1 << 29;

// Effective precision fell below the configured floor, or a question about an
// entry could not be decided at the available precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation is deliberately not modeled (for example a G-translate of a
// supercuspidal stub).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(i64 n);

// p^k; throws DomainError if the result does not fit in 62 bits.
i64 ipow(i64 p, int k);

// p-adic valuation; kInfVal for 0.
int val_p(i64 x, i64 p);
int val_p(i128 x, i64 p);

// Representative in [0, m).
inline i64 mod(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}
inline i64 mod(i128 x, i64 m) {
  i128 r = x % m;
  return static_cast<i64>(r < 0 ? r + m : r);
}
inline i64 mulmod(i64 a, i64 b, i64 m) {
  return mod(static_cast<i128>(a) * b, m);
}

// Inverse of a modulo m by the extended Euclidean algorithm.
i64 inv_mod(i64 a, i64 m);

// Strip the p-part: returns x / p^val_p(x). x must be nonzero.
i64 unit_part(i64 x, i64 p);
i128 unit_part(i128 x, i64 p);

}  // namespace tvec

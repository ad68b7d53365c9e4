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

#include "tvec/zp.hpp"

#include <limits>

namespace tvec {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

i64 ipow(i64 p, int k) {
  if (k < 0) throw DomainError("ipow: negative exponent");
  i64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::numeric_limits<i64>::max() >> 1) / p) {
      throw DomainError("ipow: p^k overflows 62 bits");
    }
    r *= p;
  }
  return r;
}

int val_p(i64 x, i64 p) {
  if (x == 0) return kInfVal;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int val_p(i128 x, i64 p) {
  if (x == 0) return kInfVal;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

i64 inv_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("inv_mod: element is not invertible");
  return mod(old_s, m);
}

i64 unit_part(i64 x, i64 p) {
  while (x % p == 0) x /= p;
  return x;
}

i128 unit_part(i128 x, i64 p) {
  while (x % p == 0) x /= p;
  return x;
}

}  // namespace tvec

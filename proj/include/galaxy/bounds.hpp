// Copyright 2026 The Galaxy Authors.
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

// Lower and upper bounds on the star arboricity of Q_n.

#pragma once

#include <bit>
#include <optional>
#include <string>

#include "galaxy/errors.hpp"
#include "galaxy/plan.hpp"

namespace galaxy {

struct Bound {
  int value = 0;
  std::string provenance;
};

// Returns a such that n = 2^a - 2, if any.
inline std::optional<int> power_minus_two_exponent(int n) {
  if (n < 2) return std::nullopt;
  const unsigned m = static_cast<unsigned>(n) + 2;
  if (!std::has_single_bit(m)) return std::nullopt;
  return std::countr_zero(m);
}

inline int floor_log2(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }

inline Bound lower_bound(int n) {
  if (n < 1) throw Error("dimension must be positive");
  if (n == 1) return {1, "single-edge"};
  if (auto a = power_minus_two_exponent(n)) {
    return {1 << (*a - 1), "power-minus-two(a=" + std::to_string(*a) + ")"};
  }
  if (n % 2 == 0) {
    // n/2 + 1 divides 2^n only when it is a power of two, i.e. n = 2^a - 2.
    return {n / 2 + 2, "even-regular-divisibility"};
  }
  return {(n + 1) / 2 + 1, "regular-degree(ceil((n+1)/2)+1)"};
}

inline int log_upper_bound(int n) { return (n + 1) / 2 + floor_log2(n) - 1; }

inline Bound upper_bound(int n) {
  if (n < 1) throw Error("dimension must be positive");
  const DecompositionPlan p = plan(n);
  Bound best{p.predicted_count, "plan:" + p.to_string()};
  if (n >= 5 && log_upper_bound(n) < best.value) {
    best = {log_upper_bound(n), "log-bound(ceil(n/2)+floor(log2 n)-1)"};
  }
  return best;
}

struct BoundsReport {
  int n = 0;
  int lower = 0;
  int upper = 0;
  std::string lower_provenance;
  std::string upper_provenance;
  bool exact = false;
  int conjectured = 0;
  // "confirmed" when the bounds meet at the conjectured value, "open"
  // while the conjectured value lies inside an unresolved interval.
  std::string conjecture;
};

// Conjectured value: 2^{a-1} for n = 2^a - 2, otherwise floor(n/2) + 2.
// Q_1 is a single edge and is reported as 1.
inline int conjectured_value(int n) {
  if (n == 1) return 1;
  if (auto a = power_minus_two_exponent(n)) return 1 << (*a - 1);
  return n / 2 + 2;
}

inline BoundsReport status(int n) {
  const Bound lo = lower_bound(n);
  const Bound hi = upper_bound(n);
  BoundsReport r;
  r.n = n;
  r.lower = lo.value;
  r.upper = hi.value;
  r.lower_provenance = lo.provenance;
  r.upper_provenance = hi.provenance;
  r.exact = lo.value == hi.value;
  r.conjectured = conjectured_value(n);
  if (r.exact) {
    r.conjecture = r.lower == r.conjectured ? "confirmed" : "refuted";
  } else {
    r.conjecture = (r.lower <= r.conjectured && r.conjectured <= r.upper) ? "open" : "refuted";
  }
  return r;
}

}  // namespace galaxy

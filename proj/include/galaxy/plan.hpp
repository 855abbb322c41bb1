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

// Decomposition plans: expression trees over the constructions, the planner
// that picks the cheapest one for Q_n, and the executor that materializes it.
//
// Grammar (also the textual form):
//   step := Base(1|2|3) | PowerMinus2(k) | PowerPlus1(k)
//         | Product(step,step) | PlusOne(step) | MinusOne(step)

#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galaxy/constructions.hpp"
#include "galaxy/decomposition.hpp"
#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"

namespace galaxy {

struct PlanStep {
  // Declaration order is the tie-break priority of the planner.
  enum class Kind { kBase, kPowerMinus2, kPowerPlus1, kProduct, kPlusOne, kMinusOne };

  Kind kind = Kind::kBase;
  int param = 1;  // leaves only
  std::vector<PlanStep> children;

  static PlanStep base(int n) { return {Kind::kBase, n, {}}; }
  static PlanStep power_minus2(int k) { return {Kind::kPowerMinus2, k, {}}; }
  static PlanStep power_plus1(int k) { return {Kind::kPowerPlus1, k, {}}; }
  static PlanStep product(PlanStep a, PlanStep b) {
    return {Kind::kProduct, 0, {std::move(a), std::move(b)}};
  }
  static PlanStep plus_one(PlanStep a) { return {Kind::kPlusOne, 0, {std::move(a)}}; }
  static PlanStep minus_one(PlanStep a) { return {Kind::kMinusOne, 0, {std::move(a)}}; }

  int dimension() const {
    switch (kind) {
      case Kind::kBase: return param;
      case Kind::kPowerMinus2: return (1 << param) - 2;
      case Kind::kPowerPlus1: return (1 << param) + 1;
      case Kind::kProduct: return children[0].dimension() + children[1].dimension();
      case Kind::kPlusOne: return children[0].dimension() + 1;
      case Kind::kMinusOne: return children[0].dimension() - 1;
    }
    return 0;
  }

  // Products add, PlusOne adds one, MinusOne keeps the count.
  int predicted_count() const {
    switch (kind) {
      case Kind::kBase: return param;
      case Kind::kPowerMinus2: return 1 << (param - 1);
      case Kind::kPowerPlus1: return (1 << (param - 1)) + 2;
      case Kind::kProduct: return children[0].predicted_count() + children[1].predicted_count();
      case Kind::kPlusOne: return children[0].predicted_count() + 1;
      case Kind::kMinusOne: return children[0].predicted_count();
    }
    return 0;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::kBase: return "Base(" + std::to_string(param) + ")";
      case Kind::kPowerMinus2: return "PowerMinus2(" + std::to_string(param) + ")";
      case Kind::kPowerPlus1: return "PowerPlus1(" + std::to_string(param) + ")";
      case Kind::kProduct:
        return "Product(" + children[0].to_string() + "," + children[1].to_string() + ")";
      case Kind::kPlusOne: return "PlusOne(" + children[0].to_string() + ")";
      case Kind::kMinusOne: return "MinusOne(" + children[0].to_string() + ")";
    }
    return {};
  }

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct DecompositionPlan {
  int n = 0;
  PlanStep root;
  int predicted_count = 0;

  std::string to_string() const { return root.to_string(); }
};

namespace plan_detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PlanStep parse() {
    PlanStep step = parse_step();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters in plan", pos_);
    return step;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  int parse_int() {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return value;
  }

  PlanStep parse_step() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    expect('(');
    PlanStep step;
    if (name == "Base") {
      step = PlanStep::base(parse_int());
      if (step.param < 1 || step.param > 3) throw ParseError("Base takes 1, 2 or 3", start);
    } else if (name == "PowerMinus2" || name == "PowerPlus1") {
      const int k = parse_int();
      if (k < 2 || k > 5) throw ParseError("power parameter must be in [2, 5]", start);
      step = name == "PowerMinus2" ? PlanStep::power_minus2(k) : PlanStep::power_plus1(k);
    } else if (name == "Product") {
      PlanStep a = parse_step();
      expect(',');
      PlanStep b = parse_step();
      step = PlanStep::product(std::move(a), std::move(b));
    } else if (name == "PlusOne") {
      step = PlanStep::plus_one(parse_step());
    } else if (name == "MinusOne") {
      step = PlanStep::minus_one(parse_step());
      if (step.children[0].dimension() < 2) throw ParseError("MinusOne of Q_1", start);
    } else {
      throw ParseError("unknown plan step '" + std::string(name) + "'", start);
    }
    expect(')');
    return step;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Planning universe; PowerMinus2(5) = Q_30 is the largest useful leaf.
inline constexpr int kMaxPlanDimension = 32;

}  // namespace plan_detail

inline PlanStep parse_plan(std::string_view text) { return plan_detail::Parser(text).parse(); }

// Minimal number l of terms 2^i - 2 (distinct i >= 2) such that
// n = sum of terms + r with r in R = {2^k + 2} ∪ {2^s + 2^t - 4 : s >= t >= 2}.
// Computed as a 0/1 knapsack over the terms. When no such representation
// exists but n itself is 2^i - 2, the single-term form with r = 0 is used
// (l = 1); this only happens for n = 2. Returns nullopt for odd n.
inline std::optional<int> min_representation_terms(int n) {
  if (n < 1 || n % 2 != 0) return std::nullopt;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  // fewest[s] = fewest distinct terms summing to exactly s.
  std::vector<int> fewest(n + 1, kInf);
  fewest[0] = 0;
  for (int i = 2; (1 << i) - 2 <= n; ++i) {
    const int term = (1 << i) - 2;
    for (int s = n; s >= term; --s) {
      if (fewest[s - term] + 1 < fewest[s]) fewest[s] = fewest[s - term] + 1;
    }
  }
  auto in_r = [](int r) {
    for (int k = 1; (1 << k) + 2 <= r; ++k) {
      if ((1 << k) + 2 == r) return true;
    }
    for (int s = 2; (1 << s) <= r + 4; ++s) {
      for (int t = 2; t <= s; ++t) {
        if ((1 << s) + (1 << t) - 4 == r) return true;
      }
    }
    return false;
  };
  int best = kInf;
  for (int r = 1; r <= n; ++r) {
    if (in_r(r) && fewest[n - r] < best) best = fewest[n - r];
  }
  if (best == kInf && fewest[n] == 1) best = 1;
  if (best == kInf) return std::nullopt;
  return best;
}

// Cheapest plan for Q_n over the construction grammar. Costs are relaxed to
// a fixed point (MinusOne refers to n + 1), then each dimension picks the
// first candidate in priority order that attains its optimal cost. Products
// use factors of dimension >= 2, larger factor first; Product(x, Base(1)) is
// what PlusOne(x) means.
inline DecompositionPlan plan(int n) {
  using plan_detail::kMaxPlanDimension;
  if (n < 1 || n > kMaxDimension) {
    throw CapacityError("plan dimension " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxDimension) + "]");
  }
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  const int top = kMaxPlanDimension;

  // Candidate i for dimension d, in priority order, as (cost, step) given
  // the current cost table. Returns a lazily-built step only when chosen.
  struct Candidate {
    int cost;
    PlanStep::Kind kind;
    int a;  // leaf parameter, or left dimension of a product, or child dimension
    int b;  // right dimension of a product
  };
  auto candidates = [&](int d, const std::vector<int>& cost) {
    std::vector<Candidate> out;
    if (d <= 3) out.push_back({d, PlanStep::Kind::kBase, d, 0});
    for (int k = 2; (1 << k) - 2 <= d; ++k) {
      if ((1 << k) - 2 == d) out.push_back({1 << (k - 1), PlanStep::Kind::kPowerMinus2, k, 0});
    }
    for (int k = 2; (1 << k) + 1 <= d; ++k) {
      if ((1 << k) + 1 == d) out.push_back({(1 << (k - 1)) + 2, PlanStep::Kind::kPowerPlus1, k, 0});
    }
    for (int right = 2; right <= d - right; ++right) {
      const int left = d - right;
      out.push_back({cost[left] + cost[right], PlanStep::Kind::kProduct, left, right});
    }
    if (d >= 2) out.push_back({cost[d - 1] + 1, PlanStep::Kind::kPlusOne, d - 1, 0});
    if (d + 1 <= top) out.push_back({cost[d + 1], PlanStep::Kind::kMinusOne, d + 1, 0});
    return out;
  };

  std::vector<int> cost(top + 1, kInf);
  for (bool changed = true; changed;) {
    changed = false;
    for (int d = 1; d <= top; ++d) {
      for (const Candidate& c : candidates(d, cost)) {
        if (c.cost < cost[d]) {
          cost[d] = c.cost;
          changed = true;
        }
      }
    }
  }

  std::vector<std::optional<Candidate>> choice(top + 1);
  for (int d = 1; d <= top; ++d) {
    for (const Candidate& c : candidates(d, cost)) {
      if (c.cost == cost[d]) {
        choice[d] = c;
        break;
      }
    }
  }
  // Every chosen edge either lowers the dimension with strictly lower cost
  // (Product, PlusOne) or raises it at equal cost (MinusOne), so expansion
  // terminates.
  auto build = [&](auto&& self, int d) -> PlanStep {
    const Candidate& c = *choice[d];
    switch (c.kind) {
      case PlanStep::Kind::kBase: return PlanStep::base(c.a);
      case PlanStep::Kind::kPowerMinus2: return PlanStep::power_minus2(c.a);
      case PlanStep::Kind::kPowerPlus1: return PlanStep::power_plus1(c.a);
      case PlanStep::Kind::kProduct: return PlanStep::product(self(self, c.a), self(self, c.b));
      case PlanStep::Kind::kPlusOne: return PlanStep::plus_one(self(self, c.a));
      case PlanStep::Kind::kMinusOne: return PlanStep::minus_one(self(self, c.a));
    }
    return {};
  };
  DecompositionPlan result{n, build(build, n), cost[n]};
  return result;
}

// Materializes a plan step bottom-up; every intermediate result is verified
// by the construction that produced it.
inline GalaxyDecomposition execute(const PlanStep& step) {
  if (step.dimension() > kMaxDimension || step.dimension() < 1) {
    throw CapacityError("plan step " + step.to_string() + " has dimension " +
                        std::to_string(step.dimension()));
  }
  GalaxyDecomposition d;
  switch (step.kind) {
    case PlanStep::Kind::kBase: d = decompose_base(step.param); break;
    case PlanStep::Kind::kPowerMinus2: d = decompose_power_minus2(step.param); break;
    case PlanStep::Kind::kPowerPlus1: d = decompose_power_plus1(step.param); break;
    case PlanStep::Kind::kProduct:
      d = product_compose(execute(step.children[0]), execute(step.children[1]));
      break;
    case PlanStep::Kind::kPlusOne: d = extend_plus_one(execute(step.children[0])); break;
    case PlanStep::Kind::kMinusOne: d = restrict_minus_one(execute(step.children[0])); break;
  }
  d.provenance = step.to_string();
  return d;
}

// Largest n for which decompose() materializes the full edge set.
inline constexpr int kMaxMaterializedDimension = 17;

inline GalaxyDecomposition decompose(int n) {
  if (n < 1 || n > kMaxMaterializedDimension) {
    throw CapacityError("decompose supports 1 <= n <= " +
                        std::to_string(kMaxMaterializedDimension));
  }
  const DecompositionPlan p = plan(n);
  GalaxyDecomposition d = execute(p.root);
  if (static_cast<int>(d.class_count()) != p.predicted_count) {
    throw ConstructionError("plan " + p.to_string() + " predicted " +
                            std::to_string(p.predicted_count) + " classes, got " +
                            std::to_string(d.class_count()));
  }
  certify(d);
  return d;
}

}  // namespace galaxy

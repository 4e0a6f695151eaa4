// Copyright 2026 The ggpne Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Commutative semirings used by the inference engine. Every potential is a
// product of best-response indicators, so each semiring only has to say what
// a satisfied and an unsatisfied indicator look like.

#ifndef GGPNE_SEMIRING_HPP_
#define GGPNE_SEMIRING_HPP_

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ggpne {

using BigCount = boost::multiprecision::cpp_int;

template <typename S>
concept Semiring = requires(const typename S::value_type& a,
                            const typename S::value_type& b,
                            typename S::value_type& x, bool satisfied) {
  { S::zero() } -> std::convertible_to<typename S::value_type>;
  { S::one() } -> std::convertible_to<typename S::value_type>;
  { S::plus(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::times(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::is_zero(a) } -> std::convertible_to<bool>;
  S::plus_into(x, b);
  S::times_into(x, b);
  { S::indicator(satisfied) } -> std::convertible_to<typename S::value_type>;
  { S::kExactOnly } -> std::convertible_to<bool>;
};

/// {zero, positive} with or / and. Existence only.
struct BooleanSemiring {
  using value_type = bool;
  static constexpr bool kExactOnly = true;
  static constexpr std::string_view kName = "boolean";
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool plus(bool a, bool b) { return a || b; }
  static bool times(bool a, bool b) { return a && b; }
  // Forwarding references so std::vector<bool> proxies bind too.
  template <typename Ref>
  static void plus_into(Ref&& a, bool b) { a = a || b; }
  template <typename Ref>
  static void times_into(Ref&& a, bool b) { a = a && b; }
  static bool is_zero(bool a) { return !a; }
  static bool indicator(bool satisfied) { return satisfied; }
};

/// Arbitrary-precision nonnegative integers with + and x.
struct CountingSemiring {
  using value_type = BigCount;
  static constexpr bool kExactOnly = true;
  static constexpr std::string_view kName = "counting";
  static BigCount zero() { return 0; }
  static BigCount one() { return 1; }
  static BigCount plus(const BigCount& a, const BigCount& b) { return a + b; }
  static BigCount times(const BigCount& a, const BigCount& b) { return a * b; }
  static void plus_into(BigCount& a, const BigCount& b) { a += b; }
  /// Indicator factors are 0 or 1 on either side, so skip the big multiply
  /// for those.
  static void times_into(BigCount& a, const BigCount& b) {
    if (a.is_zero() || b == 1) return;
    if (b.is_zero()) {
      a = 0;
    } else if (a == 1) {
      a = b;
    } else {
      a *= b;
    }
  }
  static bool is_zero(const BigCount& a) { return a.is_zero(); }
  static BigCount indicator(bool satisfied) { return satisfied ? 1 : 0; }
};

/// A value eps^exponent kept symbolic; the zero element is eps^infinity.
struct EpsilonPower {
  static constexpr std::uint64_t kInfinity =
      std::numeric_limits<std::uint64_t>::max();

  std::uint64_t exponent = 0;

  bool is_zero() const { return exponent == kInfinity; }

  /// Numeric value for a concrete eps in [0, 1), with 0^0 = 1.
  double value(double epsilon) const {
    if (is_zero()) return 0.0;
    if (exponent == 0) return 1.0;
    if (epsilon == 0.0) return 0.0;
    return std::pow(epsilon, static_cast<double>(exponent));
  }

  friend bool operator==(const EpsilonPower&, const EpsilonPower&) = default;
};

/// max / x over {eps^k}. Since eps < 1, max picks the smaller exponent and x
/// adds exponents, so the semiring is exact for every eps in [0, 1).
struct MaxProductSemiring {
  using value_type = EpsilonPower;
  static constexpr bool kExactOnly = false;
  static constexpr std::string_view kName = "max-product";
  static EpsilonPower zero() { return {EpsilonPower::kInfinity}; }
  static EpsilonPower one() { return {0}; }
  static EpsilonPower plus(EpsilonPower a, EpsilonPower b) {
    return {std::min(a.exponent, b.exponent)};
  }
  static EpsilonPower times(EpsilonPower a, EpsilonPower b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.exponent + b.exponent};
  }
  static void plus_into(EpsilonPower& a, EpsilonPower b) { a = plus(a, b); }
  static void times_into(EpsilonPower& a, EpsilonPower b) { a = times(a, b); }
  static bool is_zero(EpsilonPower a) { return a.is_zero(); }
  static EpsilonPower indicator(bool satisfied) {
    return {satisfied ? 0u : 1u};
  }
  /// True when a is at least as large as b in the semiring order.
  static bool better_or_equal(EpsilonPower a, EpsilonPower b) {
    return a.exponent <= b.exponent;
  }
};

static_assert(Semiring<BooleanSemiring>);
static_assert(Semiring<CountingSemiring>);
static_assert(Semiring<MaxProductSemiring>);

inline std::string to_string(const BigCount& value) { return value.str(); }

}  // namespace ggpne

#endif  // GGPNE_SEMIRING_HPP_

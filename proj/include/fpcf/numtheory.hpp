#pragma once

// Elementary number theory: divisors, the Moebius function, sigma(n), lcm.
// Everything works on std::uint64_t and reports overflow instead of wrapping.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpcf/errors.hpp"

namespace fpcf::nt {

namespace detail {

inline void require_positive(std::uint64_t n, const char *what) {
  if (n == 0)
    throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

} // namespace detail

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("addition overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("multiplication overflows 64 bits");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("signed addition overflows 64 bits");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("signed subtraction overflows 64 bits");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("signed multiplication overflows 64 bits");
  return r;
}

/// Converts an unsigned count to signed, throwing if it does not fit.
inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX))
    throw OverflowError("value " + std::to_string(v) + " exceeds the signed 64-bit range");
  return static_cast<std::int64_t>(v);
}

/// Value of the Moebius function; always -1, 0 or +1.
class MobiusValue {
public:
  constexpr MobiusValue() = default;
  constexpr explicit MobiusValue(int v) : value_(static_cast<signed char>(v)) {
    if (v < -1 || v > 1)
      throw std::invalid_argument("Moebius value must be -1, 0 or +1");
  }

  constexpr int value() const noexcept { return value_; }
  constexpr explicit operator int() const noexcept { return value_; }

  friend constexpr bool operator==(MobiusValue, MobiusValue) = default;

private:
  signed char value_ = 1;
};

/// All positive divisors of n in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  detail::require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0)
      continue;
    small.push_back(d);
    if (d != n / d)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// mu(n) by trial-division factorization.
inline MobiusValue mobius(std::uint64_t n) {
  detail::require_positive(n, "mobius");
  int sign = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return MobiusValue(0);
    sign = -sign;
  }
  if (n > 1)
    sign = -sign;
  return MobiusValue(sign);
}

/// mu(1..K) via a linear sieve. Index 0 of the result is mu(1).
inline std::vector<MobiusValue> mobius_sieve(std::uint64_t K) {
  detail::require_positive(K, "mobius_sieve");
  // mu[i] for i >= 2 is filled in below; mu[0] is unused.
  std::vector<signed char> mu(K + 1, 1);
  std::vector<bool> composite(K + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= K; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (p > K / i)
        break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = static_cast<signed char>(-mu[i]);
    }
  }
  std::vector<MobiusValue> out;
  out.reserve(K);
  for (std::uint64_t i = 1; i <= K; ++i)
    out.emplace_back(mu[i]);
  return out;
}

/// sigma(n), the sum of the positive divisors of n.
inline std::uint64_t sum_of_divisors(std::uint64_t n) {
  detail::require_positive(n, "sum_of_divisors");
  std::uint64_t total = 0;
  for (std::uint64_t d : divisors(n))
    total = checked_add(total, d);
  return total;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

/// Least common multiple of a nonempty list of positive integers.
/// Throws OverflowError when the result exceeds 64 bits.
inline std::uint64_t lcm_all(std::span<const std::uint64_t> values) {
  if (values.empty())
    throw std::invalid_argument("lcm_all: empty list");
  std::uint64_t acc = 1;
  for (std::uint64_t v : values) {
    detail::require_positive(v, "lcm_all");
    acc = checked_lcm(acc, v);
  }
  return acc;
}

} // namespace fpcf::nt

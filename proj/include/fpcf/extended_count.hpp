#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fpcf/numtheory.hpp"

namespace fpcf {

/// A count in N_0 extended by a single absorbing infinity.
///
/// Infinity compares greater than every finite count and equal to itself.
/// Finite arithmetic is checked; overflow throws OverflowError.
class ExtendedCount {
public:
  constexpr ExtendedCount() = default;
  constexpr explicit ExtendedCount(std::uint64_t n) : value_(n) {}

  static constexpr ExtendedCount infinite() {
    ExtendedCount c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

  /// The finite value; throws std::domain_error on infinity.
  std::uint64_t value() const {
    if (infinite_)
      throw std::domain_error("ExtendedCount::value() called on infinity");
    return value_;
  }

  ExtendedCount &operator+=(ExtendedCount rhs) {
    if (infinite_ || rhs.infinite_)
      *this = infinite();
    else
      value_ = nt::checked_add(value_, rhs.value_);
    return *this;
  }

  friend ExtendedCount operator+(ExtendedCount a, ExtendedCount b) { return a += b; }

  /// Multiplication by a finite factor. 0 * infinity is taken to be 0, which
  /// is what the divisor sums need (an absent length contributes nothing).
  ExtendedCount times(std::uint64_t factor) const {
    if (factor == 0)
      return ExtendedCount(0);
    if (infinite_)
      return infinite();
    return ExtendedCount(nt::checked_mul(value_, factor));
  }

  friend constexpr bool operator==(ExtendedCount a, ExtendedCount b) noexcept {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend constexpr std::strong_ordering operator<=>(ExtendedCount a, ExtendedCount b) noexcept {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend bool operator==(ExtendedCount a, std::uint64_t b) noexcept {
    return a.is_finite() && a.value_ == b;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream &operator<<(std::ostream &os, ExtendedCount c) { return os << c.to_string(); }

private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtendedCount kInfinity = ExtendedCount::infinite();

} // namespace fpcf

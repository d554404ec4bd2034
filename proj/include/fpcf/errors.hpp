#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpcf {

/// Arithmetic result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string &what) : std::overflow_error(what) {}
};

/// A window value is infinite where a finite arithmetic function is required.
class InfiniteValueError : public std::domain_error {
public:
  explicit InfiniteValueError(std::uint64_t k)
      : std::domain_error("window value at k=" + std::to_string(k) +
                          " is infinite; the cycle census is not uniquely "
                          "determined by a function taking infinite values"),
        k_(k) {}

  std::uint64_t k() const noexcept { return k_; }

private:
  std::uint64_t k_;
};

/// The Moebius sum at some length is negative or not divisible by the length.
class NotACountingFunctionError : public std::domain_error {
public:
  enum class Reason { NegativeSum, NonDivisible };

  NotACountingFunctionError(std::uint64_t ell, Reason reason, std::int64_t mobius_sum)
      : std::domain_error(describe(ell, reason, mobius_sum)), ell_(ell),
        reason_(reason), sum_(mobius_sum) {}

  std::uint64_t ell() const noexcept { return ell_; }
  Reason reason() const noexcept { return reason_; }
  std::int64_t mobius_sum() const noexcept { return sum_; }

private:
  static std::string describe(std::uint64_t ell, Reason reason, std::int64_t sum) {
    std::string msg = "not a fixed point counting function at length " + std::to_string(ell) +
                      ": Moebius sum " + std::to_string(sum);
    msg += reason == Reason::NegativeSum ? " is negative" : " is not divisible by the length";
    return msg;
  }

  std::uint64_t ell_;
  Reason reason_;
  std::int64_t sum_;
};

/// Malformed textual input. `position()` is a 0-based character offset
/// (or a 1-based line number for line-oriented formats, see `line()`).
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &what, std::size_t position, std::size_t line = 0)
      : std::invalid_argument(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t position_;
  std::size_t line_;
};

} // namespace fpcf

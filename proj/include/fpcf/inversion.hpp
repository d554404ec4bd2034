#pragma once

// Recovering the cycle census from F by Moebius inversion, and checking
// whether a window can be a fixed point counting function at all.
//
//   l * C(l) = sum_{k | l} mu(l / k) F(k)
//
// F is blind to infinite cycles, so the recovered census always reports
// zero infinite cycles.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpcf/census.hpp"
#include "fpcf/errors.hpp"
#include "fpcf/numtheory.hpp"

namespace fpcf {

namespace detail {

inline std::vector<std::int64_t> finite_values_or_throw(const FpcfWindow &window) {
  if (auto k = window.first_infinite())
    throw InfiniteValueError(k);
  std::vector<std::int64_t> out;
  out.reserve(window.bound());
  for (const auto &v : window.values())
    out.push_back(nt::to_signed(v.value()));
  return out;
}

} // namespace detail

/// sums[l-1] = sum_{k | l} mu(l/k) f(k) for l = 1..f.size().
inline std::vector<std::int64_t> mobius_sums(std::span<const std::int64_t> f) {
  const std::uint64_t K = f.size();
  std::vector<std::int64_t> sums(K, 0);
  if (K == 0)
    return sums;
  const auto mu = nt::mobius_sieve(K);
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (f[k - 1] == 0)
      continue;
    for (std::uint64_t d = 1; d <= K / k; ++d) {
      const int m = mu[d - 1].value();
      if (m == 0)
        continue;
      auto &slot = sums[k * d - 1];
      slot = m > 0 ? nt::checked_add(slot, f[k - 1]) : nt::checked_sub(slot, f[k - 1]);
    }
  }
  return sums;
}

/// The census whose F agrees with `window` on 1..K.
///
/// Throws InfiniteValueError if the window holds infinity (F does not determine
/// the census then), and NotACountingFunctionError at the first length whose
/// Moebius sum is negative or not divisible by the length.
inline CycleCensus census_from_fpcf(const FpcfWindow &window) {
  const auto f = detail::finite_values_or_throw(window);
  const auto sums = mobius_sums(f);
  CycleCensus out;
  for (std::uint64_t ell = 1; ell <= sums.size(); ++ell) {
    const std::int64_t s = sums[ell - 1];
    using R = NotACountingFunctionError::Reason;
    if (s < 0)
      throw NotACountingFunctionError(ell, R::NegativeSum, s);
    if (s % static_cast<std::int64_t>(ell) != 0)
      throw NotACountingFunctionError(ell, R::NonDivisible, s);
    if (s > 0)
      out.set(ell, ExtendedCount(static_cast<std::uint64_t>(s) / ell));
  }
  return out;
}

struct MobiusCheck {
  std::uint64_t ell = 0;
  std::int64_t mobius_sum = 0;
  bool nonnegative = true;
  bool divisible = true;

  bool ok() const noexcept { return nonnegative && divisible; }
};

/// A pair with F(multiple) < F(ell) where ell divides multiple.
struct MonotonicityFailure {
  std::uint64_t ell = 0;
  std::uint64_t multiple = 0;
};

/// Outcome of checking a window against the characterization of fixed point
/// counting functions. Conclusions only cover 1..K.
struct ValidationReport {
  std::vector<MobiusCheck> checks;
  bool monotone = true;
  std::optional<MonotonicityFailure> monotonicity_failure;

  bool valid() const noexcept { return monotone && !first_failure().has_value(); }

  /// Smallest length failing nonnegativity or divisibility.
  std::optional<MobiusCheck> first_failure() const noexcept {
    for (const auto &c : checks)
      if (!c.ok())
        return c;
    return std::nullopt;
  }
};

/// Checks, for every l <= K, that the Moebius sum is >= 0 and divisible by l,
/// and that F(d l) >= F(l) whenever d l <= K.
///
/// The divisibility-monotonicity condition is implied by the other two on any
/// window, but it is reported separately since it is the easiest to read off.
inline ValidationReport validate_fpcf_window(const FpcfWindow &window) {
  const auto f = detail::finite_values_or_throw(window);
  const auto sums = mobius_sums(f);
  ValidationReport report;
  report.checks.reserve(sums.size());
  for (std::uint64_t ell = 1; ell <= sums.size(); ++ell) {
    const std::int64_t s = sums[ell - 1];
    report.checks.push_back(
        {ell, s, s >= 0, s % static_cast<std::int64_t>(ell) == 0});
  }
  const std::uint64_t K = f.size();
  for (std::uint64_t ell = 1; ell <= K && report.monotone; ++ell) {
    for (std::uint64_t m = 2 * ell; m <= K; m += ell) {
      if (f[m - 1] < f[ell - 1]) {
        report.monotone = false;
        report.monotonicity_failure = MonotonicityFailure{ell, m};
        break;
      }
    }
  }
  return report;
}

} // namespace fpcf

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpcf/census.hpp"
#include "fpcf/numtheory.hpp"

namespace fpcf {

/// A period of F: the lcm of the finite cycle lengths, or 1 when there are
/// none (F is identically zero). Not necessarily the least period.
inline ExtendedCount period_bound(const CycleCensus &census) {
  if (census.empty_finite())
    return ExtendedCount(1);
  std::vector<std::uint64_t> lengths;
  lengths.reserve(census.finite_cycles().size());
  for (const auto &entry : census.finite_cycles())
    lengths.push_back(entry.first);
  return ExtendedCount(nt::lcm_all(lengths));
}

/// Least p <= K/2 with F(k + p) == F(k) for all k + p <= K, or nullopt.
///
/// Only evidence from the window: at least two full periods must fit, and a
/// function that is not periodic may still look periodic on a short prefix.
inline std::optional<std::uint64_t> minimal_period_window(const FpcfWindow &window) {
  const auto &v = window.values();
  const std::uint64_t K = v.size();
  for (std::uint64_t p = 1; p <= K / 2; ++p) {
    bool repeats = true;
    for (std::uint64_t i = 0; i + p < K; ++i) {
      if (!(v[i] == v[i + p])) {
        repeats = false;
        break;
      }
    }
    if (repeats)
      return p;
  }
  return std::nullopt;
}

} // namespace fpcf

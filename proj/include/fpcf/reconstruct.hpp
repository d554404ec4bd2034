#pragma once

// Greedy reconstruction of a cycle census from a fixed point counting
// function. Each round takes the least l with positive residual f(l),
// sets q = f(l) / l, and subtracts q*l from f at every multiple of l.
// The run fails as soon as a residual is negative, f(l) is not a multiple
// of l, or a subtraction would drive some f(d*l) below zero.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpcf/census.hpp"
#include "fpcf/errors.hpp"
#include "fpcf/inversion.hpp"
#include "fpcf/numtheory.hpp"

namespace fpcf {

struct ReconstructionStep {
  std::uint64_t ell = 0;
  std::uint64_t q = 0;

  friend bool operator==(const ReconstructionStep &, const ReconstructionStep &) = default;
};

enum class InvalidReason { NegativeValue, NonDivisible, MonotonicityViolation };

inline std::string_view to_string(InvalidReason r) {
  switch (r) {
  case InvalidReason::NegativeValue:
    return "NegativeValue";
  case InvalidReason::NonDivisible:
    return "NonDivisible";
  case InvalidReason::MonotonicityViolation:
    return "MonotonicityViolation";
  }
  return "?";
}

/// Whether the window is the whole function or only a prefix of a longer one.
enum class Truncation { WholeFunction, Prefix };

struct ReconstructionResult {
  enum class Status { CompleteFinite, PartialWindow, Invalid };

  std::vector<ReconstructionStep> steps;
  Status status = Status::CompleteFinite;
  /// CompleteFinite: sum of q*l, i.e. the size of the ground set.
  std::uint64_t total = 0;
  /// PartialWindow: the window bound. Also the bound up to which the
  /// "for all d" monotonicity check was carried out.
  std::uint64_t window_bound = 0;
  /// Invalid only.
  std::optional<InvalidReason> reason;
  std::uint64_t at = 0;

  bool ok() const noexcept { return status != Status::Invalid; }
  bool zero_function() const noexcept { return ok() && steps.empty(); }

  /// {l_j : q_j}; C(l_j) = q_j.
  CycleCensus census() const {
    CycleCensus c;
    for (const auto &s : steps)
      c.set(s.ell, ExtendedCount(s.q));
    return c;
  }
};

/// Optional per-step hook, called with the step just taken and the residual
/// f_{j+1} on 1..K.
using ReconstructObserver =
    std::function<void(const ReconstructionStep &, std::span<const std::int64_t>)>;

/// Greedy reconstruction on an integer-valued window f(1..K).
inline ReconstructionResult reconstruct_values(std::span<const std::int64_t> f,
                                               Truncation truncation = Truncation::WholeFunction,
                                               const ReconstructObserver &observer = {}) {
  const std::uint64_t K = f.size();
  if (K == 0)
    throw std::invalid_argument("reconstruct: empty window");

  using Status = ReconstructionResult::Status;
  ReconstructionResult result;
  result.window_bound = K;
  auto fail = [&](InvalidReason why, std::uint64_t at) {
    result.status = Status::Invalid;
    result.reason = why;
    result.at = at;
    return result;
  };

  std::vector<std::int64_t> residual(f.begin(), f.end());
  for (std::uint64_t k = 1; k <= K; ++k)
    if (residual[k - 1] < 0)
      return fail(InvalidReason::NegativeValue, k);

  // Everything below `start` is known to be zero after the previous step.
  std::uint64_t start = 1;
  std::uint64_t total = 0;
  for (;;) {
    std::uint64_t ell = start;
    while (ell <= K && residual[ell - 1] == 0)
      ++ell;
    if (ell > K)
      break;

    const std::int64_t head = residual[ell - 1];
    const auto ell_s = static_cast<std::int64_t>(ell);
    if (head % ell_s != 0)
      return fail(InvalidReason::NonDivisible, ell);
    for (std::uint64_t m = 2 * ell; m <= K; m += ell)
      if (residual[m - 1] < head)
        return fail(InvalidReason::MonotonicityViolation, m);

    for (std::uint64_t m = ell; m <= K; m += ell)
      residual[m - 1] -= head;
    // Entries off the multiples of ell are untouched and were nonnegative.

    const ReconstructionStep step{ell, static_cast<std::uint64_t>(head / ell_s)};
    result.steps.push_back(step);
    total = nt::checked_add(total, static_cast<std::uint64_t>(head));
    if (observer)
      observer(step, residual);
    start = ell + 1;
  }

  if (truncation == Truncation::Prefix) {
    result.status = Status::PartialWindow;
  } else {
    result.status = Status::CompleteFinite;
    result.total = total;
  }
  return result;
}

/// Greedy reconstruction on a window. Refuses windows holding infinity, since
/// then F does not determine the census.
inline ReconstructionResult reconstruct(const FpcfWindow &window,
                                        Truncation truncation = Truncation::WholeFunction) {
  const auto f = detail::finite_values_or_throw(window);
  return reconstruct_values(f, truncation);
}

/// True iff greedy reconstruction and Moebius inversion produce the same
/// census on 1..K, or both reject the window.
inline bool agree_with_inversion(const FpcfWindow &window) {
  const auto greedy = reconstruct(window);
  std::optional<CycleCensus> mobius;
  try {
    mobius = census_from_fpcf(window);
  } catch (const NotACountingFunctionError &) {
  }
  if (!greedy.ok() || !mobius)
    return !greedy.ok() && !mobius;
  return greedy.census() == *mobius;
}

} // namespace fpcf

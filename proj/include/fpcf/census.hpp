#pragma once

// Cycle census of a permutation and the fixed point counting function it
// induces: F(k) = sum over l | k of l * C(l). Infinite cycles are carried
// along but never contribute fixed points.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpcf/extended_count.hpp"
#include "fpcf/numtheory.hpp"

namespace fpcf {

/// Number of cycles of each finite length, plus the number of infinite cycles.
/// Only lengths with a nonzero count are stored.
class CycleCensus {
public:
  using Map = std::map<std::uint64_t, ExtendedCount>;

  CycleCensus() = default;

  CycleCensus(std::initializer_list<std::pair<const std::uint64_t, ExtendedCount>> cycles,
              ExtendedCount infinite_cycles = ExtendedCount(0))
      : infinite_(infinite_cycles) {
    for (const auto &[len, count] : cycles)
      set(len, count);
  }

  /// Sets the count for `length`; a zero count erases the entry.
  void set(std::uint64_t length, ExtendedCount count) {
    if (length == 0)
      throw std::invalid_argument("cycle length must be positive");
    if (count.is_zero())
      cycles_.erase(length);
    else
      cycles_[length] = count;
  }

  void add(std::uint64_t length, ExtendedCount count) { set(length, this->count(length) + count); }

  ExtendedCount count(std::uint64_t length) const {
    auto it = cycles_.find(length);
    return it == cycles_.end() ? ExtendedCount(0) : it->second;
  }

  const Map &finite_cycles() const noexcept { return cycles_; }
  ExtendedCount infinite_cycles() const noexcept { return infinite_; }
  void set_infinite_cycles(ExtendedCount c) { infinite_ = c; }

  bool empty_finite() const noexcept { return cycles_.empty(); }

  std::uint64_t max_length() const { return cycles_.empty() ? 0 : cycles_.rbegin()->first; }

  /// The census with every length above `bound` dropped.
  CycleCensus restricted_to(std::uint64_t bound) const {
    CycleCensus out;
    out.infinite_ = infinite_;
    for (const auto &[len, count] : cycles_) {
      if (len > bound)
        break;
      out.cycles_.emplace(len, count);
    }
    return out;
  }

  friend bool operator==(const CycleCensus &, const CycleCensus &) = default;

  friend std::ostream &operator<<(std::ostream &os, const CycleCensus &c) {
    os << '{';
    bool first = true;
    for (const auto &[len, count] : c.cycles_) {
      os << (first ? "" : ",") << len << ':' << count;
      first = false;
    }
    return os << "} inf=" << c.infinite_;
  }

private:
  Map cycles_;
  ExtendedCount infinite_{0};
};

/// Values F(1..K) of a fixed point counting function.
class FpcfWindow {
public:
  explicit FpcfWindow(std::vector<ExtendedCount> values) : values_(std::move(values)) {
    if (values_.empty())
      throw std::invalid_argument("a window needs at least one value (K >= 1)");
  }

  static FpcfWindow from_finite(std::initializer_list<std::uint64_t> values) {
    return from_finite(std::vector<std::uint64_t>(values));
  }

  static FpcfWindow from_finite(const std::vector<std::uint64_t> &values) {
    std::vector<ExtendedCount> v;
    v.reserve(values.size());
    for (auto x : values)
      v.emplace_back(x);
    return FpcfWindow(std::move(v));
  }

  std::uint64_t bound() const noexcept { return values_.size(); }

  /// F(k), 1-indexed.
  ExtendedCount at(std::uint64_t k) const {
    if (k == 0 || k > values_.size())
      throw std::out_of_range("window index " + std::to_string(k) + " outside 1.." +
                              std::to_string(values_.size()));
    return values_[k - 1];
  }

  const std::vector<ExtendedCount> &values() const noexcept { return values_; }

  /// First k whose value is infinite, or 0 if all values are finite.
  std::uint64_t first_infinite() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i].is_infinite())
        return i + 1;
    return 0;
  }

  friend bool operator==(const FpcfWindow &, const FpcfWindow &) = default;

  friend std::ostream &operator<<(std::ostream &os, const FpcfWindow &w) {
    os << '[';
    for (std::size_t i = 0; i < w.values_.size(); ++i)
      os << (i ? "," : "") << w.values_[i];
    return os << ']';
  }

private:
  std::vector<ExtendedCount> values_;
};

struct CensusClassification {
  bool finite_type = false;
  bool infinite_type = false;
  /// Always true for a CycleCensus: the stored support is finite.
  bool bounded = true;
  bool finite_multiplicity = true;

  friend bool operator==(const CensusClassification &, const CensusClassification &) = default;
};

/// F(k) = sum_{l | k} l * C(l). Infinite cycles contribute nothing.
inline ExtendedCount fpcf_from_census(const CycleCensus &census, std::uint64_t k) {
  if (k == 0)
    throw std::invalid_argument("fpcf_from_census: k must be positive");
  ExtendedCount total(0);
  for (const auto &[len, count] : census.finite_cycles()) {
    if (len > k)
      break;
    if (k % len == 0)
      total += count.times(len);
  }
  return total;
}

/// F(1..K), computed by scattering each length over its multiples.
inline FpcfWindow fpcf_window(const CycleCensus &census, std::uint64_t K) {
  if (K == 0)
    throw std::invalid_argument("fpcf_window: K must be positive");
  std::vector<ExtendedCount> values(K, ExtendedCount(0));
  for (const auto &[len, count] : census.finite_cycles()) {
    if (len > K)
      break;
    const ExtendedCount contribution = count.times(len);
    for (std::uint64_t m = len; m <= K; m += len)
      values[m - 1] += contribution;
  }
  return FpcfWindow(std::move(values));
}

/// True iff some divisor l of k has infinitely many l-cycles.
inline bool is_fpcf_infinite_at(const CycleCensus &census, std::uint64_t k) {
  if (k == 0)
    throw std::invalid_argument("is_fpcf_infinite_at: k must be positive");
  return std::ranges::any_of(census.finite_cycles(), [k](const auto &entry) {
    return entry.first <= k && k % entry.first == 0 && entry.second.is_infinite();
  });
}

/// Type predicates. A census with no cycles at all is neither finite nor
/// infinite type.
inline CensusClassification classify(const CycleCensus &census) {
  CensusClassification c;
  const bool has_finite = !census.empty_finite();
  const bool has_infinite = !census.infinite_cycles().is_zero();
  c.finite_type = has_finite && !has_infinite;
  c.infinite_type = has_infinite && !has_finite;
  c.bounded = true;
  c.finite_multiplicity = std::ranges::none_of(
      census.finite_cycles(), [](const auto &entry) { return entry.second.is_infinite(); });
  return c;
}

/// Census of the disjoint union of two permutations.
inline CycleCensus census_union(const CycleCensus &a, const CycleCensus &b) {
  CycleCensus out = a;
  for (const auto &[len, count] : b.finite_cycles())
    out.add(len, count);
  out.set_infinite_cycles(a.infinite_cycles() + b.infinite_cycles());
  return out;
}

} // namespace fpcf

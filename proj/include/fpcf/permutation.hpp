#pragma once

// Explicit permutations of {1..n}. These serve as the brute-force side of
// every cross-check: fixed points are counted by actually composing the
// permutation with itself, never through cycle lengths.

#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpcf/census.hpp"
#include "fpcf/errors.hpp"
#include "fpcf/numtheory.hpp"

namespace fpcf {

/// A bijection of {1..n}; image()[i-1] holds sigma(i).
class ExplicitPermutation {
public:
  using Element = std::uint32_t;

  explicit ExplicitPermutation(std::vector<Element> image) : image_(std::move(image)) {
    if (image_.empty())
      throw std::invalid_argument("permutation needs a nonempty ground set");
    std::vector<bool> seen(image_.size() + 1, false);
    for (Element v : image_) {
      if (v == 0 || v > image_.size() || seen[v])
        throw std::invalid_argument("image is not a bijection of {1.." +
                                    std::to_string(image_.size()) + "}");
      seen[v] = true;
    }
  }

  static ExplicitPermutation identity(std::size_t n) {
    std::vector<Element> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = static_cast<Element>(i + 1);
    return ExplicitPermutation(std::move(img));
  }

  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<Element> &image() const noexcept { return image_; }

  Element operator()(Element x) const { return image_.at(x - 1); }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i + 1)
        return false;
    return true;
  }

  /// (*this after other)(x) = this(other(x)).
  ExplicitPermutation after(const ExplicitPermutation &other) const {
    if (other.size() != size())
      throw std::invalid_argument("composing permutations of different degree");
    std::vector<Element> img(size());
    for (std::size_t i = 0; i < size(); ++i)
      img[i] = image_[other.image_[i] - 1];
    return ExplicitPermutation(std::move(img));
  }

  friend bool operator==(const ExplicitPermutation &, const ExplicitPermutation &) = default;

private:
  std::vector<Element> image_;
};

/// Disjoint cycles covering {1..n}, fixed points included. Each cycle starts
/// at its least element and cycles are ordered by that element.
struct CycleDecomposition {
  std::vector<std::vector<ExplicitPermutation::Element>> cycles;

  friend bool operator==(const CycleDecomposition &, const CycleDecomposition &) = default;
};

namespace detail {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t n) : text_(text), n_(n), used_(n + 1, false) {}

  std::vector<ExplicitPermutation::Element> run() {
    std::vector<ExplicitPermutation::Element> image(n_);
    for (std::size_t i = 0; i < n_; ++i)
      image[i] = static_cast<ExplicitPermutation::Element>(i + 1);
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(')
        fail("expected '('");
      ++pos_;
      auto cycle = read_cycle();
      for (std::size_t i = 0; i < cycle.size(); ++i)
        image[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return image;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("cycle notation, position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  ExplicitPermutation::Element read_int() {
    const std::size_t begin = pos_;
    if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9')
      fail("expected a positive integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > n_) {
        pos_ = begin;
        fail("element out of range 1.." + std::to_string(n_));
      }
      ++pos_;
    }
    if (used_[v]) {
      pos_ = begin;
      fail("duplicate element " + std::to_string(v));
    }
    used_[v] = true;
    return static_cast<ExplicitPermutation::Element>(v);
  }

  std::vector<ExplicitPermutation::Element> read_cycle() {
    std::vector<ExplicitPermutation::Element> cycle;
    skip_ws();
    cycle.push_back(read_int());
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size())
        fail("unterminated cycle, expected ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        return cycle;
      }
      if (text_[pos_] == ',') {
        ++pos_;
        skip_ws();
      }
      cycle.push_back(read_int());
    }
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::vector<bool> used_;
};

} // namespace detail

/// Parses cycle notation such as "(1)(2,3)(4 5 6)" on {1..n}. Elements not
/// mentioned are fixed. Throws ParseError with the offending offset.
inline ExplicitPermutation parse_cycles(std::string_view text, std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("parse_cycles: n must be positive");
  return ExplicitPermutation(detail::CycleParser(text, n).run());
}

/// Largest integer mentioned in cycle notation (0 if none); used to pick a
/// default ground set size.
inline std::size_t max_element_in(std::string_view text) {
  std::size_t best = 0;
  std::size_t cur = 0;
  bool in_number = false;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t next = cur * 10 + static_cast<std::size_t>(ch - '0');
      if (next < cur)
        throw ParseError("cycle notation: integer too large", 0);
      cur = next;
      in_number = true;
    } else {
      if (in_number && cur > best)
        best = cur;
      cur = 0;
      in_number = false;
    }
  }
  return in_number && cur > best ? cur : best;
}

inline CycleDecomposition decompose(const ExplicitPermutation &perm) {
  CycleDecomposition out;
  std::vector<bool> seen(perm.size() + 1, false);
  for (ExplicitPermutation::Element start = 1; start <= perm.size(); ++start) {
    if (seen[start])
      continue;
    auto &cycle = out.cycles.emplace_back();
    for (auto x = start; !seen[x]; x = perm(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return out;
}

/// "(1)(2,3)(4,5,6)"; singletons are written out.
inline std::string render(const CycleDecomposition &d) {
  std::string out;
  for (const auto &cycle : d.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

inline CycleCensus census_of(const ExplicitPermutation &perm) {
  CycleCensus c;
  for (const auto &cycle : decompose(perm).cycles)
    c.add(cycle.size(), ExtendedCount(1));
  return c;
}

/// sigma^k by repeated squaring of compositions.
inline ExplicitPermutation power(const ExplicitPermutation &perm, std::uint64_t k) {
  auto result = ExplicitPermutation::identity(perm.size());
  auto base = perm;
  while (k > 0) {
    if (k & 1)
      result = result.after(base);
    k >>= 1;
    if (k)
      base = base.after(base);
  }
  return result;
}

inline std::uint64_t count_fixed_points(const ExplicitPermutation &perm) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    n += perm.image()[i] == i + 1;
  return n;
}

/// Number of x with sigma^k(x) = x, computed from sigma^k itself.
inline std::uint64_t brute_force_fixed_points(const ExplicitPermutation &perm, std::uint64_t k) {
  if (k == 0)
    throw std::invalid_argument("brute_force_fixed_points: k must be positive");
  return count_fixed_points(power(perm, k));
}

/// Fixed point counts of sigma, sigma^2, ..., sigma^K by literal iteration.
inline FpcfWindow brute_force_window(const ExplicitPermutation &perm, std::uint64_t K) {
  if (K == 0)
    throw std::invalid_argument("brute_force_window: K must be positive");
  std::vector<ExtendedCount> values;
  values.reserve(K);
  auto current = perm;
  for (std::uint64_t k = 1; k <= K; ++k) {
    values.emplace_back(count_fixed_points(current));
    if (k < K)
      current = perm.after(current);
  }
  return FpcfWindow(std::move(values));
}

/// Order of sigma in S_n: the lcm of its cycle lengths.
inline std::uint64_t order_of(const ExplicitPermutation &perm) {
  const auto census = census_of(perm);
  std::vector<std::uint64_t> lengths;
  for (const auto &entry : census.finite_cycles())
    lengths.push_back(entry.first);
  return nt::lcm_all(lengths);
}

} // namespace fpcf

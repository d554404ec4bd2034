#pragma once

// Five standard permutations of N, represented by their censuses truncated
// to lengths <= K together with their known fixed point counts on 1..K.
//
//   sigma0 = (1)(2,3)(4,5,6)(7,8,9,10)...        one cycle of every length
//   sigma1 = (1,2)(3,4)(5,6)...                  infinitely many 2-cycles
//   sigma2 = (1,2,3,4)(5,6)(7,8)...              one 4-cycle, infinitely many 2-cycles
//   sigma3 = (1,2)(3,4,5,6)(7,8)(9,10,11,12)...  infinitely many 2- and 4-cycles
//   sigma4 = (..,15,9,3,6,12,18,..)(1,2)(4,5)... one infinite cycle, infinitely many 2-cycles
//
// sigma1..sigma4 are pairwise non-conjugate but share F(k) = 0 for odd k and
// infinity for even k.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpcf/census.hpp"
#include "fpcf/numtheory.hpp"
#include "fpcf/permutation.hpp"

namespace fpcf {

enum class FixtureName { Sigma0, Sigma1, Sigma2, Sigma3, Sigma4 };

inline constexpr std::array<FixtureName, 5> kAllFixtures{
    FixtureName::Sigma0, FixtureName::Sigma1, FixtureName::Sigma2, FixtureName::Sigma3,
    FixtureName::Sigma4};

inline std::string_view to_string(FixtureName name) {
  constexpr std::array<std::string_view, 5> names{"sigma0", "sigma1", "sigma2", "sigma3",
                                                  "sigma4"};
  return names[static_cast<std::size_t>(name)];
}

inline FixtureName parse_fixture_name(std::string_view s) {
  for (auto name : kAllFixtures)
    if (to_string(name) == s)
      return name;
  throw std::invalid_argument("unknown fixture '" + std::string(s) +
                              "' (expected sigma0..sigma4)");
}

struct Fixture {
  CycleCensus census;
  FpcfWindow expected;
};

inline Fixture fixture(FixtureName name, std::uint64_t K) {
  if (K == 0)
    throw std::invalid_argument("fixture: K must be positive");
  std::vector<ExtendedCount> values(K);
  if (name == FixtureName::Sigma0) {
    CycleCensus census;
    for (std::uint64_t ell = 1; ell <= K; ++ell) {
      census.set(ell, ExtendedCount(1));
      values[ell - 1] = ExtendedCount(nt::sum_of_divisors(ell));
    }
    return {std::move(census), FpcfWindow(std::move(values))};
  }

  for (std::uint64_t k = 1; k <= K; ++k)
    values[k - 1] = k % 2 == 0 ? kInfinity : ExtendedCount(0);
  CycleCensus census;
  census.set(2, kInfinity);
  switch (name) {
  case FixtureName::Sigma2:
    census.set(4, ExtendedCount(1));
    break;
  case FixtureName::Sigma3:
    census.set(4, kInfinity);
    break;
  case FixtureName::Sigma4:
    census.set_infinite_cycles(ExtendedCount(1));
    break;
  default:
    break;
  }
  return {census.restricted_to(K), FpcfWindow(std::move(values))};
}

inline Fixture fixture(std::string_view name, std::uint64_t K) {
  return fixture(parse_fixture_name(name), K);
}

/// The first `lengths` cycles of sigma0 as an explicit permutation of
/// {1..lengths*(lengths+1)/2}.
inline ExplicitPermutation sigma0_prefix(std::uint64_t lengths) {
  if (lengths == 0)
    throw std::invalid_argument("sigma0_prefix: need at least one cycle");
  const std::uint64_t n = lengths * (lengths + 1) / 2;
  std::vector<ExplicitPermutation::Element> image(n);
  std::uint64_t first = 1;
  for (std::uint64_t len = 1; len <= lengths; ++len) {
    for (std::uint64_t i = 0; i < len; ++i)
      image[first + i - 1] = static_cast<ExplicitPermutation::Element>(first + (i + 1) % len);
    first += len;
  }
  return ExplicitPermutation(std::move(image));
}

} // namespace fpcf

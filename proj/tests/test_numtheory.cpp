#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "fpcf/numtheory.hpp"
#include "oracles.hpp"

using namespace fpcf::nt;

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(7), (std::vector<std::uint64_t>{1, 7}));
  EXPECT_EQ(divisors(12), oracle::divisors(12));
}

TEST(Divisors, MatchesTrialDivisionAndPairing) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto d = divisors(n);
    ASSERT_EQ(d, oracle::divisors(n)) << n;
    for (std::size_t i = 0; i < d.size(); ++i)
      EXPECT_EQ(d[i] * d[d.size() - 1 - i], n);
  }
}

TEST(Divisors, RejectsZero) { EXPECT_THROW(divisors(0), std::invalid_argument); }

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1).value(), 1);
  EXPECT_EQ(mobius(6).value(), 1);
  EXPECT_EQ(mobius(12).value(), 0);
  EXPECT_THROW(mobius(0), std::invalid_argument);
}

TEST(Mobius, MatchesDefinition) {
  for (std::uint64_t n = 1; n <= 400; ++n)
    ASSERT_EQ(mobius(n).value(), oracle::mobius(n)) << n;
}

TEST(Mobius, LargePrimeFactor) {
  EXPECT_EQ(mobius(1000003).value(), -1);           // prime
  EXPECT_EQ(mobius(2ull * 1000003).value(), 1);
  EXPECT_EQ(mobius(1000003ull * 1000003).value(), 0);
}

TEST(MobiusValue, RejectsOutOfRange) {
  EXPECT_THROW(MobiusValue(2), std::invalid_argument);
  EXPECT_THROW(MobiusValue(-2), std::invalid_argument);
}

TEST(MobiusSieve, Examples) {
  auto as_ints = [](const std::vector<MobiusValue> &v) {
    std::vector<int> out;
    for (auto m : v)
      out.push_back(m.value());
    return out;
  };
  EXPECT_EQ(as_ints(mobius_sieve(1)), (std::vector<int>{1}));
  EXPECT_EQ(as_ints(mobius_sieve(6)), (std::vector<int>{1, -1, -1, 0, -1, 1}));
  EXPECT_EQ(mobius_sieve(10)[9 - 1].value(), 0);
  EXPECT_THROW(mobius_sieve(0), std::invalid_argument);
}

TEST(MobiusSieve, AgreesWithPointwise) {
  const auto sieve = mobius_sieve(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n)
    ASSERT_EQ(sieve[n - 1], mobius(n)) << n;
}

TEST(MobiusSieve, DivisorSumIsIndicatorOfOne) {
  const std::uint64_t K = 2000;
  const auto mu = mobius_sieve(K);
  for (std::uint64_t n = 1; n <= K; ++n) {
    int s = 0;
    for (auto d : divisors(n))
      s += mu[d - 1].value();
    ASSERT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(SumOfDivisors, Examples) {
  EXPECT_EQ(sum_of_divisors(1), 1u);
  EXPECT_EQ(sum_of_divisors(6), 12u);
  EXPECT_EQ(sum_of_divisors(8), 15u);
  EXPECT_THROW(sum_of_divisors(0), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 300; ++n)
    ASSERT_EQ(sum_of_divisors(n), oracle::sigma(n));
}

TEST(SumOfDivisors, MobiusInversionRecoversIdentity) {
  for (std::uint64_t ell = 1; ell <= 300; ++ell) {
    std::int64_t s = 0;
    for (auto k : divisors(ell))
      s += mobius(ell / k).value() * static_cast<std::int64_t>(sum_of_divisors(k));
    ASSERT_EQ(s, static_cast<std::int64_t>(ell));
  }
}

TEST(LcmAll, Examples) {
  const std::vector<std::uint64_t> a{2}, b{2, 3}, c{4, 6};
  EXPECT_EQ(lcm_all(a), 2u);
  EXPECT_EQ(lcm_all(b), 6u);
  EXPECT_EQ(lcm_all(c), 12u);
  EXPECT_EQ(lcm_all(c), oracle::lcm_search(c));
}

TEST(LcmAll, Errors) {
  EXPECT_THROW(lcm_all(std::vector<std::uint64_t>{}), std::invalid_argument);
  EXPECT_THROW(lcm_all(std::vector<std::uint64_t>{3, 0}), std::invalid_argument);
  std::vector<std::uint64_t> first_primes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  EXPECT_THROW(lcm_all(first_primes), fpcf::OverflowError);
}

TEST(LcmAll, RandomSmallListsMatchSearch) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> v(1, 12);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> xs(len(rng));
    for (auto &x : xs)
      x = v(rng);
    ASSERT_EQ(lcm_all(xs), oracle::lcm_search(xs));
  }
}

TEST(CheckedArithmetic, Overflow) {
  EXPECT_THROW(checked_add(UINT64_MAX, std::uint64_t{1}), fpcf::OverflowError);
  EXPECT_THROW(checked_mul(UINT64_MAX / 2 + 1, std::uint64_t{2}), fpcf::OverflowError);
  EXPECT_THROW(to_signed(UINT64_MAX), fpcf::OverflowError);
  EXPECT_EQ(checked_sub(std::int64_t{3}, std::int64_t{5}), -2);
}

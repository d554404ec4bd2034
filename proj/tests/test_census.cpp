#include <gtest/gtest.h>

#include <random>

#include "fpcf/census.hpp"
#include "fpcf/numtheory.hpp"
#include "oracles.hpp"

using namespace fpcf;

namespace {

ExtendedCount fin(std::uint64_t n) { return ExtendedCount(n); }

} // namespace

TEST(ExtendedCount, ArithmeticAndOrder) {
  EXPECT_EQ(fin(2) + fin(3), fin(5));
  EXPECT_EQ(fin(2) + kInfinity, kInfinity);
  EXPECT_EQ(kInfinity + kInfinity, kInfinity);
  EXPECT_LT(fin(7), kInfinity);
  EXPECT_LE(kInfinity, kInfinity);
  EXPECT_LT(fin(1), fin(2));
  EXPECT_FALSE(kInfinity < kInfinity);
  EXPECT_NE(fin(0), kInfinity);
  EXPECT_EQ(kInfinity.times(3), kInfinity);
  EXPECT_EQ(kInfinity.times(0), fin(0));
  EXPECT_THROW((void)kInfinity.value(), std::domain_error);
  EXPECT_THROW(fin(UINT64_MAX) + fin(1), OverflowError);
  EXPECT_EQ(kInfinity.to_string(), "inf");
}

TEST(CycleCensus, StoresOnlyNonzeroCounts) {
  CycleCensus c{{2, fin(1)}, {3, fin(0)}};
  EXPECT_EQ(c.finite_cycles().size(), 1u);
  c.set(2, fin(0));
  EXPECT_TRUE(c.empty_finite());
  EXPECT_THROW(c.set(0, fin(1)), std::invalid_argument);
  EXPECT_EQ(c.count(99), fin(0));
}

TEST(FpcfWindow, RejectsEmpty) {
  EXPECT_THROW(FpcfWindow(std::vector<ExtendedCount>{}), std::invalid_argument);
  const auto w = FpcfWindow::from_finite({4, 5});
  EXPECT_THROW((void)w.at(0), std::out_of_range);
  EXPECT_THROW((void)w.at(3), std::out_of_range);
}

TEST(FpcfFromCensus, InfiniteMultiplicityTwoCycles) {
  const CycleCensus c{{2, kInfinity}};
  EXPECT_EQ(fpcf_from_census(c, 3), fin(0));
  EXPECT_EQ(fpcf_from_census(c, 4), kInfinity);
}

TEST(FpcfFromCensus, SingleCycle) {
  for (std::uint64_t ell = 1; ell <= 12; ++ell) {
    const CycleCensus c{{ell, fin(1)}};
    for (std::uint64_t k = 1; k <= 40; ++k)
      EXPECT_EQ(fpcf_from_census(c, k), fin(k % ell == 0 ? ell : 0));
  }
}

TEST(FpcfFromCensus, AllOnesGivesSigma) {
  CycleCensus c;
  for (std::uint64_t ell = 1; ell <= 60; ++ell)
    c.set(ell, fin(1));
  for (std::uint64_t k = 1; k <= 60; ++k)
    EXPECT_EQ(fpcf_from_census(c, k), fin(nt::sum_of_divisors(k)));
}

TEST(FpcfFromCensus, EmptyAndInfiniteCyclesContributeNothing) {
  CycleCensus c;
  c.set_infinite_cycles(kInfinity);
  for (std::uint64_t k = 1; k <= 10; ++k)
    EXPECT_EQ(fpcf_from_census(c, k), fin(0));
  EXPECT_THROW(fpcf_from_census(c, 0), std::invalid_argument);
}

TEST(FpcfWindow, Examples) {
  EXPECT_EQ(fpcf_window(CycleCensus{{2, fin(1)}}, 4), FpcfWindow::from_finite({0, 2, 0, 2}));
  EXPECT_EQ(fpcf_window(CycleCensus{}, 3), FpcfWindow::from_finite({0, 0, 0}));
  EXPECT_EQ(fpcf_window(CycleCensus{{1, fin(1)}, {2, fin(1)}, {3, fin(1)}}, 6),
            FpcfWindow::from_finite({1, 3, 4, 3, 1, 6}));
  EXPECT_THROW(fpcf_window(CycleCensus{}, 0), std::invalid_argument);
}

TEST(IsFpcfInfiniteAt, Examples) {
  const CycleCensus two{{2, kInfinity}};
  EXPECT_TRUE(is_fpcf_infinite_at(two, 6));
  EXPECT_FALSE(is_fpcf_infinite_at(two, 3));
  EXPECT_FALSE(is_fpcf_infinite_at(CycleCensus{{5, fin(3)}}, 5));
}

TEST(Classify, Examples) {
  const auto sigma3ish = classify(CycleCensus{{2, kInfinity}, {4, fin(1)}});
  EXPECT_TRUE(sigma3ish.finite_type);
  EXPECT_FALSE(sigma3ish.finite_multiplicity);

  const auto mixed = classify(CycleCensus({{2, kInfinity}}, fin(1)));
  EXPECT_FALSE(mixed.finite_type);
  EXPECT_FALSE(mixed.infinite_type);

  const auto only_infinite = classify(CycleCensus({}, fin(1)));
  EXPECT_TRUE(only_infinite.infinite_type);
  EXPECT_FALSE(only_infinite.finite_type);
  EXPECT_TRUE(only_infinite.bounded);

  const auto empty = classify(CycleCensus{});
  EXPECT_FALSE(empty.finite_type);
  EXPECT_FALSE(empty.infinite_type);
}

TEST(CensusUnion, Examples) {
  const CycleCensus a{{2, fin(1)}}, b{{3, fin(1)}};
  EXPECT_EQ(census_union(a, b), (CycleCensus{{2, fin(1)}, {3, fin(1)}}));
  EXPECT_EQ(census_union(a, CycleCensus{{2, kInfinity}}), (CycleCensus{{2, kInfinity}}));
  EXPECT_EQ(fpcf_from_census(census_union(a, b), 6), fin(5));
  EXPECT_EQ(census_union(CycleCensus({}, fin(1)), CycleCensus({}, fin(2))).infinite_cycles(),
            fin(3));
}

// Random censuses mixing finite and infinite counts, for the properties below.
class CensusProperties : public ::testing::Test {
protected:
  CycleCensus random_extended(std::uint64_t max_len) {
    std::uniform_int_distribution<std::uint64_t> len(1, max_len), cnt(0, 6);
    std::bernoulli_distribution inf(0.15);
    CycleCensus c;
    for (int i = 0; i < 4; ++i)
      c.set(len(rng_), inf(rng_) ? kInfinity : fin(cnt(rng_)));
    if (inf(rng_))
      c.set_infinite_cycles(fin(1));
    return c;
  }

  std::mt19937_64 rng_{20240613};
};

TEST_F(CensusProperties, WindowMatchesPerEntryOracle) {
  for (int t = 0; t < 300; ++t) {
    const auto c = random_extended(20);
    const auto w = fpcf_window(c, 48);
    for (std::uint64_t k = 1; k <= 48; ++k) {
      ASSERT_EQ(w.at(k), oracle::fpcf_at(c, k));
      ASSERT_EQ(w.at(k), fpcf_from_census(c, k));
      ASSERT_EQ(w.at(k).is_infinite(), is_fpcf_infinite_at(c, k));
    }
  }
}

TEST_F(CensusProperties, MonotoneAlongMultiples) {
  for (int t = 0; t < 300; ++t) {
    const auto w = fpcf_window(random_extended(25), 60);
    for (std::uint64_t ell = 1; ell <= 60; ++ell)
      for (std::uint64_t m = 2 * ell; m <= 60; m += ell)
        ASSERT_GE(w.at(m), w.at(ell));
  }
}

TEST_F(CensusProperties, Additivity) {
  for (int t = 0; t < 300; ++t) {
    const auto a = random_extended(15), b = random_extended(15);
    const auto u = census_union(a, b);
    for (std::uint64_t k = 1; k <= 40; ++k)
      ASSERT_EQ(fpcf_from_census(u, k), fpcf_from_census(a, k) + fpcf_from_census(b, k));
  }
}

TEST_F(CensusProperties, ZeroFunctionIffNoFiniteCycles) {
  for (int t = 0; t < 300; ++t) {
    const auto c = random_extended(30);
    const auto w = fpcf_window(c, 30);
    const bool all_zero =
        std::ranges::all_of(w.values(), [](ExtendedCount v) { return v.is_zero(); });
    ASSERT_EQ(all_zero, c.empty_finite());
  }
}

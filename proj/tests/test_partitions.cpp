#include <gtest/gtest.h>

#include "qseries/partitions.hpp"

using namespace qseries;

TEST(Enumerate, FourHasFiveParts) {
  auto all = enumerate(4);
  std::vector<Partition> expect{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(all, expect);
}

TEST(Enumerate, ZeroIsTheEmptyPartition) {
  auto all = enumerate(0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].empty());
  EXPECT_THROW(PartitionGenerator(-1), InvalidConstruction);
}

TEST(Enumerate, MatchesPentagonalRecurrence) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(Integer(static_cast<long>(enumerate(n).size())), p_count(n)) << n;
  }
  EXPECT_EQ(p_count(20), Integer(627));
}

TEST(Enumerate, PartsAreWeaklyDecreasingAndSumToN) {
  for (int n = 1; n <= 18; ++n) {
    for (const auto& p : enumerate(n)) {
      int sum = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        sum += p[i];
        if (i > 0) {
          ASSERT_LE(p[i], p[i - 1]);
        }
      }
      ASSERT_EQ(sum, n);
    }
  }
}

TEST(PCount, Values) {
  EXPECT_EQ(p_count(4), Integer(5));
  EXPECT_EQ(p_count(0), Integer(1));
  EXPECT_EQ(p_count(100), Integer("190569292"));
  for (int n : {9, 14, 19}) {
    EXPECT_EQ(p_count(n) % 5, 0) << n;
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank({4}), 3);
  EXPECT_EQ(rank({1, 1, 1, 1}), -3);
  EXPECT_EQ(rank({2, 2}), 0);
}

TEST(Crank, Examples) {
  EXPECT_EQ(crank({4}), 4);
  EXPECT_EQ(crank({1, 1, 1, 1}), -4);
  EXPECT_EQ(crank({3, 1}), 0);
  EXPECT_EQ(ones({2, 1, 1}), 2);
}

TEST(Stats, RankEquidistributionAtFour) {
  auto t = stats(4, 5, Stat::N);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(t.at(i), 1) << i;
  }
}

TEST(Stats, RowSumsCoverEveryPartition) {
  for (int k : {5, 7, 11}) {
    for (int n = 0; n <= 25; ++n) {
      long parts = 0, ones_total = 0;
      for (const auto& p : enumerate(n)) {
        parts += static_cast<long>(p.size());
        ones_total += ones(p);
      }
      EXPECT_EQ(Integer(stats(n, k, Stat::N).total()), p_count(n));
      EXPECT_EQ(stats(n, k, Stat::NT).total(), parts);
      EXPECT_EQ(stats(n, k, Stat::Mw).total(), ones_total);
    }
  }
}

TEST(Stats, BeckCombinationAtFour) {
  auto t = stats(4, 5, Stat::Mw);
  const long s = t.at(1) + 2 * t.at(2) - 2 * t.at(3) - t.at(4);
  EXPECT_EQ(s % 5, 0);
}

TEST(Stats, RankSymmetry) {
  for (int k : {5, 7}) {
    for (int n = 0; n <= 25; ++n) {
      auto t = stats(n, k, Stat::N);
      for (int m = 0; m < k; ++m) {
        EXPECT_EQ(t.at(m), t.at(k - m)) << "k=" << k << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(Stats, AtkinSwinnertonDyer) {
  for (int n = 4; n <= 40; n += 5) {
    auto t = stats(n, 5, Stat::N);
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(Integer(5 * t.at(i)), p_count(n));
    }
  }
  for (int n = 5; n <= 40; n += 7) {
    auto t = stats(n, 7, Stat::N);
    for (int i = 0; i < 7; ++i) {
      EXPECT_EQ(Integer(7 * t.at(i)), p_count(n));
    }
  }
}

TEST(Stats, InvalidArguments) {
  EXPECT_THROW(stats(4, 1, Stat::N), InvalidConstruction);
  EXPECT_THROW(stats(-1, 5, Stat::N), InvalidConstruction);
  EXPECT_THROW(parse_stat("bogus"), UsageError);
  EXPECT_EQ(parse_stat("crank"), Stat::Mw);
  EXPECT_EQ(parse_stat("parts"), Stat::NT);
}

TEST(SeriesFromStats, Coefficients) {
  Series s = series_from_stats(5, 0, Stat::N, 20);
  EXPECT_EQ(s.coef(4), Rational(1));
  EXPECT_EQ(s.order(), 20);
}

TEST(TallyKernels, SerialMatchesOpenMP) {
  auto a = kernels::tally_serial(28);
  auto b = kernels::tally_omp(28);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    EXPECT_EQ(a[n].partitions, b[n].partitions);
    EXPECT_EQ(a[n].rank_count, b[n].rank_count);
    EXPECT_EQ(a[n].rank_parts, b[n].rank_parts);
    EXPECT_EQ(a[n].crank_ones, b[n].crank_ones);
  }
}

TEST(TallyKernels, TwoPassesAgree) {
  const auto& memo = profiles(25);
  auto fresh = kernels::tally_serial(25);
  for (std::size_t n = 0; n < fresh.size(); ++n) {
    EXPECT_EQ(memo[n].crank_ones, fresh[n].crank_ones);
    EXPECT_EQ(memo[n].total_ones, fresh[n].total_ones);
  }
}

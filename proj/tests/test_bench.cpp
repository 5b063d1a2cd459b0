#include <gtest/gtest.h>

#include <sstream>

#include "bcw/bench.hpp"
#include "bcw/primality.hpp"

using namespace std::chrono_literals;

TEST(Bench, RecordShape)
{
    const auto r = bcw::bench_pair(101, 1009);
    EXPECT_EQ(r.output_length, 100u * 1008u + 1u);
    EXPECT_GT(r.assemble_time.count(), 0);
    EXPECT_FALSE(r.oracle_time);
}

TEST(Bench, OracleFlag)
{
    bcw::BenchOptions options;
    options.with_oracle = true;
    EXPECT_TRUE(bcw::bench_pair(3, 5, options).oracle_time);

    options.oracle_max_length = 8;
    EXPECT_FALSE(bcw::bench_pair(3, 5, options).oracle_time);
}

TEST(Bench, CsvRow)
{
    bcw::BenchRecord r{3, 5, 9, 120ns, 80ns, std::nullopt};
    EXPECT_EQ(bcw::to_csv_row(r), "3,5,9,120,80,");
    r.oracle_time = 999ns;
    EXPECT_EQ(bcw::to_csv_row(r), "3,5,9,120,80,999");
}

TEST(Bench, EmptyGridHasNoSummary)
{
    const auto s = bcw::summarize({});
    EXPECT_FALSE(s);
    std::ostringstream os;
    bcw::write_summary(os, s);
    EXPECT_EQ(os.str(), "no data\n");
}

TEST(Bench, SummaryOfSyntheticLinearData)
{
    std::vector<bcw::BenchRecord> records{
        {101, 4001, 400001, 10us, 400001ns * 2, {}},
        {101, 1009, 100801, 10us, 100801ns * 2, {}},
        {101, 16001, 1600001, 10us, 1600001ns * 2, {}},
    };
    const auto s = bcw::summarize(records);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->points, 3u);
    EXPECT_NEAR(s->ratio, 1.0, 1e-12);
    EXPECT_NEAR(s->endpoint_ratio, 1.0, 1e-12);
    EXPECT_TRUE(s->monotonic);
    EXPECT_NEAR(s->slope_ns_per_symbol, 2.0, 1e-9);
    EXPECT_NEAR(s->r_squared, 1.0, 1e-9);
    EXPECT_NEAR(s->size_span, 1600001.0 / 100801.0, 1e-9);
}

TEST(Bench, SummaryDetectsNonMonotonicTotals)
{
    std::vector<bcw::BenchRecord> records{
        {3, 5, 9, 0ns, 100ns, {}},
        {3, 7, 13, 0ns, 50ns, {}},
    };
    const auto s = bcw::summarize(records);
    EXPECT_FALSE(s->monotonic);
    EXPECT_NEAR(s->endpoint_ratio, (100.0 / 9) / (50.0 / 13), 1e-9);
}

TEST(Bench, GeometricPrimes)
{
    const auto qs = bcw::geometric_primes(101, 1000, 100000, 5);
    ASSERT_EQ(qs.size(), 5u);
    EXPECT_EQ(qs.front(), 1009u);
    EXPECT_EQ(qs.back(), 100003u);
    for (auto q : qs)
        EXPECT_TRUE(bcw::is_prime(q));
    EXPECT_TRUE(bcw::geometric_primes(101, 1000, 100000, 0).empty());
}

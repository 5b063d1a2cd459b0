#include <gtest/gtest.h>

#include "bcw/analysis.hpp"
#include "bcw/engine.hpp"
#include "bcw/verify.hpp"

using bcw::Kind;
using bcw::SupportTerm;
using bcw::Word;

TEST(Support, Examples)
{
    EXPECT_EQ(bcw::support(bcw::compute(3, 5, Kind::cyclotomic)),
              (std::vector<SupportTerm>{{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1}, {7, -1}, {8, 1}}));
    EXPECT_TRUE(bcw::support(Word{0, 0, 0}).empty());
    EXPECT_EQ(bcw::support(Word{1}), (std::vector<SupportTerm>{{0, 1}}));
}

TEST(GapReport, Examples)
{
    const auto phi15 = bcw::gap_report(bcw::compute(3, 5, Kind::cyclotomic));
    EXPECT_EQ(phi15.max_gap, 2u);
    EXPECT_EQ(phi15.max_gap_count, 2u);
    EXPECT_EQ(phi15.support_size, 7u);
    EXPECT_TRUE(phi15.palindromic);
    EXPECT_TRUE(phi15.alternating);

    const auto phi6 = bcw::gap_report(bcw::compute(2, 3, Kind::cyclotomic));
    EXPECT_EQ(phi6.max_gap, 1u);
    EXPECT_EQ(phi6.max_gap_count, 2u);

    const auto single = bcw::gap_report(Word{1});
    EXPECT_EQ(single.max_gap, 0u);
    EXPECT_EQ(single.max_gap_count, 0u);
    EXPECT_EQ(single.support_size, 1u);

    const auto f47 = bcw::gap_report(bcw::compute(4, 7, Kind::semigroup));
    EXPECT_EQ(f47.max_gap, 3u);
    EXPECT_EQ(f47.max_gap_count, 2u);
}

TEST(GapReport, CsvRow)
{
    const auto r = bcw::gap_report(bcw::compute(3, 5, Kind::cyclotomic));
    EXPECT_EQ(bcw::to_csv_row(r), "3,5,cyclotomic,2,2,7,true,true");
    EXPECT_EQ(std::string(bcw::kGapCsvHeader),
              "p,q,kind,max_gap,max_gap_count,support_size,palindromic,alternating");
}

TEST(Predicates, PalindromeAndAlternation)
{
    EXPECT_TRUE(bcw::is_palindromic(Word{}));
    EXPECT_TRUE(bcw::is_palindromic(Word{1, 0, 1}));
    EXPECT_FALSE(bcw::is_palindromic(Word{1, 0, -1}));
    EXPECT_TRUE(bcw::is_alternating(Word{1, 0, -1, 0, 1}));
    EXPECT_FALSE(bcw::is_alternating(Word{1, 1}));
    EXPECT_FALSE(bcw::is_alternating(Word{-1, 1, -1}));
    EXPECT_FALSE(bcw::is_alternating(Word{1, -1}));
    EXPECT_FALSE(bcw::is_alternating(Word{0, 0}));
}

TEST(GapClaims, FindingsDescribeDeviations)
{
    bcw::GapReport fake;
    fake.p = 5;
    fake.q = 11;
    fake.max_gap = 3;
    fake.max_gap_count = 1;
    fake.palindromic = true;
    fake.alternating = true;
    const auto findings = bcw::gap_claim_findings(fake);
    ASSERT_EQ(findings.size(), 2u);
    EXPECT_NE(findings[0].find("max_gap = 3, expected 4"), std::string::npos);
    EXPECT_NE(findings[1].find("expected 4"), std::string::npos);
}

TEST(CoeffWordViolation, DetectsBrokenWords)
{
    const auto good = bcw::compute(3, 5, Kind::cyclotomic);
    EXPECT_FALSE(bcw::coeff_word_violation(good));
    auto bad = good;
    bad.word = Word{1, -1, 0, 1, -1, 1, 0, 0, 1};
    EXPECT_TRUE(bcw::coeff_word_violation(bad));
    bad.word = Word{1, -1, 1};
    EXPECT_TRUE(bcw::coeff_word_violation(bad));
}

TEST(GapClaims, HoldOnSmallRange)
{
    for (const auto& pc : bcw::pairs_up_to(5000)) {
        const auto report = bcw::gap_report(bcw::compute(pc.p, pc.q, pc.kind));
        const auto findings = bcw::gap_claim_findings(report);
        ASSERT_TRUE(findings.empty()) << findings.front();
        // Alternation with symbol sum 1 forces an odd support of 1 + 2 * (#minus ones).
        const auto w = bcw::compute(pc.p, pc.q, pc.kind).word;
        const auto minus = std::count(w.begin(), w.end(), bcw::Symbol::minus);
        ASSERT_EQ(report.support_size, 1u + 2u * static_cast<std::uint64_t>(minus));
    }
}

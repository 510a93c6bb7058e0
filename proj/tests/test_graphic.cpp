#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "degseq/graphic.hpp"
#include "degseq/oracle.hpp"

using namespace degseq;

namespace {

// Direct evaluation of the inequality at t, O(n) per call.
sum_t slack_by_definition(std::vector<degree_t> d, std::size_t t) {
    std::sort(d.begin(), d.end(), std::greater<>{});
    sum_t lhs = 0, rhs = static_cast<sum_t>(t) * (static_cast<sum_t>(t) - 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i < t)
            lhs += d[i];
        else
            rhs += std::min<sum_t>(static_cast<sum_t>(t), d[i]);
    }
    return rhs - lhs;
}

} // namespace

TEST(DegreeSequence, RejectsInvalid) {
    EXPECT_THROW(DegreeSequence(std::vector<degree_t>{}), std::invalid_argument);
    EXPECT_THROW(DegreeSequence({1, -1}), std::invalid_argument);
    EXPECT_NO_THROW(DegreeSequence({0}));
}

TEST(IsGraphic, Examples) {
    EXPECT_TRUE(is_graphic(DegreeSequence{2, 2, 2}));
    EXPECT_FALSE(is_graphic(DegreeSequence{1, 1, 1}));
    EXPECT_FALSE(is_graphic(DegreeSequence{3, 3, 1, 1}));
    EXPECT_TRUE(is_graphic(DegreeSequence{0, 0, 0, 0}));
    // Confirmed independently by the search oracle.
    EXPECT_FALSE(realizable_by_search(std::vector<degree_t>{3, 3, 1, 1}));
}

TEST(IsGraphic, SingleVertex) {
    EXPECT_TRUE(is_graphic(DegreeSequence{0}));
    EXPECT_FALSE(is_graphic(DegreeSequence{1}));
    EXPECT_FALSE(is_graphic(DegreeSequence{2}));
}

TEST(IsGraphic, EntriesBeyondNMinusOneFailAtFirstIndex) {
    DegreeSequence d{4, 2, 2};
    EXPECT_FALSE(is_graphic(d));
    EXPECT_EQ(first_eg_violation(d.values()), 1u);
}

TEST(EgSlack, Examples) {
    EXPECT_EQ(eg_slack(DegreeSequence{3, 3, 1, 1}, 2), -2);
    // 0 + min(1,2) + min(1,2) - 2
    EXPECT_EQ(eg_slack(DegreeSequence{2, 2, 2}, 1), 0);
    EXPECT_EQ(eg_slack(DegreeSequence{0, 0}, 1), 0);
}

TEST(EgSlack, OutOfRange) {
    EXPECT_THROW(eg_slack(DegreeSequence{1, 1}, 0), std::out_of_range);
    EXPECT_THROW(eg_slack(DegreeSequence{1, 1}, 3), std::out_of_range);
}

TEST(EgSlack, MatchesDefinitionOnRandomSequences) {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<degree_t> d(n);
        for (auto& x : d)
            x = static_cast<degree_t>(rng() % 40);
        const auto sl = eg_slacks(d);
        ASSERT_EQ(sl.size(), n);
        for (std::size_t t = 1; t <= n; ++t)
            ASSERT_EQ(sl[t - 1], slack_by_definition(d, t)) << "t=" << t;
    }
}

TEST(IsGraphic, AgreesWithSearchOnFullGridUpToFive) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<degree_t> d(n, 0);
        while (true) {
            ASSERT_EQ(is_graphic(d), realizable_by_search(d));
            std::size_t i = 0;
            while (i < n && d[i] == 6)
                d[i++] = 0;
            if (i == n)
                break;
            ++d[i];
        }
    }
}

TEST(IsGraphic, PermutationInvariant) {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<degree_t> d(1 + rng() % 12);
        for (auto& x : d)
            x = static_cast<degree_t>(rng() % 8);
        const bool g = is_graphic(d);
        std::shuffle(d.begin(), d.end(), rng);
        ASSERT_EQ(is_graphic(d), g);
    }
}

TEST(IsGraphic, AppendingZeroKeepsGraphic) {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<degree_t> d(1 + rng() % 12);
        for (auto& x : d)
            x = static_cast<degree_t>(rng() % 8);
        if (!is_graphic(d))
            continue;
        d.push_back(0);
        ASSERT_TRUE(is_graphic(d));
    }
}

TEST(IsGraphic, LargeDegreesDoNotOverflow) {
    // n copies of n-1: complete graph; sums exceed 32 bits.
    const std::size_t n = 70000;
    std::vector<degree_t> d(n, static_cast<degree_t>(n - 1));
    EXPECT_TRUE(is_graphic(d));
    d[0] = static_cast<degree_t>(n);
    d[1] = static_cast<degree_t>(n);
    EXPECT_FALSE(is_graphic(d));
}

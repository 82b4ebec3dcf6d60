#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "holodyn/multi_index.hpp"

using namespace holodyn;

namespace {

// Every exponent vector in [0, n]^d with degree <= n, sorted by degree and
// then lexicographically downwards.
std::vector<std::vector<int>> enumerate(int d, int n) {
    std::vector<std::vector<int>> all;
    std::vector<int> e(d, 0);
    while (true) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= n) all.push_back(e);
        int i = 0;
        while (i < d && e[i] == n) e[i++] = 0;
        if (i == d) break;
        ++e[i];
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a > b;
    });
    return all;
}

}  // namespace

TEST(MultiIndex, GradedLexOrderForTwoVariables) {
    const auto deg2 = multi_indices(2, 2);
    ASSERT_EQ(deg2.size(), 3u);
    EXPECT_EQ(deg2[0], (MultiIndex{2, 0}));
    EXPECT_EQ(deg2[1], (MultiIndex{1, 1}));
    EXPECT_EQ(deg2[2], (MultiIndex{0, 2}));
    EXPECT_LT((MultiIndex{2, 0}), (MultiIndex{1, 1}));
    EXPECT_LT((MultiIndex{0, 1}), (MultiIndex{2, 0}));
}

TEST(MultiIndex, MatchesBruteForceEnumeration) {
    for (int d = 1; d <= 4; ++d) {
        for (int n = 0; n <= 5; ++n) {
            const auto expected = enumerate(d, n);
            const auto got = multi_indices_upto(d, n);
            ASSERT_EQ(got.size(), expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                const auto e = got[i].entries();
                EXPECT_EQ(std::vector<int>(e.begin(), e.end()), expected[i]);
                EXPECT_EQ(grlex_rank(got[i]), i);
            }
        }
    }
}

TEST(MultiIndex, CountsAreBinomial) {
    EXPECT_EQ(homogeneous_count(2, 2), 3u);
    EXPECT_EQ(homogeneous_count(3, 4), 15u);
    EXPECT_EQ(multi_indices_upto(2, 12).size(), binomial(14, 2));
    EXPECT_EQ(multi_indices_upto(1, 40).size(), 41u);
    EXPECT_EQ(binomial(5, 7), 0u);
    EXPECT_EQ(binomial(5, -1), 0u);
}

TEST(MultiIndex, RankWithinDegree) {
    const auto block = multi_indices(3, 3);
    for (std::size_t i = 0; i < block.size(); ++i) EXPECT_EQ(grlex_rank_in_degree(block[i]), i);
}

TEST(MultiIndex, Arithmetic) {
    const MultiIndex a{1, 2};
    EXPECT_EQ(a.degree(), 3);
    EXPECT_EQ(a + (MultiIndex{2, 0}), (MultiIndex{3, 2}));
    EXPECT_EQ(a.minus_unit(1), (MultiIndex{1, 1}));
    EXPECT_NEAR(a.log_factorial(), std::log(2.0), 1e-15);
    EXPECT_EQ(MultiIndex::unit(3, 2), (MultiIndex{0, 0, 1}));
    EXPECT_EQ(MultiIndex::zero(2).degree(), 0);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "lahbell/exact.hpp"
#include "lahbell/partitions.hpp"
#include "oracles.hpp"

namespace lahbell {
namespace {

std::vector<PiWitness> collect(PiStream s)
{
    std::vector<PiWitness> out;
    while (auto w = s.next())
        out.push_back(*w);
    return out;
}

std::vector<LambdaWitness> collect(LambdaStream s)
{
    std::vector<LambdaWitness> out;
    while (auto w = s.next())
        out.push_back(*w);
    return out;
}

std::vector<std::uint32_t> padded(std::vector<std::uint32_t> v, std::size_t len)
{
    v.resize(len, 0);
    return v;
}

// k_part then r_part as one tuple, both padded to full length
std::vector<std::uint32_t> flat(const LambdaWitness& w, std::uint32_t n)
{
    auto t = padded(w.k_part, n);
    const auto r = padded(w.r_part, n + 1);
    t.insert(t.end(), r.begin(), r.end());
    return t;
}

TEST(EnumeratePi, Examples)
{
    auto w = collect(enumerate_pi(3, 2));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], (PiWitness{{1, 1}}));

    for (std::uint32_t n = 1; n <= 6; ++n) {
        auto diag = collect(enumerate_pi(n, n));
        ASSERT_EQ(diag.size(), 1u);
        EXPECT_EQ(diag[0].j, std::vector<std::uint32_t>{n});
    }

    w = collect(enumerate_pi(4, 2));
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0], (PiWitness{{1, 0, 1}}));
    EXPECT_EQ(w[1], (PiWitness{{0, 2, 0}}));
}

TEST(EnumeratePi, EdgeCases)
{
    auto zero = collect(enumerate_pi(0, 0));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].j.empty());
    EXPECT_TRUE(collect(enumerate_pi(0, 1)).empty());
    EXPECT_TRUE(collect(enumerate_pi(3, 4)).empty());
    EXPECT_TRUE(collect(enumerate_pi(3, 0)).empty());
}

TEST(EnumeratePi, MatchesExhaustiveSearchInDecreasingLexOrder)
{
    for (std::uint32_t n = 0; n <= 9; ++n)
        for (std::uint32_t k = 0; k <= n + 1; ++k) {
            auto expected = oracle::pi_by_search(n, k);
            std::sort(expected.begin(), expected.end(), std::greater<>());
            std::vector<std::vector<std::uint32_t>> got;
            for (const auto& w : enumerate_pi(n, k)) {
                for (std::size_t i = 0; i < w.j.size(); ++i)
                    EXPECT_LE(i + 1, n - k + 1);
                got.push_back(padded(w.j, n == 0 ? 0 : n - k + 1));
            }
            EXPECT_EQ(got, expected) << n << "," << k;
        }
}

TEST(EnumerateLambda, Examples)
{
    auto w = collect(enumerate_lambda(1, 1, 0));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], (LambdaWitness{{1}, {}}));

    // k_1 = 1 with r_0 = r_1 = 1, then k_2 = 1 with r_0 = 2
    w = collect(enumerate_lambda(2, 1, 2));
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0], (LambdaWitness{{1, 0}, {1, 1, 0}}));
    EXPECT_EQ(w[1], (LambdaWitness{{0, 1}, {2, 0, 0}}));

    w = collect(enumerate_lambda(0, 0, 2));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], (LambdaWitness{{}, {2}}));
}

TEST(EnumerateLambda, MatchesExhaustiveSearchInDecreasingLexOrder)
{
    for (std::uint32_t n = 0; n <= 5; ++n)
        for (std::uint32_t k = 0; k <= n + 1; ++k)
            for (std::uint32_t rho = 0; rho <= 3; ++rho) {
                std::vector<std::vector<std::uint32_t>> expected;
                for (const auto& t : oracle::lambda_by_search(n, k, rho)) {
                    auto v = t.k_part;
                    v.insert(v.end(), t.r_part.begin(), t.r_part.end());
                    expected.push_back(std::move(v));
                }
                if (k > n)
                    expected.clear();
                std::sort(expected.begin(), expected.end(), std::greater<>());
                std::vector<std::vector<std::uint32_t>> got;
                for (const auto& w : enumerate_lambda(n, k, rho))
                    got.push_back(flat(w, n));
                EXPECT_EQ(got, expected) << n << "," << k << "," << rho;
            }
}

TEST(Streams, DeterministicAndDuplicateFree)
{
    for (std::uint32_t n = 0; n <= 12; ++n)
        for (std::uint32_t k = 0; k <= n; ++k) {
            const auto a = collect(enumerate_pi(n, k));
            const auto b = collect(enumerate_pi(n, k));
            EXPECT_EQ(a, b);
            std::set<std::vector<std::uint32_t>> unique;
            for (const auto& w : a)
                unique.insert(padded(w.j, n - k + 1));
            EXPECT_EQ(unique.size(), a.size());
        }
    for (std::uint32_t n = 0; n <= 8; ++n)
        for (std::uint32_t k = 0; k <= n; ++k)
            for (std::uint32_t rho = 0; rho <= 4; ++rho) {
                const auto a = collect(enumerate_lambda(n, k, rho));
                EXPECT_EQ(a, collect(enumerate_lambda(n, k, rho)));
                std::set<std::vector<std::uint32_t>> unique;
                for (const auto& w : a)
                    unique.insert(flat(w, n));
                EXPECT_EQ(unique.size(), a.size());
            }
}

TEST(Streams, WitnessesSatisfyConstraints)
{
    for (std::uint32_t n = 0; n <= 10; ++n)
        for (std::uint32_t k = 0; k <= n; ++k)
            for (std::uint32_t rho = 0; rho <= 4; ++rho)
                for (const auto& w : enumerate_lambda(n, k, rho)) {
                    std::uint32_t ks = 0, rs = 0, weight = 0;
                    for (std::size_t i = 0; i < w.k_part.size(); ++i) {
                        ks += w.k_part[i];
                        weight += static_cast<std::uint32_t>(i + 1) * w.k_part[i];
                    }
                    for (std::size_t i = 0; i < w.r_part.size(); ++i) {
                        rs += w.r_part[i];
                        weight += static_cast<std::uint32_t>(i) * w.r_part[i];
                    }
                    ASSERT_EQ(ks, k);
                    ASSERT_EQ(rs, rho);
                    ASSERT_EQ(weight, n);
                }
}

TEST(Streams, RangeForAndNextAgree)
{
    std::vector<PiWitness> via_range;
    for (const auto& w : enumerate_pi(8, 3))
        via_range.push_back(w);
    EXPECT_EQ(via_range, collect(enumerate_pi(8, 3)));
    EXPECT_EQ(via_range.size(), 5u); // partitions of 8 into 3 parts
}

TEST(WitnessEquality, IgnoresTrailingZeros)
{
    EXPECT_EQ((PiWitness{{1, 1}}), (PiWitness{{1, 1, 0}}));
    EXPECT_NE((PiWitness{{1, 1}}), (PiWitness{{1, 0, 1}}));
    EXPECT_EQ((LambdaWitness{{1}, {}}), (LambdaWitness{{1, 0}, {0}}));
}

TEST(LahViaPi, Examples)
{
    EXPECT_EQ(lah_via_pi(3, 2), 6);
    EXPECT_EQ(lah_via_pi(0, 0), 1);
    EXPECT_EQ(lah_via_pi(4, 2), 36);
}

TEST(LahViaPi, MatchesClosedForm)
{
    for (std::uint32_t n = 0; n <= 14; ++n)
        for (std::uint32_t k = 0; k <= n; ++k)
            EXPECT_EQ(lah_via_pi(n, k), lah(n, k)) << n << "," << k;
}

TEST(RLahViaLambda, Examples)
{
    for (std::uint32_t n = 0; n <= 8; ++n)
        for (std::uint32_t k = 0; k <= n; ++k)
            EXPECT_EQ(rlah_via_lambda(n, k, 0), lah_via_pi(n, k));
    EXPECT_EQ(rlah_via_lambda(2, 1, 1), 6);
    EXPECT_EQ(rlah_via_lambda(1, 0, 1), 2);
}

TEST(RLahViaLambda, MatchesExhaustiveLambdaSum)
{
    for (std::uint32_t r = 0; r <= 2; ++r)
        for (std::uint32_t n = 0; n <= 5; ++n)
            for (std::uint32_t k = 0; k <= n; ++k) {
                Integer sum = 0;
                for (const auto& t : oracle::lambda_by_search(n, k, 2 * r)) {
                    Integer term = oracle::fact(n) * oracle::fact(2 * r);
                    for (auto v : t.k_part)
                        term /= oracle::fact(v);
                    for (auto v : t.r_part)
                        term /= oracle::fact(v);
                    sum += term;
                }
                EXPECT_EQ(rlah_via_lambda(n, k, r), sum) << n << "," << k << "," << r;
                EXPECT_EQ(rlah_via_lambda(n, k, r), rlah(n, k, r));
            }
}

} // namespace
} // namespace lahbell

#include "pperm/combinat.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace pperm;

namespace {

Chain chain(std::initializer_list<Subset> s) { return Chain{std::vector<Subset>(s)}; }

Marker elem(int i) { return Marker{true, Subset::of({i})}; }
Marker set(std::initializer_list<int> s) { return Marker{false, Subset::of(s)}; }

// every vector with singleton entries <= 1, pair entries <= 2 and total <= m
std::vector<DraconianSeq> candidates(int m)
{
    const int L = m * (m + 1) / 2;
    std::vector<DraconianSeq> out;
    DraconianSeq a(L, 0);
    std::function<void(int, int)> rec = [&](int k, int sum) {
        if (k == L) {
            out.push_back(a);
            return;
        }
        int cap = k < m ? 1 : 2;
        for (int v = 0; v <= cap && sum + v <= m; ++v) {
            a[k] = v;
            rec(k + 1, sum + v);
        }
        a[k] = 0;
    };
    rec(0, 0);
    return out;
}

}  // namespace

TEST(Chains, SmallCounts)
{
    EXPECT_EQ(enumerate_chains(1, 1, false).size(), 3u);
    for (int n = 2; n <= 5; ++n)
        EXPECT_EQ(enumerate_chains(2, n, false).size(), 11u);
    EXPECT_EQ(enumerate_chains(3, 3, false).size(), 51u);
    EXPECT_EQ(enumerate_chains(3, 3, true).size(), 52u);
}

TEST(Chains, StableForLargeN)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= m + 3; ++n)
            EXPECT_EQ(enumerate_chains(m, n, true), enumerate_chains(m, m, true)) << m << " " << n;
}

TEST(Chains, DeterministicOrderAndValidity)
{
    auto c = enumerate_chains(3, 2, true);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_TRUE(c.front().empty());
    for (auto& x : c) {
        EXPECT_TRUE(x.valid());
        if (!x.empty())
            EXPECT_TRUE(in_cmn(x, 3, 2));
    }
}

TEST(Chains, Membership)
{
    // size gap between largest and smallest nonempty subset at most n-1
    EXPECT_TRUE(in_cmn(chain({Subset::of({1}), Subset::of({1, 2})}), 3, 2));
    EXPECT_FALSE(in_cmn(chain({Subset::of({1}), Subset::of({1, 2, 3})}), 3, 2));
    EXPECT_TRUE(in_cmn(chain({Subset{}, Subset::of({1, 2, 3})}), 3, 2));
    EXPECT_FALSE(in_cmn(chain({Subset::of({1, 2}), Subset::of({1})}), 3, 2));
}

TEST(MissingRanks, Examples)
{
    EXPECT_EQ(missing_ranks(chain({Subset{}, Subset::full(5)})), 4);
    EXPECT_EQ(missing_ranks(chain({Subset::of({1, 2, 3}), Subset::of({1, 2, 3, 4, 5}),
                                   Subset::of({1, 2, 3, 4, 5, 6, 7})})),
              5);
    EXPECT_EQ(missing_ranks(chain({Subset::full(6)})), 6);
    EXPECT_THROW(missing_ranks(Chain{}), std::invalid_argument);
}

TEST(RSet, WorkedExample)
{
    Chain c1 = chain({Subset{}, Subset::of({1, 2}), Subset::of({1, 2, 3}), Subset::of({1, 2, 3, 4})});
    Chain c2 = chain({Subset::of({1, 2, 5}), Subset::of({1, 2, 3, 4, 5})});
    auto r = r_set_and_order(c1, c2, 6, 4);
    MarkerSet want1{elem(5), elem(6), set({4}), set({3, 4}), set({1, 2, 3, 4, 5, 6})};
    MarkerSet want2{elem(6), set({3, 4})};
    EXPECT_EQ(r.r1, want1);
    EXPECT_EQ(r.r2, want2);
    EXPECT_TRUE(r.leq);
    EXPECT_FALSE(chain_leq(c2, c1, 6, 4));
}

TEST(RSet, Extremes)
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto all = enumerate_chains(m, n, true);
            for (auto& c : all) {
                EXPECT_TRUE(chain_leq(Chain{}, c, m, n));
                EXPECT_TRUE(chain_leq(c, chain({Subset::full(m)}), m, n));
            }
            EXPECT_TRUE(r_set(chain({Subset::full(m)}), m, n).empty());
        }
}

TEST(RSet, PartialOrder)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m + 1; ++n) {
            auto all = enumerate_chains(m, n, true);
            const size_t N = all.size();
            std::vector<std::vector<char>> le(N, std::vector<char>(N));
            for (size_t i = 0; i < N; ++i)
                for (size_t j = 0; j < N; ++j)
                    le[i][j] = chain_leq(all[i], all[j], m, n);
            for (size_t i = 0; i < N; ++i) {
                ASSERT_TRUE(le[i][i]);
                for (size_t j = 0; j < N; ++j) {
                    if (i != j)
                        ASSERT_FALSE(le[i][j] && le[j][i]) << to_string(all[i]) << " " << to_string(all[j]);
                    if (!le[i][j])
                        continue;
                    for (size_t k = 0; k < N; ++k)
                        if (le[j][k])
                            ASSERT_TRUE(le[i][k]);
                }
            }
        }
}

TEST(Draconian, Examples)
{
    EXPECT_TRUE(draconian_check({1, 1, 0}, 2));
    EXPECT_FALSE(draconian_check({1, 1, 1}, 2));
    EXPECT_TRUE(draconian_check({1, 1, 1, 0, 0, 0}, 3));
    EXPECT_FALSE(draconian_check({0, 0, 0, 2, 2, 0}, 3));

    auto vol = enumerate_draconian(2, DraconianMode::volume);
    std::vector<DraconianSeq> want{{0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    EXPECT_EQ(vol, want);
    EXPECT_EQ(enumerate_draconian(2, DraconianMode::ehrhart).size(), 8u);
    EXPECT_EQ(enumerate_draconian(3, DraconianMode::ehrhart).size(), 51u);
    EXPECT_EQ(enumerate_draconian(4, DraconianMode::ehrhart).size(), 455u);
}

TEST(Draconian, ScanAgreesWithMatching)
{
    for (int m = 1; m <= 4; ++m) {
        auto cand = candidates(m);
        std::vector<DraconianSeq> good_v, good_e;
        for (auto& a : cand) {
            bool s = draconian_check_scan(a, m);
            ASSERT_EQ(s, draconian_check(a, m));
            if (s) {
                good_e.push_back(a);
                int sum = 0;
                for (int x : a)
                    sum += x;
                if (sum == m)
                    good_v.push_back(a);
            }
        }
        EXPECT_EQ(enumerate_draconian(m, DraconianMode::ehrhart), good_e) << m;
        EXPECT_EQ(enumerate_draconian(m, DraconianMode::volume), good_v) << m;
    }
}

TEST(Draconian, IndexSets)
{
    auto I = draconian_index_sets(3);
    ASSERT_EQ(I.size(), 6u);
    EXPECT_EQ(I[0], Subset::of({1}));
    EXPECT_EQ(I[2], Subset::of({3}));
    EXPECT_EQ(I[3], Subset::of({1, 2}));
    EXPECT_EQ(I[4], Subset::of({1, 3}));
    EXPECT_EQ(I[5], Subset::of({2, 3}));
}

TEST(Permutations, Stats)
{
    EXPECT_EQ(descents({2, 1}), 1);
    EXPECT_EQ(descents({1, 2, 3}), 0);
    EXPECT_EQ(descents({3, 1, 2}), 1);
    EXPECT_EQ(inverse_permutation({3, 1, 2}), (std::vector<int>{2, 3, 1}));
    EXPECT_EQ(descents(inverse_permutation({3, 1, 2})), 1);
    EXPECT_EQ(descents({2, 3, 1}), 1);
}

#include <gtest/gtest.h>

#include <charcalc/charcalc.hpp>

#include "test_support.hpp"

using namespace charcalc;
using charcalc::test::wt;

TEST(KostantPartition, Examples)
{
    const auto a1 = build_root_system("A1");
    const auto a2 = build_root_system("A2");
    EXPECT_EQ(oracles::kostant_partition_count(a2, {0, 0}), 1);
    EXPECT_EQ(oracles::kostant_partition_count(a2, {1, 1}), 2);
    EXPECT_EQ(oracles::kostant_partition_count(a2, {2, 1}), 2);
    EXPECT_EQ(oracles::kostant_partition_count(a2, {2, 2}), 3);
    EXPECT_EQ(oracles::kostant_partition_count(a1, {3}), 1);
    EXPECT_THROW(oracles::kostant_partition_count(a1, {-1}), domain_error);
}

TEST(KostantPartition, AgreesWithSeriesOfKostantP)
{
    constexpr int depth = 8;
    for (const char *label : {"A2", "B2", "G2", "A3"}) {
        const auto rs = build_root_system(label);
        const auto window = series_expand(kostant_p(rs), depth);
        const Weight zero = Weight::zero(rs.rank());
        int_vector gamma(rs.rank(), 0);
        std::size_t checked = 0;
        while (true) {
            int h = 0;
            for (auto g : gamma) {
                h += static_cast<int>(g);
            }
            if (h <= depth) {
                EXPECT_EQ(window.at(rs.lower(zero, gamma)), oracles::kostant_partition_count(rs, gamma)) << label;
                ++checked;
            }
            std::size_t i = 0;
            while (i < gamma.size() && gamma[i] == depth) {
                gamma[i] = 0;
                ++i;
            }
            if (i == gamma.size()) {
                break;
            }
            ++gamma[i];
        }
        EXPECT_EQ(window.coefficients.size(), checked) << label;
    }
}

TEST(WeylDimension, Examples)
{
    const auto a2 = build_root_system("A2");
    EXPECT_EQ(oracles::weyl_dimension(a2, wt(a2, "1,1")), 8);
    EXPECT_EQ(oracles::weyl_dimension(a2, wt(a2, "2,0")), 6);
    const auto b2 = build_root_system("B2");
    EXPECT_EQ(oracles::weyl_dimension(b2, wt(b2, "1,0")), 5);
    EXPECT_EQ(oracles::weyl_dimension(b2, wt(b2, "0,1")), 4);
    const auto g2 = build_root_system("G2");
    EXPECT_EQ(oracles::weyl_dimension(g2, wt(g2, "1,0")), 7);
    EXPECT_EQ(oracles::weyl_dimension(g2, wt(g2, "0,1")), 14);
    const auto e8 = build_root_system("E8");
    EXPECT_EQ(oracles::weyl_dimension(e8, wt(e8, "0,0,0,0,0,0,0,1")), 248);
    EXPECT_THROW(oracles::weyl_dimension(a2, wt(a2, "-1,0")), domain_error);
}

TEST(Freudenthal, Examples)
{
    const auto a2 = build_root_system("A2");
    EXPECT_EQ(oracles::freudenthal_multiplicity(a2, wt(a2, "1,1"), Weight::zero(2)), 2);
    EXPECT_EQ(oracles::freudenthal_multiplicity(a2, wt(a2, "1,1"), wt(a2, "1,1")), 1);
    EXPECT_EQ(oracles::freudenthal_multiplicity(a2, wt(a2, "1,1"), wt(a2, "1,0")), 0);
    EXPECT_EQ(oracles::freudenthal_multiplicity(a2, wt(a2, "3,0"), Weight::zero(2)), 1);
    EXPECT_EQ(oracles::freudenthal_multiplicity(a2, wt(a2, "2,2"), Weight::zero(2)), 3);
    const auto g2 = build_root_system("G2");
    EXPECT_EQ(oracles::freudenthal_multiplicity(g2, wt(g2, "0,1"), Weight::zero(2)), 2);
    EXPECT_EQ(oracles::freudenthal_multiplicity(g2, wt(g2, "1,0"), Weight::zero(2)), 1);
}

TEST(Freudenthal, TotalMatchesWeylDimension)
{
    for (const char *label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        const auto rs = build_root_system(label);
        rat_vector c(rs.rank(), rational(0));
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            for (int k = 1; k <= 2; ++k) {
                c.assign(rs.rank(), rational(0));
                c[i] = k;
                const Weight lam(c);
                integer total = 0;
                for (const auto &[w, m] : oracles::FreudenthalOracle(rs, lam).character()) {
                    EXPECT_GT(m, 0);
                    total += m;
                }
                EXPECT_EQ(total, oracles::weyl_dimension(rs, lam)) << label;
            }
        }
    }
}

TEST(Freudenthal, WeylInvariant)
{
    for (const char *label : {"A2", "B2", "G2"}) {
        const auto rs = build_root_system(label);
        const Weight lam = wt(rs, "2,1");
        const auto ch = oracles::FreudenthalOracle(rs, lam).character();
        for (const auto &w : weyl_elements(rs)) {
            for (const auto &[mu, m] : ch) {
                const auto it = ch.find(apply(rs, w, mu));
                ASSERT_NE(it, ch.end()) << label;
                EXPECT_EQ(it->second, m);
            }
        }
    }
}

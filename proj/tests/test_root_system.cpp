#include <random>
#include <set>

#include <gtest/gtest.h>

#include <charcalc/charcalc.hpp>

#include "test_support.hpp"

using namespace charcalc;
using charcalc::test::wt;

TEST(RootSystem, A1)
{
    const auto rs = build_root_system("A1");
    EXPECT_EQ(rs.rank(), 1u);
    ASSERT_EQ(rs.positive_roots().size(), 1u);
    EXPECT_EQ(rs.positive_roots()[0], (int_vector{1}));
    EXPECT_EQ(rs.rho_weight(), wt(rs, "1"));
    EXPECT_EQ(rs.rho_root_coords(), (rat_vector{rational(1, 2)}));
}

TEST(RootSystem, A2PositiveRoots)
{
    const auto rs = build_root_system("A2");
    EXPECT_EQ(rs.positive_roots(), (std::vector<int_vector>{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(RootSystem, B2AndG2Symmetrizers)
{
    const auto b2 = build_root_system("B2");
    EXPECT_EQ(b2.symmetrizers(), (rat_vector{2, 1}));
    EXPECT_EQ(b2.positive_roots(), (std::vector<int_vector>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));

    const auto g2 = build_root_system("G2");
    EXPECT_EQ(g2.positive_roots().size(), 6u);
    EXPECT_EQ(g2.symmetrizers(), (rat_vector{1, 3}));
    // shortest roots have squared length 2
    EXPECT_EQ(g2.norm_sq({1, 0}), 2);
    EXPECT_EQ(g2.norm_sq({0, 1}), 6);
}

TEST(RootSystem, PositiveRootCountsMatchClassicalTables)
{
    // |Delta+| = (dim g - rank) / 2
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"A3", 6}, {"B3", 9}, {"C3", 9}, {"D4", 12}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"A1xA1", 2},
        {"A2xG2", 9}};
    for (const auto &[label, count] : cases) {
        EXPECT_EQ(build_root_system(label).positive_roots().size(), count) << label;
    }
}

TEST(RootSystem, JsonCartanSpec)
{
    const auto rs = build_root_system(R"({"cartan": [[2,-1],[-1,2]]})");
    EXPECT_EQ(rs, build_root_system("A2"));
    EXPECT_EQ(rs.positive_roots().size(), 3u);
}

TEST(RootSystem, RejectsMalformedSpecs)
{
    for (const char *bad : {"", "H3", "A0", "B1", "D3", "E9", "G3", "A2y", "a2", "A-1", "A1x", "{\"cartan\": 3}",
                            "{not json", "{\"cartan\": [[2,-1]]}"}) {
        EXPECT_THROW(build_root_system(bad), parse_error) << bad;
    }
}

TEST(RootSystem, RejectsNonFiniteType)
{
    try {
        build_root_system(R"({"cartan": [[2,-2],[-2,2]]})");
        FAIL() << "affine A1 accepted";
    } catch (const domain_error &e) {
        EXPECT_NE(std::string(e.what()).find("not finite type"), std::string::npos);
    }
    EXPECT_THROW(build_root_system(R"({"cartan": [[2,-3],[-3,2]]})"), domain_error);
    EXPECT_THROW(build_root_system(R"({"cartan": [[2,-1],[0,2]]})"), domain_error);
    EXPECT_THROW(build_root_system(R"({"cartan": [[2,1],[1,2]]})"), domain_error);
}

TEST(RootSystem, FundamentalWeightsAreDualToSimpleCoroots)
{
    for (const char *label : {"A3", "B3", "C3", "G2", "F4", "D5"}) {
        const auto rs = build_root_system(label);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            rat_vector omega(rs.rank(), rational(0));
            omega[i] = 1;
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                EXPECT_EQ(rs.coroot_pairing(omega, rs.simple_root(j)), i == j ? 1 : 0) << label;
            }
        }
    }
}

TEST(RootSystem, RhoIsHalfSumOfPositiveRoots)
{
    for (const char *label : {"A1", "A2", "B2", "G2", "B3", "C4", "D4", "E6", "F4"}) {
        const auto rs = build_root_system(label);
        rat_vector half(rs.rank(), rational(0));
        for (const auto &beta : rs.positive_roots()) {
            const auto f = rs.to_fundamental(beta);
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                half[i] += f[i] / 2;
            }
        }
        EXPECT_EQ(half, rs.rho()) << label;
    }
}

TEST(RootSystem, SimpleReflectionsPermutePositiveRootsUpToSign)
{
    for (const char *label : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
        const auto rs = build_root_system(label);
        for (const auto &beta : rs.positive_roots()) {
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                const Weight image = reflect(rs, rs.simple_root(i), Weight(rs.to_fundamental(beta)));
                const rat_vector rc = rs.to_root_coords(image.real());
                int_vector v;
                for (const auto &x : rc) {
                    v.push_back(to_int64(x));
                }
                int_vector neg = v;
                for (auto &x : neg) {
                    x = -x;
                }
                EXPECT_TRUE(rs.is_positive_root(v) || rs.is_positive_root(neg)) << label;
            }
        }
    }
}

TEST(Reflect, Examples)
{
    const auto a1 = build_root_system("A1");
    EXPECT_EQ(reflect(a1, {1}, wt(a1, "1")), wt(a1, "-1"));

    const auto a2 = build_root_system("A2");
    // s_{alpha_1}(omega_1) = omega_1 - alpha_1, and alpha_1 = 2 omega_1 - omega_2
    EXPECT_EQ(reflect(a2, {1, 0}, wt(a2, "1,0")), wt(a2, "-1,1"));
    EXPECT_EQ(reflect(a2, {1, 0}, wt(a2, "1,0")), a2.lower(wt(a2, "1,0"), {1, 0}));

    for (const char *label : {"A2", "B2", "G2"}) {
        const auto rs = build_root_system(label);
        for (const auto &beta : rs.positive_roots()) {
            EXPECT_EQ(reflect(rs, beta, Weight::zero(rs.rank())), Weight::zero(rs.rank()));
        }
    }
}

TEST(Reflect, RejectsNonRoots)
{
    const auto a2 = build_root_system("A2");
    EXPECT_THROW(reflect(a2, {2, 0}, wt(a2, "1,0")), domain_error);
    EXPECT_THROW(reflect(a2, {1, -1}, wt(a2, "1,0")), domain_error);
}

TEST(Reflect, TorsionTransformsLinearly)
{
    const auto a1 = build_root_system("A1");
    // t = alpha^vee / 4: s(t) = -t = 3/4 mod 1
    const Weight w = wt(a1, "0;1/4");
    EXPECT_EQ(reflect(a1, {1}, w), wt(a1, "0;3/4"));
    // Y_q is fixed pointwise by W modulo the coroot lattice.
    EXPECT_EQ(reflect(a1, {1}, wt(a1, "0;1/2")), wt(a1, "0;1/2"));
}

TEST(Reflect, IsAnInvolutionFixingItsHyperplane)
{
    std::mt19937_64 rng(11);
    for (const char *label : {"A2", "B2", "G2", "B3", "A1xA1"}) {
        const auto rs = build_root_system(label);
        for (int trial = 0; trial < 25; ++trial) {
            const Weight lam = test::random_weight(rs, rng, true);
            for (const auto &beta : rs.positive_roots()) {
                EXPECT_EQ(reflect(rs, beta, reflect(rs, beta, lam)), lam);
                const Weight img = reflect(rs, beta, lam);
                if (rs.coroot_pairing(lam.real(), beta) == 0) {
                    EXPECT_EQ(img.real(), lam.real());
                }
            }
        }
    }
}

TEST(WeylGroup, Orders)
{
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A1xA1", 4}, {"A3", 24}, {"B3", 48}, {"D4", 192}, {"F4", 1152}};
    for (const auto &[label, order] : cases) {
        EXPECT_EQ(weyl_elements(build_root_system(label)).size(), order) << label;
    }
}

TEST(WeylGroup, CapExceeded)
{
    const auto a3 = build_root_system("A3");
    EXPECT_THROW(weyl_elements(a3, 23), enumeration_limit_error);
    EXPECT_EQ(weyl_elements(a3, 24).size(), 24u);
    EXPECT_THROW(weyl_elements(build_root_system("E8")), enumeration_limit_error);
}

TEST(WeylGroup, ClosedUnderGeneratorsAndReduced)
{
    const auto rs = build_root_system("B3");
    const auto elems = weyl_elements(rs);
    EXPECT_TRUE(elems.front().word.empty());
    const rat_vector probe{rational(3), rational(5), rational(7)};
    std::set<rat_vector, bool (*)(const rat_vector &, const rat_vector &)> images(&lex_less);
    for (const auto &w : elems) {
        images.insert(apply_fund(rs, w, probe));
    }
    EXPECT_EQ(images.size(), elems.size());
    for (const auto &w : elems) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            WeylElement sw{{static_cast<std::uint8_t>(i)}};
            EXPECT_TRUE(images.count(apply_fund(rs, compose(sw, w), probe)));
        }
        // a reduced word of length l maps exactly l positive roots to negative ones
        std::size_t inversions = 0;
        for (const auto &beta : rs.positive_roots()) {
            const auto img = rs.to_root_coords(apply_fund(rs, w, rs.to_fundamental(beta)));
            inversions += img[0] < 0 || img[1] < 0 || img[2] < 0;
        }
        EXPECT_EQ(inversions, w.length());
    }
}

TEST(ShiftedAction, Examples)
{
    const auto a1 = build_root_system("A1");
    const ExtWeylElement s{{rational(0)}, WeylElement{{0}}};
    // s.0 = -alpha = -2 omega
    EXPECT_EQ(shifted_action(a1, s, Weight::zero(1)), wt(a1, "-2"));

    const auto a2 = build_root_system("A2");
    const Weight lam = wt(a2, "1,1");
    EXPECT_EQ(shifted_action(a2, ExtWeylElement::identity(2), lam), lam);
    const ExtWeylElement s1{{rational(0), rational(0)}, WeylElement{{0}}};
    const Weight expected = reflect(a2, {1, 0}, lam + a2.rho_weight()) - a2.rho_weight();
    EXPECT_EQ(shifted_action(a2, s1, lam), expected);
    EXPECT_EQ(expected, wt(a2, "-3,3"));
}

TEST(ShiftedAction, TorsionShift)
{
    const auto a1 = build_root_system("A1");
    const ExtWeylElement z{{rational(1, 2)}, WeylElement{}};
    EXPECT_EQ(shifted_action(a1, z, wt(a1, "3")), wt(a1, "3;1/2"));
    EXPECT_THROW(shifted_action(a1, ExtWeylElement{{rational(1, 3)}, WeylElement{}}, wt(a1, "3")), domain_error);
}

TEST(ShiftedAction, GroupLaw)
{
    std::mt19937_64 rng(5);
    const auto rs = build_root_system("B2");
    const auto W = weyl_elements(rs);
    const auto Y = y_q_elements(rs.rank());
    std::uniform_int_distribution<std::size_t> pw(0, W.size() - 1), py(0, Y.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const ExtWeylElement g{Y[py(rng)], W[pw(rng)]}, h{Y[py(rng)], W[pw(rng)]};
        const Weight lam = test::random_weight(rs, rng, true);
        EXPECT_EQ(shifted_action(rs, compose(rs, g, h), lam), shifted_action(rs, g, shifted_action(rs, h, lam)));
    }
}

TEST(Linkage, Examples)
{
    const auto a1 = build_root_system("A1");
    EXPECT_TRUE(are_linked(a1, Weight::zero(1), wt(a1, "-2")));
    EXPECT_FALSE(are_linked(a1, Weight::zero(1), wt(a1, "1")));
    EXPECT_TRUE(are_linked(a1, Weight::zero(1), wt(a1, "-2;1/2")));
    EXPECT_FALSE(are_linked(a1, Weight::zero(1), wt(a1, "0;1/4")));
    const auto orbit = linkage_orbit(a1, Weight::zero(1));
    EXPECT_EQ(orbit.size(), 4u);
    EXPECT_EQ(std::count(orbit.begin(), orbit.end(), wt(a1, "1")), 0);
}

TEST(Linkage, IsAnEquivalenceRelation)
{
    std::mt19937_64 rng(7);
    for (const char *label : {"A1", "A2", "B2"}) {
        const auto rs = build_root_system(label);
        for (int trial = 0; trial < 10; ++trial) {
            const Weight lam = test::random_weight(rs, rng, true);
            EXPECT_TRUE(are_linked(rs, lam, lam));
            const auto orbit = linkage_orbit(rs, lam);
            for (const auto &mu : orbit) {
                EXPECT_TRUE(are_linked(rs, lam, mu));
                EXPECT_TRUE(are_linked(rs, mu, lam));
                // the orbit of any member is the same set
                EXPECT_EQ(linkage_orbit(rs, mu), orbit);
            }
            const Weight outsider = test::random_weight(rs, rng, true);
            const bool in_orbit = std::find(orbit.begin(), orbit.end(), outsider) != orbit.end();
            EXPECT_EQ(are_linked(rs, lam, outsider), in_orbit);
        }
    }
}

TEST(PartialOrder, Examples)
{
    const auto a1 = build_root_system("A1");
    EXPECT_TRUE(leq(a1, Weight::zero(1), wt(a1, "2")));
    EXPECT_FALSE(leq(a1, Weight::zero(1), wt(a1, "1")));
    EXPECT_FALSE(leq(a1, Weight::zero(1), wt(a1, "2;1/2")));
    const auto a2 = build_root_system("A2");
    EXPECT_FALSE(leq(a2, wt(a2, "1,0"), wt(a2, "0,1")));
    EXPECT_EQ(a2.to_root_coords(wt(a2, "-1,1").real()), (rat_vector{rational(-1, 3), rational(1, 3)}));
}

TEST(PartialOrder, IsAPartialOrderOnIntegralWeights)
{
    std::mt19937_64 rng(3);
    for (const char *label : {"A2", "B2"}) {
        const auto rs = build_root_system(label);
        for (int trial = 0; trial < 300; ++trial) {
            const Weight a = test::random_integral_weight(rs, rng, 3);
            const Weight b = test::random_integral_weight(rs, rng, 3);
            const Weight c = test::random_integral_weight(rs, rng, 3);
            EXPECT_TRUE(leq(rs, a, a));
            if (leq(rs, a, b) && leq(rs, b, a)) {
                EXPECT_EQ(a, b);
            }
            if (leq(rs, a, b) && leq(rs, b, c)) {
                EXPECT_TRUE(leq(rs, a, c));
            }
        }
    }
}

TEST(Dominance, Examples)
{
    const auto a1 = build_root_system("A1");
    EXPECT_TRUE(is_dominant_integral(a1, wt(a1, "1")));
    EXPECT_TRUE(is_in_Pq_plus(a1, wt(a1, "1")));
    EXPECT_FALSE(is_dominant_integral(a1, wt(a1, "-1")));
    EXPECT_FALSE(is_in_Pq_plus(a1, wt(a1, "-1")));
    EXPECT_FALSE(is_dominant_integral(a1, wt(a1, "1;1/2")));
    EXPECT_TRUE(is_in_Pq_plus(a1, wt(a1, "1;1/2")));
    // (t, alpha) = 1/2 gives q^{(t,alpha)} = -1, still in X_q; 1/8 is not.
    EXPECT_TRUE(is_in_Pq_plus(a1, wt(a1, "1;1/4")));
    EXPECT_FALSE(is_in_Pq_plus(a1, wt(a1, "1;1/8")));
    EXPECT_FALSE(is_dominant_integral(a1, wt(a1, "1/2")));
}

TEST(Weight, TorsionIsCanonical)
{
    const auto a2 = build_root_system("A2");
    EXPECT_EQ(wt(a2, "1,2;3/2,-1/2"), wt(a2, "1,2;1/2,1/2"));
    EXPECT_EQ(wt(a2, "1,2;1,0"), wt(a2, "1,2"));
    EXPECT_FALSE(wt(a2, "1,2;1,0").has_torsion());
}

TEST(Linkage, MatchesGroupEnumeration)
{
    std::mt19937_64 rng(13);
    for (const char *label : {"A2", "B2", "G2", "A3"}) {
        const auto rs = build_root_system(label);
        const auto group = weyl_elements(rs);
        const auto yq = y_q_elements(rs.rank());
        for (int trial = 0; trial < 4; ++trial) {
            const Weight lam = trial == 0 ? Weight::zero(rs.rank()) : test::random_weight(rs, rng, true);
            std::set<Weight> brute;
            for (const auto &w : group) {
                for (const auto &z : yq) {
                    brute.insert(shifted_action(rs, ExtWeylElement{z, w}, lam));
                }
            }
            EXPECT_EQ(linkage_orbit(rs, lam), std::vector<Weight>(brute.begin(), brute.end())) << label;
        }
    }
}

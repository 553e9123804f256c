#include <random>

#include <gtest/gtest.h>

#include <charcalc/laurent_poly.hpp>

using namespace charcalc;

namespace
{

LaurentPoly poly(std::initializer_list<std::pair<int_vector, int>> terms, std::size_t n)
{
    LaurentPoly p(n);
    for (const auto &[e, c] : terms) {
        p.add_term(e, c);
    }
    return p;
}

LaurentPoly random_poly(std::mt19937_64 &rng, std::size_t n, int terms, int max_exp)
{
    std::uniform_int_distribution<int> e(0, max_exp), c(-4, 4);
    LaurentPoly p(n);
    for (int t = 0; t < terms; ++t) {
        int_vector m(n);
        for (auto &x : m) {
            x = e(rng);
        }
        p.add_term(m, c(rng));
    }
    return p;
}

} // namespace

TEST(LaurentPoly, DropsZeroCoefficients)
{
    LaurentPoly p(2);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    EXPECT_TRUE(p.is_zero());
    p.add_term({0, 1}, 0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_THROW(p.add_term({-1, 0}, 1), domain_error);
    EXPECT_THROW(p.add_term({1}, 1), domain_error);
}

TEST(LaurentPoly, GrlexIteration)
{
    const auto p = poly({{{2, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}, 2);
    std::vector<int_vector> order;
    for (const auto &[e, c] : p) {
        order.push_back(e);
    }
    EXPECT_EQ(order, (std::vector<int_vector>{{0, 0}, {0, 1}, {1, 0}, {2, 0}}));
    EXPECT_EQ(p.degree(), 2);
}

TEST(LaurentPoly, GreatestCommonMonomial)
{
    const auto p = poly({{{2, 1}, 1}, {{1, 3}, -2}}, 2);
    EXPECT_EQ(p.gcm_exponent(), (int_vector{1, 1}));
    EXPECT_EQ(p.shifted({-1, -1}), poly({{{1, 0}, 1}, {{0, 2}, -2}}, 2));
}

TEST(DivideByFactor, Examples)
{
    const int_vector a{1};
    EXPECT_EQ(*divide_by_factor(LaurentPoly::one_minus(a), a), LaurentPoly::one(1));
    const auto q = divide_by_factor(poly({{{0}, 1}, {{2}, -1}}, 1), a);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, poly({{{0}, 1}, {{1}, 1}}, 1));
    EXPECT_EQ(*q * LaurentPoly::one_minus(a), poly({{{0}, 1}, {{2}, -1}}, 1));
    // evaluation at e^{-alpha} = 1 gives 2, so no factor 1 - e^{-alpha}
    EXPECT_FALSE(divide_by_factor(poly({{{0}, 1}, {{1}, 1}}, 1), a));
}

TEST(DivideByFactor, NonSimpleRoot)
{
    // (1 - x1 x2)(1 + x1) / (1 - x1 x2) = 1 + x1
    const int_vector beta{1, 1};
    const auto g = poly({{{0, 0}, 1}, {{1, 0}, 1}}, 2);
    const auto f = g * LaurentPoly::one_minus(beta);
    EXPECT_EQ(*divide_by_factor(f, beta), g);
    EXPECT_FALSE(divide_by_factor(g, beta));
    // 1 - x1 is not divisible by 1 - x1 x2 even though both vanish somewhere
    EXPECT_FALSE(divide_by_factor(LaurentPoly::one_minus({1, 0}), beta));
}

TEST(DivideByFactor, ZeroIsDivisible)
{
    EXPECT_EQ(*divide_by_factor(LaurentPoly(2), {1, 0}), LaurentPoly(2));
}

TEST(DivideByFactor, ValidatesArguments)
{
    EXPECT_THROW(divide_by_factor(LaurentPoly::one(2), {0, 0}), domain_error);
    EXPECT_THROW(divide_by_factor(LaurentPoly::one(2), {1, -1}), domain_error);
    const auto a2 = build_root_system("A2");
    EXPECT_THROW(divide_by_factor(a2, LaurentPoly::one(2), {2, 1}), domain_error);
    EXPECT_FALSE(divide_by_factor(a2, LaurentPoly::one(2), {1, 1}));
}

TEST(DivideByFactor, RecoversMultipliedQuotient)
{
    std::mt19937_64 rng(17);
    const std::vector<int_vector> betas{{1, 0, 0}, {0, 1, 1}, {1, 2, 0}, {3, 2, 1}, {1, 1, 1}};
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_poly(rng, 3, 6, 4);
        const auto &beta = betas[trial % betas.size()];
        const auto f = g * LaurentPoly::one_minus(beta);
        const auto q = divide_by_factor(f, beta);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, g);
    }
}

TEST(DivideByFactor, MultiplyBackOnArbitraryInput)
{
    std::mt19937_64 rng(19);
    int divisible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto f = random_poly(rng, 2, 3, 2);
        const int_vector beta = trial % 2 ? int_vector{1, 0} : int_vector{1, 1};
        if (trial % 3 == 0) {
            f = f * LaurentPoly::one_minus(beta);
        }
        if (const auto q = divide_by_factor(f, beta)) {
            ++divisible;
            EXPECT_EQ(*q * LaurentPoly::one_minus(beta), f);
        } else {
            // f(x) with x^beta = 1: some beta-string has a non-zero coefficient sum
            EXPECT_FALSE(f.is_zero());
        }
    }
    EXPECT_GT(divisible, 100);
}

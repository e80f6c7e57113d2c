#include <gtest/gtest.h>

#include "circsing/polycore.hpp"
#include "test_support.hpp"

using namespace circsing;
using circsing::testing::random_monic;
using circsing::testing::random_poly;

TEST(PolyCore, CanonicalForm)
{
    EXPECT_TRUE(IntPoly({0, 0, 0}).is_zero());
    EXPECT_FALSE(IntPoly({0, 0, 0}).degree().has_value());
    EXPECT_EQ(IntPoly({1, 2, 0, 0}).degree(), 1u);
    EXPECT_EQ(IntPoly({1, 2, 0, 0}), IntPoly({1, 2}));
    EXPECT_THROW((void)IntPoly{}.leading(), PolyError);
}

TEST(PolyCore, MultiplicationExamples)
{
    EXPECT_EQ(poly_mul(IntPoly{1, 1}, IntPoly{1, -1, 1}), (IntPoly{1, 0, 0, 1}));
    EXPECT_TRUE(poly_mul(IntPoly{-1, 1}, IntPoly{}).is_zero());
    EXPECT_EQ(poly_mul(IntPoly{1, 1, 1}, IntPoly{-1, 1}), (IntPoly{-1, 0, 0, 1}));
}

TEST(PolyCore, DivRemMonicExamples)
{
    auto [q1, r1] = poly_divrem_monic(IntPoly{-1, 0, 0, 0, 1}, IntPoly{1, 0, 1});
    EXPECT_EQ(q1, (IntPoly{-1, 0, 1}));
    EXPECT_TRUE(r1.is_zero());

    auto [q2, r2] = poly_divrem_monic(IntPoly{1, 0, 1}, IntPoly{1, 0, 1});
    EXPECT_EQ(q2, IntPoly{1});
    EXPECT_TRUE(r2.is_zero());

    // by hand: (x^2 + x + 1)(x - 1) = x^3 - 1, so x^3 + 1 leaves 2
    auto [q3, r3] = poly_divrem_monic(IntPoly{1, 0, 0, 1}, IntPoly{1, 1, 1});
    EXPECT_EQ(q3, (IntPoly{-1, 1}));
    EXPECT_EQ(r3, IntPoly{2});
    EXPECT_EQ(poly_mul(IntPoly{1, 1, 1}, q3) + r3, (IntPoly{1, 0, 0, 1}));
}

TEST(PolyCore, DivRemRejectsBadDivisor)
{
    EXPECT_THROW(poly_divrem_monic(IntPoly{1, 2}, IntPoly{}), PolyError);
    EXPECT_THROW(poly_divrem_monic(IntPoly{1, 2}, IntPoly{1, 2}), PolyError);
}

TEST(PolyCore, DivRemReconstructionProperty)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const IntPoly num = random_poly(rng, 12, -9, 9);
        const IntPoly den = random_monic(rng, 12, -9, 9);
        const auto [q, r] = poly_divrem_monic(num, den);
        EXPECT_EQ(den * q + r, num);
        if (!r.is_zero()) {
            EXPECT_LT(*r.degree(), *den.degree());
        }
    }
}

TEST(PolyCore, GcdExamples)
{
    EXPECT_EQ(poly_gcd_primitive(IntPoly{-1, 0, 0, 0, 1}, IntPoly{-1, 0, 1}), (IntPoly{-1, 0, 1}));
    // x(1 + x^2) and (x^2 - 1)(x^2 + 1) share exactly x^2 + 1
    EXPECT_EQ(poly_gcd_primitive(IntPoly{0, 1, 0, 1}, IntPoly{-1, 0, 0, 0, 1}), (IntPoly{1, 0, 1}));
    EXPECT_EQ(poly_gcd_primitive(IntPoly{2, 2}, IntPoly{3, 3}), (IntPoly{1, 1}));
    EXPECT_EQ(poly_gcd_primitive(IntPoly{}, IntPoly{-4, -2}), (IntPoly{2, 1}));
    EXPECT_THROW(poly_gcd_primitive(IntPoly{}, IntPoly{}), PolyError);
}

TEST(PolyCore, GcdDividesBothProperty)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        // plant a common factor half of the time
        const IntPoly common = trial % 2 ? random_poly(rng, 3, -3, 3) : IntPoly{1};
        IntPoly a = random_poly(rng, 8, -9, 9) * common;
        IntPoly b = random_poly(rng, 8, -9, 9) * common;
        if (a.is_zero() && b.is_zero()) continue;
        const IntPoly g = poly_gcd_primitive(a, b);
        EXPECT_EQ(content(g), 1);
        EXPECT_GT(sgn(g.leading()), 0);
        for (const IntPoly* p : {&a, &b}) {
            if (p->is_zero()) continue;
            EXPECT_TRUE(poly_pseudo_divrem(primitive_part(*p), g).remainder.is_zero());
        }
        if (!common.is_zero() && *common.degree() > 0 && !a.is_zero() && !b.is_zero()) {
            EXPECT_TRUE(poly_pseudo_divrem(g, primitive_part(common)).remainder.is_zero());
        }
    }
}

TEST(PolyCore, ResultantExamples)
{
    EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{0, 1, 1}), 2);
    EXPECT_EQ(resultant(IntPoly{1, 0, 1}, IntPoly{0, 1, 0, 1}), 0);
    // b(w) = w + w^2 = -1 at both primitive cube roots
    EXPECT_EQ(resultant(IntPoly{1, 1, 1}, IntPoly{0, 1, 1}), 1);
    EXPECT_THROW(resultant(IntPoly{}, IntPoly{1}), PolyError);
    EXPECT_THROW(resultant(IntPoly{1, 2}, IntPoly{1}), PolyError);
}

// Subresultant PRS and the Sylvester determinant must give identical integers.
TEST(PolyCore, SubresultantMatchesSylvesterDeterminant)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly a = random_poly(rng, 9, -9, 9);
        const IntPoly b = random_poly(rng, 9, -9, 9);
        if (a.is_zero() || b.is_zero() || *a.degree() + *b.degree() == 0) continue;
        if (*a.degree() == 0 || *b.degree() == 0) continue;
        EXPECT_EQ(resultant_subresultant(a, b), bareiss_determinant(circsing::testing::sylvester(a, b)))
            << format_poly(a) << " / " << format_poly(b);
    }
    // small cases against permutation expansion as well
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly a = random_poly(rng, 4, -5, 5);
        const IntPoly b = random_poly(rng, 3, -5, 5);
        if (a.is_zero() || b.is_zero() || *a.degree() == 0 || *b.degree() == 0) continue;
        EXPECT_EQ(resultant_subresultant(a, b), circsing::testing::leibniz_det(circsing::testing::sylvester(a, b)));
    }
}

TEST(PolyCore, ResultantAgainstNumericRootProduct)
{
    std::mt19937_64 rng(11);
    for (std::uint64_t n = 1; n <= 24; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const IntPoly b = random_poly(rng, 10, -3, 3);
            const double exact = resultant(IntPoly::x_pow_minus_one(n), b).get_d();
            const auto numeric = circsing::testing::numeric_root_product(b, n);
            // rounding error grows with the product of the factor magnitudes, not with the result
            const double scale = std::max(1.0, circsing::testing::numeric_root_product_bound(b, n));
            EXPECT_LE(std::abs(numeric - exact), 1e-6 * scale) << "n=" << n << " b=" << format_poly(b);
        }
    }
}

TEST(PolyCore, ResultantMultiplicativity)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_monic(rng, 6, -4, 4);
        const IntPoly b = random_poly(rng, 6, -4, 4);
        const IntPoly c = random_poly(rng, 6, -4, 4);
        EXPECT_EQ(resultant(a, b * c), resultant(a, b) * resultant(a, c));
    }
}

TEST(PolyCore, EvalUnitCircleExamples)
{
    EXPECT_LT(std::abs(eval_unit_circle(IntPoly{0, 1, 0, 1}, 4, 1)), 1e-12);
    for (std::uint64_t n : {1u, 5u, 12u})
        for (std::uint64_t k = 0; k < n; ++k)
            EXPECT_EQ(eval_unit_circle(IntPoly{1}, n, k), std::complex<double>(1.0, 0.0));
    const auto v = eval_unit_circle(IntPoly{0, 1, 0, 0, 1}, 5, 0);
    EXPECT_NEAR(v.real(), 2.0, 1e-12);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(PolyCore, GammaStrip)
{
    auto s1 = gamma_strip(IntPoly{0, 1, 0, 1});
    EXPECT_EQ(s1.shift, 1u);
    EXPECT_EQ(s1.reduced, (IntPoly{1, 0, 1}));
    auto s2 = gamma_strip(IntPoly{1, 1});
    EXPECT_EQ(s2.shift, 0u);
    EXPECT_EQ(s2.reduced, (IntPoly{1, 1}));
    auto s3 = gamma_strip(IntPoly::monomial(5));
    EXPECT_EQ(s3.shift, 5u);
    EXPECT_EQ(s3.reduced, IntPoly{1});
    EXPECT_THROW(gamma_strip(IntPoly{}), PolyError);
}

TEST(PolyCore, TextForm)
{
    EXPECT_EQ(parse_poly("0,1,0,1"), (IntPoly{0, 1, 0, 1}));
    EXPECT_EQ(format_poly(IntPoly{0, 1, 0, 1}), "0,1,0,1");
    EXPECT_EQ(format_poly(IntPoly{}), "0");
    EXPECT_TRUE(parse_poly("0").is_zero());
    EXPECT_EQ(parse_poly("-3, +2,123456789012345678901234567890").coeff(2),
              BigInt("123456789012345678901234567890"));
    EXPECT_THROW(parse_poly(""), PolyError);
    EXPECT_THROW(parse_poly("1,,2"), PolyError);
    EXPECT_THROW(parse_poly("1,x"), PolyError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly p = random_poly(rng, 15, -1000, 1000);
        const std::string text = format_poly(p);
        EXPECT_EQ(parse_poly(text), p);
        EXPECT_EQ(format_poly(parse_poly(text)), text);
    }
}

TEST(PolyCore, FoldAndSubstitute)
{
    EXPECT_EQ(fold_cyclic(IntPoly{1, 2, 3, 4, 5}, 2), (IntPoly{9, 6}));
    EXPECT_EQ(substitute_power(IntPoly{1, 1}, 3), (IntPoly{1, 0, 0, 1}));
    EXPECT_EQ(to_pretty(IntPoly{-1, 0, 0, 1}), "x^3 - 1");
}

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <thread>

#include "circsing/cyclotomic.hpp"

using namespace circsing;

TEST(Cyclotomic, Divisors)
{
    EXPECT_EQ(divisors(1), std::vector<std::uint64_t>{1});
    EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(7), (std::vector<std::uint64_t>{1, 7}));
    EXPECT_EQ(divisors(36), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
    EXPECT_THROW(divisors(0), std::invalid_argument);
}

TEST(Cyclotomic, EulerPhi)
{
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(12), 4u);
    EXPECT_EQ(euler_phi(9), 6u);
    EXPECT_THROW(euler_phi(0), std::invalid_argument);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        EXPECT_EQ(euler_phi(n), count);
    }
}

TEST(Cyclotomic, Examples)
{
    EXPECT_EQ(cyclotomic(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
    EXPECT_THROW(cyclotomic(0), std::invalid_argument);
    // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    EXPECT_EQ(cyclotomic(105).coeff(7), -2);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne)
{
    for (std::uint64_t n = 1; n <= 200; ++n) {
        IntPoly prod{1};
        for (std::uint64_t d : divisors(n)) prod = prod * cyclotomic(d);
        EXPECT_EQ(prod, IntPoly::x_pow_minus_one(n)) << "n=" << n;
    }
}

TEST(Cyclotomic, DegreeMonicAndConstantTerm)
{
    for (std::uint64_t d = 1; d <= 200; ++d) {
        const IntPoly& phi = cyclotomic(d);
        EXPECT_EQ(*phi.degree(), euler_phi(d)) << d;
        EXPECT_TRUE(phi.is_monic()) << d;
        EXPECT_EQ(phi.coeff(0), d == 1 ? -1 : 1) << d;
    }
}

TEST(Cyclotomic, PrimePowerClosedForm)
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        std::uint64_t stride = 1;  // p^(k-1)
        for (std::uint64_t pk = p; pk <= 128; pk *= p) {
            std::vector<BigInt> expected((p - 1) * stride + 1);
            for (std::uint64_t j = 0; j < p; ++j) expected[j * stride] = 1;
            EXPECT_EQ(cyclotomic(pk), IntPoly(expected)) << pk;
            EXPECT_EQ(cyclotomic(pk).eval(1), p);
            stride *= p;
        }
    }
}

TEST(Cyclotomic, CacheAgreesWithPlainDivision)
{
    for (std::uint64_t d = 1; d <= 120; ++d) EXPECT_EQ(cyclotomic(d), cyclotomic_by_division(d)) << d;
}

// Phi_{pn}(x) Phi_n(x) = Phi_n(x^p) when p does not divide n; Phi_{pn}(x) = Phi_n(x^p) when it does.
TEST(Cyclotomic, PrimeMultipleIdentities)
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint64_t n = 1; n * p <= 150; ++n) {
            const IntPoly lifted = substitute_power(cyclotomic(n), p);
            if (n % p == 0) EXPECT_EQ(cyclotomic(p * n), lifted);
            else EXPECT_EQ(cyclotomic(p * n) * cyclotomic(n), lifted);
        }
    }
}

TEST(Cyclotomic, PhiDividesExamples)
{
    EXPECT_TRUE(phi_divides(IntPoly{1, 0, 1}, 4));
    EXPECT_FALSE(phi_divides(IntPoly{1, 1}, 4));
    EXPECT_TRUE(phi_divides(IntPoly{1, 1, 1}, 3));
    EXPECT_TRUE(phi_divides(IntPoly{}, 5));
    // agrees with plain division for a polynomial longer than d
    const IntPoly p{1, 1, 0, 1, 1, 0, 1, 1, 0, 1};
    for (std::uint64_t d = 1; d <= 12; ++d)
        EXPECT_EQ(phi_divides(p, d), poly_divrem_monic(p, cyclotomic(d)).remainder.is_zero()) << d;
}

TEST(Cyclotomic, OdlyzkoClassExamples)
{
    const auto up = odlyzko_modulus_class(4, 2);
    EXPECT_EQ(up.kind, OdlyzkoCase::PrimePowerUp);
    EXPECT_DOUBLE_EQ(up.predicted_modulus, 2.0);

    const auto unit = odlyzko_modulus_class(3, 5);
    EXPECT_EQ(unit.kind, OdlyzkoCase::Unit);
    EXPECT_DOUBLE_EQ(unit.predicted_modulus, 1.0);

    const auto down = odlyzko_modulus_class(2, 4);
    EXPECT_EQ(down.kind, OdlyzkoCase::PrimePowerDownDividing);
    EXPECT_NEAR(down.predicted_modulus, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(eval_unit_circle(cyclotomic(2), 4, 1)), down.predicted_modulus, 1e-12);

    EXPECT_EQ(odlyzko_modulus_class(1, 9).kind, OdlyzkoCase::PrimePowerDownCoprime);
    EXPECT_THROW(odlyzko_modulus_class(6, 6), std::invalid_argument);
    EXPECT_THROW(odlyzko_modulus_class(0, 6), std::invalid_argument);
}

// The unit factor has modulus 1 only up to Galois conjugation; taking the
// product over every primitive n-th root (the norm) removes it exactly.
TEST(Cyclotomic, OdlyzkoNormForm)
{
    for (std::uint64_t m = 1; m <= 30; ++m) {
        for (std::uint64_t n = 1; n <= 30; ++n) {
            if (m == n) continue;
            const BigInt norm = abs(resultant(cyclotomic(n), cyclotomic(m)));
            EXPECT_EQ(norm, odlyzko_modulus_class(m, n).predicted_norm) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Cyclotomic, OdlyzkoGeometricMeanOverPrimitiveRoots)
{
    for (std::uint64_t m = 1; m <= 30; ++m) {
        for (std::uint64_t n = 1; n <= 30; ++n) {
            if (m == n) continue;
            double log_sum = 0.0;
            for (std::uint64_t k = 1; k <= n; ++k)
                if (std::gcd(k, n) == 1) log_sum += std::log(std::abs(eval_unit_circle(cyclotomic(m), n, k)));
            const double mean = std::exp(log_sum / static_cast<double>(euler_phi(n)));
            const double expected =
                std::pow(odlyzko_modulus_class(m, n).predicted_norm.get_d(), 1.0 / static_cast<double>(euler_phi(n)));
            EXPECT_NEAR(mean, expected, 1e-6 * expected) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Cyclotomic, ConcurrentCachePopulation)
{
    CyclotomicCache cache;
    std::vector<std::jthread> workers;
    std::vector<std::vector<IntPoly>> seen(4);
    for (std::size_t w = 0; w < seen.size(); ++w) {
        workers.emplace_back([&cache, &seen, w] {
            for (std::uint64_t d = 150; d >= 1; --d) seen[w].push_back(cache.get(d));
        });
    }
    workers.clear();
    for (const auto& v : seen) EXPECT_EQ(v, seen.front());
    EXPECT_EQ(cache.size(), 150u);
    EXPECT_EQ(seen.front().back(), (IntPoly{-1, 1}));
}

TEST(Cyclotomic, TwoAdicValuation)
{
    EXPECT_EQ(two_adic_valuation(1), 0u);
    EXPECT_EQ(two_adic_valuation(24), 3u);
    EXPECT_THROW(two_adic_valuation(0), std::invalid_argument);
}

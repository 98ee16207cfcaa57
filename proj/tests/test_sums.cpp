#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/sums.hpp"

using namespace zetaval;

namespace {

const RationalPolynomial X{Rational(0), Rational(1)};
const RationalPolynomial ONE{Rational(1)};

RationalPolynomial c(const Rational& v)
{
    return RationalPolynomial{v};
}

} // namespace

TEST(Sums, ClosedFormsForSmallN)
{
    EXPECT_EQ(s_n(1), X * (X - ONE) * Rational(1L, 2L));
    EXPECT_EQ(s_n(2), X * (X - ONE) * (X * Rational(2) - ONE) * Rational(1L, 6L));
    const RationalPolynomial xx = X * (X - ONE);
    EXPECT_EQ(s_n(3), xx * xx * Rational(1L, 4L));
    EXPECT_EQ(s_n(0), X - ONE);
}

TEST(Sums, HigherDegreesAgainstPowerSums)
{
    for (std::size_t n = 0; n <= 20; ++n) {
        const RationalPolynomial s = s_n(n);
        EXPECT_EQ(s.degree(), static_cast<int>(n + 1));
        for (long m = 1; m <= 15; ++m) {
            EXPECT_EQ(s.evaluate(Rational(m)), oracle::power_sum(n, m)) << "n=" << n << " M=" << m;
        }
    }
}

TEST(Sums, ShiftedStart)
{
    oracle::RandomRationals rng(4);
    for (const Rational& a : {Rational(1), Rational(1L, 2L), Rational(1L, 3L), Rational(5L, 7L)}) {
        EXPECT_EQ(s_na(PartialSumSpec(0, a)), X - ONE);
        EXPECT_EQ(s_na(PartialSumSpec(1, a)), (X + c(a * Rational(2) - Rational(2))) * (X - ONE) * Rational(1L, 2L));
    }
    const Rational q(1L, 4L);
    const RationalPolynomial xm1 = X - ONE, xm2 = X - c(Rational(2)), xm3 = X * Rational(2) - c(Rational(3));
    EXPECT_EQ(s_na(PartialSumSpec(2, q)),
              xm1 * Rational(1L, 16L) + xm1 * xm2 * Rational(1L, 4L) + xm1 * xm2 * xm3 * Rational(1L, 6L));
}

TEST(Sums, RecursiveConstructionAgrees)
{
    EXPECT_EQ(s_na_recursive(PartialSumSpec(0, Rational(1L, 2L))), X - ONE);
    EXPECT_EQ(s_na_recursive(PartialSumSpec(2, Rational(1L, 4L))), s_na(PartialSumSpec(2, Rational(1L, 4L))));
    EXPECT_EQ(s_na_recursive(PartialSumSpec(3, Rational(1))), s_n(3));
    oracle::RandomRationals rng(8);
    for (int i = 0; i < 30; ++i) {
        const long den = rng.integer(1, 12);
        const Rational a(rng.integer(1, den), den);
        const auto n = static_cast<std::size_t>(rng.integer(0, 14));
        EXPECT_EQ(s_na_recursive(PartialSumSpec(n, a)), s_na(PartialSumSpec(n, a))) << "n=" << n << " a=" << a;
    }
}

TEST(Sums, BruteForceOracle)
{
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const Rational& a : {Rational(1), Rational(1L, 2L), Rational(1L, 3L), Rational(1L, 4L), Rational(2L, 3L),
                                 Rational(3L, 4L)}) {
            const RationalPolynomial s = s_na(PartialSumSpec(n, a));
            for (long m = 2; m <= 12; ++m) {
                Rational brute;
                for (long k = 0; k <= m - 2; ++k) {
                    brute += (Rational(k) + a).pow(static_cast<long>(n));
                }
                EXPECT_EQ(s.evaluate(Rational(m)), brute);
            }
        }
    }
}

TEST(Sums, TelescopingAgrees)
{
    for (std::size_t n = 0; n <= 30; ++n) {
        EXPECT_EQ(s_n_telescoping(n), s_n(n)) << n;
    }
}

TEST(Sums, Antisymmetry)
{
    for (std::size_t n = 1; n <= 40; ++n) {
        const RationalPolynomial s = s_n(n);
        const RationalPolynomial reflected = s.scale_argument(Rational(-1)).shift(Rational(-1));
        EXPECT_TRUE((s + reflected * (n % 2 == 0 ? Rational(1) : Rational(-1))).is_zero()) << n;
    }
    const RationalPolynomial s1 = s_n(1);
    EXPECT_TRUE((s1 - s1.scale_argument(Rational(-1)).shift(Rational(-1))).is_zero());
}

TEST(Sums, OffsetValidation)
{
    EXPECT_THROW(PartialSumSpec(1, Rational(0)), DomainError);
    EXPECT_THROW(PartialSumSpec(1, Rational(3L, 2L)), DomainError);
    EXPECT_THROW(PartialSumSpec(1, Rational(-1L, 2L)), DomainError);
    EXPECT_NO_THROW(PartialSumSpec(1, Rational(1)));
}

TEST(Sums, SignedAreaIntegrand)
{
    for (std::size_t k = 0; k <= 10; ++k) {
        const RationalPolynomial phi = signed_area_integrand(k);
        EXPECT_EQ(phi.degree(), static_cast<int>(2 * k + 2));
        EXPECT_EQ(phi.evaluate(Rational(0)), Rational(0));
        EXPECT_EQ(phi.evaluate(Rational(1)), Rational(0));
        for (long i = 1; i < 200; ++i) {
            ASSERT_GT(phi.evaluate(Rational(i, 200L)).sign(), 0) << "k=" << k << " x=" << i << "/200";
        }
    }
}

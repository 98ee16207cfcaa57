#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "zetaval/cyclotomic.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/padic.hpp"
#include "zetaval/rational.hpp"

using namespace zetaval;

TEST(Rational, ExampleArithmetic)
{
    EXPECT_EQ(Rational(1L, 6L) + Rational(-1L, 2L), Rational(-1L, 3L));
    EXPECT_EQ(Rational(-691L, 2730L) * Rational(2730), Rational(-691));
    EXPECT_EQ(Rational(2L, 3L).pow(-2), Rational(9L, 4L));
}

TEST(Rational, CanonicalForm)
{
    const Rational r(6L, -4L);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    const Rational z = Rational(3L, 7L) - Rational(3L, 7L);
    EXPECT_EQ(z.numerator(), 0);
    EXPECT_EQ(z.denominator(), 1);
    EXPECT_EQ(z.to_string(), "0");
}

TEST(Rational, Errors)
{
    EXPECT_THROW(Rational(1L, 0L), ArithmeticError);
    EXPECT_THROW(Rational(1) / Rational(0), ArithmeticError);
    EXPECT_THROW(Rational(0).inverse(), ArithmeticError);
    EXPECT_THROW(Rational(0).pow(-1), ArithmeticError);
    EXPECT_EQ(Rational(0).pow(0), Rational(1));
}

TEST(Rational, TextFormat)
{
    EXPECT_EQ(Rational(-691L, 2730L).to_string(), "-691/2730");
    EXPECT_EQ(Rational(40634L, 3L).to_string(), "40634/3");
    EXPECT_EQ(Rational(-27622104).to_string(), "-27622104");
    EXPECT_EQ(Rational::parse("+5/10"), Rational(1L, 2L));
    EXPECT_EQ(Rational::parse("-691/2730"), Rational(-691L, 2730L));
    EXPECT_EQ(Rational::parse("605747775717744/23").to_string(), "605747775717744/23");
    for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/0", "--1", "1 /2", "+"}) {
        EXPECT_THROW(Rational::parse(bad), ArithmeticError) << bad;
    }
}

TEST(Rational, Decimal)
{
    EXPECT_EQ(Rational(1L, 3L).to_decimal(), "0.333333333333");
    EXPECT_EQ(Rational(2L, 3L).to_decimal(), "0.666666666667");
    EXPECT_EQ(Rational(-1L, 12L).to_decimal(), "-0.0833333333333");
    EXPECT_EQ(Rational(1L, 2L).to_decimal(), "0.5");
    EXPECT_EQ(Rational(5).to_decimal(), "5");
    EXPECT_EQ(Rational(0).to_decimal(), "0");
    EXPECT_EQ(Rational(1L, 8L).to_decimal(2), "0.12");  // half-even
    EXPECT_EQ(Rational(3L, 8L).to_decimal(2), "0.38");
    EXPECT_EQ(Rational(999999L, 1000L).to_decimal(3), "1000");
    EXPECT_EQ(Rational(1L, 1000000000L).to_decimal(), "1e-9");
}

TEST(Rational, FieldAxiomsRandomized)
{
    oracle::RandomRationals rng(20261019);
    for (int i = 0; i < 500; ++i) {
        const Rational a = rng(), b = rng(), c = rng();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
            EXPECT_EQ(b / a * a, b);
        }
        EXPECT_EQ(Rational::parse(a.to_string()), a);
        EXPECT_EQ(a < b, (b - a).sign() > 0);
    }
}

TEST(PAdic, Examples)
{
    EXPECT_EQ(vp(Rational(-12750L, 11L), 11), PAdicValuation::finite(-1));
    EXPECT_TRUE(vp(Rational(0), 7).is_infinite());
    EXPECT_EQ(vp(Rational(-691L, 2730L), 7), PAdicValuation::finite(-1));
    EXPECT_EQ(vp(Rational(72), 2), PAdicValuation::finite(3));
    EXPECT_THROW(vp(Rational(3), 4), DomainError);
    EXPECT_THROW(vp(Rational(3), 1), DomainError);
    EXPECT_GT(PAdicValuation::infinity(), PAdicValuation::finite(1000));
}

TEST(PAdic, Primality)
{
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (std::uint64_t n = 0; n < 50; ++n) {
        EXPECT_EQ(is_prime(n), std::find(primes.begin(), primes.end(), n) != primes.end()) << n;
    }
}

TEST(PAdic, ValuationLawsRandomized)
{
    oracle::RandomRationals rng(7);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int i = 0; i < 300; ++i) {
            const Rational a = rng.nonzero() * Rational(p).pow(rng.integer(-3, 3));
            const Rational b = rng.nonzero();
            EXPECT_EQ(vp(a * b, p).value(), vp(a, p).value() + vp(b, p).value());
            EXPECT_GE(vp(a + b, p), std::min(vp(a, p), vp(b, p)));
        }
    }
}

TEST(Cyclotomic, Examples)
{
    const auto z4 = CyclotomicElement::generator(4);
    EXPECT_EQ(z4 * z4, CyclotomicElement(4, Rational(-1)));
    const auto z3 = CyclotomicElement::generator(3);
    const auto one = CyclotomicElement(3, Rational(1));
    EXPECT_EQ(z3 * z3, -one - z3);
    EXPECT_EQ((z3 * z3).to_string(), "-1 - zeta3");
    EXPECT_TRUE(((one + z3) + (-one - z3)).is_zero());
    EXPECT_THROW((void)(z3 + z4), RingMismatchError);
    EXPECT_THROW((void)(z3 == z4), RingMismatchError);
}

TEST(Cyclotomic, Polynomials)
{
    const auto phi12 = cyclotomic_polynomial(12);
    const std::vector<Rational> expected{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)};
    EXPECT_EQ(phi12, expected);
    for (unsigned long m = 1; m <= 40; ++m) {
        EXPECT_EQ(cyclotomic_polynomial(m).size(), euler_phi(m) + 1) << m;
        EXPECT_EQ(CyclotomicElement(m).coefficients().size(), euler_phi(m)) << m;
    }
    EXPECT_THROW(cyclotomic_polynomial(0), DomainError);
}

TEST(Cyclotomic, RootsOfUnity)
{
    for (unsigned long m : {3UL, 5UL, 7UL, 8UL, 12UL}) {
        const auto z = CyclotomicElement::generator(m);
        EXPECT_EQ(z.pow(static_cast<long>(m)), CyclotomicElement(m, Rational(1)));
        CyclotomicElement sum(m);
        for (long e = 0; e < static_cast<long>(m); ++e) {
            sum += CyclotomicElement::root_of_unity(m, e);
        }
        EXPECT_TRUE(sum.is_zero()) << m;
        EXPECT_EQ(z.inverse(), z.pow(static_cast<long>(m) - 1));
    }
}

namespace {

CyclotomicElement random_element(oracle::RandomRationals& rng, unsigned long m)
{
    std::vector<Rational> coeffs(euler_phi(m) + 2);
    for (auto& c : coeffs) {
        c = rng(9, 5);
    }
    return CyclotomicElement::from_coefficients(m, coeffs);
}

} // namespace

TEST(Cyclotomic, RingAxiomsRandomized)
{
    oracle::RandomRationals rng(99);
    for (unsigned long m : {3UL, 4UL, 5UL, 6UL, 7UL, 12UL}) {
        for (int i = 0; i < 40; ++i) {
            const auto a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), CyclotomicElement(m, Rational(1)));
            }
            const Rational r = rng();
            EXPECT_EQ(a * r, a * CyclotomicElement(m, r));
        }
    }
}

TEST(Cyclotomic, LowOrdersMatchRationals)
{
    oracle::RandomRationals rng(3);
    for (unsigned long m : {1UL, 2UL}) {
        for (int i = 0; i < 100; ++i) {
            const Rational a = rng(), b = rng();
            const CyclotomicElement ea(m, a), eb(m, b);
            EXPECT_TRUE((ea + eb).is_rational());
            EXPECT_EQ((ea + eb).constant_term(), a + b);
            EXPECT_EQ((ea - eb).constant_term(), a - b);
            EXPECT_EQ((ea * eb).constant_term(), a * b);
            if (!b.is_zero()) {
                EXPECT_EQ((ea / eb).constant_term(), a / b);
            }
            EXPECT_EQ(ea == eb, a == b);
        }
    }
    EXPECT_EQ(CyclotomicElement::generator(2), CyclotomicElement(2, Rational(-1)));
    EXPECT_EQ(CyclotomicElement::generator(1), CyclotomicElement(1, Rational(1)));
}

TEST(Cyclotomic, ConcurrentCacheFill)
{
    std::vector<std::thread> pool;
    std::vector<std::size_t> sizes(8);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        pool.emplace_back([&sizes, t] { sizes[t] = cyclotomic_polynomial(60 + t % 3).size(); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        EXPECT_EQ(sizes[t], euler_phi(60 + t % 3) + 1);
    }
}

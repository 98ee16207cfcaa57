#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "zetaval/bernoulli.hpp"
#include "zetaval/errors.hpp"

using namespace zetaval;

TEST(Bernoulli, TableValues)
{
    EXPECT_EQ(bernoulli_number(0), Rational(1));
    EXPECT_EQ(bernoulli_number(1), Rational(-1L, 2L));
    EXPECT_EQ(bernoulli_number(2), Rational(1L, 6L));
    EXPECT_EQ(bernoulli_number(7), Rational(0));
    EXPECT_EQ(bernoulli_number(12), Rational(-691L, 2730L));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
    for (std::size_t n = 0; n <= 60; ++n) {
        EXPECT_EQ(bernoulli_number(n), oracle::bernoulli(n)) << n;
    }
}

TEST(Bernoulli, Polynomials)
{
    EXPECT_EQ(bernoulli_poly(1), (RationalPolynomial{Rational(-1L, 2L), Rational(1)}));
    EXPECT_EQ(bernoulli_poly(2), (RationalPolynomial{Rational(1L, 6L), Rational(-1), Rational(1)}));
    EXPECT_EQ(bernoulli_poly(3).evaluate(Rational(1L, 4L)), Rational(3L, 64L));
    oracle::RandomRationals rng(11);
    for (std::size_t n = 0; n <= 25; ++n) {
        const Rational x = rng();
        EXPECT_EQ(bernoulli_poly(n).evaluate(x), oracle::bernoulli_poly_at(n, x)) << n;
    }
}

TEST(Bernoulli, FreshCacheAgrees)
{
    BernoulliCache fresh;
    EXPECT_EQ(fresh.get(30), bernoulli_number(30));
    EXPECT_GE(fresh.size(), 31U);
    for (std::size_t n = 0; n <= 30; ++n) {
        EXPECT_EQ(fresh.get(n), bernoulli_number(n));
    }
}

TEST(Bernoulli, ConcurrentReaders)
{
    BernoulliCache shared;
    std::vector<std::thread> pool;
    std::vector<Rational> seen(16);
    for (std::size_t t = 0; t < seen.size(); ++t) {
        pool.emplace_back([&, t] { seen[t] = shared.get(40 + t % 5); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (std::size_t t = 0; t < seen.size(); ++t) {
        EXPECT_EQ(seen[t], oracle::bernoulli(40 + t % 5));
    }
}

TEST(Euler, Examples)
{
    const EulerParameter<Rational> one(Rational(1));
    EXPECT_EQ(euler_poly(one, 0), RationalPolynomial{Rational(1)});
    EXPECT_EQ(euler_poly(one, 1), (RationalPolynomial{Rational(-1L, 2L), Rational(1)}));
    EXPECT_EQ(euler_poly(one, 2), (RationalPolynomial{Rational(0), Rational(-1), Rational(1)}));
    EXPECT_EQ(euler_number(one, 0), Rational(1));
    EXPECT_EQ(euler_number(one, 1), Rational(0));
    EXPECT_EQ(euler_number(one, 2), Rational(-1));
    EXPECT_EQ(euler_number(one, 4), Rational(5));
    EXPECT_EQ(euler_number(one, 6), Rational(-61));
}

TEST(Euler, RejectsMinusOne)
{
    EXPECT_THROW(EulerParameter<Rational>(Rational(-1)), DomainError);
    EXPECT_THROW(EulerParameter<CyclotomicElement>(CyclotomicElement(2, Rational(-1))), DomainError);
}

TEST(Euler, PropertiesRandomized)
{
    oracle::RandomRationals rng(31);
    for (int i = 0; i < 20; ++i) {
        Rational cv = rng();
        if (cv == Rational(-1)) {
            continue;
        }
        const EulerParameter<Rational> c(cv);
        RationalPolynomial prev;
        for (std::size_t n = 0; n <= 15; ++n) {
            const RationalPolynomial e = euler_poly(c, n);
            const RationalPolynomial rhs = RationalPolynomial::monomial({}, n, Rational(1) + cv);
            EXPECT_EQ(e.shift(Rational(1)) + e * cv, rhs) << "c=" << cv << " n=" << n;
            if (n > 0) {
                EXPECT_EQ(e.derivative(), prev * Rational(static_cast<long>(n)));
            }
            prev = e;
        }
    }
}

TEST(Euler, CyclotomicParameter)
{
    const auto i = CyclotomicElement::generator(4);
    const EulerParameter<CyclotomicElement> c(i);
    const auto one_plus_c = CyclotomicElement(4, Rational(1)) + i;
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto e = euler_poly(c, n);
        EXPECT_EQ(e.shift(Rational(1)) + e * i, Polynomial<CyclotomicElement>::monomial(4, n, one_plus_c));
    }
}

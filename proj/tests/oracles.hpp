// Reference computations that share no code path with the library's
// Bernoulli machinery. Only Rational arithmetic and binomials are reused.
#ifndef ZETAVAL_TESTS_ORACLES_HPP
#define ZETAVAL_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "zetaval/dirichlet.hpp"
#include "zetaval/rational.hpp"

namespace oracle {

using zetaval::Rational;

// Akiyama-Tanigawa; yields B_1 = +1/2, flipped to the -1/2 convention.
inline Rational bernoulli(std::size_t n)
{
    std::vector<Rational> a(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        a[m] = Rational(1L, static_cast<long>(m + 1));
        for (std::size_t j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
    }
    return n == 1 ? -a[0] : a[0];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, evaluated pointwise.
inline Rational bernoulli_poly_at(std::size_t n, const Rational& x)
{
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc += Rational(zetaval::binomial(n, k)) * bernoulli(k) * x.pow(static_cast<long>(n - k));
    }
    return acc;
}

// B_{n,chi} = sum_j C(n,j) B_j k^{j-1} sum_a chi(a) a^{n-j}.
inline Rational generalized_bernoulli(const zetaval::RealCharacter& chi, std::size_t n)
{
    const long k = static_cast<long>(chi.modulus());
    Rational acc;
    for (std::size_t j = 0; j <= n; ++j) {
        Rational inner;
        for (long a = 1; a <= k; ++a) {
            inner += chi(a) * Rational(a).pow(static_cast<long>(n - j));
        }
        acc += Rational(zetaval::binomial(n, j)) * bernoulli(j) * Rational(k).pow(static_cast<long>(j) - 1) * inner;
    }
    return acc;
}

// sum_{k=1}^{m-1} k^n
inline Rational power_sum(std::size_t n, long m)
{
    Rational acc;
    for (long k = 1; k < m; ++k) {
        acc += Rational(k).pow(static_cast<long>(n));
    }
    return acc;
}

// Legendre symbol by exhaustive search for square roots.
inline long legendre(long a, long p)
{
    a = ((a % p) + p) % p;
    if (a == 0) {
        return 0;
    }
    for (long x = 1; x < p; ++x) {
        if (x * x % p == a) {
            return 1;
        }
    }
    return -1;
}

class RandomRationals {
public:
    explicit RandomRationals(unsigned seed) : gen_(seed) {}

    Rational operator()(long max_num = 60, long max_den = 40)
    {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return {num(gen_), den(gen_)};
    }

    Rational nonzero()
    {
        for (;;) {
            Rational r = (*this)();
            if (!r.is_zero()) {
                return r;
            }
        }
    }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

private:
    std::mt19937 gen_;
};

} // namespace oracle

#endif

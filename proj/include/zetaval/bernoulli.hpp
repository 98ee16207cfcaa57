#ifndef ZETAVAL_BERNOULLI_HPP
#define ZETAVAL_BERNOULLI_HPP

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "zetaval/errors.hpp"
#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

/// Lazily extended table of Bernoulli numbers with B_1 = -1/2.
///
/// Entries are produced by sum_{k=0}^{m} C(m+1,k) B_k = 0 solved for B_m.
/// The table only grows; readers always see a fully computed prefix.
class BernoulliCache {
public:
    BernoulliCache();
    BernoulliCache(const BernoulliCache&) = delete;
    BernoulliCache& operator=(const BernoulliCache&) = delete;

    Rational get(std::size_t n);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::vector<Rational> table_;
};

/// Process-wide cache shared by every routine below.
BernoulliCache& bernoulli_cache();

Rational bernoulli_number(std::size_t n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
RationalPolynomial bernoulli_poly(std::size_t n);

/// Parameter c of the Euler polynomials E_{c,n}; 1 + c must be invertible.
template <class S>
class EulerParameter {
public:
    explicit EulerParameter(S c) : c_(std::move(c))
    {
        const auto ring = ring_traits<S>::context_of(c_);
        if (ring_traits<S>::is_zero(c_ + ring_traits<S>::one(ring))) {
            throw DomainError("Euler parameter c = -1 is not allowed (1 + c must be invertible)");
        }
    }

    const S& value() const noexcept { return c_; }

private:
    S c_;
};

/// E_{c,n}(t): E_{c,0} = 1, E'_{c,n} = n E_{c,n-1}, and
/// E_{c,n}(t+1) + c E_{c,n}(t) = (1+c) t^n. Built as n * antiderivative of
/// E_{c,n-1} plus the constant fixed by the last relation at t = 0.
template <class S>
Polynomial<S> euler_poly(const EulerParameter<S>& c, std::size_t n)
{
    using traits = ring_traits<S>;
    const auto ring = traits::context_of(c.value());
    const S inv_one_plus_c = (c.value() + traits::one(ring)).inverse();
    Polynomial<S> e = Polynomial<S>::constant(ring, traits::one(ring));
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational kk(static_cast<unsigned long>(k));
        const S unit_integral = e.integrate(Rational(0), Rational(1));
        Polynomial<S> next = e.antiderivative() * traits::embed(ring, kk);
        const S constant = -(unit_integral * kk) * inv_one_plus_c;
        next += Polynomial<S>::constant(ring, constant);
        e = std::move(next);
    }
    return e;
}

/// E_{c,n} = 2^n E_{c,n}(1/2).
template <class S>
S euler_number(const EulerParameter<S>& c, std::size_t n)
{
    return euler_poly(c, n).evaluate(Rational(1L, 2L)) * Rational(2).pow(static_cast<long>(n));
}

} // namespace zetaval

#endif

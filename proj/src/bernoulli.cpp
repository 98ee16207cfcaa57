#include "zetaval/bernoulli.hpp"

#include <mutex>

namespace zetaval {

BernoulliCache::BernoulliCache() : table_{Rational(1)} {}

Rational BernoulliCache::get(std::size_t n)
{
    {
        std::shared_lock lock(mutex_);
        if (n < table_.size()) {
            return table_[n];
        }
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) {
        const std::size_t m = table_.size();
        Rational acc;
        for (std::size_t k = 0; k < m; ++k) {
            acc += Rational(binomial(m + 1, k)) * table_[k];
        }
        table_.push_back(-acc / Rational(static_cast<unsigned long>(m + 1)));
    }
    return table_[n];
}

std::size_t BernoulliCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(std::size_t n)
{
    return bernoulli_cache().get(n);
}

RationalPolynomial bernoulli_poly(std::size_t n)
{
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs[n - k] = Rational(binomial(n, k)) * bernoulli_number(k);
    }
    return RationalPolynomial(RationalPolynomial::context_type{}, std::move(coeffs));
}

} // namespace zetaval

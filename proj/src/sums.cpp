#include "zetaval/sums.hpp"

#include "zetaval/bernoulli.hpp"
#include "zetaval/errors.hpp"

namespace zetaval {

void require_unit_offset(const Rational& a, const char* what)
{
    if (a <= Rational(0) || a > Rational(1)) {
        throw DomainError(std::string(what) + ": offset a = " + a.to_string() + " must lie in (0, 1]");
    }
}

PartialSumSpec::PartialSumSpec(std::size_t n, Rational a) : n_(n), a_(std::move(a))
{
    require_unit_offset(a_, "partial sum");
}

RationalPolynomial s_n(std::size_t n)
{
    return s_na(PartialSumSpec(n, Rational(1)));
}

RationalPolynomial s_n_telescoping(std::size_t n)
{
    std::vector<RationalPolynomial> s;
    s.reserve(n + 1);
    const RationalPolynomial one{Rational(1)};
    for (std::size_t j = 0; j <= n; ++j) {
        RationalPolynomial acc = RationalPolynomial::monomial({}, j + 1, Rational(1)) - one;
        for (std::size_t k = 0; k < j; ++k) {
            acc -= s[k] * Rational(binomial(j + 1, k));
        }
        s.push_back(acc * Rational(1L, static_cast<long>(j + 1)));
    }
    return s[n];
}

RationalPolynomial s_na(const PartialSumSpec& spec)
{
    const std::size_t n = spec.n();
    const RationalPolynomial b = bernoulli_poly(n + 1);
    const Rational at_a = b.evaluate(spec.a());
    RationalPolynomial p = b.shift(spec.a() - Rational(1)) - RationalPolynomial{at_a};
    return p * Rational(1L, static_cast<long>(n + 1));
}

RationalPolynomial s_na_recursive(const PartialSumSpec& spec)
{
    const std::size_t n = spec.n();
    const Rational& a = spec.a();
    RationalPolynomial result = s_n_telescoping(0) * a.pow(static_cast<long>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const Rational weight = Rational(binomial(n, k)) * a.pow(static_cast<long>(k));
        result += s_n_telescoping(n - k).shift(Rational(-1)) * weight;
    }
    return result;
}

RationalPolynomial signed_area_integrand(std::size_t k)
{
    const std::size_t m = 2 * k + 2;
    const Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);
    RationalPolynomial p = bernoulli_poly(m) - RationalPolynomial{bernoulli_number(m)};
    return p * (sign / Rational(static_cast<unsigned long>(m)));
}

} // namespace zetaval

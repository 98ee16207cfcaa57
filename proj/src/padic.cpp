#include "zetaval/padic.hpp"

#include "zetaval/errors.hpp"

namespace zetaval {

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

long integer_valuation(const Integer& n, std::uint64_t p)
{
    Integer rest = n;
    long v = 0;
    while (rest != 0 && mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++v;
    }
    return v;
}

PAdicValuation vp(const Rational& q, std::uint64_t p)
{
    if (!is_prime(p)) {
        throw DomainError("vp: " + std::to_string(p) + " is not prime");
    }
    if (q.is_zero()) {
        return PAdicValuation::infinity();
    }
    return PAdicValuation::finite(integer_valuation(q.numerator(), p) - integer_valuation(q.denominator(), p));
}

} // namespace zetaval

#ifndef ZETAVAL_PADIC_HPP
#define ZETAVAL_PADIC_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "zetaval/rational.hpp"

namespace zetaval {

/// Deterministic trial division; adequate for the small primes used here.
bool is_prime(std::uint64_t n);

/// ord_p of a rational number; `infinity()` for zero.
class PAdicValuation {
public:
    static PAdicValuation infinity() { return PAdicValuation(true, 0); }
    static PAdicValuation finite(long v) { return PAdicValuation(false, v); }

    bool is_infinite() const noexcept { return infinite_; }
    /// Only meaningful when finite.
    long value() const noexcept { return value_; }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;
    /// Infinity compares greater than every finite valuation.
    friend std::strong_ordering operator<=>(const PAdicValuation& a, const PAdicValuation& b)
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

private:
    PAdicValuation(bool inf, long v) : infinite_(inf), value_(inf ? 0 : v) {}

    bool infinite_;
    long value_;
};

/// Exponent of p in a nonzero integer.
long integer_valuation(const Integer& n, std::uint64_t p);

/// vp(q) = ord_p(numerator) - ord_p(denominator). Throws DomainError when p is
/// not prime.
PAdicValuation vp(const Rational& q, std::uint64_t p);

} // namespace zetaval

#endif

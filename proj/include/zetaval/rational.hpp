#ifndef ZETAVAL_RATIONAL_HPP
#define ZETAVAL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zetaval {

using Integer = mpz_class;

/// Arbitrary-precision exact fraction.
///
/// The value is always kept in canonical form: positive denominator, numerator
/// and denominator coprime, zero stored as 0/1. Equality is therefore a plain
/// structural comparison. Backed by GMP's mpq_t.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v);
    Rational(unsigned v) : q_(v) {}
    Rational(unsigned long v) : q_(v) {}
    explicit Rational(const Integer& v) : q_(v) {}

    /// num/den, reduced. Throws ArithmeticError if den == 0.
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses `-691/2730`, `+3`, `0`. Throws ArithmeticError on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    /// Throws ArithmeticError for zero.
    Rational inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long exponent) const;

    /// `p/q`, denominator omitted when 1.
    std::string to_string() const;
    /// Decimal rendering rounded half-to-even to `significant` digits.
    std::string to_decimal(int significant = 12) const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    const mpq_class& raw() const noexcept { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

} // namespace zetaval

#endif

#ifndef ZETAVAL_CYCLOTOMIC_HPP
#define ZETAVAL_CYCLOTOMIC_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zetaval/rational.hpp"

namespace zetaval {

/// Euler's totient.
unsigned long euler_phi(unsigned long m);

/// Coefficients (ascending powers) of the m-th cyclotomic polynomial, computed
/// once per m by dividing x^m - 1 by the cyclotomic polynomials of the proper
/// divisors. Thread-safe.
const std::vector<Rational>& cyclotomic_polynomial(unsigned long m);

/// Element of Q[x]/Phi_m(x), i.e. of the m-th cyclotomic field, stored as its
/// unique residue of degree < phi(m).
class CyclotomicElement {
public:
    /// Zero of Q(zeta_m).
    explicit CyclotomicElement(unsigned long order);
    /// Embedding of a rational constant.
    CyclotomicElement(unsigned long order, const Rational& r);
    /// Residue of an arbitrary polynomial in zeta_m (ascending coefficients).
    static CyclotomicElement from_coefficients(unsigned long order, std::span<const Rational> coeffs);
    /// zeta_m itself.
    static CyclotomicElement generator(unsigned long order);
    /// zeta_m^e (e may be negative).
    static CyclotomicElement root_of_unity(unsigned long order, long e);

    unsigned long order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// True when the element lies in Q (all non-constant coefficients vanish).
    bool is_rational() const;
    /// Constant coefficient; meaningful as a value only when is_rational().
    const Rational& constant_term() const { return coeffs_.front(); }

    /// Throws ArithmeticError for zero.
    CyclotomicElement inverse() const;
    CyclotomicElement pow(long exponent) const;

    std::string to_string() const;

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const Rational& r);
    CyclotomicElement& operator/=(const CyclotomicElement& o) { return *this *= o.inverse(); }

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const Rational& r) { return a *= r; }
    friend CyclotomicElement operator*(const Rational& r, CyclotomicElement a) { return a *= r; }
    friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
    friend CyclotomicElement operator-(const CyclotomicElement& a);

    /// Throws RingMismatchError when the orders differ.
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

private:
    CyclotomicElement(unsigned long order, std::vector<Rational> reduced)
        : order_(order), coeffs_(std::move(reduced)) {}
    void require_same_order(const CyclotomicElement& o) const;

    unsigned long order_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicElement& c);

} // namespace zetaval

#endif

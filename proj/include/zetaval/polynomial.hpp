#ifndef ZETAVAL_POLYNOMIAL_HPP
#define ZETAVAL_POLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zetaval/errors.hpp"
#include "zetaval/rational.hpp"
#include "zetaval/ring.hpp"

namespace zetaval {

/// Dense univariate polynomial over Q or Q(zeta_m).
///
/// coefficients()[i] is the coefficient of x^i. The vector is kept trimmed, so
/// the zero polynomial has no coefficients and every other polynomial has a
/// nonzero leading coefficient.
template <class S>
class Polynomial {
public:
    using scalar_type = S;
    using context_type = ring_context<S>;

    Polynomial() requires std::is_default_constructible_v<context_type> : ring_{} {}
    explicit Polynomial(context_type ring) : ring_(ring) {}
    Polynomial(context_type ring, std::vector<S> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) { trim(); }

    /// Ascending coefficients over Q: {c0, c1, c2} = c0 + c1 x + c2 x^2.
    Polynomial(std::initializer_list<Rational> coeffs) requires std::is_same_v<S, Rational>
        : ring_{}, coeffs_(coeffs)
    {
        trim();
    }

    static Polynomial constant(context_type ring, S c) { return Polynomial(ring, {std::move(c)}); }
    static Polynomial monomial(context_type ring, std::size_t degree, S c)
    {
        std::vector<S> v(degree + 1, traits::zero(ring));
        v[degree] = std::move(c);
        return Polynomial(ring, std::move(v));
    }
    static Polynomial x(context_type ring) { return monomial(ring, 1, traits::one(ring)); }
    static Polynomial x() requires std::is_default_constructible_v<context_type> { return x(context_type{}); }

    context_type ring() const { return ring_; }
    const std::vector<S>& coefficients() const noexcept { return coeffs_; }
    S coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : traits::zero(ring_); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Horner evaluation at a rational point.
    S evaluate(const Rational& x0) const
    {
        S acc = traits::zero(ring_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x0 + *it;
        }
        return acc;
    }

    /// q(x) = p(x + c).
    Polynomial shift(const Rational& c) const
    {
        if (c.is_zero()) {
            return *this;
        }
        // Horner in the polynomial ring: q = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
        std::vector<S> acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            std::vector<S> next(acc.size() + 1, traits::zero(ring_));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i + 1] += acc[i];
                next[i] += acc[i] * c;
            }
            next[0] += *it;
            acc = std::move(next);
        }
        return Polynomial(ring_, std::move(acc));
    }

    /// q(x) = p(lambda * x).
    Polynomial scale_argument(const Rational& lambda) const
    {
        std::vector<S> v = coeffs_;
        Rational power(1);
        for (auto& c : v) {
            c = c * power;
            power *= lambda;
        }
        return Polynomial(ring_, std::move(v));
    }

    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1) {
            return Polynomial(ring_);
        }
        std::vector<S> v;
        v.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            v.push_back(coeffs_[i] * Rational(static_cast<unsigned long>(i)));
        }
        return Polynomial(ring_, std::move(v));
    }

    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const
    {
        std::vector<S> v;
        v.reserve(coeffs_.size() + 1);
        v.push_back(traits::zero(ring_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            v.push_back(coeffs_[i] * Rational(1L, static_cast<long>(i + 1)));
        }
        return Polynomial(ring_, std::move(v));
    }

    /// Exact definite integral over [lo, hi].
    S integrate(const Rational& lo, const Rational& hi) const
    {
        const Polynomial anti = antiderivative();
        return anti.evaluate(hi) - anti.evaluate(lo);
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        require_same_ring(o);
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), traits::zero(ring_));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        require_same_ring(o);
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), traits::zero(ring_));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        require_same_ring(o);
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<S> v(coeffs_.size() + o.coeffs_.size() - 1, traits::zero(ring_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (traits::is_zero(coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                v[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        coeffs_ = std::move(v);
        trim();
        return *this;
    }

    Polynomial& operator*=(const S& c)
    {
        for (auto& a : coeffs_) {
            a *= c;
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) requires(!std::is_same_v<S, Rational>)
    {
        for (auto& a : coeffs_) {
            a *= c;
        }
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const S& c) { return a *= c; }
    friend Polynomial operator*(const S& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    /// Throws RingMismatchError when the rings differ.
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        a.require_same_ring(b);
        return a.coeffs_ == b.coeffs_;
    }

    /// Descending powers, e.g. `1/6*x^3 - 1/2*x^2 + 1/3*x`.
    std::string to_string(const std::string& var = "x") const
    {
        std::string out;
        for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
            const S& c = coeffs_[idx];
            if (traits::is_zero(c)) {
                continue;
            }
            std::string term;
            bool negative = false;
            std::string mag;
            if constexpr (std::is_same_v<S, Rational>) {
                negative = c.sign() < 0;
                mag = c.abs().to_string();
            } else {
                if (c.is_rational()) {
                    negative = c.constant_term().sign() < 0;
                    mag = c.constant_term().abs().to_string();
                } else {
                    mag = c.to_string();
                    if (mag.find(" + ") != std::string::npos || mag.find(" - ") != std::string::npos) {
                        mag = "(" + mag + ")";
                    } else if (mag.front() == '-') {
                        negative = true;
                        mag.erase(0, 1);
                    }
                }
            }
            if (idx == 0) {
                term = mag;
            } else {
                term = mag == "1" ? "" : mag + "*";
                term += var;
                if (idx > 1) {
                    term += "^" + std::to_string(idx);
                }
            }
            if (out.empty()) {
                out = (negative ? "-" : "") + term;
            } else {
                out += (negative ? " - " : " + ") + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    using traits = ring_traits<S>;

    void trim()
    {
        while (!coeffs_.empty() && traits::is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    void require_same_ring(const Polynomial& o) const
    {
        if (!(ring_ == o.ring_)) {
            throw RingMismatchError("polynomials over different rings: " + traits::name(ring_) + " vs " +
                                    traits::name(o.ring_));
        }
    }

    context_type ring_;
    std::vector<S> coeffs_;
};

template <class S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& p)
{
    return os << p.to_string();
}

using RationalPolynomial = Polynomial<Rational>;

/// c * p with p over Q lifted into the ring of c.
template <class S>
Polynomial<S> scaled_lift(const S& c, const RationalPolynomial& p)
{
    using traits = ring_traits<S>;
    const auto ring = traits::context_of(c);
    std::vector<S> v;
    v.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) {
        v.push_back(c * a);
    }
    return Polynomial<S>(ring, std::move(v));
}

/// Embedding of a rational polynomial into the ring described by `ring`.
template <class S>
Polynomial<S> lift(const RationalPolynomial& p, ring_context<S> ring)
{
    return scaled_lift(ring_traits<S>::one(ring), p);
}

} // namespace zetaval

#endif

#include "zetaval/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>

#include "zetaval/errors.hpp"

namespace zetaval {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

Dense mul(const Dense& a, const Dense& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Dense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

Dense sub(const Dense& a, const Dense& b)
{
    Dense r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
    }
    trim(r);
    return r;
}

// Long division; divisor must be nonzero (trimmed).
void divmod(const Dense& num, const Dense& divisor, Dense& quot, Dense& rem)
{
    rem = num;
    trim(rem);
    quot.clear();
    if (rem.size() < divisor.size()) {
        return;
    }
    quot.assign(rem.size() - divisor.size() + 1, Rational());
    const Rational lead_inv = divisor.back().inverse();
    while (!rem.empty() && rem.size() >= divisor.size()) {
        const std::size_t shift = rem.size() - divisor.size();
        const Rational factor = rem.back() * lead_inv;
        quot[shift] = factor;
        for (std::size_t i = 0; i < divisor.size(); ++i) {
            rem[shift + i] -= factor * divisor[i];
        }
        trim(rem);
    }
    trim(quot);
}

Dense compute_cyclotomic(unsigned long m)
{
    Dense p(m + 1);
    p[0] = Rational(-1);
    p[m] = Rational(1);
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d == 0) {
            Dense q;
            Dense r;
            divmod(p, cyclotomic_polynomial(d), q, r);
            p = std::move(q);
        }
    }
    return p;
}

Dense reduce(unsigned long order, std::span<const Rational> coeffs)
{
    const Dense& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    Dense r(coeffs.begin(), coeffs.end());
    // Phi_m is monic: fold x^i for i >= deg back down.
    for (std::size_t i = r.size(); i-- > deg;) {
        const Rational top = r[i];
        if (top.is_zero()) {
            continue;
        }
        const std::size_t shift = i - deg;
        for (std::size_t j = 0; j < deg; ++j) {
            r[shift + j] -= top * phi[j];
        }
        r[i] = Rational();
    }
    r.resize(deg);
    return r;
}

} // namespace

unsigned long euler_phi(unsigned long m)
{
    unsigned long result = m;
    unsigned long rest = m;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            while (rest % p == 0) {
                rest /= p;
            }
            result -= result / p;
        }
    }
    if (rest > 1) {
        result -= result / rest;
    }
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned long m)
{
    static std::mutex mutex;
    static std::map<unsigned long, Dense> cache;
    if (m == 0) {
        throw DomainError("cyclotomic order must be positive");
    }
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second;
        }
    }
    Dense computed = compute_cyclotomic(m);
    std::lock_guard lock(mutex);
    return cache.try_emplace(m, std::move(computed)).first->second;
}

CyclotomicElement::CyclotomicElement(unsigned long order)
    : order_(order), coeffs_(cyclotomic_polynomial(order).size() - 1)
{
}

CyclotomicElement::CyclotomicElement(unsigned long order, const Rational& r) : CyclotomicElement(order)
{
    coeffs_.front() = r;
}

CyclotomicElement CyclotomicElement::from_coefficients(unsigned long order, std::span<const Rational> coeffs)
{
    return CyclotomicElement(order, reduce(order, coeffs));
}

CyclotomicElement CyclotomicElement::generator(unsigned long order)
{
    const Rational x[] = {Rational(0), Rational(1)};
    return from_coefficients(order, x);
}

CyclotomicElement CyclotomicElement::root_of_unity(unsigned long order, long e)
{
    const long m = static_cast<long>(order);
    const auto reduced = static_cast<std::size_t>(((e % m) + m) % m);
    Dense x(reduced + 1);
    x[reduced] = Rational(1);
    return from_coefficients(order, x);
}

bool CyclotomicElement::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CyclotomicElement::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

void CyclotomicElement::require_same_order(const CyclotomicElement& o) const
{
    if (order_ != o.order_) {
        throw RingMismatchError("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                                std::to_string(o.order_));
    }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o)
{
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o)
{
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o)
{
    require_same_order(o);
    Dense product(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce(order_, product);
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& r)
{
    for (auto& c : coeffs_) {
        c *= r;
    }
    return *this;
}

CyclotomicElement operator-(const CyclotomicElement& a)
{
    CyclotomicElement r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b)
{
    a.require_same_order(b);
    return a.coeffs_ == b.coeffs_;
}

CyclotomicElement CyclotomicElement::inverse() const
{
    if (is_zero()) {
        throw ArithmeticError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    // Extended Euclid against Phi_m; the gcd is a nonzero constant because
    // Phi_m is irreducible.
    Dense r0 = cyclotomic_polynomial(order_);
    Dense r1 = coeffs_;
    trim(r1);
    Dense s0;
    Dense s1{Rational(1)};
    while (!r1.empty()) {
        Dense q;
        Dense r;
        divmod(r0, r1, q, r);
        Dense s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Rational scale = r0.front().inverse();
    for (auto& c : s0) {
        c *= scale;
    }
    return from_coefficients(order_, s0);
}

CyclotomicElement CyclotomicElement::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    CyclotomicElement result(order_, Rational(1));
    CyclotomicElement base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

std::string CyclotomicElement::to_string() const
{
    std::string out;
    const std::string z = "zeta" + std::to_string(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) {
            out += mag.to_string() + "*";
        }
        out += z;
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicElement& c)
{
    return os << c.to_string();
}

} // namespace zetaval

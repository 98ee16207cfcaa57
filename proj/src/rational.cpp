#include "zetaval/rational.hpp"

#include <cctype>
#include <ostream>

#include "zetaval/errors.hpp"

namespace zetaval {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long long v)
{
    q_ = Integer(std::to_string(v));
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num_text) || !is_digits(den_text)) {
        throw ArithmeticError("malformed rational '" + std::string(text) + "'");
    }
    Integer num{std::string(num_text)};
    if (negative) {
        num = -num;
    }
    return Rational(num, Integer(std::string(den_text)));
}

Rational Rational::abs() const
{
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw ArithmeticError("inverse of zero");
    }
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Rational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational operator-(const Rational& a)
{
    Rational r;
    r.q_ = -a.q_;
    return r;
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const
{
    if (is_zero()) {
        return "0";
    }
    const Integer num = ::abs(q_.get_num());
    const Integer den = q_.get_den();

    // Find e with 10^(sig-1) <= |q| * 10^(-e) < 10^sig, then round the
    // scaled value half-to-even.
    long exponent = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
    Integer scaled_num;
    Integer scaled_den;
    Integer digits;
    Integer lower;
    Integer upper;
    mpz_ui_pow_ui(lower.get_mpz_t(), 10, static_cast<unsigned long>(significant - 1));
    upper = lower * 10;
    for (;;) {
        const long shift = significant - 1 - exponent;
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
        scaled_num = shift >= 0 ? Integer(num * p10) : num;
        scaled_den = shift >= 0 ? den : Integer(den * p10);
        Integer rem;
        mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
        if (digits < lower) {
            --exponent;
            continue;
        }
        if (digits >= upper) {
            ++exponent;
            continue;
        }
        const int c = cmp(Integer(rem * 2), scaled_den);
        if (c > 0 || (c == 0 && mpz_odd_p(digits.get_mpz_t()))) {
            ++digits;
        }
        if (digits == upper) {
            digits = lower;
            ++exponent;
        }
        break;
    }

    std::string mantissa = digits.get_str();
    while (mantissa.size() > 1 && mantissa.back() == '0') {
        mantissa.pop_back();
    }
    std::string out = sign() < 0 ? "-" : "";
    if (exponent < -5 || exponent >= 21) {
        out += mantissa.substr(0, 1);
        if (mantissa.size() > 1) {
            out += "." + mantissa.substr(1);
        }
        out += "e" + std::to_string(exponent);
    } else if (exponent < 0) {
        out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + mantissa;
    } else {
        const auto int_len = static_cast<std::size_t>(exponent + 1);
        if (mantissa.size() <= int_len) {
            out += mantissa + std::string(int_len - mantissa.size(), '0');
        } else {
            out += mantissa.substr(0, int_len) + "." + mantissa.substr(int_len);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace zetaval

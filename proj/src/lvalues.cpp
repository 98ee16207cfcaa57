#include "zetaval/lvalues.hpp"

#include <array>

namespace zetaval {

namespace {

Rational factorial(std::size_t n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational sign_power(std::size_t e)
{
    return e % 2 == 0 ? Rational(1) : Rational(-1);
}

} // namespace

std::string_view route_name(Route r)
{
    switch (r) {
    case Route::closed_form:
        return "closed_form";
    case Route::integral:
        return "integral";
    case Route::euler_poly:
        return "euler_poly";
    case Route::hurwitz_scaled:
        return "hurwitz_scaled";
    }
    return "unknown";
}

std::optional<Route> parse_route(std::string_view name)
{
    for (Route r : {Route::closed_form, Route::integral, Route::euler_poly, Route::hurwitz_scaled}) {
        if (route_name(r) == name) {
            return r;
        }
    }
    return std::nullopt;
}

std::string PiPower::to_string() const
{
    if (power == 0) {
        return coefficient.to_string();
    }
    return coefficient.to_string() + "*pi^" + std::to_string(power);
}

Rational hurwitz_neg(std::size_t n, const Rational& a)
{
    require_unit_offset(a, "hurwitz_neg");
    return -bernoulli_poly(n + 1).evaluate(a) / Rational(static_cast<unsigned long>(n + 1));
}

Rational hurwitz_neg_integral(std::size_t n, const Rational& a)
{
    require_unit_offset(a, "hurwitz_neg_integral");
    return s_na(PartialSumSpec(n, a)).integrate(Rational(1) - a, Rational(2) - a);
}

Rational riemann_neg(std::size_t n)
{
    return hurwitz_neg(n, Rational(1));
}

Rational riemann_neg_integral(std::size_t n)
{
    return s_n(n).integrate(Rational(0), Rational(1));
}

PiPower zeta_even_positive(std::size_t n)
{
    if (n == 0) {
        throw DomainError("zeta_even_positive: n must be positive");
    }
    const Rational coefficient = sign_power(n + 1) * Rational(2).pow(static_cast<long>(2 * n)) *
                                 bernoulli_number(2 * n) / (Rational(2) * factorial(2 * n));
    return PiPower{coefficient, static_cast<unsigned>(2 * n)};
}

Rational even_n_half_integral(std::size_t n)
{
    if (n < 2 || n % 2 != 0) {
        throw DomainError("even_n_half_integral: n must be an even integer >= 2 (got " + std::to_string(n) + ")");
    }
    return s_n(n).integrate(Rational(0), Rational(1L, 2L));
}

Rational even_n_half_integral_closed_form(std::size_t n)
{
    if (n < 2 || n % 2 != 0) {
        throw DomainError("even_n_half_integral_closed_form: n must be an even integer >= 2");
    }
    const Rational factor = Rational(2).pow(-static_cast<long>(n) - 1) - Rational(2);
    return factor * bernoulli_number(n + 2) / Rational(static_cast<unsigned long>((n + 1) * (n + 2)));
}

Rational chi4_first_rep(std::size_t n)
{
    if (n % 2 == 1) {
        return Rational(0);
    }
    const Rational scale = Rational(4).pow(static_cast<long>(n + 1)) / Rational(2);
    return scale * s_na(PartialSumSpec(n, Rational(1L, 4L))).integrate(Rational(3L, 4L), Rational(7L, 4L));
}

Rational chi4_second_rep(std::size_t n)
{
    const EulerParameter<Rational> c(Rational(1));
    const RationalPolynomial e = euler_poly(c, n);
    const Rational shift = euler_number(c, n) + Rational(1L, static_cast<long>(n + 1));
    const RationalPolynomial integrand = e - RationalPolynomial{shift};
    return Rational(-1L, 4L) * integrand.integrate(Rational(0), Rational(2));
}

Rational chi4_euler_number_half(std::size_t n)
{
    return euler_number(EulerParameter<Rational>(Rational(1)), n) / Rational(2);
}

Rational chi4_scaled_hurwitz(std::size_t n)
{
    return Rational(4).pow(static_cast<long>(n + 1)) / Rational(2) * hurwitz_neg(n, Rational(1L, 4L));
}

Rational first_relation_rhs(std::size_t n, const Rational& a)
{
    const long nn = static_cast<long>(n);
    Rational rhs = a.pow(nn) - a.pow(nn + 1) / Rational(nn + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        rhs += Rational(binomial(n, k)) * a.pow(static_cast<long>(k)) * riemann_neg(n - k);
    }
    return rhs;
}

Rational integration_lemma_lhs(std::size_t k, const Rational& a)
{
    return s_n(k).shift(Rational(-1)).integrate(Rational(1) - a, Rational(2) - a);
}

Rational integration_lemma_rhs(std::size_t k, const Rational& a)
{
    const long kk = static_cast<long>(k);
    return (-a).pow(kk + 1) / Rational(kk + 1) + riemann_neg(k);
}

Rational relation_1_rhs(std::size_t n, const Rational& a)
{
    Rational rhs = sign_power(n + 1) / Rational(static_cast<unsigned long>(n + 2));
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational term = hurwitz_neg(n - k, a) - a.pow(static_cast<long>(n - k));
        rhs += sign_power(k + 1) * Rational(binomial(n + 1, k + 1)) * term;
    }
    return rhs;
}

Rational relation_3_rhs(std::size_t n, const Rational& a)
{
    Rational rhs = sign_power(n + 1) / Rational(static_cast<unsigned long>(n + 2));
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational integral = s_na(PartialSumSpec(n - k, a)).integrate(Rational(1) - a, Rational(2) - a);
        rhs += sign_power(k + 1) * Rational(binomial(n + 1, k + 1)) * (integral - a.pow(static_cast<long>(n - k)));
    }
    return rhs;
}

Rational recursive_integral(std::size_t n, const Rational& a)
{
    // a^n * (zeta(0) + (1 - a)) + sum_{k<n} C(n,k) a^k [(-a)^{n-k+1}/(n-k+1) + zeta(k-n)]
    Rational total = a.pow(static_cast<long>(n)) * (riemann_neg(0) + (Rational(1) - a));
    for (std::size_t k = 0; k < n; ++k) {
        total += Rational(binomial(n, k)) * a.pow(static_cast<long>(k)) * integration_lemma_rhs(n - k, a);
    }
    return total;
}

VerificationReport verify_proof_identities(std::size_t n_max, std::span<const Rational> a_set)
{
    VerificationReport report("proof-identities");
    for (const Rational& a : a_set) {
        require_unit_offset(a, "verify_proof_identities");
        const Rational s0_integral = s_n_telescoping(0).integrate(Rational(1) - a, Rational(2) - a);
        report.check("S0 boundary: int S_0 = zeta(0) + (1 - a)", "a=" + a.to_string(), s0_integral,
                     riemann_neg(0) + (Rational(1) - a));
        for (std::size_t n = 0; n <= n_max; ++n) {
            const std::string params = "n=" + std::to_string(n) + " a=" + a.to_string();
            const Rational closed = hurwitz_neg(n, a);
            report.check("first_relation", params, closed, first_relation_rhs(n, a));
            report.check("relation_1", params, a.pow(static_cast<long>(n + 1)), relation_1_rhs(n, a));
            report.check("relation_3", params, a.pow(static_cast<long>(n + 1)), relation_3_rhs(n, a));
            report.check("recursive integral", params, recursive_integral(n, a), closed);
            if (n >= 1) {
                report.check("integration lemma", "k=" + std::to_string(n) + " a=" + a.to_string(),
                             integration_lemma_lhs(n, a), integration_lemma_rhs(n, a));
            }
        }
    }
    return report;
}

} // namespace zetaval

#include "zetaval/congruence.hpp"

#include "zetaval/dirichlet.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/padic.hpp"

namespace zetaval {

namespace {

void require_odd_prime(std::uint64_t p)
{
    if (p < 3 || !is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not an odd prime");
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if ((exp & 1U) != 0) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// Least non-negative residue of an integer modulo m.
std::uint64_t residue(const Integer& v, std::uint64_t m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return r.get_ui();
}

} // namespace

std::uint64_t power_sum_mod_p(std::uint64_t p, std::uint64_t r)
{
    require_odd_prime(p);
    std::uint64_t acc = 0;
    for (std::uint64_t a = 1; a <= p; ++a) {
        acc = (acc + pow_mod(a, r, p)) % p;
    }
    return acc;
}

std::uint64_t twisted_power_sum_mod_p(std::uint64_t p, std::uint64_t n)
{
    const RealCharacter chi = quadratic_character(p);
    std::uint64_t acc = 0;
    for (std::uint64_t a = 1; a <= p; ++a) {
        const int s = chi(static_cast<long>(a)).sign();
        const std::uint64_t term = pow_mod(a, n, p);
        acc = s >= 0 ? (acc + (s == 0 ? 0 : term)) % p : (acc + p - term) % p;
    }
    return acc;
}

unsigned delta_chi(std::uint64_t p)
{
    require_odd_prime(p);
    return quadratic_character(p).is_odd() ? 1U : 0U;
}

VerificationReport congruence_p2(std::uint64_t p, std::size_t n)
{
    require_odd_prime(p);
    VerificationReport report("congruence-p2");
    const std::string params = "p=" + std::to_string(p) + " n=" + std::to_string(n);
    const RealCharacter chi = quadratic_character(p);
    const std::uint64_t p2 = p * p;

    const Rational scaled = Rational(static_cast<unsigned long>(p2)) * generalized_bernoulli_number(chi, n);
    if (!scaled.is_integer()) {
        report.check_true("p^2 B_{n,chi} is an integer", params, false, scaled.to_string());
        return report;
    }
    const std::uint64_t lhs = residue(scaled.numerator(), p2);

    std::uint64_t rhs = 0;
    for (std::uint64_t a = 1; a <= p2; ++a) {
        const int s = chi(static_cast<long>(a % p)).sign();
        if (s == 0) {
            continue;
        }
        const std::uint64_t term = pow_mod(a, n, p2);
        rhs = s > 0 ? (rhs + term) % p2 : (rhs + p2 - term) % p2;
    }
    report.check("p^2 B_{n,chi} = sum chi(a) a^n (mod p^2)", params, static_cast<long>(lhs),
                 static_cast<long>(rhs));
    return report;
}

std::string_view branch_name(PropA1Branch b)
{
    switch (b) {
    case PropA1Branch::integer_branch:
        return "integer_branch";
    case PropA1Branch::pole_branch:
        return "pole_branch";
    case PropA1Branch::parity_zero:
        return "parity_zero";
    }
    return "unknown";
}

PropA1Branch classify_prop_a1(std::uint64_t p, std::size_t n)
{
    const unsigned delta = delta_chi(p);
    if (n % 2 != delta) {
        return PropA1Branch::parity_zero;
    }
    const std::uint64_t half = (p - 1) / 2;
    return n % (p - 1) == half ? PropA1Branch::pole_branch : PropA1Branch::integer_branch;
}

PropA1Verdict check_prop_a1_at(std::uint64_t p, std::size_t n)
{
    require_odd_prime(p);
    PropA1Verdict v;
    v.p = p;
    v.n = n;
    v.branch = classify_prop_a1(p, n);
    v.b_value = generalized_bernoulli_number(quadratic_character(p), n);
    switch (v.branch) {
    case PropA1Branch::parity_zero:
        v.holds = v.b_value.is_zero();
        break;
    case PropA1Branch::integer_branch:
        v.holds = v.b_value.is_integer() && vp(v.b_value, p) >= PAdicValuation::finite(0);
        break;
    case PropA1Branch::pole_branch: {
        const Rational scaled = v.b_value * Rational(static_cast<unsigned long>(p));
        v.holds = vp(v.b_value, p) == PAdicValuation::finite(-1) && scaled.is_integer() &&
                  residue(scaled.numerator(), p) == p - 1;
        break;
    }
    }
    return v;
}

std::vector<PropA1Verdict> check_prop_a1(std::uint64_t p, std::size_t n_max)
{
    std::vector<PropA1Verdict> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(check_prop_a1_at(p, n));
    }
    return out;
}

} // namespace zetaval

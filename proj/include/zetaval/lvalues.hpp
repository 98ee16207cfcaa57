#ifndef ZETAVAL_LVALUES_HPP
#define ZETAVAL_LVALUES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "zetaval/bernoulli.hpp"
#include "zetaval/dirichlet.hpp"
#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"
#include "zetaval/report.hpp"
#include "zetaval/sums.hpp"

namespace zetaval {

/// How a special value was obtained.
enum class Route { closed_form, integral, euler_poly, hurwitz_scaled };

std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

template <class S>
struct SpecialValueResult {
    S value;
    Route route;
    std::string parameters;
};

/// coefficient * pi^power, kept exact.
struct PiPower {
    Rational coefficient;
    unsigned power = 0;

    std::string to_string() const;
    friend bool operator==(const PiPower&, const PiPower&) = default;
};

// ---------------------------------------------------------------------------
// Hurwitz and Riemann zeta at non-positive integers

/// zeta(-n, a) = -B_{n+1}(a) / (n+1), 0 < a <= 1.
Rational hurwitz_neg(std::size_t n, const Rational& a);

/// zeta(-n, a) as the integral of S_{n,a} over [1-a, 2-a].
Rational hurwitz_neg_integral(std::size_t n, const Rational& a);

/// zeta(-n) = zeta(-n, 1).
Rational riemann_neg(std::size_t n);

/// zeta(-n) as the integral of S_n over [0, 1].
Rational riemann_neg_integral(std::size_t n);

/// zeta(2n) = (-1)^{n+1} (2 pi)^{2n} B_{2n} / (2 (2n)!), n >= 1.
PiPower zeta_even_positive(std::size_t n);

/// Integral of S_n over [0, 1/2] for even n >= 2, by direct integration.
Rational even_n_half_integral(std::size_t n);

/// The same integral from (2^{-n-1} - 2) B_{n+2} / ((n+1)(n+2)).
Rational even_n_half_integral_closed_form(std::size_t n);

// ---------------------------------------------------------------------------
// Dirichlet L-values

namespace detail {

template <class S>
void require_nontrivial(const DirichletCharacter<S>& chi, const char* what)
{
    if (chi.is_trivial()) {
        throw HypothesisError(std::string(what) + " requires a non-trivial character (got " + chi.label() +
                              "); use riemann_neg for the trivial character");
    }
}

template <class S>
S embed(const DirichletCharacter<S>& chi, const Rational& r)
{
    return ring_traits<S>::embed(chi.ring(), r);
}

} // namespace detail

/// L(-n, chi) = -B_{n+1,chi} / (n+1) for non-trivial chi.
template <class S>
S l_neg(const DirichletCharacter<S>& chi, std::size_t n)
{
    detail::require_nontrivial(chi, "l_neg");
    return generalized_bernoulli_number(chi, n + 1) * Rational(-1L, static_cast<long>(n + 1));
}

/// S_{n,chi}(x) = k^n sum_r chi(r) S_{n,r/k}(x + 1 - r/k); a constant for
/// non-trivial chi.
template <class S>
Polynomial<S> s_n_chi(const DirichletCharacter<S>& chi, std::size_t n)
{
    const unsigned long k = chi.modulus();
    Polynomial<S> acc(chi.ring());
    for (unsigned long r = 1; r <= k; ++r) {
        const S& weight = chi(static_cast<long>(r));
        if (ring_traits<S>::is_zero(weight)) {
            continue;
        }
        const Rational a(static_cast<long>(r), static_cast<long>(k));
        acc += scaled_lift(weight, s_na(PartialSumSpec(n, a)).shift(Rational(1) - a));
    }
    return acc * detail::embed(chi, Rational(k).pow(static_cast<long>(n)));
}

/// L(-n, chi) as the integral of S_{n,chi} over [0, 1].
template <class S>
S l_neg_integral(const DirichletCharacter<S>& chi, std::size_t n)
{
    detail::require_nontrivial(chi, "l_neg_integral");
    return s_n_chi(chi, n).integrate(Rational(0), Rational(1));
}

/// L(-n, chi) = k^n sum_r chi(r) zeta(-n, r/k).
template <class S>
S l_neg_hurwitz(const DirichletCharacter<S>& chi, std::size_t n)
{
    detail::require_nontrivial(chi, "l_neg_hurwitz");
    const unsigned long k = chi.modulus();
    S acc = ring_traits<S>::zero(chi.ring());
    for (unsigned long r = 1; r <= k; ++r) {
        const S& weight = chi(static_cast<long>(r));
        if (!ring_traits<S>::is_zero(weight)) {
            acc += weight * hurwitz_neg(n, Rational(static_cast<long>(r), static_cast<long>(k)));
        }
    }
    return acc * Rational(k).pow(static_cast<long>(n));
}

/// P_{n,chi}(x) = (B_{n+1,chi}(kx) - B_{n+1,chi}) / (n+1), so that
/// P_{n,chi}(M) = sum_{r=1}^{Mk} chi(r) r^n.
template <class S>
Polynomial<S> p_n_chi(const DirichletCharacter<S>& chi, std::size_t n)
{
    const Polynomial<S> b = generalized_bernoulli_poly(chi, n + 1);
    const S b0 = b.evaluate(Rational(0));
    Polynomial<S> p = b.scale_argument(Rational(chi.modulus())) - Polynomial<S>::constant(chi.ring(), b0);
    return p * detail::embed(chi, Rational(1L, static_cast<long>(n + 1)));
}

/// Whether chi and n have the same parity (even/even or odd/odd).
template <class S>
bool parity_matches(const DirichletCharacter<S>& chi, std::size_t n)
{
    return (chi.is_even() && n % 2 == 0) || (chi.is_odd() && n % 2 == 1);
}

/// L(-n, chi) as the integral of P_{n,chi} over [-1/2, 1/2]. Requires chi and n
/// of the same parity; throws HypothesisError otherwise.
template <class S>
S l_neg_via_p(const DirichletCharacter<S>& chi, std::size_t n)
{
    if (!parity_matches(chi, n)) {
        throw HypothesisError("l_neg_via_p: parity hypothesis violated (character " + chi.label() + " is " +
                              (chi.is_even() ? "even" : "odd") + ", n = " + std::to_string(n) + ")");
    }
    return p_n_chi(chi, n).integrate(Rational(-1L, 2L), Rational(1L, 2L));
}

namespace detail {

template <class S>
void require_twisted_hypotheses(const DirichletCharacter<S>& chi, const Rational& a, const char* what)
{
    require_nontrivial(chi, what);
    if (!chi.is_primitive()) {
        throw HypothesisError(std::string(what) + " requires a primitive character (" + chi.label() +
                              " is imprimitive)");
    }
    require_unit_offset(a, what);
}

} // namespace detail

/// L(-n, a, chi) = -tilde B_{n+1,chi}(a) / (n+1) for non-trivial primitive chi.
template <class S>
S twisted_l_neg(const DirichletCharacter<S>& chi, std::size_t n, const Rational& a)
{
    detail::require_twisted_hypotheses(chi, a, "twisted_l_neg");
    return tilde_bernoulli_poly(chi, n + 1).evaluate(a) * Rational(-1L, static_cast<long>(n + 1));
}

/// L(-n, a, chi) = k^n sum_r chi(r) zeta(-n, (r+a-1)/k).
template <class S>
S twisted_l_neg_hurwitz(const DirichletCharacter<S>& chi, std::size_t n, const Rational& a)
{
    detail::require_twisted_hypotheses(chi, a, "twisted_l_neg_hurwitz");
    const unsigned long k = chi.modulus();
    S acc = ring_traits<S>::zero(chi.ring());
    for (unsigned long r = 1; r <= k; ++r) {
        const S& weight = chi(static_cast<long>(r));
        if (!ring_traits<S>::is_zero(weight)) {
            acc += weight * hurwitz_neg(n, (Rational(r) + a - Rational(1)) / Rational(k));
        }
    }
    return acc * Rational(k).pow(static_cast<long>(n));
}

/// S_{n,a,chi}(x) = k^n sum_r chi(r) S_{n,b_r}(x + 1 - b_r), b_r = (r+a-1)/k.
template <class S>
Polynomial<S> s_n_a_chi(const DirichletCharacter<S>& chi, std::size_t n, const Rational& a)
{
    require_unit_offset(a, "s_n_a_chi");
    const unsigned long k = chi.modulus();
    Polynomial<S> acc(chi.ring());
    for (unsigned long r = 1; r <= k; ++r) {
        const S& weight = chi(static_cast<long>(r));
        if (ring_traits<S>::is_zero(weight)) {
            continue;
        }
        const Rational b = (Rational(r) + a - Rational(1)) / Rational(k);
        acc += scaled_lift(weight, s_na(PartialSumSpec(n, b)).shift(Rational(1) - b));
    }
    return acc * detail::embed(chi, Rational(k).pow(static_cast<long>(n)));
}

/// L(-n, a, chi) as the integral of S_{n,a,chi} over [0, 1].
template <class S>
S twisted_l_neg_integral(const DirichletCharacter<S>& chi, std::size_t n, const Rational& a)
{
    detail::require_twisted_hypotheses(chi, a, "twisted_l_neg_integral");
    return s_n_a_chi(chi, n, a).integrate(Rational(0), Rational(1));
}

/// Lerch zeta value zeta(1-k, a, gamma) = E_{c,k-1}(a) / (1 + c^{-1}); c != 0, -1.
template <class S>
S lerch_special(const EulerParameter<S>& c, std::size_t k, const Rational& a)
{
    using traits = ring_traits<S>;
    const auto ring = traits::context_of(c.value());
    if (traits::is_zero(c.value())) {
        throw DomainError("lerch_special: c must be nonzero");
    }
    if (k == 0) {
        throw DomainError("lerch_special: k must be positive");
    }
    if (a <= Rational(0)) {
        throw DomainError("lerch_special: a must be positive");
    }
    const S denom = traits::one(ring) + c.value().inverse();
    return euler_poly(c, k - 1).evaluate(a) * denom.inverse();
}

// ---------------------------------------------------------------------------
// The character mod 4

/// First representation: 0 for odd n, (4^{n+1}/2) times the integral of
/// S_{n,1/4} over [3/4, 7/4] for even n.
Rational chi4_first_rep(std::size_t n);

/// Second representation: -(1/4) times the integral over [0, 2] of
/// E_{1,n}(x) - E_{1,n} - 1/(n+1).
Rational chi4_second_rep(std::size_t n);

/// E_{1,n} / 2, the Euler-number form of the second representation.
Rational chi4_euler_number_half(std::size_t n);

/// (4^{n+1}/2) zeta(-n, 1/4); equals L(-n, chi4) for even n.
Rational chi4_scaled_hurwitz(std::size_t n);

// ---------------------------------------------------------------------------
// Identities used in the proofs of the integral representation

/// a^n - a^{n+1}/(n+1) + sum_{k<=n} C(n,k) a^k zeta(k-n).
Rational first_relation_rhs(std::size_t n, const Rational& a);

/// Integral of S_k(x-1) over [1-a, 2-a].
Rational integration_lemma_lhs(std::size_t k, const Rational& a);

/// (-a)^{k+1}/(k+1) + zeta(-k).
Rational integration_lemma_rhs(std::size_t k, const Rational& a);

/// Right side of the a^{n+1} relation with zeta(k-n, a) values.
Rational relation_1_rhs(std::size_t n, const Rational& a);

/// Right side of the a^{n+1} relation with integrals of S_{n-k,a} over [1-a, 2-a].
Rational relation_3_rhs(std::size_t n, const Rational& a);

/// Integral of S_{n,a} built by the recursive construction over [1-a, 2-a],
/// with the S_0 term evaluated as zeta(0) + (1 - a).
Rational recursive_integral(std::size_t n, const Rational& a);

/// Checks, for every n <= n_max and a in a_set: the first relation against the
/// closed form, the integration lemma for 1 <= k <= n_max, the a^{n+1}
/// relation with both zeta values and integrals, and the recursive integral.
VerificationReport verify_proof_identities(std::size_t n_max, std::span<const Rational> a_set);

} // namespace zetaval

#endif

#ifndef ZETAVAL_DIRICHLET_HPP
#define ZETAVAL_DIRICHLET_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "zetaval/bernoulli.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

enum class Parity { even, odd };

/// Dirichlet character mod k held as its validated value table
/// chi(1), ..., chi(k). Real characters use Rational values, others
/// CyclotomicElement values of a common order.
template <class S>
class DirichletCharacter {
public:
    using scalar_type = S;
    using context_type = ring_context<S>;

    /// Validates the table: length k, chi(1) = 1, chi(r) = 0 exactly when
    /// gcd(r,k) > 1, total multiplicativity on units, chi(-1) = +-1.
    /// Throws CharacterError naming the first violated constraint.
    static DirichletCharacter from_table(unsigned long k, std::vector<S> values, std::string label = {})
    {
        return DirichletCharacter(k, std::move(values), std::move(label));
    }

    unsigned long modulus() const noexcept { return k_; }
    context_type ring() const { return ring_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<S>& values() const noexcept { return values_; }

    /// chi(r) for any integer r (periodic mod k).
    const S& operator()(long r) const
    {
        const long k = static_cast<long>(k_);
        const long idx = (((r - 1) % k) + k) % k;
        return values_[static_cast<std::size_t>(idx)];
    }

    Parity parity() const noexcept { return parity_; }
    bool is_even() const noexcept { return parity_ == Parity::even; }
    bool is_odd() const noexcept { return parity_ == Parity::odd; }
    bool is_trivial() const noexcept { return trivial_; }
    bool is_primitive() const noexcept { return primitive_; }

    /// Same modulus and value table; labels are ignored.
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b)
    {
        return a.k_ == b.k_ && a.ring_ == b.ring_ && a.values_ == b.values_;
    }

private:
    using traits = ring_traits<S>;

    DirichletCharacter(unsigned long k, std::vector<S> values, std::string label)
        : k_(k), values_(std::move(values)), label_(std::move(label)), ring_(validate_ring())
    {
        validate();
        if (label_.empty()) {
            label_ = "table:" + std::to_string(k_);
        }
    }

    context_type validate_ring() const
    {
        if (k_ == 0) {
            throw CharacterError("modulus", "modulus must be positive");
        }
        if (values_.size() != k_) {
            throw CharacterError("length", "table has " + std::to_string(values_.size()) + " entries, expected " +
                                               std::to_string(k_));
        }
        const context_type ring = traits::context_of(values_.front());
        for (const auto& v : values_) {
            if (!(traits::context_of(v) == ring)) {
                throw CharacterError("ring", "table entries lie in different rings");
            }
        }
        return ring;
    }

    void validate()
    {
        const S one = traits::one(ring_);
        const S zero = traits::zero(ring_);
        if (!((*this)(1) == one)) {
            throw CharacterError("chi(1)=1", "chi(1) = " + traits::render((*this)(1)));
        }
        for (unsigned long r = 1; r <= k_; ++r) {
            const bool unit = std::gcd(r, k_) == 1;
            const bool vanishes = traits::is_zero((*this)(static_cast<long>(r)));
            if (unit == vanishes) {
                throw CharacterError("support", "chi(" + std::to_string(r) + ") must be " +
                                                    (unit ? "nonzero" : "zero") + " (gcd(r,k) = " +
                                                    std::to_string(std::gcd(r, k_)) + ")");
            }
        }
        for (unsigned long r = 1; r <= k_; ++r) {
            if (std::gcd(r, k_) != 1) {
                continue;
            }
            for (unsigned long s = r; s <= k_; ++s) {
                if (std::gcd(s, k_) != 1) {
                    continue;
                }
                const auto rs = static_cast<long>((r * s) % k_);
                if (!((*this)(rs) == (*this)(static_cast<long>(r)) * (*this)(static_cast<long>(s)))) {
                    throw CharacterError("multiplicativity", "chi(" + std::to_string(r) + "*" + std::to_string(s) +
                                                                 ") != chi(" + std::to_string(r) + ")*chi(" +
                                                                 std::to_string(s) + ")");
                }
            }
        }
        const S& minus_one = (*this)(-1);
        if (minus_one == one) {
            parity_ = Parity::even;
        } else if (minus_one == zero - one) {
            parity_ = Parity::odd;
        } else {
            throw CharacterError("parity", "chi(-1) = " + traits::render(minus_one) + " is not +-1");
        }
        trivial_ = true;
        for (unsigned long r = 1; r <= k_; ++r) {
            if (std::gcd(r, k_) == 1 && !((*this)(static_cast<long>(r)) == one)) {
                trivial_ = false;
            }
        }
        primitive_ = compute_primitive();
    }

    // Primitive iff for every proper divisor d of k the character is not
    // constant on the units within some residue class mod d.
    bool compute_primitive() const
    {
        for (unsigned long d = 1; d < k_; ++d) {
            if (k_ % d != 0) {
                continue;
            }
            bool separates = false;
            for (unsigned long a = 1; a <= k_ && !separates; ++a) {
                if (std::gcd(a, k_) != 1) {
                    continue;
                }
                for (unsigned long b = a + d; b <= k_; b += d) {
                    if (std::gcd(b, k_) == 1 &&
                        !((*this)(static_cast<long>(a)) == (*this)(static_cast<long>(b)))) {
                        separates = true;
                        break;
                    }
                }
            }
            if (!separates) {
                return false;
            }
        }
        return true;
    }

    unsigned long k_;
    std::vector<S> values_;
    std::string label_;
    context_type ring_;
    Parity parity_ = Parity::even;
    bool trivial_ = false;
    bool primitive_ = false;
};

using RealCharacter = DirichletCharacter<Rational>;
using CyclotomicCharacter = DirichletCharacter<CyclotomicElement>;

/// Legendre symbol character (./p). Throws DomainError unless p is an odd prime.
RealCharacter quadratic_character(std::uint64_t p);

/// The non-trivial character mod 4: (1, 0, -1, 0).
RealCharacter chi4();

/// Principal character mod k.
RealCharacter trivial_character(unsigned long k);

/// Validated character from an explicit rational table.
RealCharacter character_from_table(unsigned long k, std::vector<Rational> values);

/// Character mod an odd prime p sending the least primitive root g to
/// zeta_m, where m divides p - 1. Values lie in Q(zeta_m).
CyclotomicCharacter power_residue_character(std::uint64_t p, unsigned long m);

/// Least primitive root modulo an odd prime.
std::uint64_t primitive_root(std::uint64_t p);

/// Parses `kronecker:p`, `chi4`, `trivial:k`, or `table:k:v1,...,vk`.
/// Throws DomainError / CharacterError / ArithmeticError on bad input.
RealCharacter parse_character(std::string_view literal);

template <class S>
bool is_primitive(const DirichletCharacter<S>& chi)
{
    return chi.is_primitive();
}

/// B_{n,chi}(x) = k^{n-1} sum_{r=1}^{k} chi(r) B_n((r+x)/k).
template <class S>
Polynomial<S> generalized_bernoulli_poly(const DirichletCharacter<S>& chi, std::size_t n)
{
    const unsigned long k = chi.modulus();
    const RationalPolynomial scaled = bernoulli_poly(n).scale_argument(Rational(1L, static_cast<long>(k)));
    Polynomial<S> acc(chi.ring());
    for (unsigned long r = 1; r <= k; ++r) {
        const S& weight = chi(static_cast<long>(r));
        if (ring_traits<S>::is_zero(weight)) {
            continue;
        }
        acc += scaled_lift(weight, scaled.shift(Rational(r)));
    }
    return acc * ring_traits<S>::embed(chi.ring(), Rational(k).pow(static_cast<long>(n) - 1));
}

/// B_{n,chi} = B_{n,chi}(0).
template <class S>
S generalized_bernoulli_number(const DirichletCharacter<S>& chi, std::size_t n)
{
    return generalized_bernoulli_poly(chi, n).evaluate(Rational(0));
}

/// tilde B_{n,chi}(x) = B_{n,chi}(x - 1); equals B_n(x) for the trivial
/// character mod 1.
template <class S>
Polynomial<S> tilde_bernoulli_poly(const DirichletCharacter<S>& chi, std::size_t n)
{
    return generalized_bernoulli_poly(chi, n).shift(Rational(-1));
}

} // namespace zetaval

#endif

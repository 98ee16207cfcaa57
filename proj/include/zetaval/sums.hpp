#ifndef ZETAVAL_SUMS_HPP
#define ZETAVAL_SUMS_HPP

#include <cstddef>

#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

/// Power n and start offset a of the partial sum sum_{k=0}^{M-2} (k+a)^n.
class PartialSumSpec {
public:
    /// Throws DomainError unless 0 < a <= 1.
    PartialSumSpec(std::size_t n, Rational a);

    std::size_t n() const noexcept { return n_; }
    const Rational& a() const noexcept { return a_; }

private:
    std::size_t n_;
    Rational a_;
};

/// Throws DomainError unless 0 < a <= 1.
void require_unit_offset(const Rational& a, const char* what);

/// S_n(x), the polynomial with S_n(M) = sum_{k=1}^{M-1} k^n, from the
/// Bernoulli closed form (B_{n+1}(x) - B_{n+1}(1)) / (n+1).
RationalPolynomial s_n(std::size_t n);

/// S_n(x) built without Bernoulli numbers, from the telescoping identity
/// x^{n+1} - 1 = sum_{k<=n} C(n+1,k) S_k(x).
RationalPolynomial s_n_telescoping(std::size_t n);

/// S_{n,a}(x) = (B_{n+1}(x+a-1) - B_{n+1}(a)) / (n+1), so that
/// S_{n,a}(M) = sum_{k=0}^{M-2} (k+a)^n for every integer M >= 2.
RationalPolynomial s_na(const PartialSumSpec& spec);

/// S_{n,a}(x) = a^n S_0(x) + sum_{k<n} C(n,k) a^k S_{n-k}(x-1), with the S_j
/// taken from s_n_telescoping. Independent of s_na.
RationalPolynomial s_na_recursive(const PartialSumSpec& spec);

/// phi_k(x) = (-1)^{k+1} (B_{2k+2}(x) - B_{2k+2}) / (2k+2); positive on (0,1).
RationalPolynomial signed_area_integrand(std::size_t k);

} // namespace zetaval

#endif

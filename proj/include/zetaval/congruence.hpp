#ifndef ZETAVAL_CONGRUENCE_HPP
#define ZETAVAL_CONGRUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "zetaval/rational.hpp"
#include "zetaval/report.hpp"

namespace zetaval {

/// sum_{a=1}^{p} a^r mod p by direct modular summation, in [0, p).
std::uint64_t power_sum_mod_p(std::uint64_t p, std::uint64_t r);

/// sum_{a=1}^{p} chi(a) a^n mod p for the quadratic character mod p, in [0, p).
std::uint64_t twisted_power_sum_mod_p(std::uint64_t p, std::uint64_t n);

/// Parity symbol of the quadratic character mod p: 0 if even, 1 if odd.
unsigned delta_chi(std::uint64_t p);

/// Checks p^2 B_{n,chi} = sum_{a=1}^{p^2} chi(a) a^n (mod p^2) for the
/// quadratic character mod p, with the right side summed by brute force.
VerificationReport congruence_p2(std::uint64_t p, std::size_t n);

enum class PropA1Branch { integer_branch, pole_branch, parity_zero };

std::string_view branch_name(PropA1Branch b);

/// Classification and outcome for one (p, n).
struct PropA1Verdict {
    std::uint64_t p = 0;
    std::size_t n = 0;
    PropA1Branch branch = PropA1Branch::integer_branch;
    Rational b_value;
    bool holds = false;
};

/// Branch of (p, n) from the congruence conditions alone.
PropA1Branch classify_prop_a1(std::uint64_t p, std::size_t n);

/// For each n <= n_max: parity_zero requires B_{n,chi} = 0, integer_branch
/// requires B_{n,chi} in Z, pole_branch requires vp(B_{n,chi}) = -1 and
/// p B_{n,chi} = -1 (mod p).
std::vector<PropA1Verdict> check_prop_a1(std::uint64_t p, std::size_t n_max);

/// Verdict for a single n.
PropA1Verdict check_prop_a1_at(std::uint64_t p, std::size_t n);

} // namespace zetaval

#endif

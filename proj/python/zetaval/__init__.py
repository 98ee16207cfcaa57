"""Exact zeta and L-function values at non-positive integers.

All values come back as :class:`fractions.Fraction`; arguments accept anything
``Fraction`` accepts (ints, strings such as ``"1/3"``, ``Fraction``).
"""

from ._core import (
    ArithmeticError,
    Character,
    CharacterError,
    DomainError,
    Error,
    HypothesisError,
    RingMismatchError,
    bernoulli,
    bernoulli_poly,
    euler_poly,
    generalized_bernoulli,
    golden_cell,
    hurwitz,
    l_value,
    lerch,
    power_sum_poly,
    prop_a1,
    shifted_power_sum_poly,
    suite_names,
    twisted_l_value,
    verify,
    zeta,
    zeta_even,
)

__all__ = [
    "ArithmeticError",
    "Character",
    "CharacterError",
    "DomainError",
    "Error",
    "HypothesisError",
    "RingMismatchError",
    "bernoulli",
    "bernoulli_poly",
    "euler_poly",
    "generalized_bernoulli",
    "golden_cell",
    "hurwitz",
    "l_value",
    "lerch",
    "power_sum_poly",
    "prop_a1",
    "shifted_power_sum_poly",
    "suite_names",
    "twisted_l_value",
    "verify",
    "zeta",
    "zeta_even",
]

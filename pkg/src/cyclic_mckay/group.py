"""The cyclic group C_{r,a} = <diag(e, e^a)> acting on C^2, and its characters.

Characters are stored as residues mod r.  A monomial x^m y^n has *weight*
m + a*n and *character* (m + a*n) mod r; the monomials of character i are
exactly the semi-invariants attached to the irreducible representation rho_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadExponent, NegativeExponent, NotSmall, TrivialGroup


@dataclass(frozen=True, order=True)
class GroupParams:
    """A small cyclic subgroup C_{r,a} of GL(2, C).

    Use :func:`make_group` to construct one; the constructor only checks
    invariants and does not reduce ``a``.
    """

    r: int
    a: int

    def __post_init__(self):
        if self.r <= 1:
            raise TrivialGroup(f"group order must be >= 2, got r={self.r}")
        if not 1 <= self.a < self.r:
            raise BadExponent(f"exponent must lie in [1, r-1], got a={self.a}")
        if gcd(self.r, self.a) != 1:
            raise NotSmall(f"C_{{{self.r},{self.a}}} is not small: gcd(r, a) = {gcd(self.r, self.a)}")

    def __str__(self):
        return f"C_{{{self.r},{self.a}}}"

    @property
    def a_inverse(self) -> int:
        """The a' with a*a' = 1 mod r (the group C_{r,a'} is C_{r,a} with x, y swapped)."""
        return pow(self.a, -1, self.r)


@dataclass(frozen=True, order=True)
class GroupElement:
    """The element g^k; ``k`` is reduced mod r by :meth:`of`."""

    k: int

    @classmethod
    def of(cls, G: GroupParams, k: int) -> GroupElement:
        return cls(k % G.r)


def make_group(r: int, a: int) -> GroupParams:
    """Validate ``(r, a)`` and return the group with ``a`` reduced mod r.

    >>> make_group(7, 10)
    GroupParams(r=7, a=3)
    """
    r, a = int(r), int(a)
    if r <= 1:
        raise TrivialGroup(f"group order must be >= 2, got r={r}")
    if a % r == 0:
        raise BadExponent(f"a = {a} is 0 mod r = {r}; the action is not faithful on y")
    a %= r
    if gcd(r, a) != 1:
        raise NotSmall(f"C_{{{r},{a}}} is not small: gcd(r, a) = {gcd(r, a)}")
    return GroupParams(r, a)


def is_in_sl2(G: GroupParams) -> bool:
    """det diag(e, e^a) = e^(1+a), so G lies in SL(2) iff 1 + a = 0 mod r."""
    return (1 + G.a) % G.r == 0


def monomial_weight(G: GroupParams, m: int, n: int) -> int:
    """The absolute weight m + a*n of x^m y^n."""
    if m < 0 or n < 0:
        raise NegativeExponent(f"monomial exponents must be non-negative, got ({m}, {n})")
    return m + G.a * n


def monomial_character(G: GroupParams, m: int, n: int) -> int:
    """The character index (m + a*n) mod r of x^m y^n."""
    return monomial_weight(G, m, n) % G.r


def age(G: GroupParams, g: GroupElement) -> Fraction:
    """Age of g^k: (<k> + <a k>) / r with <.> the residue in [0, r-1]."""
    k = g.k % G.r
    return Fraction(k + (G.a * k) % G.r, G.r)


def natural_rep_summands(G: GroupParams) -> tuple[int, int]:
    """Characters of the coordinate action: x carries 1, y carries a."""
    return (1, G.a % G.r)


def small_groups(r_max: int, r_min: int = 2):
    """All small (r, a) with r_min <= r <= r_max, in lexicographic order."""
    for r in range(max(r_min, 2), r_max + 1):
        for a in range(1, r):
            if gcd(r, a) == 1:
                yield GroupParams(r, a)

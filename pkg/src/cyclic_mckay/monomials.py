"""Invariant monomials, the G-basis B(G), the L-space L(G) and special representations.

Everything here is monomial combinatorics inside the box [0, r]^2, which is
enough because x^r and y^r are always invariant.  Monomial sets are tuples in
graded-lex order (total degree, then x-exponent descending) so that output is
byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import NegativeExponent, TrivialIndex
from .group import GroupParams, monomial_character


class Monomial(NamedTuple):
    m: int
    n: int

    def divides(self, other: Monomial) -> bool:
        return self.m <= other.m and self.n <= other.n

    def __truediv__(self, other: Monomial) -> Monomial:
        return Monomial(self.m - other.m, self.n - other.n)

    @property
    def degree(self) -> int:
        return self.m + self.n

    def is_pure(self) -> bool:
        return self.m == 0 or self.n == 0

    def __str__(self):
        return format_monomial(self.m, self.n)


def format_monomial(m: int, n: int) -> str:
    """Render x^m y^n; negative exponents are allowed (chart coordinates)."""
    if m == 0 and n == 0:
        return "1"
    parts = []
    for var, e in (("x", m), ("y", n)):
        if e == 1:
            parts.append(var)
        elif e != 0:
            parts.append(f"{var}^{e}")
    return "".join(parts)


def monomial_key(mono: Monomial) -> tuple[int, int]:
    return (mono.m + mono.n, -mono.m)


def canonical(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(set(map(Monomial._make, monos)), key=monomial_key))


def char_of(G: GroupParams, mono: Monomial) -> int:
    if mono.m < 0 or mono.n < 0:
        raise NegativeExponent(f"negative exponent in {tuple(mono)}")
    return monomial_character(G, mono.m, mono.n)


def minimal_elements(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal members of a set of monomials."""
    pool = canonical(monos)
    return tuple(u for u in pool if not any(v != u and v.divides(u) for v in pool))


@lru_cache(maxsize=None)
def invariant_generators(G: GroupParams) -> tuple[Monomial, ...]:
    """Minimal nonconstant invariant monomials.

    Scans the columns m = 0..r of the box [0, r]^2 (enough, as x^r and y^r are
    invariant): the lowest invariant in column m is x^m y^n with n = -m/a mod r,
    and it is minimal iff it sits strictly below every earlier column's.
    """
    r, a_inv = G.r, G.a_inverse
    gens = []
    lowest = r + 1
    for m in range(r + 1):
        n = (-m * a_inv) % r if m else r
        if n < lowest:
            gens.append(Monomial(m, n))
            lowest = n
    return canonical(gens)


def staircase_heights(G: GroupParams) -> tuple[int, ...]:
    """Column heights of B(G): entry m is the number of B(G) cells x^m y^n."""
    inv = invariant_generators(G)
    return tuple(min(v.n for v in inv if v.m <= m) for m in range(G.r))


@lru_cache(maxsize=None)
def g_basis(G: GroupParams) -> tuple[Monomial, ...]:
    """B(G): monomials divisible by no nonconstant invariant monomial."""
    heights = staircase_heights(G)
    assert heights[0] == G.r and all(h < G.r for h in heights[1:])
    return canonical(Monomial(m, n) for m, h in enumerate(heights) for n in range(h))


@lru_cache(maxsize=None)
def l_space(G: GroupParams) -> tuple[Monomial, ...]:
    r = G.r
    return canonical([Monomial(0, 0)] + [Monomial(k, 0) for k in range(1, r)]
                     + [Monomial(0, k) for k in range(1, r)])


def module_generators(G: GroupParams, i: int) -> tuple[Monomial, ...]:
    """Minimal generators of the character-i semi-invariants over the invariant ring.

    A monomial of character i is a generator iff no nonconstant invariant
    divides it, i.e. the generators are B(G) restricted to character i.
    """
    return _basis_by_character(G)[i % G.r]


@lru_cache(maxsize=None)
def _basis_by_character(G: GroupParams) -> tuple[tuple[Monomial, ...], ...]:
    buckets: list[list[Monomial]] = [[] for _ in range(G.r)]
    for u in g_basis(G):
        buckets[char_of(G, u)].append(u)
    return tuple(map(tuple, buckets))


def y_partner(G: GroupParams, i: int) -> int:
    """The j in [0, r-1] with a*j = i mod r, so that y^j has character i."""
    return (i * G.a_inverse) % G.r


@dataclass(frozen=True)
class SpecialReport:
    specials: tuple[int, ...]
    generator_pairs: dict[int, tuple[Monomial, Monomial]] = field(hash=False)
    nonspecials: tuple[int, ...]
    witnesses: dict[int, Monomial] = field(hash=False)


@lru_cache(maxsize=None)
def special_reps(G: GroupParams) -> SpecialReport:
    """Classify each nontrivial rho_i by whether B(G) \\ L(G) has a character-i monomial."""
    lspace = set(l_space(G))
    extra = [u for u in g_basis(G) if u not in lspace]
    witnesses: dict[int, Monomial] = {}
    for u in extra:  # already in graded-lex order, first hit is the least
        witnesses.setdefault(char_of(G, u), u)
    specials = tuple(i for i in range(1, G.r) if i not in witnesses)
    pairs = {i: (Monomial(i, 0), Monomial(0, y_partner(G, i))) for i in specials}
    return SpecialReport(
        specials=specials,
        generator_pairs=pairs,
        nonspecials=tuple(sorted(witnesses)),
        witnesses=dict(sorted(witnesses.items())),
    )


def is_special_by_generator_count(G: GroupParams, i: int) -> bool:
    """rho_i is special iff its semi-invariant module has exactly two generators."""
    return len(module_generators(G, i)) == 2


def surjectivity_oracle(G: GroupParams, i: int) -> bool:
    """Monomial-level surjectivity of (Omega^2)^G x (O x V_i)^G -> (Omega^2 x V_i)^G.

    Targets are the generators of character i - (a + 1); each must factor as a
    character-i monomial times a cofactor (whose character is then forced to
    be that of the invariant 2-form generator).  Deliberately shares no code
    with the B(G) \\ L(G) test in :func:`special_reps`.
    """
    r = G.r
    if i % r == 0:
        raise TrivialIndex("the oracle is only defined for nontrivial representations")
    i %= r
    targets = module_generators(G, i - G.a - 1)
    for t in targets:
        if not any((dm + G.a * dn) % r == i
                   for dm in range(t.m + 1) for dn in range(t.n + 1)):
            return False
    return True

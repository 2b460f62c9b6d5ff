"""Proper colorings of a circle with m arcs, counted exactly and up to symmetry.

Arc k runs from vertex k to vertex k+1 (mod m); a coloring is proper when
adjacent arcs carry different colors.  With s colors the closed forms are

    colorings:                    (s-1)^m + (-1)^m (s-1)
    up to rotation+reflection:    (1/2m) ( sum_{2<=d|m} phi(m/d) * colorings(d)
                                           + [m even] * s (s-1)^{m/2} m/2 )

and for s = 3 the further quotient by the 6 color permutations has the
closed form in count_bracelets_up_to_recoloring(), whose divisions by 6 and
2m must come out exact.  Every closed form is backed by the brute-force
Burnside/union-find oracle in burnside_orbit_count().
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Callable, Literal, Sequence

from .errors import CapacityError, ConsistencyError, DimensionMismatchError
from .orbits import orbit_summary

# cap on (s-1)^m, the size of the output; 2**22 allows m = 22 at s = 3
DEFAULT_BUDGET = 1 << 22

ColorTuple = tuple[int, ...]


@dataclass(frozen=True)
class CycleColoring:
    """A proper coloring of the m arcs of a circle, colors in [0, s)."""

    colors: ColorTuple
    s: int = 3

    def __post_init__(self) -> None:
        m = len(self.colors)
        if m < 2:
            raise ValueError("need at least 2 arcs")
        if self.s < 2:
            raise ValueError("need at least 2 colors")
        for k, c in enumerate(self.colors):
            if not 0 <= c < self.s:
                raise ValueError(f"color {c} outside [0, {self.s})")
            if c == self.colors[(k + 1) % m]:
                raise ValueError(f"arcs {k} and {(k + 1) % m} share color {c}")

    @property
    def m(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class DihedralElement:
    """Rotation by 2*pi*k/m, or the reflection obtained by composing the
    base reflection (vertex i -> vertex -i) with that rotation."""

    m: int
    kind: Literal["rotation", "reflection"]
    k: int

    def __post_init__(self) -> None:
        if self.kind not in ("rotation", "reflection"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if not 0 <= self.k < self.m:
            raise ValueError(f"k={self.k} outside [0, {self.m})")


def dihedral_group(m: int) -> list[DihedralElement]:
    """The 2m elements: rotations 0..m-1 then reflections 0..m-1."""
    rots = [DihedralElement(m, "rotation", k) for k in range(m)]
    refls = [DihedralElement(m, "reflection", k) for k in range(m)]
    return rots + refls


def _rotate(t: ColorTuple, k: int) -> ColorTuple:
    return t[-k:] + t[:-k] if k else t


def _reflect(t: ColorTuple, k: int) -> ColorTuple:
    # new[i] = old[(k - 1 - i) mod m] == rotate(reverse(old), k)
    return _rotate(t[::-1], k)


def act_dihedral(g: DihedralElement, c: CycleColoring) -> CycleColoring:
    """Relabel the arcs of c by the dihedral element g."""
    if g.m != c.m:
        raise DimensionMismatchError(f"group on {g.m} arcs, coloring on {c.m}")
    t = _rotate(c.colors, g.k) if g.kind == "rotation" else _reflect(c.colors, g.k)
    return CycleColoring(t, c.s)


def act_color_symmetry(perm: Sequence[int], c: CycleColoring) -> CycleColoring:
    """Recolor c through a permutation of its s colors."""
    if sorted(perm) != list(range(c.s)):
        raise ValueError(f"{tuple(perm)} is not a permutation of 0..{c.s - 1}")
    return CycleColoring(tuple(perm[x] for x in c.colors), c.s)


def _check_budget(m: int, s: int, budget: int) -> None:
    if m < 2 or s < 2:
        raise ValueError(f"need m >= 2 and s >= 2, got m={m}, s={s}")
    if (s - 1) ** m > budget:
        raise CapacityError(
            f"(s-1)^m = {(s - 1) ** m} colorings exceed budget {budget}")


def enumerate_color_tuples(m: int, s: int = 3, budget: int = DEFAULT_BUDGET) -> list[ColorTuple]:
    """All proper colorings as raw tuples, in lexicographic order."""
    _check_budget(m, s, budget)
    out: list[ColorTuple] = []
    colors = [0] * m

    def extend(i: int) -> None:
        if i == m:
            out.append(tuple(colors))
            return
        last = i == m - 1
        prev = colors[i - 1] if i else -1
        first = colors[0]
        for c in range(s):
            if c == prev or (last and c == first):
                continue
            colors[i] = c
            extend(i + 1)

    extend(0)
    return out


def enumerate_colorings(m: int, s: int = 3, budget: int = DEFAULT_BUDGET) -> list[CycleColoring]:
    """All proper colorings of the m-arc circle, each exactly once."""
    return [CycleColoring(t, s) for t in enumerate_color_tuples(m, s, budget)]


def count_proper_colorings(m: int, s: int = 3) -> int:
    """Closed form (s-1)^m + (-1)^m (s-1), exact at any m."""
    if m < 2 or s < 2:
        raise ValueError(f"need m >= 2 and s >= 2, got m={m}, s={s}")
    sign = 1 if m % 2 == 0 else -1
    return (s - 1) ** m + sign * (s - 1)


def totient(n: int) -> int:
    """Euler's phi by trial-division factorization."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    out = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


def _divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def count_bracelets(m: int, s: int = 3) -> int:
    """Proper colorings up to rotation and reflection, by Burnside's closed form."""
    if m < 2 or s < 2:
        raise ValueError(f"need m >= 2 and s >= 2, got m={m}, s={s}")
    total = sum(totient(m // d) * count_proper_colorings(d, s)
                for d in _divisors(m) if d >= 2)
    if m % 2 == 0:
        total += s * (s - 1) ** (m // 2) * (m // 2)
    q, r = divmod(total, 2 * m)
    if r:
        raise ConsistencyError(f"bracelet sum {total} not divisible by {2 * m}")
    return q


# fixed-point counts per residual order of the recoloring, gcd(m/d, 6) keyed
_ALPHA = {1: 1, 2: 3, 3: 2, 6: 4}
_BETA = {1: 0, 2: 2, 3: 2, 6: 4}


def _colorings_3(q: int) -> int:
    # 2^q + (-1)^q * 2, valid down to q = 0
    return (1 << q) + (2 if q % 2 == 0 else -2)


def count_bracelets_up_to_recoloring(m: int) -> int:
    """Three-color bracelets counted up to permuting the colors as well.

    All intermediate divisions are kept as exact rationals and the final
    value must be an integer; anything else raises ConsistencyError.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got m={m}")
    total = Fraction(0)
    for d in _divisors(m):
        g = gcd(m // d, 6)
        total += totient(m // d) * Fraction(
            _ALPHA[g] * _colorings_3(d) + _BETA[g] * _colorings_3(d - 1), 6)
    if m % 2:
        total += Fraction(m * _colorings_3((m + 1) // 2), 6)
    else:
        total += m * (1 << (m // 2 - 1))
    result = total / (2 * m)
    if result.denominator != 1:
        raise ConsistencyError(f"recoloring class count {result} is not an integer")
    return int(result)


def dihedral_actions(m: int) -> list[Callable[[ColorTuple], ColorTuple]]:
    """The 2m dihedral relabelings as functions on raw color tuples."""
    acts: list[Callable[[ColorTuple], ColorTuple]] = []
    for k in range(m):
        acts.append(lambda t, k=k: _rotate(t, k))
    for k in range(m):
        acts.append(lambda t, k=k: _reflect(t, k))
    return acts


def color_actions(s: int) -> list[Callable[[ColorTuple], ColorTuple]]:
    """All s! recolorings as functions on raw color tuples."""
    return [lambda t, p=p: tuple(p[x] for x in t)
            for p in permutations(range(s))]


def combined_actions(m: int, s: int = 3) -> list[Callable[[ColorTuple], ColorTuple]]:
    """The s! * 2m composite actions (recolor after relabel)."""
    acts: list[Callable[[ColorTuple], ColorTuple]] = []
    for p in permutations(range(s)):
        for d in dihedral_actions(m):
            acts.append(lambda t, p=p, d=d: tuple(p[x] for x in d(t)))
    return acts


def burnside_orbit_count(elements: Sequence, actions: Sequence[Callable]) -> int:
    """Orbit count by fixed-point averaging, cross-checked by union-find.

    Elements may be CycleColoring values or raw tuples, as long as the
    actions match the representation.
    """
    return orbit_summary(elements, actions).count

"""Facet labelings by nonzero GF(2) vectors, independent at every face.

A labeling assigns each facet a nonzero vector of (Z_2)^n such that for
every face, the vectors on the facets through it are linearly independent.
Enumeration backtracks over facets in bit order and re-checks exactly the
faces whose facet sets become fully assigned at each step, so invalid
prefixes are cut early and the output order is deterministic.

Labelings are acted on by GL(n, Z_2) on the value side and by facet
automorphisms (poset-structure-preserving facet permutations) on the
argument side; orbit counting goes through the shared union-find/Burnside
machinery, which certifies freeness via orbit sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Sequence

from . import gf2
from .errors import CapacityError, ConsistencyError, DimensionMismatchError
from .gf2 import Mat
from .orbit_spaces import FacePoset, boundary_cycle
from .orbits import orbit_summary
from .errors import UnsupportedShapeError

MAX_ENUM_FACETS = 20
MAX_BRUTE_AUT_FACETS = 8

FacetPerm = tuple[int, ...]  # perm[i] = facet index that facet i maps to


@dataclass(frozen=True)
class CharFunction:
    """Values are indexed by facet bit position; equality ignores the poset."""

    poset: FacePoset = field(compare=False)
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.poset.facet_count:
            raise DimensionMismatchError(
                f"{len(self.values)} values for {self.poset.facet_count} facets")

    def value_at(self, facet_id: int) -> int:
        return self.values[self.poset.facet_ids.index(facet_id)]

    def to_str(self) -> str:
        """Golden-file form: comma list of facet-id:bitmask."""
        return ",".join(f"{fid}:{v}"
                        for fid, v in zip(self.poset.facet_ids, self.values))


def _selected(values: Sequence[int], mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(values[i])
        mask >>= 1
        i += 1
    return out


def is_valid_assignment(p: FacePoset, values: Sequence[int], n: int) -> bool:
    """Check nonzero values and independence at every face."""
    if any(v == 0 or v >> n for v in values):
        return False
    for f in p.faces:
        k = bin(f.facet_mask).count("1")
        if gf2.rank(_selected(values, f.facet_mask), n) != k:
            return False
    return True


def enumerate_char_functions(p: FacePoset, n: int,
                             max_facets: int = MAX_ENUM_FACETS) -> list[CharFunction]:
    """All valid labelings of p's facets, in lexicographic value order.

    May legitimately return an empty list. n must equal the ambient
    dimension of p.
    """
    if n != p.dim:
        raise DimensionMismatchError(f"rank {n} != poset dimension {p.dim}")
    nf = p.facet_count
    if nf > max_facets:
        raise CapacityError(f"{nf} facets exceed the enumeration bound {max_facets}")
    # face checks bucketed by the highest facet bit they involve
    buckets: list[list[int]] = [[] for _ in range(nf)]
    for f in p.faces:
        if f.facet_mask:
            buckets[f.facet_mask.bit_length() - 1].append(f.facet_mask)
    out: list[CharFunction] = []
    values = [0] * nf

    def extend(i: int) -> None:
        if i == nf:
            out.append(CharFunction(p, n, tuple(values)))
            return
        for v in range(1, 1 << n):
            values[i] = v
            ok = True
            for mask in buckets[i]:
                sel = _selected(values, mask)
                if gf2.rank(sel, n) != len(sel):
                    ok = False
                    break
            if ok:
                extend(i + 1)
        values[i] = 0

    if nf == 0:
        return [CharFunction(p, n, ())]
    extend(0)
    return out


def gl_act(sigma: Mat, lam: CharFunction) -> CharFunction:
    """Post-compose the labeling with an invertible matrix."""
    if sigma.n != lam.n:
        raise DimensionMismatchError(f"matrix rank {sigma.n} != labeling rank {lam.n}")
    if not sigma.is_invertible():
        raise ValueError("matrix is singular")
    return CharFunction(lam.poset, lam.n, tuple(sigma.apply(v) for v in lam.values))


def is_facet_automorphism(p: FacePoset, perm: FacetPerm) -> bool:
    """True iff the facet permutation preserves the (dim, facet-set) multiset."""
    nf = p.facet_count
    if sorted(perm) != list(range(nf)):
        return False
    key = sorted((f.dim, f.facet_mask) for f in p.faces)
    mapped = sorted((f.dim, _permute_mask(f.facet_mask, perm)) for f in p.faces)
    return mapped == key


def _permute_mask(mask: int, perm: FacetPerm) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def aut_act(perm: FacetPerm, lam: CharFunction) -> CharFunction:
    """Pre-compose the labeling with a facet automorphism."""
    if not is_facet_automorphism(lam.poset, perm):
        raise ValueError(f"{perm} is not a facet automorphism of the poset")
    return CharFunction(lam.poset, lam.n,
                        tuple(lam.values[perm[i]] for i in range(len(perm))))


def facet_automorphism_group(p: FacePoset,
                             max_facets: int = MAX_BRUTE_AUT_FACETS) -> list[FacetPerm]:
    """All poset-structure-preserving facet permutations, sorted.

    2-dimensional posets with a single boundary cycle get the dihedral
    shortcut (2m elements built from the cycle order); everything else is
    brute force over facet permutations, bounded by max_facets.
    """
    if p.dim == 2:
        try:
            cycle = boundary_cycle(p)
        except UnsupportedShapeError:
            cycle = None
        if cycle is not None:
            index_of = {fid: i for i, fid in enumerate(p.facet_ids)}
            cyc = [index_of[fid] for fid in cycle]
            m = len(cyc)
            perms = set()
            for r in range(m):
                rot = [0] * m
                refl = [0] * m
                for q in range(m):
                    rot[cyc[q]] = cyc[(q + r) % m]
                    refl[cyc[q]] = cyc[(r - q) % m]
                perms.add(tuple(rot))
                perms.add(tuple(refl))
            group = sorted(perms)
            for h in group:
                if not is_facet_automorphism(p, h):
                    raise ConsistencyError(f"dihedral candidate {h} fails the poset check")
            return group
    nf = p.facet_count
    if nf > max_facets:
        raise CapacityError(f"{nf} facets exceed the brute-force bound {max_facets}")
    return [h for h in permutations(range(nf)) if is_facet_automorphism(p, h)]


def _gl_value_actions(n: int) -> list[Callable[[tuple[int, ...]], tuple[int, ...]]]:
    # one lookup table per matrix keeps the inner loop cheap
    acts = []
    for sigma in gf2.enumerate_gl(n):
        table = [0] + [sigma.apply(v) for v in range(1, 1 << n)]
        acts.append(lambda t, tb=table: tuple(tb[v] for v in t))
    return acts


def count_gl_orbits(p: FacePoset, n: int,
                    max_facets: int = MAX_ENUM_FACETS) -> tuple[int, bool]:
    """(orbit count, freeness) of GL(n, Z_2) acting on the labelings of p.

    Freeness is certified by every orbit having full group size.  When p
    has a vertex the action must be free with |labelings| = orbits * |GL|;
    a violation raises ConsistencyError.
    """
    lams = enumerate_char_functions(p, n, max_facets)
    if not lams:
        return (0, True)
    summary = orbit_summary([l.values for l in lams], _gl_value_actions(n))
    order = gf2.gl_order(n)
    free = all(size == order for size in summary.sizes)
    if p.has_vertex():
        if not free or summary.count * order != len(lams):
            raise ConsistencyError(
                "poset has a vertex but the GL action is not free")
    return (summary.count, free)


def count_double_cosets(p: FacePoset, n: int,
                        max_facets: int = MAX_ENUM_FACETS) -> int:
    """Labelings of p up to GL(n, Z_2) and facet automorphisms combined."""
    lams = enumerate_char_functions(p, n, max_facets)
    if not lams:
        return 0
    auts = facet_automorphism_group(p)
    acts = []
    for sigma in gf2.enumerate_gl(n):
        table = [0] + [sigma.apply(v) for v in range(1, 1 << n)]
        for h in auts:
            acts.append(lambda t, tb=table, h=h: tuple(tb[t[h[i]]] for i in range(len(h))))
    return orbit_summary([l.values for l in lams], acts).count


def coloring_to_charfun(p: FacePoset, colors: Sequence[int]) -> CharFunction:
    """Identify arc colors 0, 1, 2 with the nonzero vectors 1, 2, 3 of (Z_2)^2.

    Arc order is the boundary cycle of p, so this is the standard bridge
    between boundary colorings and rank-2 labelings of 2-dimensional posets.
    """
    if p.dim != 2:
        raise DimensionMismatchError("coloring bridge needs a 2-dimensional poset")
    cycle = boundary_cycle(p)
    if len(colors) != len(cycle):
        raise DimensionMismatchError(
            f"{len(colors)} colors for {len(cycle)} boundary arcs")
    index_of = {fid: i for i, fid in enumerate(p.facet_ids)}
    values = [0] * p.facet_count
    for pos, fid in enumerate(cycle):
        c = colors[pos]
        if not 0 <= c <= 2:
            raise ValueError(f"color {c} outside 0..2")
        values[index_of[fid]] = c + 1
    return CharFunction(p, 2, tuple(values))


def charfun_to_coloring(lam: CharFunction) -> tuple[int, ...]:
    """Inverse of coloring_to_charfun, reading arcs along the boundary cycle."""
    p = lam.poset
    if lam.n != 2 or p.dim != 2:
        raise DimensionMismatchError("coloring bridge needs rank 2 over a 2-dimensional poset")
    cycle = boundary_cycle(p)
    index_of = {fid: i for i, fid in enumerate(p.facet_ids)}
    return tuple(lam.values[index_of[fid]] - 1 for fid in cycle)


def brute_force_assignments(p: FacePoset, n: int) -> list[tuple[int, ...]]:
    """Oracle: filter all (2^n - 1)^facets assignments by validity."""
    nf = p.facet_count
    if (2 ** n - 1) ** nf > 1 << 22:
        raise CapacityError("brute-force filter too large")
    return [vals for vals in product(range(1, 1 << n), repeat=nf)
            if is_valid_assignment(p, vals, n)]

"""Classification counts: coset cardinalities over finite model sets.

Three equivalence relations on the covers over a fixed orbit space are
counted as orbit sets:

  * equivalence:            GL(n, Z_2) \\ (H1 x labelings), diagonal action
  * equivariant (polytope): labelings / facet automorphisms
  * weak equivariant:       GL(n, Z_2) \\ (H1 x labelings) / Aut

H1(Q; (Z_2)^n) is modeled as n-tuples of rank-r bit vectors with a finite
matrix group acting diagonally on the left (the image of the space's
automorphisms) and GL(n, Z_2) mixing the n copies.  That matrix group is
not derived from topology: it is a preset table for the three surfaces the
theory pins down (disk: trivial on rank 0; projective plane minus a disk:
trivial on rank 1; torus minus a disk: all of GL(2, Z_2)), and user input
for anything else.

For a surface with one vertexed boundary circle the equivariant count
factors as h(Q) * bracelets(m), with h(Q) the orbit count of the preset
group on the H1 model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import gf2
from .charfuns import CharFunction, enumerate_char_functions, facet_automorphism_group
from .cycles import count_bracelets
from .errors import CapacityError, ConsistencyError, DimensionMismatchError
from .gf2 import Mat
from .orbit_spaces import FacePoset, SurfaceWithBoundary
from .orbits import orbit_summary

MAX_H1_POINTS = 1 << 20

H1Element = tuple[int, ...]  # n vectors of rank r, as bitmasks


@dataclass(frozen=True)
class H1Model:
    """H1(Q; (Z_2)^n) as n-tuples over (Z_2)^r with a matrix group acting.

    aut_image must be closed under product and inverse and contain the
    identity; rank 0 is the trivial model and carries an empty group.
    """

    r: int
    n: int
    aut_image: tuple[Mat, ...]

    def __post_init__(self) -> None:
        if self.r < 0 or self.n < 1:
            raise ValueError("need r >= 0 and n >= 1")
        if self.r == 0:
            if self.aut_image:
                raise ValueError("rank 0 takes an empty matrix group")
            return
        mats = set(m.cols for m in self.aut_image)
        if not self.aut_image:
            raise ValueError("matrix group must at least contain the identity")
        for m in self.aut_image:
            if m.n != self.r:
                raise DimensionMismatchError(f"group matrix rank {m.n} != {self.r}")
            if not m.is_invertible():
                raise ValueError("matrix group contains a singular matrix")
            if m.inverse().cols not in mats:
                raise ConsistencyError("matrix group not closed under inverse")
            for other in self.aut_image:
                if (m @ other).cols not in mats:
                    raise ConsistencyError("matrix group not closed under product")
        if Mat.identity(self.r).cols not in mats:
            raise ConsistencyError("matrix group lacks the identity")

    @property
    def size(self) -> int:
        return 1 << (self.r * self.n)

    def elements(self) -> list[H1Element]:
        if self.size > MAX_H1_POINTS:
            raise CapacityError(f"{self.size} H1 points exceed {MAX_H1_POINTS}")
        out: list[H1Element] = []

        def extend(prefix: list[int]) -> None:
            if len(prefix) == self.n:
                out.append(tuple(prefix))
                return
            for v in range(1 << self.r):
                prefix.append(v)
                extend(prefix)
                prefix.pop()

        extend([])
        return out

    def aut_actions(self) -> list[Callable[[H1Element], H1Element]]:
        """The matrix group acting on each of the n components at once."""
        if self.r == 0:
            return [lambda xi: xi]
        return [lambda xi, g=g: tuple(g.apply(v) for v in xi)
                for g in self.aut_image]

    def gl_action(self, sigma: Mat) -> Callable[[H1Element], H1Element]:
        """sigma in GL(n, Z_2) mixing the n components of each element."""
        if sigma.n != self.n:
            raise DimensionMismatchError(f"matrix rank {sigma.n} != {self.n} copies")
        rows = [sum(((sigma.cols[j] >> i) & 1) << j for j in range(self.n))
                for i in range(self.n)]

        def act(xi: H1Element) -> H1Element:
            out = []
            for row in rows:
                acc = 0
                j = 0
                r = row
                while r:
                    if r & 1:
                        acc ^= xi[j]
                    r >>= 1
                    j += 1
                out.append(acc)
            return tuple(out)

        return act


def disk_h1(n: int = 2) -> H1Model:
    return H1Model(0, n, ())


def rp2_minus_disk_h1() -> H1Model:
    return H1Model(1, 2, (Mat.identity(1),))


def torus_minus_disk_h1() -> H1Model:
    return H1Model(2, 2, tuple(gf2.enumerate_gl(2)))


def h1_from_generators(r: int, n: int, generators: Iterable[Mat]) -> H1Model:
    """Close a generator list under multiplication; identity always included."""
    if r == 0:
        return H1Model(0, n, ())
    els = {Mat.identity(r).cols: Mat.identity(r)}
    frontier = list(generators)
    while frontier:
        g = frontier.pop()
        if g.cols in els:
            continue
        if not g.is_invertible():
            raise ValueError("generator is singular")
        els[g.cols] = g
        for other in list(els.values()):
            for prod in (g @ other, other @ g):
                if prod.cols not in els:
                    frontier.append(prod)
        if len(els) > 1 << 16:
            raise CapacityError("matrix group closure too large")
    group = tuple(sorted(els.values(), key=lambda m: m.cols))
    return H1Model(r, n, group)


def compute_h(h1: H1Model) -> int:
    """Orbits of the preset matrix group on the H1 model (rank-2 coefficients)."""
    if h1.n != 2:
        raise DimensionMismatchError("h is defined for 2 coefficient copies")
    if h1.r == 0:
        return 1
    return orbit_summary(h1.elements(), h1.aut_actions()).count


@dataclass(frozen=True)
class ClassificationReport:
    equivalence_count: int
    equivariant_count: int
    weak_count: int
    free: bool
    consistent: bool

    def as_dict(self) -> dict[str, int | bool]:
        return {
            "equivalence_classes": self.equivalence_count,
            "equivariant_classes": self.equivariant_count,
            "weak_classes": self.weak_count,
            "gl_action_free": self.free,
            "consistent": self.consistent,
        }


def count_equivalence_classes(h1: H1Model, lambdas: Sequence[CharFunction]) -> int:
    """Orbits of the diagonal GL(n, Z_2) action on H1 x labelings.

    When the underlying poset has a vertex the action is free, so the
    count must equal |H1| * |labelings| / |GL|; disagreement between the
    partition and that formula raises ConsistencyError.
    """
    if not lambdas:
        return 0
    n = lambdas[0].n
    if h1.n != n:
        raise DimensionMismatchError(f"H1 over {h1.n} copies, labelings of rank {n}")
    xis = h1.elements()
    pairs = [(xi, lam.values) for xi in xis for lam in lambdas]
    acts = []
    for sigma in gf2.enumerate_gl(n):
        coeff = h1.gl_action(sigma)
        table = [0] + [sigma.apply(v) for v in range(1, 1 << n)]
        acts.append(lambda pair, c=coeff, tb=table:
                    (c(pair[0]), tuple(tb[v] for v in pair[1])))
    count = orbit_summary(pairs, acts).count
    if lambdas[0].poset.has_vertex():
        expected, rem = divmod(len(pairs), gf2.gl_order(n))
        if rem or count != expected:
            raise ConsistencyError(
                f"free-action formula gives {len(pairs)}/{gf2.gl_order(n)}, partition gives {count}")
    return count


def count_equivariant_classes_surface(q: SurfaceWithBoundary, h_of_q: int) -> int:
    """h(Q) * bracelets(m) for a one-boundary surface with m >= 2 vertices."""
    if q.m < 2:
        raise ValueError("the surface count needs a vertexed boundary (m >= 2)")
    return h_of_q * count_bracelets(q.m)


def count_equivariant_classes_small_cover(p: FacePoset, n: int) -> int:
    """Orbits of the facet automorphism group on the labelings of p."""
    lams = enumerate_char_functions(p, n)
    if not lams:
        return 0
    auts = facet_automorphism_group(p)
    acts = [lambda t, h=h: tuple(t[h[i]] for i in range(len(h))) for h in auts]
    return orbit_summary([l.values for l in lams], acts).count


def count_weak_classes(h1: H1Model, p: FacePoset, n: int) -> int:
    """Orbits of H1 x labelings under GL(n, Z_2) and the space automorphisms.

    The automorphism side acts through the full product of the H1 matrix
    group and the facet automorphism group; for a trivial H1 (the simple
    polytope case) that product is exactly the facet group, which is the
    case with a sharp count to match.
    """
    lams = enumerate_char_functions(p, n)
    if not lams:
        return 0
    if h1.n != n:
        raise DimensionMismatchError(f"H1 over {h1.n} copies, labelings of rank {n}")
    xis = h1.elements()
    pairs = [(xi, lam.values) for xi in xis for lam in lams]
    auts = facet_automorphism_group(p)
    h1_acts = h1.aut_actions()
    acts = []
    for sigma in gf2.enumerate_gl(n):
        coeff = h1.gl_action(sigma)
        table = [0] + [sigma.apply(v) for v in range(1, 1 << n)]
        for ha in h1_acts:
            for h in auts:
                acts.append(lambda pair, c=coeff, tb=table, ha=ha, h=h:
                            (c(ha(pair[0])), tuple(tb[pair[1][h[i]]] for i in range(len(h)))))
    return orbit_summary(pairs, acts).count


def full_census(p: FacePoset, n: int) -> ClassificationReport:
    """All three counts over a poset with trivial H1 (simple polytope case)."""
    h1 = H1Model(0, n, ())
    lams = enumerate_char_functions(p, n)
    gl_count, free = _gl_summary(p, n, lams)
    consistent = True
    if lams and p.has_vertex():
        consistent = gl_count * gf2.gl_order(n) == len(lams)
    return ClassificationReport(
        equivalence_count=count_equivalence_classes(h1, lams) if lams else 0,
        equivariant_count=count_equivariant_classes_small_cover(p, n),
        weak_count=count_weak_classes(h1, p, n),
        free=free,
        consistent=consistent,
    )


def _gl_summary(p: FacePoset, n: int, lams: Sequence[CharFunction]) -> tuple[int, bool]:
    if not lams:
        return (0, True)
    acts = []
    for sigma in gf2.enumerate_gl(n):
        table = [0] + [sigma.apply(v) for v in range(1, 1 << n)]
        acts.append(lambda t, tb=table: tuple(tb[v] for v in t))
    summary = orbit_summary([l.values for l in lams], acts)
    free = all(size == gf2.gl_order(n) for size in summary.sizes)
    return (summary.count, free)

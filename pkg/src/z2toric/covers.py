"""Glued cell complexes over a polygon from a boundary coloring.

The cover of an m-gon is assembled from four sheets (the elements of
(Z_2)^2), one copy of the polygon each.  Over an arc with label v the
sheets collapse in pairs along the cosets of {0, v}, so each arc carries
two edge cells; over a vertex the two arc labels span everything and all
four sheets meet in a single vertex cell.  Cell counts per base face are
therefore 4, 2, 1 by descending dimension, giving euler characteristic
m - 2m + 4 = 4 - m for every proper coloring.

Orientability is computed two independent ways and must agree: the
coloring uses exactly two colors, and a consistent orientation of the four
sheets propagates across every edge cell.  Every sheet traverses its arcs
in the same base direction, so consistency is 2-colorability of the sheet
adjacency graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .charfuns import CharFunction
from .cycles import CycleColoring
from .errors import ConsistencyError
from .orbit_spaces import FacePoset
from .orbits import UnionFind

Cell = tuple[int, int]  # (base face id, sheet or coset label)


@dataclass(frozen=True)
class IdentificationComplex:
    """A 2-dimensional closed cell complex with labeled cells.

    face_edge_dirs records, slot by slot, whether the 2-cell traverses the
    edge forward (+1) or backward (-1) relative to the edge's own ends.
    """

    vertex_labels: tuple[Cell, ...]
    edge_labels: tuple[Cell, ...]
    face_labels: tuple[Cell, ...]
    edge_ends: tuple[tuple[int, int], ...]
    face_edges: tuple[tuple[int, ...], ...]
    face_edge_dirs: tuple[tuple[int, ...], ...]

    def cell_count(self) -> tuple[int, int, int]:
        return (len(self.vertex_labels), len(self.edge_labels), len(self.face_labels))


def build_small_cover(m: int, coloring: CycleColoring) -> IdentificationComplex:
    """The glued complex over the m-gon for a proper 3-coloring of its arcs.

    Base face ids follow build_polygon(m): arcs 0..m-1, vertices m..2m-1,
    top face 2m.  Sheets are labeled by (Z_2)^2 = {0..3}; the edge cell of
    arc k holding sheet g is the coset {g, g ^ v_k} with v_k the arc's
    vector (color + 1), labeled by its smaller element.
    """
    if m < 3:
        raise ValueError(f"need a polygon with m >= 3 arcs, got {m}")
    if coloring.m != m or coloring.s != 3:
        raise ValueError(
            f"need a 3-color coloring of {m} arcs, got {coloring.s} colors on {coloring.m}")
    vectors = [c + 1 for c in coloring.colors]
    vertex_labels = tuple((m + k, 0) for k in range(m))
    edge_labels = []
    edge_ends = []
    edge_index: dict[Cell, int] = {}
    for k in range(m):
        for rep in sorted({min(g, g ^ vectors[k]) for g in range(4)}):
            edge_index[(k, rep)] = len(edge_labels)
            edge_labels.append((k, rep))
            edge_ends.append((k, (k + 1) % m))
    face_labels = tuple((2 * m, g) for g in range(4))
    face_edges = []
    for g in range(4):
        face_edges.append(tuple(edge_index[(k, min(g, g ^ vectors[k]))] for k in range(m)))
    dirs = tuple((1,) * m for _ in range(4))
    return IdentificationComplex(
        vertex_labels=vertex_labels,
        edge_labels=tuple(edge_labels),
        face_labels=face_labels,
        edge_ends=tuple(edge_ends),
        face_edges=tuple(face_edges),
        face_edge_dirs=dirs,
    )


def euler_of_complex(c: IdentificationComplex) -> int:
    v, e, f = c.cell_count()
    return v - e + f


def connected_components(c: IdentificationComplex) -> int:
    """Components of the incidence graph over all cells."""
    nv, ne, nf = c.cell_count()
    total = nv + ne + nf
    if total == 0:
        return 0
    uf = UnionFind(total)
    for ei, (a, b) in enumerate(c.edge_ends):
        uf.union(nv + ei, a)
        uf.union(nv + ei, b)
    for fi, word in enumerate(c.face_edges):
        for ei in word:
            uf.union(nv + ne + fi, nv + ei)
    return uf.count


def edge_face_incidences(c: IdentificationComplex) -> list[list[tuple[int, int]]]:
    """Per edge, the (face, direction) slots that use it."""
    out: list[list[tuple[int, int]]] = [[] for _ in c.edge_labels]
    for fi, (word, dirs) in enumerate(zip(c.face_edges, c.face_edge_dirs)):
        for ei, d in zip(word, dirs):
            out[ei].append((fi, d))
    return out


def is_closed(c: IdentificationComplex) -> bool:
    """Every edge cell bounds exactly two 2-cell sides."""
    return all(len(inc) == 2 for inc in edge_face_incidences(c))


def orientation_consistent(c: IdentificationComplex) -> bool:
    """Try to orient every 2-cell so shared edges are traversed oppositely.

    Plain sign propagation over the face adjacency graph; the complex must
    be closed.
    """
    if not is_closed(c):
        raise ConsistencyError("orientation check needs a closed complex")
    incidences = edge_face_incidences(c)
    nf = len(c.face_labels)
    sign = [0] * nf
    for start in range(nf):
        if sign[start]:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            fi = stack.pop()
            for ei in c.face_edges[fi]:
                (f1, d1), (f2, d2) = incidences[ei]
                other, do, dm = (f2, d2, d1) if f1 == fi else (f1, d1, d2)
                needed = -sign[fi] * dm * do
                if sign[other] == 0:
                    sign[other] = needed
                    stack.append(other)
                elif sign[other] != needed:
                    return False
    return True


def surface_type(c: IdentificationComplex, coloring: CycleColoring) -> tuple[int, bool]:
    """(euler characteristic, orientable) with both orientability routes compared.

    The two-color criterion and sign propagation must agree; a split is an
    internal inconsistency, not a data error.
    """
    chi = euler_of_complex(c)
    by_colors = len(set(coloring.colors)) == 2
    by_propagation = orientation_consistent(c)
    if by_colors != by_propagation:
        raise ConsistencyError(
            f"orientability checks disagree: colors say {by_colors}, "
            f"propagation says {by_propagation}")
    return (chi, by_propagation)


def orbit_census(p: FacePoset, lam: CharFunction) -> dict[int, int]:
    """Sheet count over each face: 2^n / |subgroup spanned by its facet labels|."""
    from . import gf2

    out: dict[int, int] = {}
    for f in p.faces:
        sel = []
        mask = f.facet_mask
        i = 0
        while mask:
            if mask & 1:
                sel.append(lam.values[i])
            mask >>= 1
            i += 1
        out[f.id] = 1 << (lam.n - gf2.rank(sel, lam.n))
    return out


def disjoint_union_complex(a: IdentificationComplex,
                           b: IdentificationComplex) -> IdentificationComplex:
    av, ae, _ = a.cell_count()
    return IdentificationComplex(
        vertex_labels=a.vertex_labels + b.vertex_labels,
        edge_labels=a.edge_labels + b.edge_labels,
        face_labels=a.face_labels + b.face_labels,
        edge_ends=a.edge_ends + tuple((x + av, y + av) for x, y in b.edge_ends),
        face_edges=a.face_edges + tuple(tuple(e + ae for e in word) for word in b.face_edges),
        face_edge_dirs=a.face_edge_dirs + b.face_edge_dirs,
    )


EMPTY_COMPLEX = IdentificationComplex((), (), (), (), (), ())


def complex_to_text(c: IdentificationComplex) -> str:
    """Plain cell list, one ``dim id boundary-ids`` line per cell."""
    lines = []
    for i in range(len(c.vertex_labels)):
        lines.append(f"0 v{i}")
    for i, (x, y) in enumerate(c.edge_ends):
        lines.append(f"1 e{i} v{x} v{y}")
    for i, word in enumerate(c.face_edges):
        lines.append(f"2 f{i} " + " ".join(f"e{e}" for e in word))
    return "\n".join(lines) + "\n"


def cover_census(m: int, budget: int = 1 << 22) -> dict[tuple[int, bool], int]:
    """Surface types over all proper colorings of the m-gon boundary.

    Every built complex is also checked connected and closed; failures
    raise ConsistencyError since the construction guarantees both.
    """
    from .cycles import enumerate_colorings

    census: dict[tuple[int, bool], int] = {}
    for coloring in enumerate_colorings(m, 3, budget):
        cx = build_small_cover(m, coloring)
        if connected_components(cx) != 1:
            raise ConsistencyError(f"cover of {coloring.colors} is not connected")
        if not is_closed(cx):
            raise ConsistencyError(f"cover of {coloring.colors} is not closed")
        key = surface_type(cx, coloring)
        census[key] = census.get(key, 0) + 1
    return census

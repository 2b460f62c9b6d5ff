"""Euler characteristics of the covered manifold from orbit-space data.

Every face F of the orbit space contributes 2^dim(F) * (chi(F) - chi(bdF))
copies of its interior, so the total is a plain weighted sum over annotated
faces.  In dimension two this collapses to 4*chi(Q) - m for a surface Q
with m boundary vertices, and orientability of the cover is decided by the
boundary coloring using exactly two of the three colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .cycles import CycleColoring
from .orbit_spaces import FacePoset, SurfaceWithBoundary


@dataclass(frozen=True)
class FaceEulerData:
    """Per-face (chi, chi of boundary) pairs keyed by face id."""

    entries: Mapping[int, tuple[int, int]]

    def chi_rel(self, face_id: int) -> int:
        chi, chi_bd = self.entries[face_id]
        return chi - chi_bd


def surface_annotations(p: FacePoset, chi_top: int = 1) -> FaceEulerData:
    """Standard annotations for a 2-dimensional poset.

    Vertices get (1, 0); arcs with endpoints get (1, 2); vertex-free
    boundary circles get (0, 0); every 2-face gets (chi_top, 0), the
    boundary being a union of circles.
    """
    if p.dim != 2:
        raise ValueError("surface annotations need a 2-dimensional poset")
    entries: dict[int, tuple[int, int]] = {}
    vertex_masks = [f.facet_mask for f in p.faces if f.dim == 0]
    for i, fid in enumerate(p.facet_ids):
        ends = sum(1 for mask in vertex_masks if (mask >> i) & 1)
        entries[fid] = (1, ends) if ends else (0, 0)
    for f in p.faces:
        if f.dim == 0:
            entries[f.id] = (1, 0)
        elif f.dim == 2:
            entries[f.id] = (chi_top, 0)
    return FaceEulerData(entries)


def euler_total(p: FacePoset, data: FaceEulerData) -> int:
    """Sum of 2^dim(F) * (chi(F) - chi(bdF)) over all faces of p."""
    total = 0
    for f in p.faces:
        if f.id not in data.entries:
            raise ValueError(f"face {f.id} has no euler annotation")
        total += (1 << f.dim) * data.chi_rel(f.id)
    return total


def euler_from_chi(chi_q: int, m: int) -> int:
    """Closed 2-dimensional form: 4*chi(Q) - m for m boundary vertices."""
    return 4 * chi_q - m


def euler_2d(q: SurfaceWithBoundary) -> int:
    return euler_from_chi(q.euler, q.m)


def is_orientable_cover(q: SurfaceWithBoundary, coloring: CycleColoring) -> bool:
    """Orientable iff q is orientable and the boundary uses exactly 2 colors."""
    if q.m < 2:
        raise ValueError("orientability criterion needs a vertexed boundary")
    if coloring.m != q.m or coloring.s != 3:
        raise ValueError(
            f"need a 3-color coloring of the {q.m} boundary arcs, got "
            f"{coloring.s} colors on {coloring.m} arcs")
    return q.orientable and len(set(coloring.colors)) == 2

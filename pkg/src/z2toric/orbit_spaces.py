"""Finite combinatorial models of nice manifolds with corners.

A FacePoset records each face as (id, dimension, bitmask of the facets
containing it).  Facet bit i belongs to the i-th face of dimension n-1 in
id order; the whole space is a face of dimension n with an empty mask.
Niceness (codimension-k faces lie in exactly k facets) is a checkable
property, not a construction invariant, so deliberately broken posets can
be built for testing.

The text format accepted by parse_poset() is one header line ``n <dim>``
followed by one line ``<id> <dim> <facet-mask>`` per face, ids dense from 0,
masks in decimal; non-nice input is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedShapeError


@dataclass(frozen=True)
class Face:
    id: int
    dim: int
    facet_mask: int


@dataclass(frozen=True)
class FacePoset:
    dim: int
    faces: tuple[Face, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        for pos, f in enumerate(self.faces):
            if f.id != pos:
                raise ValueError(f"face ids must be dense and ordered; got {f.id} at {pos}")
            if not 0 <= f.dim <= self.dim:
                raise ValueError(f"face {f.id} has dimension {f.dim} outside 0..{self.dim}")
        nf = self.facet_count
        for f in self.faces:
            if f.facet_mask < 0 or f.facet_mask >> nf:
                raise ValueError(f"face {f.id} references facets beyond the {nf} present")
            if f.dim == self.dim and f.facet_mask:
                raise ValueError(f"top face {f.id} must have an empty facet set")
        for i, fid in enumerate(self.facet_ids):
            if self.faces[fid].facet_mask != 1 << i:
                raise ValueError(f"facet {fid} must carry exactly its own bit {i}")

    @property
    def facet_ids(self) -> tuple[int, ...]:
        """Ids of codimension-one faces, in id order (bit i <-> position i)."""
        return tuple(f.id for f in self.faces if f.dim == self.dim - 1)

    @property
    def facet_count(self) -> int:
        return len(self.facet_ids)

    def vertices(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.dim == 0)

    def has_vertex(self) -> bool:
        return any(f.dim == 0 for f in self.faces)


def check_nice(p: FacePoset) -> bool:
    """True iff every codimension-k face lies in exactly k facets."""
    return all(bin(f.facet_mask).count("1") == p.dim - f.dim for f in p.faces)


def build_polygon(m: int) -> FacePoset:
    """Face poset of an m-gon: m arcs (facets), m vertices, one 2-face.

    Arc k joins vertices k and k+1 (mod m); vertex k sits on arcs k-1 and k.
    """
    if m < 3:
        raise ValueError(f"polygon needs m >= 3 vertices, got {m}")
    faces = [Face(k, 1, 1 << k) for k in range(m)]
    faces += [Face(m + k, 0, (1 << ((k - 1) % m)) | (1 << k)) for k in range(m)]
    faces.append(Face(2 * m, 2, 0))
    return FacePoset(2, tuple(faces))


def build_simplex(n: int) -> FacePoset:
    """Full face lattice of the n-simplex: 2^(n+1) - 1 faces, n+1 facets.

    Facet j is the face omitting vertex j; a face spanned by a vertex set S
    lies in facet j exactly when j is not in S.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"simplex dimension must be in 1..6, got {n}")
    nverts = n + 1
    full = (1 << nverts) - 1

    def facet_mask(vset: int) -> int:
        return full & ~vset  # bit j set when vertex j is omitted

    subsets = [s for s in range(1, 1 << nverts)]
    facets = sorted(s for s in subsets if bin(s).count("1") == n)
    rest = sorted((s for s in subsets if bin(s).count("1") != n),
                  key=lambda s: (-bin(s).count("1"), s))
    faces = []
    for i, s in enumerate(facets + rest):
        faces.append(Face(i, bin(s).count("1") - 1, facet_mask(s)))
    # facet bit positions follow facet id order; remap masks accordingly
    order = {facet_mask(s): idx for idx, s in enumerate(facets)}
    remapped = []
    for f in faces:
        mask = 0
        for j in range(nverts):
            if (f.facet_mask >> j) & 1:
                mask |= 1 << order[facet_mask(full & ~(1 << j))]
        remapped.append(Face(f.id, f.dim, mask))
    return FacePoset(n, tuple(remapped))


def build_prism() -> FacePoset:
    """The 3-dimensional prism: 5 facets, 9 edges, 6 vertices.

    Facets 0, 1, 3 are the squares over the triangle edges AB, CA, BC and
    facets 2, 4 the top and bottom triangles, so facets 0, 1, 2 share the
    top vertex over A.
    """
    square = {frozenset({0, 1}): 0, frozenset({0, 2}): 1, frozenset({1, 2}): 3}
    tri = {0: 2, 1: 4}  # level -> triangle facet (0 = top)
    faces: list[Face] = [Face(i, 2, 1 << i) for i in range(5)]
    nid = 5
    # vertical edges: the two squares at a triangle vertex
    for v in range(3):
        mask = (1 << square[frozenset({v, (v + 1) % 3})]) | (1 << square[frozenset({v, (v + 2) % 3})])
        faces.append(Face(nid, 1, mask))
        nid += 1
    # horizontal edges: one square and one triangle
    for e in (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})):
        for level in (0, 1):
            faces.append(Face(nid, 1, (1 << square[e]) | (1 << tri[level])))
            nid += 1
    # vertices: two squares and one triangle
    for v in range(3):
        for level in (0, 1):
            mask = ((1 << square[frozenset({v, (v + 1) % 3})])
                    | (1 << square[frozenset({v, (v + 2) % 3})])
                    | (1 << tri[level]))
            faces.append(Face(nid, 0, mask))
            nid += 1
    faces.append(Face(nid, 3, 0))
    return FacePoset(3, tuple(faces))


def build_cylinder() -> FacePoset:
    """S^1 x I: two vertex-free boundary circles around a single 2-face."""
    faces = (Face(0, 1, 1), Face(1, 1, 2), Face(2, 2, 0))
    return FacePoset(2, faces)


@dataclass(frozen=True)
class SurfaceWithBoundary:
    """A compact surface with one boundary circle carrying m vertices.

    genus is the orientable genus when orientable, the cross-cap count
    otherwise; m is 0 (vertex-free boundary) or at least 2.
    """

    orientable: bool
    genus: int
    m: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.m == 1 or self.m < 0:
            raise ValueError("a boundary circle has 0 or >= 2 vertices")

    @property
    def euler(self) -> int:
        closed = 2 - 2 * self.genus if self.orientable else 2 - self.genus
        return closed - 1


def surface_poset(q: SurfaceWithBoundary) -> FacePoset:
    """Face poset of q: the boundary arcs/vertices plus one 2-face.

    The interior topology only enters through annotations (see euler);
    combinatorially this is the m-gon boundary, or a single vertex-free
    circle when m = 0.
    """
    if q.m == 0:
        return FacePoset(2, (Face(0, 1, 1), Face(1, 2, 0)))
    m = q.m
    faces = [Face(k, 1, 1 << k) for k in range(m)]
    faces += [Face(m + k, 0, (1 << ((k - 1) % m)) | (1 << k)) for k in range(m)]
    faces.append(Face(2 * m, 2, 0))
    return FacePoset(2, tuple(faces))


def boundary_cycle(p: FacePoset) -> list[int]:
    """The facet ids of a 2-dimensional poset in cyclic adjacency order.

    Requires a single boundary cycle with m >= 2 vertices; anything else
    (vertex-free circles, several components, stray incidences) raises
    UnsupportedShapeError.
    """
    if p.dim != 2:
        raise UnsupportedShapeError("boundary cycle needs a 2-dimensional poset")
    verts = p.vertices()
    if not verts:
        raise UnsupportedShapeError("boundary has no vertices")
    facet_ids = p.facet_ids
    if len(verts) != len(facet_ids):
        raise UnsupportedShapeError("vertex and arc counts differ; not a single cycle")
    by_facet: dict[int, list[Face]] = {i: [] for i in range(len(facet_ids))}
    for v in verts:
        bits = [i for i in range(len(facet_ids)) if (v.facet_mask >> i) & 1]
        if len(bits) != 2:
            raise UnsupportedShapeError(f"vertex {v.id} lies in {len(bits)} arcs, not 2")
        for i in bits:
            by_facet[i].append(v)
    for i, vs in by_facet.items():
        if len(vs) != 2:
            raise UnsupportedShapeError(
                f"arc {facet_ids[i]} has {len(vs)} endpoints, not 2")
    cycle = [0]
    used_vertices = set()
    current = 0
    vertex = by_facet[0][0]
    while True:
        used_vertices.add(vertex.id)
        nxt = next(i for i in range(len(facet_ids))
                   if (vertex.facet_mask >> i) & 1 and i != current)
        if nxt == 0:
            break
        cycle.append(nxt)
        current = nxt
        vertex = next(v for v in by_facet[nxt] if v.id not in used_vertices)
    if len(cycle) != len(facet_ids):
        raise UnsupportedShapeError("boundary is not a single cycle")
    return [facet_ids[i] for i in cycle]


def disjoint_union(p: FacePoset, q: FacePoset) -> FacePoset:
    """Side-by-side union; q's ids and facet bits are shifted past p's."""
    if p.dim != q.dim:
        raise ValueError("components must share the ambient dimension")
    shift_id = len(p.faces)
    shift_bits = p.facet_count
    faces = list(p.faces)
    faces += [Face(f.id + shift_id, f.dim, f.facet_mask << shift_bits) for f in q.faces]
    return FacePoset(p.dim, tuple(faces))


def parse_poset(text: str) -> FacePoset:
    """Read the ``n <dim>`` / ``id dim facet-mask`` format; reject non-nice input."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UnsupportedShapeError("empty poset description")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n":
        raise UnsupportedShapeError(f"expected header 'n <dim>', got {lines[0]!r}")
    dim = int(header[1])
    records = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise UnsupportedShapeError(f"expected 'id dim facet-mask', got {ln!r}")
        records.append((int(parts[0]), int(parts[1]), int(parts[2])))
    records.sort()
    ids = [r[0] for r in records]
    if ids != list(range(len(records))):
        raise UnsupportedShapeError("face ids must be dense from 0")
    try:
        poset = FacePoset(dim, tuple(Face(i, d, m) for i, d, m in records))
    except ValueError as exc:
        raise UnsupportedShapeError(str(exc)) from exc
    if not check_nice(poset):
        raise UnsupportedShapeError("poset is not nice")
    return poset


def poset_to_text(p: FacePoset) -> str:
    lines = [f"n {p.dim}"]
    lines += [f"{f.id} {f.dim} {f.facet_mask}" for f in p.faces]
    return "\n".join(lines) + "\n"

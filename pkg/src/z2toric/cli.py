"""Command-line frontend: closed-form tables, oracle runs, and censuses.

Exit codes: 0 success, 2 usage error, 3 enumeration budget exceeded,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import classify, covers, cycles, euler
from .charfuns import enumerate_char_functions, facet_automorphism_group
from .classify import (H1Model, compute_h, disk_h1, full_census, h1_from_generators,
                       rp2_minus_disk_h1, torus_minus_disk_h1)
from .errors import CapacityError, ConsistencyError, UnsupportedShapeError
from .gf2 import Mat
from .orbit_spaces import (FacePoset, SurfaceWithBoundary, build_polygon, build_prism,
                           build_simplex, build_cylinder, parse_poset, surface_poset)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_MISMATCH = 4

Row = dict[str, Any]


def emit(rows: list[Row], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    if fmt == "csv":
        if not rows:
            return
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        print(buf.getvalue(), end="")
        return
    for row in rows:
        print("  ".join(f"{k}={v}" for k, v in row.items()))


def _parse_space(name: str) -> FacePoset:
    if name == "prism":
        return build_prism()
    if name == "cylinder":
        return build_cylinder()
    kind, _, arg = name.partition(":")
    if kind == "polygon" and arg:
        return build_polygon(int(arg))
    if kind == "simplex" and arg:
        return build_simplex(int(arg))
    if kind == "file" and arg:
        return parse_poset(Path(arg).read_text())
    raise ValueError(f"unknown space {name!r}")


def _parse_h1_file(path: str) -> H1Model:
    """Header ``r <rank>`` then one generator per line as r*r bits, row-major."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines or lines[0].split()[0] != "r":
        raise ValueError("H1 file must start with 'r <rank>'")
    r = int(lines[0].split()[1])
    gens = []
    for ln in lines[1:]:
        if len(ln) != r * r or any(ch not in "01" for ch in ln):
            raise ValueError(f"generator line must be {r * r} bits, got {ln!r}")
        cols = [0] * r
        for i in range(r):
            for j in range(r):
                if ln[i * r + j] == "1":
                    cols[j] |= 1 << i
        gens.append(Mat(r, tuple(cols)))
    return h1_from_generators(r, 2, gens)


def cmd_count(args: argparse.Namespace) -> int:
    last = args.max if args.max is not None else args.m
    if last < args.m:
        raise ValueError("--max must be at least --m")
    rows: list[Row] = []
    for m in range(args.m, last + 1):
        if args.table == "A":
            value = cycles.count_proper_colorings(m, args.s)
        elif args.table == "B":
            value = cycles.count_bracelets(m, args.s)
        else:
            if args.s != 3:
                raise ValueError("table C is defined for 3 colors only")
            value = cycles.count_bracelets_up_to_recoloring(m)
        row: Row = {"table": args.table, "m": m}
        if args.table in ("A", "B"):
            row["s"] = args.s
        row["value"] = value
        rows.append(row)
    emit(rows, args.format)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    m = args.m
    tuples = cycles.enumerate_color_tuples(m, 3, args.budget)
    brute_a = len(tuples)
    brute_b = cycles.burnside_orbit_count(tuples, cycles.dihedral_actions(m))
    brute_c = cycles.burnside_orbit_count(tuples, cycles.combined_actions(m))
    rows = [
        {"table": "A", "m": m, "closed_form": cycles.count_proper_colorings(m),
         "brute_force": brute_a},
        {"table": "B", "m": m, "closed_form": cycles.count_bracelets(m),
         "brute_force": brute_b},
        {"table": "C", "m": m, "closed_form": cycles.count_bracelets_up_to_recoloring(m),
         "brute_force": brute_c},
    ]
    emit(rows, args.format)
    if any(r["closed_form"] != r["brute_force"] for r in rows):
        print("oracle mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_charfns(args: argparse.Namespace) -> int:
    poset = _parse_space(args.space)
    if args.n != poset.dim:
        raise ValueError(f"--n must equal the space dimension {poset.dim}")
    lams = enumerate_char_functions(poset, args.n, args.budget)
    report = full_census(poset, args.n)
    rows: list[Row] = [{
        "space": args.space,
        "n": args.n,
        "labelings": len(lams),
        "gl_orbits": report.equivalence_count,
        "gl_action_free": report.free,
        "aut_order": len(facet_automorphism_group(poset)),
        "double_cosets": report.weak_count,
    }]
    emit(rows, args.format)
    return EXIT_OK


def cmd_euler(args: argparse.Namespace) -> int:
    if args.space is not None:
        if args.space == "cylinder":
            poset, chi_q, m = build_cylinder(), 0, 0
        elif args.space.startswith("polygon:"):
            m = int(args.space.partition(":")[2])
            poset, chi_q = build_polygon(m), 1
        elif args.space.startswith("file:"):
            poset = _parse_space(args.space)
            if poset.dim != 2:
                raise ValueError("euler needs a 2-dimensional space")
            chi_q, m = args.chi, len(poset.vertices())
        else:
            raise ValueError(f"euler supports polygon:m, cylinder or file:, got {args.space!r}")
    else:
        if args.genus is None or args.orientable is None or args.m is None:
            raise ValueError("need --space or all of --genus/--orientable/--m")
        q = SurfaceWithBoundary(args.orientable, args.genus, args.m)
        poset, chi_q, m = surface_poset(q), q.euler, q.m
    via_faces = euler.euler_total(poset, euler.surface_annotations(poset, chi_q))
    via_formula = euler.euler_from_chi(chi_q, m)
    rows: list[Row] = [{
        "chi_orbit_space": chi_q,
        "boundary_vertices": m,
        "chi_via_faces": via_faces,
        "chi_via_formula": via_formula,
    }]
    emit(rows, args.format)
    if via_faces != via_formula:
        print("euler paths disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    if args.surface == "disk":
        h1 = disk_h1()
    elif args.surface == "rp2":
        h1 = rp2_minus_disk_h1()
    elif args.surface == "torus":
        h1 = torus_minus_disk_h1()
    elif args.surface.startswith("custom:"):
        h1 = _parse_h1_file(args.surface.partition(":")[2])
    else:
        raise ValueError(f"unknown surface {args.surface!r}")
    h = compute_h(h1)
    bracelets = cycles.count_bracelets(args.m)
    rows: list[Row] = [{
        "surface": args.surface,
        "m": args.m,
        "h": h,
        "bracelets": bracelets,
        "classes": h * bracelets,
    }]
    emit(rows, args.format)
    return EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    if args.coloring is not None:
        colors = tuple(int(x) for x in args.coloring.split(","))
        coloring = cycles.CycleColoring(colors, 3)
        if coloring.m != args.m:
            raise ValueError(f"{coloring.m} colors given for m={args.m}")
        cx = covers.build_small_cover(args.m, coloring)
        chi, orientable = covers.surface_type(cx, coloring)
        rows: list[Row] = [{
            "m": args.m,
            "coloring": args.coloring,
            "chi": chi,
            "orientable": orientable,
            "components": covers.connected_components(cx),
            "closed": covers.is_closed(cx),
        }]
        emit(rows, args.format)
        return EXIT_OK
    census = covers.cover_census(args.m, args.budget)
    rows = [{"m": args.m, "chi": chi, "orientable": orientable, "count": count}
            for (chi, orientable), count in sorted(census.items())]
    emit(rows, args.format)
    expected_types = 1 if args.m % 2 else 2
    if len(census) != expected_types or any(chi != 4 - args.m for chi, _ in census):
        print("cover census does not match the expected surface types", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2toric",
        description="Counting and census tools for boundary colorings, facet "
                    "labelings and the surfaces glued from them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form tables")
    p.add_argument("table", choices=("A", "B", "C"),
                   help="A: colorings, B: bracelet orbits, C: recoloring classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, default=3, help="number of colors (A and B)")
    p.add_argument("--max", type=int, default=None, help="emit a table for m..max")
    _add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("oracle", help="brute force vs closed forms")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=cycles.DEFAULT_BUDGET)
    _add_format(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("charfns", help="facet labeling census for a space")
    p.add_argument("--space", required=True,
                   help="polygon:m | simplex:n | prism | file:PATH")
    p.add_argument("--n", type=int, required=True, help="coefficient rank")
    p.add_argument("--budget", type=int, default=20, help="max facets to enumerate")
    _add_format(p)
    p.set_defaults(func=cmd_charfns)

    p = sub.add_parser("euler", help="euler characteristic via both formulas")
    p.add_argument("--space", default=None, help="polygon:m | cylinder | file:PATH")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--orientable", type=lambda s: s.lower() in ("1", "true", "yes"),
                   default=None)
    p.add_argument("--m", type=int, default=None, help="boundary vertex count")
    p.add_argument("--chi", type=int, default=1, help="chi of a file: space")
    _add_format(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("classify", help="equivariant class count over a surface")
    p.add_argument("--surface", required=True, help="disk | rp2 | torus | custom:FILE")
    p.add_argument("--m", type=int, required=True, help="boundary vertex count (>= 2)")
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cover", help="build covers over a polygon and report types")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="coloring", default=None,
                   help="comma list of arc colors 0..2; omit for the full census")
    p.add_argument("--budget", type=int, default=cycles.DEFAULT_BUDGET)
    _add_format(p)
    p.set_defaults(func=cmd_cover)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ConsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, UnsupportedShapeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

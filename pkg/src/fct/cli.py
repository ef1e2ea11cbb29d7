"""Command line front end.

Subcommands: ``triangle`` prints one of the three generating
polynomials, ``verify`` runs a single named identity, ``grid`` runs a
whole verification matrix, and ``dump`` emits the raw combinatorial
objects behind the polynomials.  All machine output (JSON, CSV, LaTeX)
is byte-deterministic for fixed arguments.

Exit codes: 0 verified/success, 1 identity violated, 2 usage error,
3 internal invariant failure, 4 resource bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import arrangement, cluster, ehrhart, nonnesting, noncrossing, verify
from .errors import InternalInvariantError, ResourceLimitError, UsageError
from .rootsys import RootSystem, TypeSpec, build_root_system

TRIANGLES = {
    "H": nonnesting.h_triangle,
    "F": cluster.f_triangle,
    "M": noncrossing.m_triangle,
}

ACCEPTANCE_GRID = [
    (name, k)
    for name in ("A1", "A2", "A3", "B2", "B3", "G2")
    for k in (1, 2, 3)
] + [(name, k) for name in ("D4", "F4") for k in (1, 2)]

LATTICE_TYPES = {"A1", "A2", "A3", "B2", "B3", "G2", "F4"}

GRID_COLUMNS = [
    "counts", "h=f", "h=m", "m=f", "y1-nar", "dh", "df", "bij",
    "k1", "dual", "recip", "lattice-nar", "pos", "ceil", "final", "phi",
]


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_bytes(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_triangle(args) -> int:
    rs = build_root_system(TypeSpec.parse(args.type))
    poly = TRIANGLES[args.triangle](rs, args.k)
    if args.json:
        payload = {
            "triangle": args.triangle,
            "type": str(rs.typespec),
            "k": args.k,
            "n": rs.n,
            "monomials": poly.monomial_list(),
        }
        _emit(_json_bytes(payload), args.out)
    elif args.latex:
        _emit(poly.latex() + "\n", args.out)
    else:
        _emit(str(poly) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    rs = build_root_system(TypeSpec.parse(args.type))
    result = verify.run_identity(args.identity, rs, args.k)
    if result.ok:
        if not args.quiet:
            print(result.line())
        return 0
    print(
        _json_bytes(
            {
                "identity": result.identity,
                "type": result.type_name,
                "k": result.k,
                "detail": result.detail,
            }
        ),
        end="",
    )
    return 1


def _applicable(identity: str, rs: RootSystem, k: int) -> bool:
    name = str(rs.typespec)
    small = rs.n <= 3 and k <= 2
    if identity in ("k1", "dual"):
        return k == 1
    if identity == "recip":
        return k == 1
    if identity == "lattice-nar":
        return name in LATTICE_TYPES and k <= 2
    if identity in ("pos", "ceil", "phi"):
        return small
    if identity == "final":
        return k == 1 and rs.n <= 3
    return True


def _grid_cells(suite: str):
    if suite == "acceptance":
        return [(name, k, None) for name, k in ACCEPTANCE_GRID]
    if suite == "extended":
        return [(name, k, None) for name, k in ACCEPTANCE_GRID] + [
            ("E6", 1, ["counts"])
        ]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_grid(args) -> int:
    cells = _grid_cells(args.suite)
    header = ["type", "k", "|NN|", "facets", "|NC|"] + GRID_COLUMNS
    rows = []
    failures = 0
    for name, k, only in cells:
        rs = build_root_system(TypeSpec.parse(name))
        nn = len(nonnesting.enumerate_chains(rs, k))
        facets = cluster.build_complex(rs, k).facet_count
        nc = len(noncrossing.enumerate_delta_sequences(rs, k))
        row = [name, str(k), str(nn), str(facets), str(nc)]
        for identity in GRID_COLUMNS:
            run_it = identity in only if only is not None else _applicable(
                identity, rs, k
            )
            if not run_it:
                row.append("-")
                continue
            result = verify.run_identity(identity, rs, k)
            if result.ok:
                row.append("ok")
            else:
                row.append("FAIL")
                failures += 1
                if not args.quiet:
                    print(result.line(), file=sys.stderr)
        rows.append(row)
    if not args.quiet:
        widths = [
            max(len(header[c]), max(len(r[c]) for r in rows))
            for c in range(len(header))
        ]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(v.ljust(w) for v, w in zip(row, widths)))
        print("grid: %s, %d cell(s), %d failure(s)" % (args.suite, len(rows), failures))
    return 1 if failures else 0


def cmd_dump(args) -> int:
    rs = build_root_system(TypeSpec.parse(args.type))
    k = args.k
    if args.what == "nn":
        payload = nonnesting.chains_to_json(nonnesting.enumerate_chains(rs, k))
        _emit(_json_bytes(payload), args.out)
    elif args.what == "fnumbers":
        _emit(_json_bytes(cluster.fnumbers_json(rs, k)), args.out)
    elif args.what == "nc":
        _emit(_json_bytes(noncrossing.nc_json(rs, k)), args.out)
    elif args.what == "regions":
        _emit(_json_bytes(arrangement.regions_json(rs, k)), args.out)
    else:
        rows = ehrhart.ehrhart_csv_rows(
            rs, range(1, k * ehrhart.simplex_model(rs).h + 2)
        )
        text = "t,i,N\n" + "".join("%d,%d,%d\n" % row for row in rows)
        _emit(text, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fct",
        description="Exact workbench for the three Fuss-Catalan families "
        "of a crystallographic root system.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="print an H-, F-, or M-triangle")
    p_tri.add_argument("triangle", choices=sorted(TRIANGLES))
    p_tri.add_argument("--type", required=True, help="root system type, e.g. B3 or A1xA1")
    p_tri.add_argument("-k", type=int, required=True)
    fmt = p_tri.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--latex", action="store_true")
    p_tri.add_argument("--out", help="write to a file instead of stdout")
    p_tri.set_defaults(func=cmd_triangle)

    p_ver = sub.add_parser("verify", help="check one identity exactly")
    p_ver.add_argument("identity", choices=sorted(verify.IDENTITIES))
    p_ver.add_argument("--type", required=True)
    p_ver.add_argument("-k", type=int, required=True)
    p_ver.add_argument("--quiet", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_grid = sub.add_parser("grid", help="run a verification matrix")
    p_grid.add_argument("suite", choices=["acceptance", "extended"])
    p_grid.add_argument("--quiet", action="store_true")
    p_grid.set_defaults(func=cmd_grid)

    p_dump = sub.add_parser("dump", help="emit raw combinatorial objects")
    p_dump.add_argument(
        "what", choices=["nn", "fnumbers", "nc", "regions", "ehrhart"]
    )
    p_dump.add_argument("--type", required=True)
    p_dump.add_argument("-k", type=int, required=True)
    p_dump.add_argument("--out")
    p_dump.set_defaults(func=cmd_dump)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry() -> None:
    try:
        code = main()
    except UsageError as exc:
        print(f"fct: {exc}", file=sys.stderr)
        code = 2
    except ResourceLimitError as exc:
        print(f"fct: resource bound exceeded: {exc}", file=sys.stderr)
        code = 4
    except InternalInvariantError as exc:
        print(f"fct: internal invariant violated: {exc}", file=sys.stderr)
        code = 3
    sys.exit(code)

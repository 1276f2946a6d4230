"""Command-line entry point.

Commands mirror the library layers: `solids` and `vr` expose construction,
`morse` drives the matching engine over text files, and `verify`, `dodeca`,
`cube`, and `symmetry` run the canned verification pipelines.  Exit code 0
means every check passed, 1 means a verification or search failure, and 2
means a usage, format, or file problem.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cubeseries import expand, face_count, skeleton_betti_top, verify_cube_vr2
from .errors import (
    FormatError,
    ParameterError,
    PreconditionError,
    SearchFailure,
    StructuralError,
    VerificationError,
)
from .formats import (
    parse_chain,
    parse_complex,
    parse_matching,
    parse_simplex_list,
    serialize_chain,
    serialize_complex,
    serialize_matching,
)
from .homology import homology
from .morse import check_matching, find_matching, morse_flow
from .patterns import diameter3_tetrahedra
from .pipelines import symmetry_report, trace_dodecahedron, verify_main_theorem
from .polytopes import (
    SOLIDS,
    build_solid,
    combinatorial_metric,
    distance_table,
    solid_info,
)
from .reports import Report, row
from .simplicial import maximal_simplices, vr_complex


def _default_seed() -> int:
    raw = os.environ.get("RIPSTONE_SEED")
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"RIPSTONE_SEED must be an integer, got {raw!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument(
        "--seed",
        type=int,
        default=None,
        help="search seed (default: RIPSTONE_SEED or 1)",
    )
    seeded.add_argument(
        "--max-attempts", type=int, default=1000, help="seeded restarts before giving up"
    )

    p = argparse.ArgumentParser(
        prog="ripstone",
        description="Vietoris-Rips complexes of platonic solids: build, verify, trace.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    solids = sub.add_parser("solids", help="solid constructions and distances")
    ssub = solids.add_subparsers(dest="action", required=True)
    ssub.add_parser("list", parents=[fmt], help="list the five solids")
    dist = ssub.add_parser("distances", parents=[fmt], help="distance table per hop")
    dist.add_argument("name", choices=SOLIDS)

    vr = sub.add_parser("vr", help="Vietoris-Rips complexes at integer scales")
    vsub = vr.add_subparsers(dest="action", required=True)
    for action, blurb in (("build", "emit the complex"), ("homology", "betti/torsion")):
        q = vsub.add_parser(action, parents=[fmt], help=blurb)
        q.add_argument("name", choices=SOLIDS)
        q.add_argument("--r", type=int, required=True, help="integer scale")

    verify = sub.add_parser("verify", help="canned verification pipelines")
    wsub = verify.add_subparsers(dest="action", required=True)
    wsub.add_parser(
        "main-theorem", parents=[fmt], help="betti tables for all solids and scales"
    )

    dodeca = sub.add_parser("dodeca", help="the ten tetrahedra and the scale-3 trace")
    dsub = dodeca.add_subparsers(dest="action", required=True)
    dsub.add_parser("tetrahedra", parents=[fmt], help="list the ten tetrahedra")
    dsub.add_parser("trace", parents=[fmt, seeded], help="full scale-3 trace")

    morse = sub.add_parser("morse", help="matching engine over text files")
    msub = morse.add_subparsers(dest="action", required=True)
    chk = msub.add_parser("check", parents=[fmt], help="validate and certify a matching")
    chk.add_argument("--complex", required=True, dest="complex_path")
    chk.add_argument("--matching", required=True, dest="matching_path")
    fnd = msub.add_parser("find", parents=[fmt, seeded], help="search for a matching")
    fnd.add_argument("--complex", required=True, dest="complex_path")
    fnd.add_argument("--candidate", dest="candidate_path", help="cells allowed in pairs")
    fnd.add_argument("--critical", dest="critical_path", help="cells forced critical")
    flw = msub.add_parser("flow", parents=[fmt], help="flow a chain to the critical complex")
    flw.add_argument("--complex", required=True, dest="complex_path")
    flw.add_argument("--matching", required=True, dest="matching_path")
    flw.add_argument("--chain", required=True, dest="chain_path")

    cube = sub.add_parser("cube", help="cube-graph series and cross-checks")
    csub = cube.add_subparsers(dest="action", required=True)
    ser = csub.add_parser("series", parents=[fmt], help="main series identity table")
    ser.add_argument("--max-n", type=int, default=10)
    cvf = csub.add_parser("verify", parents=[fmt], help="direct homology cross-check")
    cvf.add_argument("--n", type=int, required=True)

    symmetry = sub.add_parser("symmetry", help="automorphisms and the character check")
    ysub = symmetry.add_subparsers(dest="action", required=True)
    ysub.add_parser("report", parents=[fmt], help="groups, orbits, fixed points")

    return p


def _emit_report(rep: Report, fmt: str) -> int:
    print(rep.to_json() if fmt == "json" else rep.render_table())
    return 0 if rep.passed else 1


def _emit_payload(payload: dict, table: str, fmt: str) -> int:
    if fmt == "json":
        payload = {"schema": 1, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(table, end="" if table.endswith("\n") else "\n")
    return 0


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_solids_list(args) -> int:
    lines = ["name          vertices  degree  diameter"]
    entries = []
    for name in SOLIDS:
        info = solid_info(name)
        lines.append(f"{name:<12}  {info.v:>8}  {info.n:>6}  {info.k:>8}")
        entries.append(
            {"name": name, "vertices": info.v, "degree": info.n, "diameter": info.k}
        )
    return _emit_payload({"solids": entries}, "\n".join(lines), args.format)


def _cmd_solids_distances(args) -> int:
    table = distance_table(args.name)
    lines = [f"{args.name}: hop, euclidean chord, spherical angle (unit circumsphere)"]
    for hop, chord, angle in table.rows:
        lines.append(f"{hop}  {chord!r}  {angle!r}")
    payload = {
        "name": args.name,
        "rows": [
            {"hop": hop, "euclidean": chord, "spherical": angle}
            for hop, chord, angle in table.rows
        ],
    }
    return _emit_payload(payload, "\n".join(lines), args.format)


def _cmd_vr_build(args) -> int:
    c = vr_complex(combinatorial_metric(build_solid(args.name)), args.r)
    payload = {
        "name": args.name,
        "r": args.r,
        "f_vector": list(c.f_vector()),
        "maximal_faces": [list(s) for s in maximal_simplices(c)],
    }
    return _emit_payload(payload, serialize_complex(c), args.format)


def _cmd_vr_homology(args) -> int:
    c = vr_complex(combinatorial_metric(build_solid(args.name)), args.r)
    res = homology(c)
    table = (
        f"{args.name} r={args.r}\n"
        f"betti: {res.betti}\n"
        f"torsion: {res.torsion}"
    )
    payload = {
        "name": args.name,
        "r": args.r,
        "betti": list(res.betti),
        "torsion": [list(t) for t in res.torsion],
    }
    return _emit_payload(payload, table, args.format)


def _cmd_dodeca_tetrahedra(args) -> int:
    tets = diameter3_tetrahedra(combinatorial_metric(build_solid("dodecahedron")))
    table = "\n".join(" ".join(str(v) for v in t) for t in tets)
    return _emit_payload({"tetrahedra": [list(t) for t in tets]}, table, args.format)


def _cmd_morse_check(args) -> int:
    c = parse_complex(_read(args.complex_path))
    m = parse_matching(_read(args.matching_path))
    rep = check_matching(c, m)
    rows = [
        row("matching is valid", True, rep.valid),
        row("matching is acyclic", True, rep.acyclic),
    ]
    for v in rep.violations:
        rows.append(row("violation", "none", v, passed=False))
    if rep.certificate is not None:
        cycle = " -> ".join(str(cell) for cell in rep.certificate)
        rows.append(row("directed cycle", "none", cycle, passed=False))
    if rep.ok():
        rows.append(row("critical cell count", len(rep.critical), len(rep.critical)))
    return _emit_report(Report(title="matching certification", rows=tuple(rows)), args.format)


def _cmd_morse_find(args) -> int:
    c = parse_complex(_read(args.complex_path))
    if args.candidate_path is not None:
        candidate = parse_simplex_list(_read(args.candidate_path))
    else:
        candidate = [s for k in range(c.dim + 1) for s in c.simplices(k)]
    forced = (
        parse_simplex_list(_read(args.critical_path))
        if args.critical_path is not None
        else ()
    )
    seed = _default_seed() if args.seed is None else args.seed
    m = find_matching(
        c, candidate, forced_critical=forced, seed=seed, max_attempts=args.max_attempts
    )
    payload = {
        "seed": seed,
        "pairs": [[list(lo), list(up)] for lo, up in m.pairs],
    }
    return _emit_payload(payload, serialize_matching(m), args.format)


def _cmd_morse_flow(args) -> int:
    c = parse_complex(_read(args.complex_path))
    m = parse_matching(_read(args.matching_path))
    z = parse_chain(_read(args.chain_path))
    flowed = morse_flow(c, m, z)
    table = f"# flow stabilized after {flowed.steps} steps\n" + serialize_chain(
        flowed.chain
    )
    payload = {
        "dimension": flowed.chain.dimension,
        "steps": flowed.steps,
        "terms": [
            [flowed.chain.terms[s], list(s)] for s in sorted(flowed.chain.terms)
        ],
    }
    return _emit_payload(payload, table, args.format)


def _cmd_cube_series(args) -> int:
    if args.max_n < 0:
        raise ParameterError("--max-n must be >= 0")
    main = expand("main", None, args.max_n).coefficients
    rows = []
    for n in range(args.max_n + 1):
        if n >= 2:
            via_counts = 2 * face_count(n, 3) - skeleton_betti_top(n, 2)
            via_next = skeleton_betti_top(n + 1, 3)
        else:
            via_counts = 0
            via_next = 0
        rows.append(
            row(
                f"x^{n} coefficient, count formula and shifted skeleton",
                (main[n], main[n]),
                (via_counts, via_next),
            )
        )
    return _emit_report(
        Report(title=f"cube series identities through n={args.max_n}", rows=tuple(rows)),
        args.format,
    )


def _dispatch(args) -> int:
    cmd = (args.command, getattr(args, "action", None))
    if cmd == ("solids", "list"):
        return _cmd_solids_list(args)
    if cmd == ("solids", "distances"):
        return _cmd_solids_distances(args)
    if cmd == ("vr", "build"):
        return _cmd_vr_build(args)
    if cmd == ("vr", "homology"):
        return _cmd_vr_homology(args)
    if cmd == ("verify", "main-theorem"):
        return _emit_report(verify_main_theorem(), args.format)
    if cmd == ("dodeca", "tetrahedra"):
        return _cmd_dodeca_tetrahedra(args)
    if cmd == ("dodeca", "trace"):
        seed = _default_seed() if args.seed is None else args.seed
        rep = trace_dodecahedron(seed=seed, max_attempts=args.max_attempts)
        return _emit_report(rep, args.format)
    if cmd == ("morse", "check"):
        return _cmd_morse_check(args)
    if cmd == ("morse", "find"):
        return _cmd_morse_find(args)
    if cmd == ("morse", "flow"):
        return _cmd_morse_flow(args)
    if cmd == ("cube", "series"):
        return _cmd_cube_series(args)
    if cmd == ("cube", "verify"):
        return _emit_report(verify_cube_vr2(args.n), args.format)
    if cmd == ("symmetry", "report"):
        return _emit_report(symmetry_report(), args.format)
    raise ParameterError(f"unhandled command {cmd!r}")


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        code = e.code if e.code is not None else 0
        return code if isinstance(code, int) else 2
    try:
        return _dispatch(args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ParameterError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SearchFailure as e:
        print(f"search failed: {e}", file=sys.stderr)
        return 1
    except (VerificationError, PreconditionError, StructuralError) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: build, reflect, verify, distance, tables, search.

Exit codes are a stable contract: 0 means every requested check passed,
1 means a verification failure, 2 means a usage or input error.

Input JSON schema (all commands that take ``--input``):

    {"n": int, "T": [[int], ...], "Z": [[int], ...] (optional),
     "pi": [int] (optional, 1-based), "one_based": bool,
     "m": int (optional), "w": int (optional)}

``Z_expected`` is accepted as an alias for ``Z``. The ``--one-based`` /
``--zero-based`` flags override the file's convention.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass

from . import __version__
from .csoc import (
    NonStrongFamilyWarning,
    build_systematic_x,
    is_csoc,
    memory,
    parity_supports,
)
from .distance import (
    MAX_EXACT_BUDGET,
    MAX_EXACT_MEMORY,
    MAX_WINDOW_BITS,
    certify_dfree,
    column_distance,
    dfree_exact,
    dfree_upper,
)
from .dts import DtsClass, DtsFamily, as_support, classify, from_one_based, search_strong_dts
from .gf2poly import PolyMatrix
from .reflect import build_z, identity_permutation, reflect_family
from .symplectic import check_reflection_symmetry, is_commuting
from .tables import TableRow, rows_for, validate_tables

SEARCH_GUARDS = {"r": 5, "w": 5, "max_scope": 40}


class CliInputError(Exception):
    """Malformed input; reported on stderr with exit code 2."""


@dataclass(slots=True)
class CodeInput:
    family: DtsFamily
    z_family: DtsFamily | None
    pi: tuple[int, ...] | None
    expected_m: int | None
    expected_w: int | None


def _parse_sets(raw, one_based: bool):
    if not isinstance(raw, list) or not raw or not all(
        isinstance(s, list) and s and all(isinstance(e, int) for e in s)
        for s in raw
    ):
        raise CliInputError("set lists must be nonempty lists of integers")
    try:
        if one_based:
            return [from_one_based(s) for s in raw]
        return [as_support(s) for s in raw]
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc


def load_code_input(path: str, one_based_override: bool | None) -> CodeInput:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliInputError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(payload, dict) or "T" not in payload:
        raise CliInputError('input must be a JSON object with a "T" key')

    one_based = payload.get("one_based", True)
    if one_based_override is not None:
        one_based = one_based_override

    try:
        family = classify(_parse_sets(payload["T"], one_based))
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc

    z_raw = payload.get("Z", payload.get("Z_expected"))
    z_family = None
    if z_raw is not None:
        try:
            z_family = classify(_parse_sets(z_raw, one_based))
        except ValueError as exc:
            raise CliInputError(str(exc)) from exc

    pi = payload.get("pi")
    if pi is not None:
        if not isinstance(pi, list) or not all(isinstance(e, int) for e in pi):
            raise CliInputError('"pi" must be a list of 1-based stream indices')
        pi = tuple(pi)

    n = payload.get("n")
    if n is not None and n != family.size + 1:
        raise CliInputError(
            f'"n" is {n} but the family implies n = {family.size + 1}'
        )
    return CodeInput(
        family=family,
        z_family=z_family,
        pi=pi,
        expected_m=payload.get("m"),
        expected_w=payload.get("w"),
    )


def _systematic_from_family(family: DtsFamily) -> tuple[PolyMatrix, list[str]]:
    notes: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NonStrongFamilyWarning)
        x = build_systematic_x(family)
    for item in caught:
        if issubclass(item.category, NonStrongFamilyWarning):
            notes.append(str(item.message))
    return x, notes


def _pair_from_input(code: CodeInput) -> tuple[PolyMatrix, PolyMatrix, list[str]]:
    x, notes = _systematic_from_family(code.family)
    if code.z_family is not None:
        entries = tuple(s.to_poly() for s in code.z_family.sets)
        z = PolyMatrix.row(entries + (x.entry(0, x.ncols - 1),))
    else:
        try:
            z = build_z(x, code.pi)
        except ValueError as exc:
            raise CliInputError(str(exc)) from exc
    return x, z, notes


def run_pair_verification(
    x: PolyMatrix,
    z: PolyMatrix,
    expected_m: int | None = None,
    expected_w: int | None = None,
) -> dict:
    """The full verification suite on a pair; serializable report."""
    violations: list[dict] = []

    fam = classify(list(parity_supports(x)))
    strong = fam.classification >= DtsClass.STRONG
    if not strong:
        violations.append(
            {
                "check": "strong_dts",
                "detail": f"X family classifies as {fam.classification}",
            }
        )

    rep_x = is_csoc(x)
    rep_z = is_csoc(z)
    for name, rep in (("csoc_x", rep_x), ("csoc_z", rep_z)):
        for coll in rep.collisions:
            violations.append({"check": name, "detail": str(coll)})

    mu_x, mu_z = memory(x), memory(z)
    if mu_x != mu_z:
        violations.append(
            {"check": "memory", "detail": f"memory differs: X={mu_x}, Z={mu_z}"}
        )
    if expected_m is not None and mu_x != expected_m:
        violations.append(
            {
                "check": "memory",
                "detail": f"memory {mu_x} does not match declared m={expected_m}",
            }
        )

    comm = is_commuting(x, z)
    for s, i, j in comm.violations:
        violations.append(
            {
                "check": "commutation",
                "detail": f"coefficient of D^{s} at entry ({i},{j}) is 1",
            }
        )

    sym = check_reflection_symmetry(x)
    if not sym.ok:
        s, a, b = sym.counterexample
        violations.append(
            {
                "check": "a7_symmetry",
                "detail": f"C_{s}[{a},{b}] differs from C_{2 * mu_x - s}[{b},{a}]",
            }
        )

    d_free = None
    if rep_x.ok:
        cert = certify_dfree(x)
        d_free = cert.d_free
        if expected_w is not None and d_free != expected_w + 1:
            violations.append(
                {
                    "check": "dfree",
                    "detail": f"d_free {d_free} does not match declared w+1",
                }
            )

    return {
        "commuting": comm.commuting,
        "csoc_x": rep_x.ok,
        "csoc_z": rep_z.ok,
        "strong_dts": strong,
        "memory": {"x": mu_x, "z": mu_z, "equal": mu_x == mu_z},
        "a7_symmetry": sym.ok,
        "d_free": d_free,
        "violations": violations,
    }


def _family_as_one_based(family: DtsFamily) -> list[list[int]]:
    return [[e + 1 for e in s.elements] for s in family.sets]


def cmd_build(args: argparse.Namespace) -> int:
    code = load_code_input(args.input, args.one_based)
    x, z, notes = _pair_from_input(code)
    fam = code.family
    params = {
        "X": str(x),
        "Z": str(z),
        "n": x.ncols,
        "memory": memory(x),
        "w": fam.weight,
        "rate": f"{x.ncols - 2}/{x.ncols}",
        "classification": str(fam.classification),
        "warnings": notes,
    }
    if args.json:
        print(json.dumps(params))
    else:
        for note in notes:
            print(f"warning: {note}")
        print(f"X(D) = {x}")
        print(f"Z(D) = {z}")
        print(
            f"n = {params['n']}, memory = {params['memory']}, "
            f"w = {params['w']}, rate = {params['rate']}"
        )
    return 0


def cmd_reflect(args: argparse.Namespace) -> int:
    code = load_code_input(args.input, args.one_based)
    x, notes = _systematic_from_family(code.family)
    reflected = reflect_family(code.family)
    try:
        z = build_z(x, code.pi)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    payload = {
        "X": str(x),
        "Z": str(z),
        "reflected_zero_based": [list(s.elements) for s in reflected.sets],
        "reflected_one_based": _family_as_one_based(reflected),
        "pi": list(code.pi) if code.pi else list(identity_permutation(x.ncols - 1)),
        "warnings": notes,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for note in notes:
            print(f"warning: {note}")
        print(f"X(D) = {x}")
        print(f"Z(D) = {z}")
        print(f"Z family (0-based): {reflected}")
        one_based = "; ".join(
            "{" + ", ".join(str(e) for e in s) + "}"
            for s in payload["reflected_one_based"]
        )
        print(f"Z family (1-based): {one_based}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    code = load_code_input(args.input, args.one_based)
    x, z, notes = _pair_from_input(code)
    report = run_pair_verification(
        x, z, expected_m=code.expected_m, expected_w=code.expected_w
    )
    report["warnings"] = notes
    ok = not report["violations"]
    if args.json:
        print(json.dumps(report))
    else:
        for note in notes:
            print(f"warning: {note}")
        for key in ("strong_dts", "csoc_x", "csoc_z", "commuting", "a7_symmetry"):
            print(f"{key}: {'ok' if report[key] else 'FAIL'}")
        mem = report["memory"]
        print(
            f"memory: X={mem['x']} Z={mem['z']} "
            f"{'ok' if mem['equal'] else 'FAIL'}"
        )
        if report["d_free"] is not None:
            print(f"d_free: {report['d_free']}")
        for v in report["violations"]:
            print(f"violation [{v['check']}]: {v['detail']}")
        print("verdict: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def cmd_distance(args: argparse.Namespace) -> int:
    code = load_code_input(args.input, args.one_based)
    x, notes = _systematic_from_family(code.family)
    streams = x.ncols - 1
    mu = memory(x)

    if is_csoc(x).ok:
        cert = certify_dfree(x)
        d_free: int | str = cert.d_free
        method = str(cert.method)
        witness = [[t, list(bits)] for t, bits in cert.witness]
    else:
        budget = args.budget if args.budget is not None else MAX_EXACT_BUDGET
        if budget > MAX_EXACT_BUDGET or mu > MAX_EXACT_MEMORY:
            raise CliInputError(
                f"exact search guards exceeded (budget <= {MAX_EXACT_BUDGET}, "
                f"memory <= {MAX_EXACT_MEMORY})"
            )
        found = dfree_exact(x, budget=budget)
        d_free = found if found is not None else f">{budget}"
        method = "exact_search"
        upper = dfree_upper(x)
        witness = (
            [[t, list(bits)] for t, bits in upper.witness]
            if found is not None and upper.d_free == found
            else []
        )

    profile = []
    j = 0
    while j <= 2 * mu and (j + 1) * streams <= MAX_WINDOW_BITS:
        value = column_distance(x, j)
        profile.append(value)
        if isinstance(d_free, int) and value >= d_free:
            break
        j += 1

    payload = {
        "d_free": d_free,
        "method": method,
        "witness": witness,
        "column_distances": profile,
        "warnings": notes,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for note in notes:
            print(f"warning: {note}")
        print(f"d_free = {d_free} ({method})")
        print(f"column distances [0..{len(profile) - 1}]: {profile}")
        if witness:
            rendered = ", ".join(
                f"t={t}:" + "".join(str(b) for b in bits) for t, bits in witness
            )
            print(f"witness: {rendered}")
    return 0


def _check_table_row(row: TableRow) -> dict:
    fam_x = classify([from_one_based(s) for s in row.t_sets])
    checks: dict[str, bool] = {}
    checks["strong_dts"] = fam_x.classification >= DtsClass.STRONG

    x, _ = _systematic_from_family(fam_x)
    checks["memory"] = memory(x) == row.m

    reflected = reflect_family(fam_x)
    checks["reflect_match"] = sorted(
        s.elements for s in reflected.sets
    ) == sorted(row.g_z)

    z = PolyMatrix.from_supports([list(row.g_z) + [(0,)]])
    checks["csoc_x"] = is_csoc(x).ok
    checks["csoc_z"] = is_csoc(z).ok
    checks["commuting"] = is_commuting(x, z).commuting
    checks["a7_symmetry"] = check_reflection_symmetry(x).ok
    checks["dfree"] = (
        checks["csoc_x"] and certify_dfree(x).d_free == row.w + 1
    )
    return checks


def _format_sets(sets) -> str:
    return "; ".join("{" + ", ".join(str(e) for e in s) + "}" for s in sets)


def cmd_tables(args: argparse.Namespace) -> int:
    validate_tables()
    rows = rows_for(args.table, args.row)
    if not rows:
        raise CliInputError("no table rows match the requested filter")

    results = []
    for row in rows:
        checks = _check_table_row(row)
        results.append((row, checks))

    failed = [
        (row, [k for k, ok in checks.items() if not ok])
        for row, checks in results
        if not all(checks.values())
    ]

    if args.json:
        payload = {
            "rows": [
                {
                    "table": row.table_id,
                    "row": row.row_no,
                    "rate": row.rate_label,
                    "m": row.m,
                    "w": row.w,
                    "T": [list(s) for s in row.t_sets],
                    "Z": [list(s) for s in row.z_sets],
                    "g_x": [list(s) for s in row.g_x],
                    "g_z": [list(s) for s in row.g_z],
                    "checks": checks,
                    "pass": all(checks.values()),
                }
                for row, checks in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        print(json.dumps(payload))
    else:
        current_table = None
        for row, checks in results:
            if row.table_id != current_table:
                current_table = row.table_id
                print(f"Table {row.table_id} (rate {row.rate_label})")
            print(
                f"  row {row.row_no}: m={row.m} w={row.w}"
                f"  T: {_format_sets(row.t_sets)}"
                f"  g: {_format_sets(row.g_x)}"
            )
            print(
                f"         Z: {_format_sets(row.z_sets)}"
                f"  g: {_format_sets(row.g_z)}"
            )
            if args.row is not None:
                fam_x = classify([from_one_based(s) for s in row.t_sets])
                x, _ = _systematic_from_family(fam_x)
                z = PolyMatrix.from_supports([list(row.g_z) + [(0,)]])
                print(f"         X(D) = {x}")
                print(f"         Z(D) = {z}")
            verdict = "PASS" if all(checks.values()) else "FAIL"
            detail = " ".join(
                f"{name}={'ok' if ok else 'FAIL'}" for name, ok in checks.items()
            )
            print(f"         {detail} -> {verdict}")
        print(
            f"tables: {len(results)} rows, "
            f"{len(results) - len(failed)} passed, {len(failed)} failed"
        )
        for row, bad in failed:
            print(
                f"FAIL table {row.table_id} row {row.row_no}: {', '.join(bad)}"
            )
    return 0 if not failed else 1


def cmd_search(args: argparse.Namespace) -> int:
    guards = dict(SEARCH_GUARDS)
    override = os.environ.get("QCCDTS_MAX_SEARCH")
    if override is not None:
        try:
            cap = int(override)
        except ValueError:
            raise CliInputError(
                f"QCCDTS_MAX_SEARCH must be an integer, got {override!r}"
            ) from None
        guards = {"r": cap, "w": cap, "max_scope": cap}

    for name, value in (("r", args.r), ("w", args.w), ("max_scope", args.max_scope)):
        if value > guards[name]:
            raise CliInputError(
                f"{name}={value} exceeds guard {guards[name]} "
                "(set QCCDTS_MAX_SEARCH to override)"
            )

    emitted = 0
    try:
        stream = search_strong_dts(args.r, args.w, args.max_scope)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    for family in stream:
        if args.full_strong and family.classification != DtsClass.FULL_STRONG:
            continue
        print(json.dumps(family.to_json()))
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qccdts",
        description=(
            "Construct and certify quantum convolutional stabilizer pairs "
            "from strong difference triangle sets."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="code description JSON file")
        convention = p.add_mutually_exclusive_group()
        convention.add_argument(
            "--one-based", dest="one_based", action="store_true", default=None,
            help="treat input sets as 1-based (table convention)",
        )
        convention.add_argument(
            "--zero-based", dest="one_based", action="store_false",
            help="treat input sets as 0-based exponents",
        )
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_build = sub.add_parser("build", help="build X(D), Z(D) and parameters")
    add_io(p_build)
    p_build.set_defaults(func=cmd_build)

    p_reflect = sub.add_parser("reflect", help="reflect a family into its Z supports")
    add_io(p_reflect)
    p_reflect.set_defaults(func=cmd_reflect)

    p_verify = sub.add_parser("verify", help="run the full certification suite")
    add_io(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_dist = sub.add_parser("distance", help="free distance and column distances")
    add_io(p_dist)
    p_dist.add_argument(
        "--budget", type=int, default=None,
        help="weight budget for the exact search on non-self-orthogonal input",
    )
    p_dist.set_defaults(func=cmd_distance)

    p_tables = sub.add_parser("tables", help="re-verify the built-in catalogue")
    p_tables.add_argument("--table", type=int, default=None, choices=(1, 2, 3))
    p_tables.add_argument("--row", type=int, default=None)
    p_tables.add_argument("--json", action="store_true")
    p_tables.set_defaults(func=cmd_tables)

    p_search = sub.add_parser("search", help="enumerate strong families")
    p_search.add_argument("r", type=int, help="number of sets")
    p_search.add_argument("w", type=int, help="set weight")
    p_search.add_argument("max_scope", type=int, help="largest allowed exponent")
    p_search.add_argument("--full-strong", action="store_true")
    p_search.add_argument("--limit", type=int, default=None)
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

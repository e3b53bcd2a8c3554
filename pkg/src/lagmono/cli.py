"""Command-line front end.

Every subcommand builds a list of records (dicts); the text renderer prints
them one field per line and the --json flag emits the same records as JSON
lines, field for field.  Exit codes: 0 success, 2 validation failure,
3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classify as classify_mod
from .cyclotomic import CyclotomicNumber
from .errors import ParseError, ValidationError
from .floer import (
    BinaryForm,
    clifford_constants,
    reduce_binary_form,
    rk1_classify,
)
from .groups import cycle_notation
from .intlat import IntMat
from .laurent import parse_laurent, torsion_critical_points
from .monodromy import (
    coefficient_partition,
    hamiltonian_monodromy,
    induced_matrix_group,
    partition_bound_check,
    symplectic_monodromy,
)
from .toric import Mode, monotone_normalize, parse_polytope, toric_fiber_data, validate_delzant
from .torussym import TorsionPoint, admissible_group, forced_critical_points, parse_group

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3


_RENDERED_TYPES = (Fraction, TorsionPoint, IntMat, CyclotomicNumber)


def _json_safe(value):
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, _RENDERED_TYPES):
        return str(value)
    return value


def _emit(records: list[dict], as_json: bool) -> None:
    if as_json:
        for record in records:
            print(json.dumps(_json_safe(record), sort_keys=True))
        return
    for record in records:
        kind = record.get("record", "")
        fields = [(k, v) for k, v in record.items() if k != "record"]
        body = "  ".join(f"{k}={_render_text_value(v)}" for k, v in fields)
        print(f"{kind}: {body}" if body else f"{kind}:")


def _render_text_value(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_text_value(v) for v in value) + "]"
    return str(value)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def run_toric(args) -> int:
    mode_override = None
    if args.mode:
        mode_override = Mode.COMPACT if args.mode == "compact" else Mode.VERTEX_REQUIRED
    polytope = parse_polytope(_read(args.polytope), mode_override)
    records = [
        {
            "record": "polytope",
            "dim": polytope.dim,
            "facets": polytope.nfacets,
            "mode": polytope.mode.value,
        }
    ]
    report = validate_delzant(polytope)
    records.append(
        {
            "record": "validation",
            "status": "PASS" if report.ok else "FAIL",
            "failure": report.failure or "",
            "witness": report.witness or "",
            "warnings": list(report.warnings),
        }
    )
    if not report.ok:
        _emit(records, args.json)
        return EXIT_VALIDATION
    try:
        normalized = monotone_normalize(polytope)
    except ValidationError as exc:
        records.append({"record": "monotone", "status": "FAIL", "reason": str(exc)})
        _emit(records, args.json)
        return EXIT_VALIDATION
    records.append(
        {"record": "monotone", "status": "OK", "offset": normalized.offsets[0]}
    )
    data = toric_fiber_data(normalized)
    records.append(
        {
            "record": "relations",
            "rank": data.relations.rank,
            "basis": [list(v) for v in data.relations.basis],
        }
    )
    records.append({"record": "potential", "value": str(data.potential)})
    partition = coefficient_partition(data.relations)
    records.append(
        {
            "record": "partition",
            "blocks": [[i + 1 for i in block] for block in partition.blocks],
            "bound_ok": partition_bound_check(partition, polytope.dim),
        }
    )
    hamiltonian = hamiltonian_monodromy(data)
    symplectic = symplectic_monodromy(data, max_degree=args.cap or 12)
    for name, group in (("hamiltonian", hamiltonian), ("symplectic", symplectic)):
        gens = group.generators()
        mats = induced_matrix_group(data, group)
        records.append(
            {
                "record": name,
                "order": group.order,
                "generators": [cycle_notation(p) for p in gens] or ["id"],
                "induced": [
                    f"{cycle_notation(p)} -> {_induced_matrix_for(data, group.degree, p)}"
                    for p in gens
                ],
                "matrix_group_order": mats.order,
            }
        )
    records.append({"record": "equal_groups", "value": hamiltonian == symplectic})
    _emit(records, args.json)
    return EXIT_OK


def _induced_matrix_for(data, degree: int, perm) -> IntMat:
    from .groups import PermutationGroup

    single = PermutationGroup.from_elements(degree, [tuple(range(degree)), perm])
    mats = induced_matrix_group(data, single)
    non_identity = [g for g in mats.elements if not g.is_identity()]
    return non_identity[0] if non_identity else IntMat.identity(data.polytope.dim)


def run_classify2d(args) -> int:
    records = []
    for verdict in classify_mod.classify_n2():
        record = {
            "record": "class",
            "name": verdict.name,
            "admissible": verdict.admissible,
            "tag": verdict.toric_tag,
        }
        if verdict.witness is not None:
            record["witness_element"] = verdict.witness[0]
            record["witness_point"] = verdict.witness[1]
        if verdict.realized_by:
            record["realized_by"] = list(verdict.realized_by)
        records.append(record)
    _emit(records, args.json)
    return EXIT_OK


def run_filter(args) -> int:
    group = parse_group(_read(args.group), cap=args.cap or 10_000)
    records = [{"record": "group", "dim": group.dim, "order": group.order}]
    forced = forced_critical_points(group)
    records.append(
        {
            "record": "forced_critical_points",
            "count": len(forced.finite_points()),
            "points": list(forced.finite_points()),
        }
    )
    ok, witness = admissible_group(group)
    record = {"record": "admissible", "value": ok}
    if witness is not None:
        record["witness_element"] = witness[0]
        record["witness_point"] = witness[1]
    records.append(record)
    _emit(records, args.json)
    return EXIT_OK


def run_conjecture(args) -> int:
    catalog = classify_mod.ingest_catalog(_read(args.catalog), cap=args.cap or 10_000)
    records = []
    if catalog.q_class:
        records.append(
            {
                "record": "warning",
                "message": "catalog declares rational classes; fixed-point counts "
                "are only integral-class invariants",
            }
        )
    for verdict in classify_mod.conjecture_filter(catalog):
        record = {"record": "verdict", "name": verdict.name, "status": verdict.status}
        if verdict.witness is not None:
            record["witness_element"] = verdict.witness[0]
            record["witness_point"] = verdict.witness[1]
        if verdict.parts is not None:
            record["parts"] = list(verdict.parts)
        records.append(record)
    _emit(records, args.json)
    return EXIT_OK


def run_potential_crit(args) -> int:
    w = parse_laurent(_read(args.potential))
    points = torsion_critical_points(w, args.bound, grid_cap=args.cap or 200_000)
    records = [
        {"record": "potential", "dim": w.dim, "terms": len(w.terms)},
        {"record": "critical_points", "bound": args.bound, "count": len(points), "points": list(points)},
    ]
    _emit(records, args.json)
    return EXIT_OK


def run_potential_rk1(args) -> int:
    w = parse_laurent(_read(args.potential))
    report = rk1_classify(w)
    record = {
        "record": "rk1",
        "case": report.case,
        "group_bound": report.group_bound,
        "shears": report.shears.kind,
    }
    if report.shears.kind == "multiples":
        record["shear_divisors"] = list(report.shears.divisors)
        record["shear_modulus"] = report.shears.modulus()
    for key in ("a", "b", "k", "sign"):
        value = getattr(report, key)
        if value is not None:
            record[key] = value
    if report.flipped:
        record["flipped"] = True
    _emit([record], args.json)
    return EXIT_OK


def run_clifford(args) -> int:
    w = parse_laurent(_read(args.potential))
    try:
        coords = tuple(Fraction(part) for part in args.at.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad point {args.at!r}") from exc
    point = TorsionPoint.make(coords)
    data = clifford_constants(w, point)
    _emit(
        [
            {
                "record": "clifford",
                "point": point,
                "lam": data.lam,
                "mu": data.mu,
                "nu": data.nu,
                "half_integral": data.half_integral,
            }
        ],
        args.json,
    )
    return EXIT_OK


def run_qform(args) -> int:
    form = BinaryForm(args.lam, args.mu2, args.nu)
    canonical, u = reduce_binary_form(form)
    names = {
        BinaryForm(0, 1, 0): "hyperbolic",
        BinaryForm(1, 0, 1): "diag(1,1)",
        BinaryForm(-1, 0, -1): "diag(-1,-1)",
        BinaryForm(1, 0, -1): "diag(1,-1)",
    }
    _emit(
        [
            {
                "record": "qform",
                "canonical": names[canonical],
                "matrix": canonical.matrix(),
                "transform": u,
            }
        ],
        args.json,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagmono",
        description="Exact monodromy computations for monotone Lagrangian torus fibres",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON lines instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    toric = sub.add_parser("toric", help="full pipeline on a polytope file")
    toric.add_argument("polytope")
    toric.add_argument("--mode", choices=["compact", "vertex"], help="override the file mode")
    toric.add_argument("--cap", type=_positive_int, help="setwise search bound")
    toric.set_defaults(func=run_toric)

    classify2d = sub.add_parser("classify2d", help="verdicts for the 13 planar classes")
    classify2d.set_defaults(func=run_classify2d)

    filt = sub.add_parser("filter", help="forced critical points and admissibility")
    filt.add_argument("group")
    filt.add_argument("--cap", type=_positive_int, help="closure cap")
    filt.set_defaults(func=run_filter)

    conjecture = sub.add_parser("conjecture", help="structural filter over a catalog")
    conjecture.add_argument("catalog")
    conjecture.add_argument("--cap", type=_positive_int, help="closure cap")
    conjecture.set_defaults(func=run_conjecture)

    potential = sub.add_parser("potential", help="potential-file analyses")
    potential_sub = potential.add_subparsers(dest="subcommand", required=True)
    crit = potential_sub.add_parser("crit", help="torsion critical points up to a bound")
    crit.add_argument("potential")
    crit.add_argument("--bound", type=_positive_int, required=True)
    crit.add_argument("--cap", type=_positive_int, help="grid size cap")
    crit.set_defaults(func=run_potential_crit)
    rk1 = potential_sub.add_parser("rk1", help="rank-one shape classification")
    rk1.add_argument("potential")
    rk1.set_defaults(func=run_potential_rk1)

    clifford = sub.add_parser("clifford", help="Clifford constants at a torsion point")
    clifford.add_argument("potential")
    clifford.add_argument("--at", required=True, help="comma-separated rational coordinates")
    clifford.set_defaults(func=run_clifford)

    qform = sub.add_parser("qform", help="reduce a binary quadratic form")
    qform.add_argument("lam", type=int)
    qform.add_argument("mu2", type=int)
    qform.add_argument("nu", type=int)
    qform.set_defaults(func=run_qform)
    return parser


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

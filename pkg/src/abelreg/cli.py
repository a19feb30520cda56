"""Command-line surface: JSON input documents, exact JSON or aligned
table output.

Every rational value crosses the interface as a string "p/q" or "n";
there are no floats anywhere.  Exit codes: 0 success, 2 invalid input,
3 computation-level failure, 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction
from typing import Optional

from .errors import AlgebraDataError, ComputationError
from .exactmath import NumberField, Poly
from . import oracle as oracle_mod
from .regularity import classify, reg_cont, reg_cont_bundle, sweep
from .riemannroch import (
    BundleClass,
    bundle_invariants,
    euler_char,
    pnrd_pencil,
    vanishing_ranges,
)
from .wedderburn import (
    AlgebraElement,
    FieldKind,
    InvolutionSpec,
    Quat,
    QuaternionKind,
    SymmetricClass,
    VarietyContext,
    WedderburnComponent,
    build_context,
)

RATIONAL_RE = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")


class DocumentError(AlgebraDataError):
    """Ill-formed input document; the message names the offending path."""


class UsageError(Exception):
    pass


def _parse_rational(value, path: str) -> Fraction:
    if not isinstance(value, str) or not RATIONAL_RE.match(value):
        raise DocumentError(f"{path}: expected a rational string, got {value!r}")
    return Fraction(value)


def _parse_coeff_list(value, path: str) -> list[Fraction]:
    if isinstance(value, str):
        return [_parse_rational(value, path)]
    if not isinstance(value, list):
        raise DocumentError(f"{path}: expected a coefficient list or string")
    return [_parse_rational(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _parse_field_element(field: NumberField, value, path: str):
    coeffs = _parse_coeff_list(value, path)
    if len(coeffs) > field.degree:
        raise DocumentError(
            f"{path}: {len(coeffs)} coordinates exceed the center degree {field.degree}"
        )
    return field.element(coeffs)


def _parse_quat(field: NumberField, value, path: str) -> Quat:
    if not isinstance(value, list) or len(value) != 4:
        raise DocumentError(f"{path}: a quaternion needs 4 coefficient lists")
    x, y, z, w = (
        _parse_field_element(field, v, f"{path}[{i}]") for i, v in enumerate(value)
    )
    return Quat(x, y, z, w)


def _parse_entry(component: WedderburnComponent, value, path: str):
    if isinstance(component.kind, FieldKind):
        return _parse_field_element(component.center, value, path)
    return _parse_quat(component.center, value, path)


def _parse_factor(record, path: str) -> WedderburnComponent:
    if not isinstance(record, dict):
        raise DocumentError(f"{path}: expected an object")
    for key in ("name", "g", "r", "algebra", "albert_type"):
        if key not in record:
            raise DocumentError(f"{path}.{key}: missing")
    algebra = record["algebra"]
    if not isinstance(algebra, dict) or "kind" not in algebra:
        raise DocumentError(f"{path}.algebra.kind: missing")
    min_poly_coeffs = _parse_coeff_list(
        algebra.get("center_min_poly", ["0", "1"]), f"{path}.algebra.center_min_poly"
    )
    try:
        center = NumberField(Poly(min_poly_coeffs))
    except AlgebraDataError as exc:
        raise DocumentError(f"{path}.algebra.center_min_poly: {exc}") from exc
    kind_name = algebra["kind"]
    if kind_name == "field":
        kind = FieldKind()
    elif kind_name == "quaternion":
        if "a" not in algebra or "b" not in algebra:
            raise DocumentError(f"{path}.algebra: quaternion kind needs a and b")
        kind = QuaternionKind(
            _parse_field_element(center, algebra["a"], f"{path}.algebra.a"),
            _parse_field_element(center, algebra["b"], f"{path}.algebra.b"),
        )
    else:
        raise DocumentError(f"{path}.algebra.kind: unknown kind {kind_name!r}")

    inv_rec = record.get("involution") or {}
    if not isinstance(inv_rec, dict):
        raise DocumentError(f"{path}.involution: expected an object")
    base = inv_rec.get(
        "base", "identity" if kind_name == "field" else "quaternion_standard"
    )
    conj_gen_image = None
    if "conj_gen_image" in inv_rec:
        conj_gen_image = _parse_field_element(
            center, inv_rec["conj_gen_image"], f"{path}.involution.conj_gen_image"
        )
    s = None
    if "s" in inv_rec:
        s = _parse_quat(center, inv_rec["s"], f"{path}.involution.s")
    gram_h = None

    component = WedderburnComponent(
        name=record["name"],
        dim_g=int(record["g"]),
        mult_r=int(record["r"]),
        center=center,
        kind=kind,
        albert_type=record["albert_type"],
        involution=InvolutionSpec(base=base, conj_gen_image=conj_gen_image, s=s),
    )
    if "H" in inv_rec:
        h_rows = inv_rec["H"]
        r = component.mult_r
        if not isinstance(h_rows, list) or len(h_rows) != r:
            raise DocumentError(f"{path}.involution.H: expected {r} rows")
        parsed = []
        for i, row in enumerate(h_rows):
            if not isinstance(row, list) or len(row) != r:
                raise DocumentError(f"{path}.involution.H[{i}]: expected {r} entries")
            parsed.append(
                tuple(
                    _parse_entry(component, v, f"{path}.involution.H[{i}][{j}]")
                    for j, v in enumerate(row)
                )
            )
        component.involution.gram_H = tuple(parsed)
    return component


def parse_document(doc) -> tuple[VarietyContext, dict]:
    """Build a validated context; class descriptions stay unparsed."""
    if not isinstance(doc, dict) or "variety" not in doc:
        raise DocumentError("variety: missing")
    variety = doc["variety"]
    if not isinstance(variety, dict) or "factors" not in variety:
        raise DocumentError("variety.factors: missing")
    sqrt_deg_phi = _parse_rational(
        variety.get("sqrt_deg_phi", "1"), "variety.sqrt_deg_phi"
    )
    factors = [
        _parse_factor(rec, f"variety.factors[{i}]")
        for i, rec in enumerate(variety["factors"])
    ]
    ctx = build_context(factors, sqrt_deg_phi)
    classes = doc.get("classes", {})
    if not isinstance(classes, dict):
        raise DocumentError("classes: expected an object")
    return ctx, classes


def parse_class(ctx: VarietyContext, record, path: str) -> SymmetricClass:
    if not isinstance(record, dict):
        raise DocumentError(f"{path}: expected an object of factor blocks")
    blocks = []
    for comp in ctx.components:
        if comp.name not in record:
            raise DocumentError(f"{path}.{comp.name}: missing block")
        rows = record[comp.name]
        r = comp.mult_r
        if not isinstance(rows, list) or len(rows) != r:
            raise DocumentError(f"{path}.{comp.name}: expected {r} rows")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != r:
                raise DocumentError(
                    f"{path}.{comp.name}[{i}]: expected {r} entries"
                )
            parsed.append(
                tuple(
                    _parse_entry(comp, v, f"{path}.{comp.name}[{i}][{j}]")
                    for j, v in enumerate(row)
                )
            )
        blocks.append(AlgebraElement(comp, tuple(parsed)))
    extra = set(record) - {c.name for c in ctx.components}
    if extra:
        raise DocumentError(f"{path}.{sorted(extra)[0]}: unknown factor")
    return SymmetricClass.create(ctx, blocks)


# ----- output ------------------------------------------------------------


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _poly_out(p: Poly) -> dict:
    return {
        "coefficients": [_frac(c) for c in p.coeffs],
        "pretty": p.pretty(),
    }


def _emit(payload: dict, mode: str, out) -> None:
    if mode == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    for line in _table_lines(payload, prefix=""):
        out.write(line + "\n")


def _table_lines(value, prefix: str) -> list[str]:
    if isinstance(value, dict):
        lines = []
        width = max((len(k) for k in value), default=0)
        for key in sorted(value):
            sub = value[key]
            if isinstance(sub, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(_table_lines(sub, prefix + "  "))
            else:
                lines.append(f"{prefix}{key.ljust(width)}  {sub}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{prefix}-")
                lines.extend(_table_lines(item, prefix + "  "))
            else:
                lines.append(f"{prefix}- {item}")
        return lines
    return [f"{prefix}{value}"]


# ----- subcommands -------------------------------------------------------


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _resolve_class(ctx, classes, args) -> SymmetricClass:
    if getattr(args, "class_file", None):
        record = _load_json(args.class_file)
        return parse_class(ctx, record, args.class_file)
    name = getattr(args, "class_name", None)
    if not name:
        raise DocumentError("a class is required: pass --class or --class-file")
    if name not in classes:
        raise DocumentError(f"classes.{name}: not found in the input document")
    return parse_class(ctx, classes[name], f"classes.{name}")


def _cmd_validate(ctx, classes, args) -> dict:
    checked = {
        name: "ok" for name in sorted(classes)
        if parse_class(ctx, classes[name], f"classes.{name}")
    }
    return {
        "status": "ok",
        "g": ctx.g,
        "sqrt_deg_phi": _frac(ctx.sqrt_deg_phi),
        "components": [
            {
                "name": c.name,
                "g": c.dim_g,
                "r": c.mult_r,
                "t": c.t,
                "m": c.m,
                "exponent": c.exponent,
                "albert_type": c.albert_type,
            }
            for c in ctx.components
        ],
        "classes": checked,
    }


def _cmd_chi(ctx, classes, args) -> dict:
    alpha = _resolve_class(ctx, classes, args)
    if args.rank:
        inv = bundle_invariants(ctx, BundleClass.create(alpha, args.rank))
        out = {"chi_bundle": _frac(inv.chi_bundle), "rank": args.rank}
        if inv.ordk is not None:
            out["ordK"] = _frac(inv.ordk)
        return out
    return {"chi": _frac(euler_char(ctx, alpha))}


def _cmd_hilbert(ctx, classes, args) -> dict:
    alpha = _resolve_class(ctx, classes, args)
    data = pnrd_pencil(ctx, alpha)
    out = {
        "pencil": _poly_out(data.q),
        "hilbert_polynomial": _poly_out(data.scaled),
        "profile": {
            "positive": data.profile.positive,
            "zero": data.profile.zero,
            "negative": data.profile.negative,
        },
    }
    if args.rank:
        r = args.rank
        g = ctx.g
        scaled = data.scaled.scale_arg(r) * (Fraction(1, r) ** (g - 1))
        out["hilbert_polynomial"] = _poly_out(scaled)
        out["rank"] = r
    return out


def _cmd_index(ctx, classes, args) -> dict:
    alpha = _resolve_class(ctx, classes, args)
    if args.rank:
        inv = bundle_invariants(ctx, BundleClass.create(alpha, args.rank))
        return {
            "i": inv.index_bundle,
            "dimK": inv.dimk_bundle,
            "neg": ctx.g - inv.index_bundle - inv.dimk_bundle,
            "chi": _frac(inv.chi_bundle),
            "rank": args.rank,
        }
    data = pnrd_pencil(ctx, alpha)
    return {
        "i": data.profile.positive,
        "dimK": data.profile.zero,
        "neg": data.profile.negative,
        "chi": _frac(ctx.sqrt_deg_phi * data.q(0)),
    }


def _cmd_vanishing(ctx, classes, args) -> dict:
    alpha = _resolve_class(ctx, classes, args)
    ranges = vanishing_ranges(ctx, alpha)
    return {
        "vanish_low": sorted(ranges.vanish_low),
        "vanish_high": sorted(ranges.vanish_high),
    }


def _cmd_classify(ctx, classes, args) -> dict:
    alpha = _resolve_class(ctx, classes, args)
    result = classify(ctx, alpha)
    chi = result.chi
    if args.rank:
        inv = bundle_invariants(ctx, BundleClass.create(alpha, args.rank))
        chi = inv.chi_bundle
    out = {
        "label": result.label,
        "chi": _frac(chi),
        "i": result.index_i,
        "dimK": result.dim_k,
        "j": result.weak_index_j,
    }
    if result.gv_note:
        out["gv_note"] = result.gv_note
    if result.branch_note:
        out["branch_note"] = result.branch_note
    return out


def _regcont_payload(ctx, result) -> dict:
    return {
        "m": result.m,
        "g": ctx.g,
        "scan_window": list(result.scan_window),
        "table": [
            {
                "m": e.m,
                "i": e.i,
                "degenerate": e.degenerate,
                "positive_roots": e.positive_roots,
                "satisfied": e.satisfied,
            }
            for e in result.predicate_table
        ],
    }


def _cmd_regcont(ctx, classes, args) -> dict:
    alpha = _resolve_class(ctx, classes, args)
    if args.rank:
        result = reg_cont_bundle(ctx, BundleClass.create(alpha, args.rank))
    else:
        result = reg_cont(ctx, alpha)
    return _regcont_payload(ctx, result)


def _cmd_sweep(ctx, classes, args) -> dict:
    gamma0 = _resolve_class(ctx, classes, args)
    if not args.direction:
        raise DocumentError("sweep requires --direction NAME")
    if args.direction not in classes:
        raise DocumentError(f"classes.{args.direction}: not found")
    delta = parse_class(ctx, classes[args.direction], f"classes.{args.direction}")
    if not args.grid:
        raise DocumentError("sweep requires --grid \"a,b,c\"")
    grid = [
        _parse_rational(part.strip(), f"--grid[{i}]")
        for i, part in enumerate(args.grid.split(","))
    ]
    points = sweep(ctx, gamma0, delta, grid)
    records = []
    segments = []
    for p in points:
        rec = {"s": _frac(p.s)}
        if p.result is not None:
            rec["m"] = p.result.m
            if segments and segments[-1]["m"] == p.result.m:
                segments[-1]["end"] = _frac(p.s)
            else:
                segments.append(
                    {"start": _frac(p.s), "end": _frac(p.s), "m": p.result.m}
                )
        else:
            rec["error"] = p.error
            segments.append({"start": _frac(p.s), "end": _frac(p.s), "m": None})
        records.append(rec)
    return {"points": records, "segments": segments}


def _check_one(ctx, entries, alpha, label, mismatches):
    data = pnrd_pencil(ctx, alpha)
    chi = ctx.sqrt_deg_phi * data.q(0)
    n_plus, n_zero, n_minus = oracle_mod.oracle_inertia(entries)
    ref_chi = oracle_mod.oracle_chi(entries)
    ref_reg = oracle_mod.oracle_regcont(
        entries, oracle_mod.gershgorin_window(entries)
    )
    main_reg = reg_cont(ctx, alpha).m
    if (
        chi != ref_chi
        or data.profile.positive != n_minus
        or data.profile.zero != n_zero
        or main_reg != ref_reg
    ):
        mismatches.append(label)


def _cmd_oracle_check(args) -> dict:
    if args.input:
        # referee the named classes of a split-model document
        doc = _load_json(args.input)
        ctx, classes = parse_document(doc)
        comps = ctx.components
        if (
            len(comps) != 1
            or not isinstance(comps[0].kind, FieldKind)
            or comps[0].center.degree != 1
            or comps[0].dim_g != 1
        ):
            raise DocumentError(
                "oracle-check needs a split-model document: a single field "
                "factor over the rationals with g = 1 per copy"
            )
        mismatches = []
        for name in sorted(classes):
            alpha = parse_class(ctx, classes[name], f"classes.{name}")
            entries = [
                [e.as_rational() for e in row] for row in alpha.blocks[0].matrix
            ]
            _check_one(ctx, entries, alpha, name, mismatches)
        status = "ok" if not mismatches else "mismatch"
        return {
            "status": status,
            "g": ctx.g,
            "checked": len(classes),
            "mismatches": mismatches,
        }
    rng = random.Random(args.seed)
    g = args.g
    ctx = split_context(g)
    mismatches = []
    for trial in range(args.count):
        entries = _random_symmetric(rng, g, args.entry_bound)
        alpha = split_class(ctx, entries)
        _check_one(ctx, entries, alpha, trial, mismatches)
    status = "ok" if not mismatches else "mismatch"
    return {
        "status": status,
        "g": g,
        "checked": args.count,
        "mismatches": mismatches,
    }


def _random_symmetric(rng: random.Random, g: int, bound: int):
    m = [[Fraction(0)] * g for _ in range(g)]
    for i in range(g):
        for j in range(i, g):
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            m[i][j] = m[j][i] = v
    return m


def split_context(g: int) -> VarietyContext:
    comp = WedderburnComponent(
        name="split",
        dim_g=1,
        mult_r=g,
        center=NumberField.rationals(),
        kind=FieldKind(),
        albert_type="I",
    )
    return build_context([comp], 1)


def split_class(ctx: VarietyContext, entries) -> SymmetricClass:
    comp = ctx.components[0]
    matrix = tuple(
        tuple(comp.center.element(Fraction(v)) for v in row) for row in entries
    )
    return SymmetricClass.create(ctx, [AlgebraElement(comp, matrix)])


# ----- driver ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="abelreg", description=__doc__)
    sub = parser.add_subparsers(dest="command")
    compute = (
        "validate", "chi", "hilbert", "index", "vanishing",
        "classify", "regcont", "sweep",
    )
    for name in compute:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True)
        p.add_argument("--class", dest="class_name")
        p.add_argument("--class-file", dest="class_file")
        p.add_argument("--rank", type=int, default=0)
        p.add_argument("--output", choices=("json", "table"), default="table")
        if name == "sweep":
            p.add_argument("--grid")
            p.add_argument("--direction")
    p = sub.add_parser("oracle-check")
    p.add_argument("--input")
    p.add_argument("--g", type=int, default=3)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-bound", type=int, default=10)
    p.add_argument("--output", choices=("json", "table"), default="table")
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "chi": _cmd_chi,
    "hilbert": _cmd_hilbert,
    "index": _cmd_index,
    "vanishing": _cmd_vanishing,
    "classify": _cmd_classify,
    "regcont": _cmd_regcont,
    "sweep": _cmd_sweep,
}


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        parser.print_usage(stderr)
        return 64
    try:
        if args.command == "oracle-check":
            payload = _cmd_oracle_check(args)
            _emit(payload, args.output, stdout)
            return 0 if payload["status"] == "ok" else 3
        doc = _load_json(args.input)
        ctx, classes = parse_document(doc)
        payload = _HANDLERS[args.command](ctx, classes, args)
    except AlgebraDataError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except ComputationError as exc:
        stderr.write(f"error: {exc}\n")
        return 3
    _emit(payload, args.output, stdout)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

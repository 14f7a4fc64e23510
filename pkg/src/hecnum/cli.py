"""Command-line front end.

Subcommands map one-to-one onto the library: lpoly, classnum, points,
trace, jacobi, closed-form, average, verify.  Field sizes are given as
``p`` or ``p^e``; elements as decimal residues, ``g^k`` powers of the
canonical generator, or ``[c0,c1,...]`` coefficient lists.  ``--json``
switches to a single machine-readable document; all big integers render
as exact decimal strings.

Exit codes: 0 ok, 1 domain error, 2 budget/cap exceeded, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .cyclo import identity_report, jacobi_sum
from .errors import HecnumError, VerificationMismatch
from .frobenius import CurveParams, analyze, multiplicative_order, point_count, trace
from .gf import DEFAULT_TABLE_CAP, FieldElem, FieldSpec, build_field, split_prime_power
from .lfunc import closed_form, lpoly_for_curve, trivial_lpoly
from .oracle import OracleBudget, count_points_naive
from .stats import SPLITS, average_class_number, average_trace


@dataclass
class RunConfig:
    command: str
    ell: Optional[int] = None
    q: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    char_base: Optional[str] = None
    t: Optional[str] = None
    split: str = "all"
    kappa_square: Optional[str] = None
    table_cap: int = DEFAULT_TABLE_CAP
    max_elements: int = 1 << 26
    max_pairs: int = 1 << 26
    json_out: bool = False


def parse_field_size(text: str):
    if "^" in text:
        p, _, e = text.partition("^")
        return int(p), int(e)
    return int(text), 1


def parse_element(field: FieldSpec, text: str) -> FieldElem:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        coeffs = [int(c) for c in text[1:-1].split(",") if c.strip()]
        return field.elem(coeffs)
    if text == "g":
        return field.gen
    if text.startswith("g^"):
        return field.exp(int(text[2:]))
    return field.scalar(int(text))


def parse_t_range(text: str):
    if ".." in text:
        lo, _, hi = text.partition("..")
        return range(int(lo), int(hi) + 1)
    t = int(text)
    return range(t, t + 1)


def _field(cfg: RunConfig) -> FieldSpec:
    p, e = parse_field_size(cfg.q)
    return build_field(p, e, table_cap=cfg.table_cap)


def _curve(cfg: RunConfig) -> CurveParams:
    field = _field(cfg)
    return CurveParams(cfg.ell, field, parse_element(field, cfg.a), parse_element(field, cfg.b))


def _char_base(cfg: RunConfig, curve: CurveParams):
    if cfg.char_base is None:
        return None
    m = multiplicative_order(curve.q, curve.ell)
    base_field = curve.base_field
    ext = base_field if m == 1 else build_field(
        base_field.p, base_field.d * m, table_cap=cfg.table_cap)
    return parse_element(ext, cfg.char_base)


def _emit(cfg: RunConfig, doc: dict, text_lines):
    if cfg.json_out:
        print(json.dumps(doc))
    else:
        for line in text_lines:
            print(line)


# ----------------------------------------------------------------------
# subcommand bodies
# ----------------------------------------------------------------------

def cmd_lpoly(cfg: RunConfig) -> int:
    curve = _curve(cfg)
    L = lpoly_for_curve(curve, _char_base(cfg, curve), cap=cfg.table_cap)
    lines = [
        f"ell={cfg.ell} q={curve.q} a={curve.base_field.render(curve.a)} "
        f"b={curve.base_field.render(curve.b)} genus={curve.genus}",
        "c: " + " ".join(str(c) for c in L.coeffs),
        f"class_number: {L.class_number}",
    ]
    return _emit(cfg, L.to_json(), lines) or 0


def cmd_classnum(cfg: RunConfig) -> int:
    curve = _curve(cfg)
    L = lpoly_for_curve(curve, _char_base(cfg, curve), cap=cfg.table_cap)
    doc = {"class_number": str(L.class_number)}
    return _emit(cfg, doc, [str(L.class_number)]) or 0


def cmd_points(cfg: RunConfig) -> int:
    curve = _curve(cfg)
    profile = analyze(curve, _char_base(cfg, curve), cap=cfg.table_cap)
    rows = [(t, point_count(profile, curve, t)) for t in parse_t_range(cfg.t)]
    doc = {"points": [{"t": t, "count": str(n)} for t, n in rows]}
    return _emit(cfg, doc, [f"{t} {n}" for t, n in rows]) or 0


def cmd_trace(cfg: RunConfig) -> int:
    curve = _curve(cfg)
    profile = analyze(curve, _char_base(cfg, curve), cap=cfg.table_cap)
    rows = [(t, trace(profile, curve, t)) for t in parse_t_range(cfg.t)]
    doc = {"traces": [{"t": t, "trace": str(a)} for t, a in rows]}
    return _emit(cfg, doc, [f"{t} {a}" for t, a in rows]) or 0


def cmd_jacobi(cfg: RunConfig) -> int:
    p, e = parse_field_size(cfg.q)
    q = p**e
    m = multiplicative_order(q, cfg.ell)
    field = build_field(p, e * m, table_cap=cfg.table_cap)
    base = parse_element(field, cfg.char_base) if cfg.char_base else None
    J = jacobi_sum(field, cfg.ell, base, cap=cfg.table_cap)
    report = identity_report(J, field.order, cfg.ell)
    doc = {"field": field.size_str(), "jacobi": J.to_json(),
           "identities": report.to_json()}
    lines = [
        f"field F_{field.size_str()}  (m = {m})",
        f"J = {J.text()}",
    ] + [
        f"check {name}: {'pass' if ok else 'FAIL' if ok is not None else 'skipped'}"
        for name, ok, _ in report.checks
    ]
    return _emit(cfg, doc, lines) or 0


def cmd_closed_form(cfg: RunConfig) -> int:
    p, e = parse_field_size(cfg.q)
    ksq = None if cfg.kappa_square is None else cfg.kappa_square == "true"
    L = closed_form(cfg.ell, p**e, ksq, cap=cfg.table_cap)
    lines = [
        "c: " + " ".join(str(c) for c in L.coeffs),
        f"class_number: {L.class_number}",
    ]
    return _emit(cfg, L.to_json(), lines) or 0


def cmd_average(cfg: RunConfig) -> int:
    p, e = parse_field_size(cfg.q)
    q = p**e
    if cfg.t is not None:
        values = {}
        for t in parse_t_range(cfg.t):
            per_split = average_trace(cfg.ell, q, t, cap=cfg.table_cap)
            values[t] = per_split
        doc = {"average_traces": {
            str(t): {s: {"num": str(v.numerator), "den": str(v.denominator)}
                     for s, v in per.items()}
            for t, per in values.items()}}
        lines = []
        for t, per in values.items():
            for s in ("all", "square", "non-square"):
                lines.append(f"t={t} split={s} average_trace={per[s]}")
        return _emit(cfg, doc, lines) or 0
    report = average_class_number(cfg.ell, q, cfg.split, cap=cfg.table_cap)
    lines = [
        f"ell={cfg.ell} q={q} split={cfg.split} family_size={report.family_size}",
        "class_numbers: " + " ".join(str(e.class_number) for e in report.class_table),
        f"average: {report.average}",
    ]
    return _emit(cfg, report.to_json(), lines) or 0


def cmd_verify(cfg: RunConfig) -> int:
    curve = _curve(cfg)
    profile = analyze(curve, _char_base(cfg, curve), cap=cfg.table_cap)
    budget = OracleBudget(cfg.max_elements, cfg.max_pairs)
    rows = []
    mismatches = 0
    for t in parse_t_range(cfg.t):
        formula = point_count(profile, curve, t)
        naive = count_points_naive(curve, t, budget)
        ok = formula == naive
        mismatches += 0 if ok else 1
        rows.append((t, formula, naive, ok))
    doc = {"verify": [
        {"t": t, "formula": str(f), "oracle": str(n), "match": ok}
        for t, f, n, ok in rows]}
    lines = [f"t={t} formula={f} oracle={n} {'ok' if ok else 'MISMATCH'}"
             for t, f, n, ok in rows]
    _emit(cfg, doc, lines)
    if mismatches:
        raise VerificationMismatch(f"{mismatches} point-count mismatches")
    return 0


COMMANDS = {
    "lpoly": cmd_lpoly,
    "classnum": cmd_classnum,
    "points": cmd_points,
    "trace": cmd_trace,
    "jacobi": cmd_jacobi,
    "closed-form": cmd_closed_form,
    "average": cmd_average,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecnum",
        description="Exact L-polynomials, class numbers, point counts and "
                    "averages for curves y^ell = x^2 + ax + b over F_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, curve=False, t=False, split=False, ksq=False):
        sp.add_argument("--ell", type=int, required=True)
        sp.add_argument("--q", required=True, help="field size, p or p^e")
        if curve:
            sp.add_argument("--a", required=True)
            sp.add_argument("--b", required=True)
        sp.add_argument("--char-base", dest="char_base")
        if t:
            sp.add_argument("--t", help="single value or range lo..hi")
        if split:
            sp.add_argument("--split", choices=SPLITS, default="all")
        if ksq:
            sp.add_argument("--kappa-square", dest="kappa_square",
                            choices=("true", "false"))
        sp.add_argument("--table-cap", dest="table_cap", type=int)
        sp.add_argument("--max-elements", dest="max_elements", type=int)
        sp.add_argument("--max-pairs", dest="max_pairs", type=int)
        sp.add_argument("--json", dest="json_out", action="store_true")
        sp.add_argument("--config", help="JSON file of flag defaults")

    common(sub.add_parser("lpoly"), curve=True)
    common(sub.add_parser("classnum"), curve=True)
    common(sub.add_parser("points"), curve=True, t=True)
    common(sub.add_parser("trace"), curve=True, t=True)
    common(sub.add_parser("jacobi"))
    common(sub.add_parser("closed-form"), ksq=True)
    common(sub.add_parser("average"), split=True, t=True)
    common(sub.add_parser("verify"), curve=True, t=True)
    return parser


def config_from_args(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    values = vars(ns)
    config_path = values.pop("config", None)
    if config_path:
        with open(config_path) as fh:
            defaults = json.load(fh)
        for key, val in defaults.items():
            key = key.replace("-", "_")
            if values.get(key) in (None, "all", False) and key in values:
                values[key] = val
    # unset optional flags fall back to the RunConfig defaults
    values = {k: v for k, v in values.items() if v is not None}
    return RunConfig(**values)


def run(argv) -> int:
    cfg = config_from_args(argv)
    return COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except HecnumError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.exit_code


if __name__ == "__main__":
    sys.exit(main())

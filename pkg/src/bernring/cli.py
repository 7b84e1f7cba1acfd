"""Command-line front end.

Subcommands::

    bern num INDEX            classical Bernoulli numbers
    bern num-order N INDEX    numbers of higher order
    bern poly INDEX [--at x]  Bernoulli polynomial, optionally evaluated
    stirling N K              Stirling numbers of the second kind
    pf g M N                  partial-fraction g-polynomials
    pf hf K L N               partial-fraction h/f pair
    reduce product EXPR       exact product reduction of an element expression
    verify NAME --<param> ... identity verification over parameter grids
    selftest [--json]         the full acceptance suite

INDEX arguments accept either a single integer or an inclusive range ``A..B``.
Rational arguments are ``p/q`` strings; list-valued flags take comma-separated
values.  Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
All rationals are emitted as exact ``p/q`` strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

from .elements import Atom, BElement
from .exprparse import ExprError, parse_element
from .identities import IDENTITY_REGISTRY, IdentityReport, _latex_rational
from .partfrac import g_pair, h_f
from .polys import Poly, format_poly
from .reduction import DCombination, reduce_to_first_order, stirling
from .series import bernoulli_number, bernoulli_number_order, bernoulli_poly_value, bernoulli_polynomial
from .weyl import WeylOp


class UsageError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {text!r}") from exc


def _parse_index_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError as exc:
            raise UsageError(f"malformed range {text!r}") from exc
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError as exc:
        raise UsageError(f"malformed integer {text!r}") from exc


def _parse_param_values(text: str) -> list[Fraction]:
    values: list[Fraction] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            values.extend(Fraction(i) for i in _parse_index_range(chunk))
        else:
            values.append(_parse_rational(chunk))
    return values


# -- LaTeX rendering (presentation only; pinned by golden tests) -----------------


def _latex_poly(p: Poly, var: str = "X") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = _latex_rational(c)
        else:
            mag = "" if abs(c) == 1 else _latex_rational(abs(c))
            power = var if i == 1 else f"{var}^{{{i}}}"
            body = f"{mag}{power}"
            if c < 0:
                body = "-" + body
        if parts and not body.startswith("-"):
            parts.append("+ " + body)
        elif parts:
            parts.append("- " + body[1:])
        else:
            parts.append(body)
    return " ".join(parts)


def _latex_scalar_times_t(value: Fraction) -> str:
    if value == 1:
        return "T"
    return f"{_latex_rational(value)}T"


def _latex_atom(at: Atom) -> str:
    bits = []
    if at.m == 1:
        bits.append("T")
    elif at.m != 0:
        bits.append(f"T^{{{at.m}}}")
    if at.n >= 1:
        base = "B" if at.b == 1 else f"B({_latex_scalar_times_t(at.b)})"
        bits.append(base if at.n == 1 else f"{base}^{{{at.n}}}")
    if at.a != 0:
        bits.append(f"e^{{{_latex_scalar_times_t(at.a)}}}")
    return "".join(bits) if bits else "1"


def _latex_element(el: BElement) -> str:
    if not el.terms:
        return "0"
    parts = []
    for at, c in el.atoms():
        body = _latex_atom(at)
        mag = _latex_rational(abs(c)) if (abs(c) != 1 or body == "1") else ""
        text = f"{mag}{body}" if body != "1" else mag
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


def _latex_weyl(op: WeylOp) -> str:
    if op.is_zero():
        return "0"
    parts = []
    for k in sorted(op.parts):
        f = op.parts[k]
        dpart = "" if k == 0 else ("\\frac{d}{dT}" if k == 1 else f"\\frac{{d^{{{k}}}}}{{dT^{{{k}}}}}")
        nonzero = [c for c in f.coeffs if c != 0]
        if k == 0:
            body = _latex_poly(f, var="T")
        elif f == Poly.one():
            body = dpart
        elif len(nonzero) == 1:
            body = _latex_poly(f, var="T") + dpart
        else:
            body = f"\\left({_latex_poly(f, var='T')}\\right){dpart}"
        if parts and not body.startswith("-"):
            parts.append("+ " + body)
        elif parts:
            parts.append("- " + body[1:])
        else:
            parts.append(body)
    return " ".join(parts)


def _latex_combination(dc: DCombination) -> str:
    if not dc.entries:
        return "0"
    parts = []
    for gen in sorted(dc.entries, key=lambda g: g.key()):
        parts.append(f"\\left({_latex_weyl(dc.entries[gen])}\\right)\\!\\left({_latex_atom(gen)}\\right)")
    return " + ".join(parts)


# -- JSON rendering ---------------------------------------------------------------


def _atom_json(at: Atom, coeff: Fraction) -> dict:
    return {"coeff": str(coeff), "m": at.m, "n": at.n, "b": str(at.b), "a": str(at.a)}


def _element_json(el: BElement) -> dict:
    return {"text": el.render(), "atoms": [_atom_json(at, c) for at, c in el.atoms()]}


def _weyl_json(op: WeylOp) -> list[dict]:
    return [
        {"order": k, "coeffs": [str(c) for c in op.parts[k].coeffs]}
        for k in sorted(op.parts)
    ]


def _combination_json(dc: DCombination) -> list[dict]:
    out = []
    for gen in sorted(dc.entries, key=lambda g: g.key()):
        entry = _atom_json(gen, Fraction(1))
        del entry["coeff"]
        entry["operator"] = _weyl_json(dc.entries[gen])
        out.append(entry)
    return out


# -- subcommand implementations ----------------------------------------------------


def _cmd_bern(args, out: list[str]) -> int:
    if args.kind == "num":
        values = [bernoulli_number(i) for i in _parse_index_range(args.index)]
    elif args.kind == "num-order":
        order = int(args.order_n)
        values = [bernoulli_number_order(order, i) for i in _parse_index_range(args.index)]
    else:  # poly
        indices = _parse_index_range(args.index)
        if args.at is not None:
            point = _parse_rational(args.at)
            values = [bernoulli_poly_value(1, i, point) for i in indices]
        else:
            polys = [bernoulli_polynomial(i) for i in indices]
            if args.format == "json":
                out.append(json.dumps([[str(c) for c in p.coeffs] for p in polys]))
            elif args.format == "latex":
                out.extend(_latex_poly(p) for p in polys)
            else:
                out.extend(format_poly(p) for p in polys)
            return 0
    if args.format == "json":
        out.append(json.dumps([str(v) for v in values]))
    elif args.format == "latex":
        out.extend(_latex_rational(v) for v in values)
    else:
        out.extend(str(v) for v in values)
    return 0


def _cmd_stirling(args, out: list[str]) -> int:
    value = stirling(int(args.n), int(args.k))
    if args.format == "json":
        out.append(json.dumps({"n": int(args.n), "k": int(args.k), "value": str(value)}))
    else:
        out.append(str(value))
    return 0


def _cmd_pf(args, out: list[str]) -> int:
    if args.kind == "g":
        pair = g_pair(int(args.m), int(args.n))
        items = [
            ("g_mn", f"g_{{{pair.m},{pair.n}}}", pair.g_mn),
            ("g_nm", f"g_{{{pair.n},{pair.m}}}", pair.g_nm),
        ]
        meta = {"m": pair.m, "n": pair.n, "ell": pair.ell}
    else:
        pair = h_f(int(args.k), int(args.l), int(args.n))
        items = [
            ("h", f"h^{{({pair.k})}}_{{{pair.ell},{pair.n}}}", pair.h),
            ("f", f"f^{{({pair.k})}}_{{{pair.ell},{pair.n}}}", pair.f),
        ]
        meta = {"k": pair.k, "ell": pair.ell, "n": pair.n}
    if args.format == "json":
        payload = dict(meta)
        for key, _, poly in items:
            payload[key] = [str(c) for c in poly.coeffs]
        out.append(json.dumps(payload))
    elif args.format == "latex":
        out.extend(f"{name} = {_latex_poly(p)}" for _, name, p in items)
    else:
        out.extend(f"{name} = {format_poly(p)}" for _, name, p in items)
    return 0


def _cmd_reduce(args, out: list[str]) -> int:
    element = parse_element(args.expr)
    fmt = args.emit or args.format
    if not args.to_first_order:
        if fmt == "json":
            out.append(json.dumps(_element_json(element)))
        elif fmt == "latex":
            out.append(_latex_element(element))
        else:
            out.append(element.render())
        return 0
    combo = reduce_to_first_order(element)
    if not combo.semantic_element().equals(element):
        raise RuntimeError("internal error: first-order combination is not equal to its source")
    if fmt == "json":
        out.append(json.dumps({"element": _element_json(element), "first_order": _combination_json(combo)}))
    elif fmt == "latex":
        out.append(_latex_combination(combo))
    else:
        out.append(combo.render())
    return 0


def _cmd_verify(args, out: list[str]) -> int:
    name = args.name
    if name not in IDENTITY_REGISTRY:
        known = ", ".join(sorted(IDENTITY_REGISTRY))
        raise UsageError(f"unknown identity {name!r}; known: {known}")
    fn, param_names = IDENTITY_REGISTRY[name]
    grids: list[list[Fraction]] = []
    for pname in param_names:
        raw = getattr(args, pname if pname != "N" else "cap_n", None)
        if raw is None:
            raise UsageError(f"identity {name!r} needs --{pname}")
        grids.append(_parse_param_values(raw))
    cases: list[tuple[Fraction, ...]] = [()]
    for grid in grids:
        cases = [prefix + (v,) for prefix in cases for v in grid]

    def _as_int(pname: str, v: Fraction) -> int:
        if v.denominator != 1:
            raise UsageError(f"parameter --{pname} must be an integer, got {v}")
        return int(v)

    def run(case: tuple[Fraction, ...]) -> IdentityReport:
        call_args = [
            _as_int(pname, v) if pname in ("m", "n", "i", "k", "N") else v
            for pname, v in zip(param_names, case)
        ]
        if name == "f-derivative" and args.order is not None:
            return fn(*call_args, order=args.order)
        return fn(*call_args)

    if args.jobs and args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run, cases))
    else:
        reports = [run(case) for case in cases]
    for report in reports:
        if args.format == "json":
            out.append(json.dumps(report.to_json_dict()))
        elif args.format == "latex":
            out.append(report.latex)
        else:
            params = ", ".join(f"{k}={v}" for k, v in report.params)
            status = "ok" if report.verified else "FAILED"
            out.append(f"{report.name}({params}): {report.lhs_value} = {report.rhs_value} [{status}]")
    return 0 if all(r.verified for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernring",
        description="Exact computer algebra for Bernoulli-type series: reductions and identity verification.",
    )
    parser.add_argument("--format", choices=("text", "json", "latex"), default="text")
    parser.add_argument("--order", type=int, default=None, help="series bound override")
    parser.add_argument("--jobs", type=int, default=1, help="worker pool size for verification grids")
    parser.add_argument("--out", default=None, help="write output to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    bern = sub.add_parser("bern", help="Bernoulli numbers and polynomials")
    bern_sub = bern.add_subparsers(dest="kind", required=True)
    p = bern_sub.add_parser("num")
    p.add_argument("index", help="index or range A..B")
    p = bern_sub.add_parser("num-order")
    p.add_argument("order_n", help="the order n")
    p.add_argument("index", help="index or range A..B")
    p = bern_sub.add_parser("poly")
    p.add_argument("index", help="index or range A..B")
    p.add_argument("--at", default=None, help="evaluate at an exact rational")

    p = sub.add_parser("stirling", help="Stirling numbers of the second kind")
    p.add_argument("n")
    p.add_argument("k")

    pf = sub.add_parser("pf", help="partial-fraction decomposition polynomials")
    pf_sub = pf.add_subparsers(dest="kind", required=True)
    p = pf_sub.add_parser("g")
    p.add_argument("m")
    p.add_argument("n")
    p = pf_sub.add_parser("hf")
    p.add_argument("k")
    p.add_argument("l")
    p.add_argument("n")

    reduce_p = sub.add_parser("reduce", help="reduce element expressions")
    reduce_sub = reduce_p.add_subparsers(dest="kind", required=True)
    p = reduce_sub.add_parser("product")
    p.add_argument("expr")
    p.add_argument("--to-first-order", action="store_true")
    p.add_argument("--emit", choices=("text", "json", "latex"), default=None)

    p = sub.add_parser("verify", help="verify a named identity over a parameter grid")
    p.add_argument("name")
    p.add_argument("--m")
    p.add_argument("--n")
    p.add_argument("--k")
    p.add_argument("--i")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--N", dest="cap_n")

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--json", action="store_true")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out: list[str] = []
    if args.command == "selftest":
        from .selftest import selftest_main

        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                return selftest_main(json_output=args.json or args.format == "json", stream=fh)
        return selftest_main(json_output=args.json or args.format == "json")
    try:
        if args.command == "bern":
            code = _cmd_bern(args, out)
        elif args.command == "stirling":
            code = _cmd_stirling(args, out)
        elif args.command == "pf":
            code = _cmd_pf(args, out)
        elif args.command == "reduce":
            code = _cmd_reduce(args, out)
        elif args.command == "verify":
            code = _cmd_verify(args, out)
        else:  # pragma: no cover - argparse enforces the choices
            raise UsageError(f"unknown command {args.command!r}")
    except ExprError as exc:
        print(exc.diagnostic(), file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(out) + ("\n" if out else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

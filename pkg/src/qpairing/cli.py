"""Command-line front end.

Every command builds a result dictionary (command echo, values, provenance,
notes) which is rendered as ``key: value`` lines, as JSON, or, for pairing
matrices, as a LaTeX ``pmatrix``.  Exit codes: 0 on success, 2 for invalid
input, 3 when a mathematical contract check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .errors import ContractViolation, ValidationError
from .exactalg import LinearForm, LocalizationTerm, format_scalar, parse_rational
from .expr import parse_expression
from .ihring import NAMES, determinant, format_monomial, ih_pairing_matrix, semistable_ring, vm_basis
from .models import ActionModel, _form_from_json, _poly_from_json, builtin_model, dump_model, load_model
from .pairing import (
    pair_abelianized,
    pair_ih,
    pair_regular,
    partial_desing_breakdown,
)
from .residue import Chamber, Perturbation, jk_residue
from .stratify import (
    StratificationSpec,
    desing_series,
    equivariant_series_total,
    ip_series,
    quotient_top_degree,
    semistable_series,
)
from .witten import witten_i0

FORMATS = ("plain", "json", "latex")

PROVENANCE = {
    "regular:u1": "residue formula for a circle action at a regular value: -n0 res_0 sum_{mu(F)>0} h_F",
    "regular:su2": "residue formula for SU(2) at a regular value: (n0/2) res_0 (2X)^2 sum_{mu(F)>0} h_F",
    "regular:torus": "Jeffrey-Kirwan residue over t, scaled by the model's residue_scale",
    "ih": "IH pairing as Martin factor times the abelianized residue in the chamber next to 0",
    "abelian": "abelianized pairing of eta*D^2 at a regular level: -n0T res_0 sum_{mu(F)>level} h_F",
    "desing": "partial desingularization: chamber value next to 0 plus residues at exceptional fixed points",
    "ih:betti": "graded dimensions of V_M, the truncation of standard monomials along the zero-weight stratum",
    "ih:vm": "standard monomials retained in V_M",
    "ih:matrix": "coefficients of tau in normal forms of products of V_M basis monomials",
    "ih:groebner": "reduced lex Groebner basis (xi > rho) of the unstable stratum classes",
    "poincare": "rational-function formulas for the equivariantly perfect stratification",
    "witten": "Gaussian integration of the inner residue over the cones of fixed points with mu >= 0",
    "residue": "Jeffrey-Kirwan residue, ties on cone walls broken by the perturbation rho",
}


def _rationals(text: str) -> list[Fraction]:
    try:
        return [parse_rational(v.strip()) for v in text.split(",") if v.strip()]
    except ValidationError as exc:
        raise ValidationError(f"cannot read rational list {text!r}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ValidationError(f"cannot read integer list {text!r}") from exc


def _load(args) -> ActionModel:
    if args.builtin:
        return builtin_model(args.builtin)
    return load_model(Path(args.model))


def _render_plain_value(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            return "; ".join(", ".join(map(str, row)) for row in value)
        return ", ".join(map(str, value))
    if isinstance(value, dict):
        inner = (f"{k}={{{', '.join(f'{a}: {b}' for a, b in v.items())}}}" if isinstance(v, dict)
                 else f"{k}={_render_plain_value(v)}" for k, v in value.items())
        return "; ".join(inner)
    return str(value)


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2, sort_keys=False)
    if fmt == "latex":
        matrix = result.get("latex")
        if matrix is None:
            raise ValidationError("LaTeX output is only available for pairing matrices")
        return matrix
    lines = [f"command: {result['command']}"]
    for key, value in result["values"].items():
        lines.append(f"{key}: {_render_plain_value(value)}")
    lines.append(f"provenance: {result['provenance']}")
    for note in result.get("notes", []):
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _result(command: str, values: dict, provenance: str, notes=()) -> dict:
    return {"command": command, "values": values, "provenance": provenance, "notes": list(notes)}


def _latex_scalar(x) -> str:
    s = format_scalar(x)
    if "/" in s and "i" not in s:
        sign = "-" if s.startswith("-") else ""
        num, den = s.lstrip("-").split("/")
        return f"{sign}\\frac{{{num}}}{{{den}}}"
    return s


def cmd_pair(args, command: str) -> dict:
    model = _load(args)
    if args.dump_model:
        return {"dump": dump_model(model)}
    eta = parse_expression(args.eta, model.generators)
    notes = []
    if args.mode == "regular":
        value = pair_regular(model, eta)
        values = {"value": format_scalar(value)}
        prov = PROVENANCE[f"regular:{model.group}"]
    elif args.mode == "ih":
        beta = parse_expression(args.beta, model.generators)
        values = {"value": format_scalar(pair_ih(model, eta, beta))}
        prov = PROVENANCE["ih"]
    elif args.mode == "abelian":
        if args.shift is None:
            raise ValidationError("abelian mode needs --shift")
        shift = _rationals(args.shift)
        level = shift[0] if model.rank == 1 and len(shift) == 1 else LinearForm(tuple(shift))
        values = {"value": format_scalar(pair_abelianized(model, eta, level)),
                  "level": ",".join(format_scalar(v) for v in shift)}
        prov = PROVENANCE["abelian"]
    else:
        b = partial_desing_breakdown(model, eta)
        values = {
            "value": format_scalar(b.total),
            "chamber_value": format_scalar(b.chamber_value),
            "correction": format_scalar(b.correction),
            "level": format_scalar(b.level),
        }
        if not b.correction:
            notes.append("correction residue = 0")
        prov = PROVENANCE["desing"]
    return _result(command, values, prov, notes)


def cmd_ih(args, command: str) -> dict:
    weights = _ints(args.weights)
    what = args.what
    latex = None
    if what == "betti":
        vm = vm_basis(weights)
        values = {"dimensions": [str(d) for d in vm.dimensions],
                  "degrees": [str(d) for d in range(0, vm.top_degree + 1, 2)]}
        prov = PROVENANCE["ih:betti"]
    elif what == "vm":
        vm = vm_basis(weights)
        values = {f"degree {d}": [format_monomial(m) for m in monos] or ["-"]
                  for d, monos in sorted(vm.per_degree.items())}
        values["tau"] = format_monomial(vm.tau)
        prov = PROVENANCE["ih:vm"]
    elif what == "groebner":
        pres = semistable_ring(weights)
        values = {"basis": [g.format(NAMES) for g in pres.groebner]}
        prov = PROVENANCE["ih:groebner"]
    elif what.startswith("matrix:"):
        try:
            d = int(what.split(":", 1)[1])
        except ValueError as exc:
            raise ValidationError(f"bad matrix degree in {what!r}") from exc
        vm = vm_basis(weights)
        mat = ih_pairing_matrix(weights, d)
        values = {
            "rows": [format_monomial(m) for m in vm.per_degree[d]],
            "columns": [format_monomial(m) for m in vm.per_degree[vm.top_degree - d]],
            "matrix": [[format_scalar(x) for x in row] for row in mat],
        }
        if len(mat) == len(mat[0] if mat else []):
            values["determinant"] = format_scalar(determinant(mat))
        body = " \\\\\n".join(" & ".join(_latex_scalar(x) for x in row) for row in mat)
        latex = (f"% rows: {', '.join(values['rows'])}\n% columns: {', '.join(values['columns'])}\n"
                 f"\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}")
        prov = PROVENANCE["ih:matrix"]
    else:
        raise ValidationError(f"unknown --what {what!r}; use betti, vm, groebner or matrix:d")
    out = _result(command, values, prov)
    if latex is not None:
        out["latex"] = latex
    return out


def cmd_poincare(args, command: str) -> dict:
    spec = StratificationSpec(args.family, args.n, args.bound)
    which = args.which
    notes = []
    if which == "total":
        series = equivariant_series_total(spec)
    elif which == "ss":
        series = semistable_series(spec)
    elif which == "desing":
        series = desing_series(spec)
    else:
        series = ip_series(spec)
    if which in ("desing", "ip"):
        top = quotient_top_degree(spec)
        if spec.bound < top:
            notes.append(f"bound {spec.bound} is below the quotient dimension {top}")
        if series.degree() > top:
            raise ContractViolation(f"series has terms above the quotient dimension {top}")
        notes.append("palindromic" if series.is_palindromic(top) else "not palindromic")
    coeffs = series.to_list()
    if which in ("desing", "ip"):
        coeffs = coeffs[: quotient_top_degree(spec) + 1]
    values = {
        "series": series.format(),
        "even_degree_coefficients": [format_scalar(c) for c in coeffs[::2]],
    }
    if any(coeffs[1::2]):
        values["odd_degree_coefficients"] = [format_scalar(c) for c in coeffs[1::2]]
    return _result(command, values, PROVENANCE["poincare"], notes)


def cmd_witten(args, command: str) -> dict:
    model = _load(args)
    if args.dump_model:
        return {"dump": dump_model(model)}
    eta = parse_expression(args.eta, model.generators)
    res = witten_i0(model, eta)
    values = {"total": res.total.format(), "total_map": res.total.to_json()}
    for cid, cone, poly in res.contributions:
        values[f"{cid} ({cone})"] = poly.format()
    notes = [f"values are reported up to the prefactor {res.prefactor}"]
    return _result(command, values, PROVENANCE["witten"], notes)


def _term_from_json(data: Any, rank: int, convention: str, where: str) -> LocalizationTerm:
    if not isinstance(data, dict):
        raise ValidationError(f"{where}: expected an object")
    num = _poly_from_json(data.get("numerator", {",".join(["0"] * rank): 1}), rank, f"{where}.numerator")
    lam = _form_from_json(data.get("exponent", [0] * rank), rank, f"{where}.exponent")
    den = []
    for k, entry in enumerate(data.get("denominator", [])):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ValidationError(f"{where}.denominator[{k}]: expected [form, multiplicity]")
        den.append((_form_from_json(entry[0], rank, f"{where}.denominator[{k}]"), entry[1]))
    return LocalizationTerm(num, lam, tuple(den), convention)


def load_terms(path: str) -> tuple[int, list[LocalizationTerm]]:
    """Read ``{"rank", "convention", "terms": [{numerator, exponent, denominator}]}``."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read term file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"term file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("term file must hold a JSON object")
    rank = data.get("rank", 1)
    if not isinstance(rank, int) or rank < 1:
        raise ValidationError("term file: 'rank' must be a positive integer")
    conv = data.get("convention", "real")
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise ValidationError("term file: 'terms' must be a list")
    return rank, [_term_from_json(t, rank, conv, f"terms[{k}]") for k, t in enumerate(terms)]


def cmd_residue(args, command: str) -> dict:
    rank, terms = load_terms(args.terms)
    chamber = Chamber(tuple(_rationals(args.chamber)))
    if chamber.rank != rank:
        raise ValidationError(f"chamber has {chamber.rank} coordinates, terms have rank {rank}")
    perturbation = Perturbation(LinearForm(tuple(_rationals(args.rho)))) if args.rho else None
    value = jk_residue(terms, chamber, perturbation)
    return _result(command, {"value": format_scalar(value)}, PROVENANCE["residue"])


def cmd_model(args, command: str) -> dict:
    return {"dump": dump_model(_load(args))}


def _model_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", help="circle:w0,...,wn | su2_pn:N | su2_p1n:N | p7")
    group.add_argument("--model", help="path to a model JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpairing", description="Exact intersection pairings on quotients.")
    parser.add_argument("--format", choices=FORMATS, default="plain")
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("pair", parents=[common], help="pairing of a class on the quotient")
    _model_args(p)
    p.add_argument("--eta", default="1", help="class as a polynomial in the model generators")
    p.add_argument("--beta", default="1", help="second class (ih mode)")
    p.add_argument("--mode", choices=("regular", "ih", "abelian", "desing"), default="regular")
    p.add_argument("--shift", help="level for abelian mode, comma separated rationals")
    p.add_argument("--dump-model", action="store_true", help="print the model JSON and exit")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("ih", parents=[common], help="intersection cohomology of a circle quotient of P^n")
    p.add_argument("--weights", required=True)
    p.add_argument("--what", default="betti", help="betti | vm | groebner | matrix:d")
    p.set_defaults(func=cmd_ih)

    p = sub.add_parser("poincare", parents=[common], help="equivariant Poincare series")
    p.add_argument("--family", choices=("pn", "p1n"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("total", "ss", "desing", "ip"), default="total")
    p.add_argument("--bound", type=int, default=None, help="truncation degree (even)")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("witten", parents=[common], help="local piece of Witten's integral")
    _model_args(p)
    p.add_argument("--eta", default="1")
    p.add_argument("--dump-model", action="store_true", help="print the model JSON and exit")
    p.set_defaults(func=cmd_witten)

    p = sub.add_parser("residue", parents=[common], help="Jeffrey-Kirwan residue of terms read from a JSON file")
    p.add_argument("--terms", required=True)
    p.add_argument("--chamber", required=True, help="chamber vector, comma separated")
    p.add_argument("--rho", default=None, help="perturbation, comma separated")
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("model", parents=[common], help="print a model as JSON")
    _model_args(p)
    p.set_defaults(func=cmd_model)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run the CLI and return ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    argv = list(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    command = " ".join(argv)
    try:
        result = args.func(args, command)
        if "dump" in result:
            return 0, json.dumps(result["dump"], indent=2) + "\n", ""
        return 0, render(result, args.format) + "\n", ""
    except ContractViolation as exc:
        return 3, "", f"contract violation: {exc}\n"
    except ValidationError as exc:
        return 2, "", f"error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

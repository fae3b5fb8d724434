"""Command-line front end.  Every command prints one JSON document.

Exit status is 0 on success and 1 on any error, in which case the document is
{"error": <code>, "message": ..., "schema_version": 1}.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import acceptance
from .discrete import AlgebraElement, multiply_discrete
from .errors import LSError, ParseError
from .grassmannian import (
    chain_valuation,
    element_from_json,
    grassmann_poset,
    index_label,
    parse_index,
    quasi_valuation_grassmann,
    straighten,
    verify_grassmann_ls,
)
from .order_complex import level_points, simplex_embedding, verify_integral_structure
from .orders import default_extension, rlex_compare, triangle_compare
from .paths import enumerate_paths, sorted_paths
from .poset import load_poset, maximal_chains, poset_to_json, verify_gcd_condition
from .valuation import ChainValuationData, check_estimate
from .vectors import PathVector, format_fraction
from .weyl import build_root_system, bruhat_poset, parse_weight, weyl_dimension

SCHEMA_VERSION = 1
TWO_WORD = {"order", "complex", "grassmann"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise ParseError(message)


def _json_arg(text: str) -> Any:
    """Inline JSON, or the name of a file holding it."""
    stripped = text.lstrip()
    try:
        if stripped.startswith(("{", "[")):
            return json.loads(text)
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"cannot read {text}: {exc}") from exc


def _labels(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def _vector_json(vec: PathVector) -> dict:
    return {"values": {k: format_fraction(v) for k, v in vec.items()}}


# -- commands ----------------------------------------------------------------------

def cmd_poset_check(args) -> dict:
    poset = load_poset(args.poset)
    report = verify_gcd_condition(poset)
    if not report.ok:
        poset.require_gcd_condition()  # raises GcdConditionFailed
    return {
        "elements": len(poset),
        "length": poset.N,
        "bottom": poset.bottom,
        "top": poset.top,
        "maximal_chains": len(maximal_chains(poset)),
        "gcd_condition": report.ok,
    }


def cmd_paths_enum(args) -> dict:
    poset = load_poset(args.poset)
    paths = enumerate_paths(poset, args.degree)
    return {"degree": args.degree, "count": len(paths), "paths": [p.to_json() for p in paths]}


def cmd_order_compare(args) -> dict:
    poset = load_poset(args.poset)
    left = PathVector.from_json(_json_arg(args.left))
    right = PathVector.from_json(_json_arg(args.right))
    ext = tuple(_labels(args.ext)) if args.ext else default_extension(poset)
    return {
        "extension": list(ext),
        "partial": triangle_compare(poset, left, right).value,
        "reverse_lex": rlex_compare(left, right, ext).value,
    }


def cmd_complex_levels(args) -> dict:
    poset = load_poset(args.poset)
    points = sorted_paths(poset, level_points(poset, args.degree))
    return {"degree": args.degree, "count": len(points), "points": [_vector_json(p) for p in points]}


def cmd_complex_embed(args) -> dict:
    poset = load_poset(args.poset)
    emb = simplex_embedding(poset, _labels(args.chain))
    return {
        "chain": list(emb.chain),
        "bonds": list(emb.bonds),
        "vertices": [list(v) for v in emb.vertices],
        "integral_structure": {str(r): verify_integral_structure(poset, emb.chain, r)
                               for r in range(1, args.degree + 1)},
    }


def cmd_discrete_multiply(args) -> dict:
    poset = load_poset(args.poset)
    x = AlgebraElement.from_json(poset, _json_arg(args.left))
    y = AlgebraElement.from_json(poset, _json_arg(args.right))
    return {"product": multiply_discrete(poset, x, y).to_json(poset)}


def cmd_valuation_check(args) -> dict:
    poset = load_poset(args.poset)
    chain = tuple(_labels(args.chain))
    obj = _json_arg(args.values)
    try:
        values = {PathVector.from_json(e["path"]): PathVector.from_json(e["value"]) for e in obj["values"]}
    except (KeyError, TypeError) as exc:
        raise ParseError(f"values JSON needs a list of {{path, value}}: {exc}") from exc
    data = ChainValuationData(poset, chain, values)
    report = check_estimate(poset, data, values)
    return {"ok": report.ok, "checked": report.checked, "cases": report.cases, "violations": report.violations}


def cmd_schubert(args) -> dict:
    rs = build_root_system(args.type)
    weight = parse_weight(args.weight)
    poset = bruhat_poset(rs, weight, args.tau)
    doc = poset_to_json(poset)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    out = {"type": rs.name, "weight": list(weight), "poset": doc}
    if args.tau is None:
        out["dimension"] = weyl_dimension(rs, weight)
    return out


def cmd_grassmann_straighten(args) -> dict:
    factors = [parse_index(s, args.d, args.n) for s in _factor_labels(args.monomial, args.n)]
    poset = grassmann_poset(args.d, args.n)
    return {"monomial": [index_label(t, args.n) for t in factors],
            "expansion": straighten(args.d, args.n, factors).to_json(poset)}


def _factor_labels(text: str, n: int) -> list[str]:
    # "14,23" for n <= 9; for larger n the labels contain commas, so pass a JSON list
    stripped = text.strip()
    if stripped.startswith("["):
        return [str(s) for s in json.loads(stripped)]
    return _labels(stripped)


def cmd_grassmann_valuation(args) -> dict:
    x = element_from_json(args.d, args.n, _json_arg(args.element))
    if args.chain:
        value = chain_valuation(args.d, args.n, x, _labels(args.chain))
        return {"chain": _labels(args.chain), "value": _vector_json(value)}
    return {"quasi_valuation": _vector_json(quasi_valuation_grassmann(args.d, args.n, x))}


def cmd_grassmann_verify(args) -> dict:
    report = verify_grassmann_ls(args.d, args.n, args.max_degree)
    return {
        "ok": report.ok,
        "standard_monomials": {str(k): v for k, v in report.counts.items()},
        "ranks": {str(k): v for k, v in report.ranks.items()},
        "nonstandard_pairs": report.nonstandard_pairs,
        "ls_axioms": {"ok": report.axioms.ok, "failures": report.axioms.failures},
        "effective_weights": report.effective,
        "ring_mismatches": report.ring_mismatches,
        "notes": report.notes,
    }


def cmd_acceptance(args) -> dict:
    cfg = acceptance.AcceptanceConfig(quick=args.quick, straightening_table=args.straightening_table)
    results = acceptance.run_acceptance_suite(cfg)
    for r in results:
        print(r.line(), file=sys.stderr)
    doc = {"ok": all(r.passed for r in results),
           "criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                         "seconds": round(r.seconds, 3), "limit": r.limit, "detail": r.detail} for r in results]}
    if not doc["ok"]:
        raise _SuiteFailed(doc)
    return doc


class _SuiteFailed(Exception):
    def __init__(self, doc: dict):
        self.doc = doc


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lsalgebra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = verb("poset-check", cmd_poset_check, "validate a bonded poset and its gcd condition")
    p.add_argument("--poset", required=True)
    p = verb("paths-enum", cmd_paths_enum, "list the LS paths of a given degree")
    p.add_argument("--poset", required=True)
    p.add_argument("--degree", type=int, required=True)
    p = verb("order-compare", cmd_order_compare, "compare two vectors in the partial and reverse-lex orders")
    p.add_argument("--poset", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--ext", help="linear extension as comma-separated labels")
    p = verb("complex-levels", cmd_complex_levels, "points of the r-th level of the order complex")
    p.add_argument("--poset", required=True)
    p.add_argument("--degree", type=int, required=True)
    p = verb("complex-embed", cmd_complex_embed, "embedding of a chain's simplex and its integral structure")
    p.add_argument("--poset", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--degree", type=int, default=4)
    p = verb("discrete-multiply", cmd_discrete_multiply, "product in the discrete LS algebra")
    p.add_argument("--poset", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = verb("valuation-check", cmd_valuation_check, "check chain-valuation values against the estimate")
    p.add_argument("--poset", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--values", required=True)
    p = verb("schubert", cmd_schubert, "Bruhat poset with bonds for a dominant weight")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True, help="Dynkin labels, e.g. 0,1,0")
    p.add_argument("--tau", help="orbit point (Dynkin labels) bounding the interval")
    p.add_argument("--emit", help="also write the poset JSON to this file")
    for name, func, help_text in [
        ("grassmann-straighten", cmd_grassmann_straighten, "straighten a product of Pluecker coordinates"),
        ("grassmann-valuation", cmd_grassmann_valuation, "chain valuation or quasi-valuation of an element"),
        ("grassmann-verify", cmd_grassmann_verify, "verify the LS-algebra structure of G(d,n)"),
    ]:
        p = verb(name, func, help_text)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if name == "grassmann-straighten":
            p.add_argument("--monomial", required=True)
        elif name == "grassmann-valuation":
            p.add_argument("--element", required=True)
            p.add_argument("--chain")
        else:
            p.add_argument("--max-degree", type=int, default=2)
    p = verb("acceptance", cmd_acceptance, "run the acceptance suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--straightening-table")
    return parser


def _normalise_argv(argv: Sequence[str]) -> list[str]:
    argv = list(argv)
    if len(argv) >= 2 and argv[0] in TWO_WORD and not argv[1].startswith("-"):
        argv = [f"{argv[0]}-{argv[1]}"] + argv[2:]
    return argv


def _emit(doc: dict, stream) -> None:
    doc = dict(doc)
    doc["schema_version"] = SCHEMA_VERSION
    stream.write(json.dumps(doc, indent=2, sort_keys=True))
    stream.write("\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = _normalise_argv(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        doc = args.func(args)
    except _SuiteFailed as failed:
        _emit(failed.doc, sys.stdout)
        return 1
    except LSError as exc:
        _emit({"error": exc.code, "message": str(exc)}, sys.stdout)
        return 1
    except (OSError, ValueError) as exc:
        _emit({"error": "error", "message": str(exc)}, sys.stdout)
        return 1
    _emit(doc, sys.stdout)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

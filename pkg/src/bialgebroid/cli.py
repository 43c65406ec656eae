"""Command-line surface.

Subcommands:

* ``validate <spec.json>``: run the algebroid axiom checks on both halves
  of a pair document; exit 1 when an axiom fails (witnesses in report).
* ``check <spec.json> [--probe-degree K]``: decide whether the square of
  the Dirac-type operator is multiplication by a function; prints the
  function or the failing probe.
* ``identities <spec.json> --suite theorem-c|corollaries|courant|generator``.
* ``modular <spec.json>``: the two modular cocycles and the square scalar.
* ``example a-plus-b|poisson|exact|pn ...``: build a documented example
  family, run its identity report, and embed the pair document.

Exit codes: 0 all checked properties hold, 1 a property failed (report
carries a witness), 2 input or validation error.  Reports are JSON on
stdout (``--output text`` for a line-per-fact rendering); the elapsed_ms
field is the only non-deterministic part.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Tuple

from .algebroid import AlgebroidError, validate_algebroid
from .constructions import (BivectorData, ConstructionError, NijenhuisData,
                            PoissonManifoldData, a_plus_b, exact_from_bivector,
                            exact_identities, pn_hierarchy, pn_identities,
                            poisson_double, poisson_homology_check)
from .exterior import Multivector
from .pair import (BialgebroidPair, PairError, PreconditionError, ProbeConfig,
                   corollary_suite, courant_axioms, dirac_square, f_tilde,
                   generator_check, theorem_c_suite)
from .ring import PolynomialError
from .serialize import (DocumentError, algebroid_from_json, document_to_structures,
                        pair_from_json, pair_to_json)

_INPUT_ERRORS = (DocumentError, ConstructionError, AlgebroidError, PairError,
                 PolynomialError, OSError, json.JSONDecodeError, ValueError)


def _load_doc(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise DocumentError("document root must be a JSON object")
    return doc


def _validation_json(report) -> dict:
    return {
        "jacobi_ok": report.jacobi_ok,
        "anchor_morphism_ok": report.anchor_morphism_ok,
        "witnesses": [{"kind": key[0], "indices": list(key[1:]), "defect": text}
                      for key, text in report.witnesses],
    }


def _probe_config(args) -> ProbeConfig:
    degree = getattr(args, "probe_degree", 2)
    return ProbeConfig(max_coord_degree=degree, max_section_degree=2)


def _cmd_validate(args) -> Tuple[dict, int]:
    A, Astar, _frame, _label = document_to_structures(_load_doc(args.spec))
    rep_a = validate_algebroid(A)
    rep_b = validate_algebroid(Astar)
    ok = rep_a.ok and rep_b.ok
    body = {
        "command": "validate",
        "input": args.spec,
        "A": _validation_json(rep_a),
        "Astar": _validation_json(rep_b),
        "pass": ok,
    }
    return body, 0 if ok else 1


def _cmd_check(args) -> Tuple[dict, int]:
    pair = pair_from_json(_load_doc(args.spec))
    report = dirac_square(pair, _probe_config(args))
    ok = report.is_scalar and report.square_formula_ok
    body = {
        "command": "check",
        "input": args.spec,
        "probe_degree": args.probe_degree,
        "is_scalar": report.is_scalar,
        "square_formula_ok": report.square_formula_ok,
        "f_tilde": str(report.f_tilde),
    }
    if report.witness is not None:
        body["witness"] = report.witness
    if report.formula_witness is not None:
        body["formula_witness"] = report.formula_witness
    body["pass"] = ok
    return body, 0 if ok else 1


_SUITES = {
    "theorem-c": theorem_c_suite,
    "corollaries": corollary_suite,
    "courant": lambda pair, cfg: courant_axioms(pair),
    "generator": generator_check,
}


def _cmd_identities(args) -> Tuple[dict, int]:
    pair = pair_from_json(_load_doc(args.spec))
    report = _SUITES[args.suite](pair, _probe_config(args))
    body = {
        "command": "identities",
        "input": args.spec,
        "suite": report.to_json(),
    }
    return body, 0 if report.passed else 1


def _cmd_modular(args) -> Tuple[dict, int]:
    pair = pair_from_json(_load_doc(args.spec))
    mod = pair.modular
    body = {
        "command": "modular",
        "input": args.spec,
        "x0": str(mod.x0),
        "xi0": str(mod.xi0),
        "f_tilde": str(f_tilde(pair)),
    }
    return body, 0


def _bivector_from_arg(text: str, rank: int, coords) -> BivectorData:
    raw = json.loads(text)
    if not isinstance(raw, dict):
        raise DocumentError("--lambda must be a JSON object of 'i,j' keys")
    from .ring import Polynomial
    terms = {}
    for key, value in raw.items():
        i_text, _, j_text = key.partition(",")
        try:
            i, j = int(i_text), int(j_text)
        except ValueError:
            raise DocumentError(f"--lambda key '{key}' is not of the form 'i,j'")
        if not (1 <= i < j <= rank):
            raise DocumentError(f"--lambda key '{key}' must satisfy 1 <= i < j <= {rank}")
        poly = Polynomial.parse(value, coords)
        if not poly.is_zero():
            terms[(i, j)] = poly
    return BivectorData(Multivector(rank, coords, terms))


def _cmd_example_a_plus_b(args) -> Tuple[dict, int]:
    params = {name: Fraction(getattr(args, name)) for name in ("a", "b", "c", "d")}
    pair = a_plus_b(params["a"], params["b"], params["c"], params["d"])
    report = dirac_square(pair)
    ok = report.is_scalar and report.square_formula_ok
    body = {
        "command": "example",
        "family": "a-plus-b",
        "parameters": {k: str(v) for k, v in params.items()},
        "pair": pair_to_json(pair),
        "is_scalar": report.is_scalar,
        "f_tilde": str(report.f_tilde),
        "pass": ok,
    }
    return body, 0 if ok else 1


def _cmd_example_poisson(args) -> Tuple[dict, int]:
    rows = json.loads(args.pi)
    if not isinstance(rows, list):
        raise DocumentError("--pi must be a JSON matrix of polynomial strings")
    data = PoissonManifoldData(args.dim, rows)
    pair = poisson_double(data)
    report = poisson_homology_check(data)
    square = dirac_square(pair)
    ok = report.passed and square.is_scalar
    body = {
        "command": "example",
        "family": "poisson",
        "parameters": {"dim": args.dim, "pi": rows},
        "pair": pair_to_json(pair),
        "suite": report.to_json(),
        "f_tilde": str(square.f_tilde),
        "pass": ok,
    }
    return body, 0 if ok else 1


def _cmd_example_exact(args) -> Tuple[dict, int]:
    A = algebroid_from_json(_load_doc(args.spec), "vector")
    L = _bivector_from_arg(args.lam, A.rank, A.coordinates)
    pair = exact_from_bivector(A, L)
    report = exact_identities(pair, L)
    body = {
        "command": "example",
        "family": "exact",
        "input": args.spec,
        "parameters": {"lambda": json.loads(args.lam)},
        "pair": pair_to_json(pair),
        "suite": report.to_json(),
        "f_tilde": str(f_tilde(pair)),
        "pass": report.passed,
    }
    return body, 0 if report.passed else 1


def _cmd_example_pn(args) -> Tuple[dict, int]:
    A = algebroid_from_json(_load_doc(args.spec), "vector")
    n_rows = json.loads(args.n)
    if not isinstance(n_rows, list):
        raise DocumentError("--n must be a JSON matrix of polynomial strings")
    N = NijenhuisData(n_rows, A.coordinates)
    L = _bivector_from_arg(args.lam, A.rank, A.coordinates)
    pair = pn_hierarchy(A, N, L, args.k, args.l)
    report = pn_identities(A, N, L, args.k, args.l)
    body = {
        "command": "example",
        "family": "pn",
        "input": args.spec,
        "parameters": {"n": n_rows, "lambda": json.loads(args.lam),
                       "k": args.k, "l": args.l},
        "pair": pair_to_json(pair),
        "suite": report.to_json(),
        "f_tilde": str(f_tilde(pair)),
        "pass": report.passed,
    }
    return body, 0 if report.passed else 1


def _render_text(body: dict) -> str:
    lines = []

    def walk(prefix: str, value):
        if isinstance(value, dict):
            for key, sub in value.items():
                walk(f"{prefix}.{key}" if prefix else key, sub)
        elif isinstance(value, list):
            if not value:
                lines.append(f"{prefix}: []")
            for idx, sub in enumerate(value):
                walk(f"{prefix}[{idx}]", sub)
        else:
            lines.append(f"{prefix}: {value}")

    walk("", body)
    return "\n".join(lines) + "\n"


def _emit(body: dict, code: int, output: str, started: float) -> int:
    body["exit_status"] = code
    body["elapsed_ms"] = int(round((time.perf_counter() - started) * 1000))
    if output == "json":
        sys.stdout.write(json.dumps(body, indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(body))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bialgebroid",
        description="Exact checks for dual pairs of Lie algebroid structures.")
    parser.add_argument("--output", choices=("json", "text"), default="json",
                        help="report format (default json)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="axiom checks for both halves of a pair document")
    p.add_argument("spec", help="path to a pair JSON document")

    p = sub.add_parser("check", help="decide whether the operator square is a function")
    p.add_argument("spec", help="path to a pair JSON document")
    p.add_argument("--probe-degree", type=int, default=2,
                   help="coefficient degree bound for probes (default 2, minimum 2)")

    p = sub.add_parser("identities", help="run an identity suite on a pair document")
    p.add_argument("spec", help="path to a pair JSON document")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--probe-degree", type=int, default=2)

    p = sub.add_parser("modular", help="modular cocycles and the square scalar")
    p.add_argument("spec", help="path to a pair JSON document")

    example = sub.add_parser("example", help="build and check a documented family")
    families = example.add_subparsers(dest="family", required=True)

    p = families.add_parser("a-plus-b", help="rank-2 pair over a point")
    for name in ("a", "b", "c", "d"):
        p.add_argument(f"--{name}", required=True,
                       help=f"rational structure constant {name}")

    p = families.add_parser("poisson", help="tangent/cotangent double of a Poisson bivector")
    p.add_argument("--dim", type=int, required=True, help="base dimension m")
    p.add_argument("--pi", required=True,
                   help="JSON m x m skew matrix of polynomial strings")

    p = families.add_parser("exact", help="dual structure induced by a bivector")
    p.add_argument("spec", help="path to an algebroid JSON document")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="JSON object of bivector components, keys 'i,j' with i < j")

    p = families.add_parser("pn", help="Poisson-Nijenhuis hierarchy pair")
    p.add_argument("spec", help="path to an algebroid JSON document")
    p.add_argument("--n", required=True, help="JSON n x n matrix of polynomial strings")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="JSON object of bivector components, keys 'i,j' with i < j")
    p.add_argument("--k", type=int, default=0, help="dual-side hierarchy index")
    p.add_argument("--l", type=int, default=0, help="primal-side hierarchy index")
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "check": _cmd_check,
    "identities": _cmd_identities,
    "modular": _cmd_modular,
}

_EXAMPLE_HANDLERS = {
    "a-plus-b": _cmd_example_a_plus_b,
    "poisson": _cmd_example_poisson,
    "exact": _cmd_example_exact,
    "pn": _cmd_example_pn,
}


def main(argv: Optional[list] = None) -> int:
    started = time.perf_counter()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "example":
        handler = _EXAMPLE_HANDLERS[args.family]
        command_echo = {"command": "example", "family": args.family}
    else:
        handler = _HANDLERS[args.command]
        command_echo = {"command": args.command}
    try:
        body, code = handler(args)
    except PreconditionError as exc:
        body = dict(command_echo)
        body["error"] = str(exc)
        return _emit(body, 2, args.output, started)
    except _INPUT_ERRORS as exc:
        body = dict(command_echo)
        body["error"] = str(exc)
        return _emit(body, 2, args.output, started)
    return _emit(body, code, args.output, started)


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()

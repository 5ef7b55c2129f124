"""Batch command line: JSON in, canonical JSON out.

Exit codes: 0 success, 2 invalid input, 3 mathematical refusal (valid input
outside an operation's scope), 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .determinant import det_laplace, det_leibniz, snake_matrix, standard_expansion
from .errors import (
    FamilyConstraintError,
    InternalCheckError,
    InvalidSnakeError,
    MalformedIntervalError,
    UnsupportedSnakeError,
)
from .families import nested_prime_snake, snake_from_mu_lambda
from .category_o import kl_table
from .paths import ell_weights, snake_dimension
from .snakes import AlternatingSnake, diagnose

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_REFUSED = 3
EXIT_INTERNAL = 4


class InputError(Exception):
    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(obj: dict, out_path: str | None) -> None:
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(payload: dict) -> dict:
    return {"version": __version__, "canonical": True, **payload}


def _snake_data(data, n_override):
    if not isinstance(data, dict):
        raise InputError("expected a JSON object with n, intervals, breaks")
    for key in ("n", "intervals", "breaks"):
        if key not in data:
            raise InputError(f"missing key {key!r}")
    n = data["n"]
    if not isinstance(n, int):
        raise InputError("n must be an integer")
    if n_override is not None:
        if n_override < n:
            raise InputError(
                f"--n may only raise the rank (file has n = {n}, got {n_override})"
            )
        n = n_override
    intervals = data["intervals"]
    breaks = data["breaks"]
    if not isinstance(intervals, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
        for p in intervals
    ):
        raise InputError("intervals must be a list of [i, j] integer pairs")
    if not isinstance(breaks, list) or not all(isinstance(b, int) for b in breaks):
        raise InputError("breaks must be a list of integers")
    return intervals, breaks, n


def _load_snake(data, n_override) -> AlternatingSnake:
    intervals, breaks, n = _snake_data(data, n_override)
    return AlternatingSnake.build(intervals, breaks, n)


def cmd_validate(args) -> int:
    intervals, breaks, n = _snake_data(_read_json(args.input), args.n)
    problems = diagnose(intervals, breaks, n)
    if problems:
        payload = {"valid": False, "diagnostics": [d.to_json() for d in problems]}
    else:
        s = AlternatingSnake.build(intervals, breaks, n)
        payload = {
            "valid": True,
            "runs": list(s.directions),
            "stable": s.is_stable(),
            "prime": s.is_prime(),
        }
    _emit(_report(payload), args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    s = _load_snake(_read_json(args.input), args.n)
    payload = {
        "snake": s.to_json(),
        "prime": s.is_prime(),
        "stable": s.is_stable(),
        "factors": [f.to_json() for f in s.prime_factors()],
    }
    _emit(_report(payload), args.output)
    return EXIT_OK


def cmd_det_formula(args) -> int:
    s = _load_snake(_read_json(args.input), args.n)
    expansion = standard_expansion(s)
    payload = {
        "snake": s.to_json(),
        "terms": [{"coeff": c, "weight": w.to_json()} for w, c in expansion.terms],
        "sigma_count": expansion.sigma_count,
    }
    if args.oracle:
        m = snake_matrix(s)
        if det_laplace(m) != det_leibniz(m):
            raise InternalCheckError("determinant algorithms disagree")
        payload["oracle"] = "ok"
    _emit(_report(payload), args.output)
    return EXIT_OK


def cmd_character(args) -> int:
    s = _load_snake(_read_json(args.input), args.n)
    weights = sorted(ell_weights(s), key=lambda w: w.sort_key())
    payload = {
        "snake": s.to_json(),
        "dim": snake_dimension(s),
        "weights": [w.to_json() for w in weights],
    }
    _emit(_report(payload), args.output)
    return EXIT_OK


def cmd_kl(args) -> int:
    s = _load_snake(_read_json(args.input), args.n)
    table = kl_table(s)
    payload = {
        "mu_plus_rho": list(table.mu_plus_rho),
        "lambda_plus_rho": list(table.lambda_plus_rho),
        "rows": [{"nu_plus_rho": list(nu), "c": c} for nu, c in table.rows],
    }
    _emit(_report(payload), args.output)
    return EXIT_OK


def _int_list(params: dict, key: str) -> list[int]:
    value = params.get(key)
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise InputError(f"{key!r} must be a list of integers")
    return value


def cmd_gen(args) -> int:
    params = _read_json(args.params)
    if not isinstance(params, dict) or "family" not in params:
        raise InputError("expected a JSON object with a 'family' key")
    family = params["family"]
    if family == "mu-lambda":
        for key in ("mu", "lambda", "n"):
            if key not in params:
                raise InputError(f"mu-lambda family needs key {key!r}")
        if not isinstance(params["n"], int):
            raise InputError("n must be an integer")
        s = snake_from_mu_lambda(
            _int_list(params, "mu"), _int_list(params, "lambda"), params["n"]
        )
        payload = {"snake": s.to_json()}
    elif family == "nested":
        for key in ("breaks", "lows", "highs"):
            if key not in params:
                raise InputError(f"nested family needs key {key!r}")
        s, n_min = nested_prime_snake(
            _int_list(params, "breaks"), _int_list(params, "lows"), _int_list(params, "highs")
        )
        payload = {"snake": s.to_json(), "n_min": n_min}
    else:
        raise InputError(f"unknown family {family!r}; use 'mu-lambda' or 'nested'")
    _emit(_report(payload), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snakemod",
        description="Exact snake-class combinatorics with JSON input and output.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, needs_snake=True):
        p = sub.add_parser(name, help=help_text)
        if needs_snake:
            p.add_argument("input", help="snake JSON file, or - for stdin")
            p.add_argument("--n", type=int, default=None, help="raise the rank (never lower)")
        p.add_argument("-o", "--output", default=None, help="output file, default stdout")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "check interval/break data and report diagnostics")
    add("decompose", cmd_decompose, "prime factorization plus prime/stable flags")
    det = add("det-formula", cmd_det_formula, "standard-class expansion of a stable snake")
    det.add_argument("--oracle", action="store_true", help="cross-check both determinant routes")
    add("character", cmd_character, "weights and dimension of a single-run snake")
    add("kl", cmd_kl, "Kazhdan-Lusztig coefficient rows of a stable snake")
    gen = add("gen", cmd_gen, "generate a family snake from parameters", needs_snake=False)
    gen.add_argument("params", help="family parameter JSON file, or - for stdin")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        _fail({"error": "invalid-input", "message": str(exc), **exc.details})
        return EXIT_INPUT
    except InvalidSnakeError as exc:
        _fail(
            {
                "error": "invalid-snake",
                "message": str(exc),
                "diagnostics": [d.to_json() for d in exc.diagnostics],
            }
        )
        return EXIT_INPUT
    except (MalformedIntervalError, FamilyConstraintError, ValueError) as exc:
        if isinstance(exc, UnsupportedSnakeError):
            _fail({"error": "refused", "message": str(exc)})
            return EXIT_REFUSED
        _fail({"error": "invalid-input", "message": str(exc)})
        return EXIT_INPUT
    except InternalCheckError as exc:
        _fail({"error": "internal-check", "message": str(exc)})
        return EXIT_INTERNAL


def _fail(obj: dict) -> None:
    sys.stderr.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    sys.exit(main())

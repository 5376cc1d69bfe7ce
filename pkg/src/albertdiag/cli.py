"""Command-line front end.

stdout carries JSON only (sorted keys); diagnostics go to stderr.

Exit codes: 0 success, 1 malformed input, 2 pipeline failure or failed
verification, 3 input from the wrong algebra for the command.
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema
import numpy as np

from . import schema
from .algebra import ALGEBRA_FLAGS, COMPACT
from .diagonalize import DRIFT_TOL, DiagonalizationTranscript, Tolerances, diagonalize, verify_transcript
from .errors import AlbertError, CompactUnsupported, InvalidGenerator, SplitUnsupported
from .jordan import JordanElement, invariants, random_element
from .selftest import run_selftest
from .split import diagonalizability_obstruction

EXIT_OK, EXIT_MALFORMED, EXIT_FAILED, EXIT_WRONG_ALGEBRA = 0, 1, 2, 3


class MalformedInput(Exception):
    pass


def _warn(msg, *args):
    print("albertdiag: " + (msg % args if args else msg), file=sys.stderr)


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} is not allowed")


def _load(path, sch):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        data = json.loads(text, parse_constant=_reject_constant)
        schema.validate(data, sch)
    except (OSError, ValueError, jsonschema.ValidationError) as exc:
        raise MalformedInput(str(getattr(exc, "message", exc))) from exc
    return data


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(obj, output):
    text = dumps(obj)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tolerances(args):
    defaults = Tolerances()
    return Tolerances(
        zero_tol=args.zero_tol if args.zero_tol is not None else defaults.zero_tol,
        residual_tol=args.residual_tol if args.residual_tol is not None else defaults.residual_tol,
    )


def cmd_diagonalize(args):
    X = JordanElement.from_json(_load(args.input, schema.JORDAN_ELEMENT))
    if X.mu != COMPACT:
        _warn("split input cannot be diagonalized in general; try `albertdiag split-check`")
        return EXIT_WRONG_ALGEBRA
    try:
        transcript = diagonalize(X, _tolerances(args))
    except AlbertError as exc:
        _warn("diagonalization failed: %s", exc)
        return EXIT_FAILED
    _emit(transcript.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args):
    data = _load(args.input, schema.TRANSCRIPT)
    try:
        transcript = DiagonalizationTranscript.from_json(data)
    except InvalidGenerator as exc:
        _warn("generator validation failed: %s", exc)
        _emit({"ok": False, "error": str(exc)}, args.output)
        return EXIT_FAILED
    if transcript.input.mu != COMPACT:
        _warn("transcripts are only defined for compact elements")
        return EXIT_WRONG_ALGEBRA
    try:
        report = verify_transcript(transcript, _tolerances(args), DRIFT_TOL)
    except AlbertError as exc:
        _warn("replay failed: %s", exc)
        return EXIT_FAILED
    _emit(report.to_json(), args.output)
    if not report.ok:
        _warn("transcript does not replay within its bounds")
        return EXIT_FAILED
    return EXIT_OK


def cmd_invariants(args):
    X = JordanElement.from_json(_load(args.input, schema.JORDAN_ELEMENT))
    _emit(invariants(X), args.output)
    return EXIT_OK


def cmd_random(args):
    # PCG64 bit generator, 27 uniform draws on [-1, 1): diag, x1, x2, x3
    rng = np.random.Generator(np.random.PCG64(args.seed))
    _emit(random_element(rng, ALGEBRA_FLAGS[args.algebra]).to_json(), args.output)
    return EXIT_OK


def cmd_split_check(args):
    X = JordanElement.from_json(_load(args.input, schema.JORDAN_ELEMENT))
    try:
        verdict = diagonalizability_obstruction(X)
    except CompactUnsupported as exc:
        _warn("%s", exc)
        return EXIT_WRONG_ALGEBRA
    _emit(verdict.to_json(), args.output)
    return EXIT_OK


def cmd_selftest(args):
    results, ok = run_selftest(args.seed)
    _emit({"ok": ok, "suites": results}, args.output)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(prog="albertdiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, input=True):
        p = sub.add_parser(name, help=help)
        if input:
            p.add_argument("--input", "-i", help="JSON input file (default: stdin)")
        p.add_argument("--output", "-o", help="write JSON here instead of stdout")
        p.set_defaults(func=func)
        return p

    for name, func, help in (
        ("diagonalize", cmd_diagonalize, "diagonalize a compact element and print the transcript"),
        ("verify", cmd_verify, "replay and check a transcript"),
    ):
        p = add(name, func, help)
        p.add_argument("--zero-tol", type=float)
        p.add_argument("--residual-tol", type=float)
    add("invariants", cmd_invariants, "trace, (X,X), sigma and det of an element")
    add("split-check", cmd_split_check, "inner-product obstruction for a split element")
    p = add("random", cmd_random, "seeded random element", input=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algebra", choices=["compact", "split"], default="compact")
    p = add("selftest", cmd_selftest, "run the invariant suites", input=False)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) < 0:
        _warn("--seed must be non-negative")
        return EXIT_MALFORMED
    try:
        return args.func(args)
    except MalformedInput as exc:
        _warn("malformed input: %s", exc)
        return EXIT_MALFORMED
    except SplitUnsupported as exc:
        _warn("%s", exc)
        return EXIT_WRONG_ALGEBRA
    except ValueError as exc:
        # bad tolerance overrides
        _warn("%s", exc)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())

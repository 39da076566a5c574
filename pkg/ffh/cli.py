#!/usr/bin/env python3
"""
Command-line front end.

Usage:
    ffh transform --h "z^4" --p 3 --q 3 --k 0 --l 0 [--format plain|json|latex]
    ffh transform --h "1/(1+z^2)" --numeric --at 1.0,2.0
    ffh verify --h "i*z^4" --p 4 --q 3 --k 1 [--numeric] [--sweep]
    ffh paper-examples
    ffh moments --n-max 6 --k-max 3 --p 3
    ffh classify --n 7 --k 1 --l 0 --p 3 --q 3
    ffh oracle --F exp --k 2 --xi 0,0,1

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from ffh.config import Config
from ffh.errors import FFHError, SphericalMonogenicError
from ffh.formatting import (
    classification_response,
    dump_json,
    latex_radial,
    moment_rows,
    numeric_response,
    oracle_response,
    worked_examples_response,
    plain_report,
    plain_transform,
    sweep_response,
    transform_response,
    verification_response,
)
from ffh.gegenbauer import moment
from ffh.services.transform_service import ORACLE_FUNCTIONS, ORACLE_TOLERANCE, TransformService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("plain", "json", "latex")


class UsageError(Exception):
    """Invalid command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _floats(count: int):
    def convert(text: str) -> Tuple[float, ...]:
        try:
            values = tuple(float(v) for v in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
        if len(values) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
        return values

    return convert


def _seed_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--h", required=True, help="Holomorphic seed, e.g. 'i*z^4' or '1/(1+z^2)'")
    sub.add_argument("--p", type=int, default=3, help="Dimension of the x-block (default: 3)")
    sub.add_argument("--q", type=int, default=3, help="Dimension of the y-block, odd (default: 3)")
    sub.add_argument("--k", type=int, default=0, help="Degree of P_k (default: 0)")
    sub.add_argument("--l", type=int, default=0, help="Degree of P_l (default: 0)")
    sub.add_argument("--Pk", help="P_k in local x-variables, e.g. 'x1 - x2*e12'")
    sub.add_argument("--Pl", help="P_l in local y-variables, e.g. 'y1 - y2*e12'")
    sub.add_argument("--numeric", action="store_true", help="Quadrature and finite differences instead of exact algebra")
    sub.add_argument("--at", type=_floats(2), help="Point r,rho for the numeric path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ffh", description="Fueter-Funk-Hecke transforms")
    parser.add_argument("--format", choices=FORMATS, default="plain", help="Output format (default: plain)")
    parser.add_argument("--tol", type=float, help="Tolerance for numeric checks")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    transform = verbs.add_parser("transform", help="Apply Ft_{p,q}[h, P_k, P_l]")
    _seed_arguments(transform)

    verify = verbs.add_parser("verify", help="Check monogenicity of a transform or run the sweep")
    verify.add_argument("--sweep", action="store_true", help="Run the monogenicity sweep instead of one seed")
    verify.add_argument("--n-max", type=int, default=10, help="Largest power in the sweep (default: 10)")
    verify.add_argument("--k-max", type=int, default=2, help="Largest k in the sweep (default: 2)")
    verify.add_argument("--l-max", type=int, default=1, help="Largest l in the sweep (default: 1)")
    verify.add_argument("--h", help="Holomorphic seed")
    for name, default in (("--p", 3), ("--q", 3), ("--k", 0), ("--l", 0)):
        verify.add_argument(name, type=int, default=default)
    verify.add_argument("--Pk")
    verify.add_argument("--Pl")
    verify.add_argument("--numeric", action="store_true")
    verify.add_argument("--at", type=_floats(2), help="Point r,rho for the numeric check")

    verbs.add_parser("paper-examples", aliases=["worked-examples"], help="Reproduce the five worked examples")

    moments = verbs.add_parser("moments", help="Exact Gegenbauer moments")
    moments.add_argument("--n-max", type=int, default=6)
    moments.add_argument("--k-max", type=int, default=3)
    moments.add_argument("--p", type=int, default=3)

    classify = verbs.add_parser("classify", help="Predicted class of Ft_{p,q}[z^n, P_k, P_l]")
    classify.add_argument("--n", type=int, required=True)
    for name, default in (("--k", 0), ("--l", 0), ("--p", 3), ("--q", 3)):
        classify.add_argument(name, type=int, default=default)

    oracle = verbs.add_parser("oracle", help="Sphere integral against the Funk-Hecke formula on S^2")
    oracle.add_argument("--F", choices=sorted(ORACLE_FUNCTIONS), default="exp")
    oracle.add_argument("--k", type=int, default=1, help="Degree of the built-in Y_k (default: 1)")
    oracle.add_argument("--Pk", help="Y_k in x1, x2, x3 instead of the built-in one")
    oracle.add_argument("--xi", type=_floats(3), default=(0.0, 0.0, 1.0), help="Unit vector (default: 0,0,1)")
    return parser


def _lift_format(argv: Sequence[str]) -> List[str]:
    """Allow the global flags after the verb as well as before it."""
    head, rest = [], []
    it = iter(argv)
    for token in it:
        name = token.split("=", 1)[0]
        if name in ("--format", "--tol"):
            head.append(token)
            if "=" not in token:
                head.append(next(it, ""))
        else:
            rest.append(token)
    return head + rest


def _transform(args) -> Tuple[int, str]:
    params = (args.p, args.q, args.k, args.l)
    if args.numeric or args.at is not None:
        if args.at is None:
            raise UsageError("--numeric needs --at r,rho")
        sample = TransformService.numeric(args.h, *params, args.at, args.Pk, args.Pl, tol=args.tol)
        doc = numeric_response(args.h, params, sample)
        if args.format == "json":
            return EXIT_OK, dump_json(doc)
        flag = "  (Richardson check flagged)" if sample.flagged else ""
        return EXIT_OK, f"M({sample.r}, {sample.rho}) = {sample.M!r}\nN({sample.r}, {sample.rho}) = {sample.N!r}{flag}"

    res = TransformService.transform(args.h, *params, args.Pk, args.Pl)
    if args.format == "json":
        return EXIT_OK, dump_json(transform_response(res))
    if args.format == "latex":
        metadata = {
            "classification": res.classification.text(),
            "normalization": res.normalization.text(),
            "params": {"p": args.p, "q": args.q, "k": args.k, "l": args.l},
        }
        return EXIT_OK, latex_radial(res.normalized) + "\n" + json.dumps(metadata, sort_keys=True, indent=2)
    return EXIT_OK, plain_transform(res)


def _verify(args) -> Tuple[int, str]:
    if args.sweep:
        doc = sweep_response(TransformService.sweep(args.n_max, args.k_max, args.l_max))
        code = EXIT_OK if doc.passed else EXIT_FAILED
        if args.format == "json":
            return code, dump_json(doc)
        lines = [f"{'PASS' if doc.passed else 'FAIL'} {doc.total - doc.failed}/{doc.total} cases"]
        for c in doc.cases:
            if not c.passed:
                lines.append(f"  FAIL z^{c.n} p={c.p} q={c.q} k={c.k} l={c.l}: observed {c.observed}, predicted {c.predicted}")
        return code, "\n".join(lines)

    if not args.h:
        raise UsageError("verify needs --h or --sweep")
    params = (args.p, args.q, args.k, args.l)
    points = [args.at] if args.at is not None else None
    report = TransformService.verify(args.h, *params, args.Pk, args.Pl, args.numeric, points, tol=args.tol)
    code = EXIT_OK if report.passed else EXIT_FAILED
    if args.format == "json":
        return code, dump_json(verification_response(args.h, params, report))
    return code, plain_report(report)


def _worked_examples(args) -> Tuple[int, str]:
    doc = worked_examples_response(TransformService.worked_examples(args.tol))
    code = EXIT_OK if doc.passed else EXIT_FAILED
    if args.format == "json":
        return code, dump_json(doc)
    lines = [f"{'PASS' if e.passed else 'FAIL'} {e.name}  scalar {e.scalar}  {e.detail}" for e in doc.examples]
    return code, "\n".join(lines)


def _moments(args) -> Tuple[int, str]:
    rows = moment_rows(args.n_max, args.k_max, args.p)
    if args.format == "json":
        return EXIT_OK, json.dumps([row.model_dump() for row in rows], sort_keys=True, indent=2)
    return EXIT_OK, "\n".join(f"n={row.n} k={row.k} p={row.p}: {moment(row.n, row.k, row.p).text()}" for row in rows)


def _classify(args) -> Tuple[int, str]:
    c = TransformService.classify(args.n, args.k, args.l, args.p, args.q)
    if args.format == "json":
        return EXIT_OK, dump_json(classification_response(args.n, args.k, args.l, args.p, args.q, c))
    return EXIT_OK, c.text()


def _oracle(args) -> Tuple[int, str]:
    tol = args.tol if args.tol is not None else ORACLE_TOLERANCE
    doc = oracle_response(TransformService.oracle(args.F, args.Pk, args.k, args.xi, tol))
    code = EXIT_OK if doc.passed else EXIT_FAILED
    if args.format == "json":
        return code, dump_json(doc)
    return code, f"{'PASS' if doc.passed else 'FAIL'} F={doc.F} Y_k={doc.Yk} xi={doc.xi}: relative gap {doc.relative_gap:.3e}"


VERBS = {
    "transform": _transform,
    "verify": _verify,
    "paper-examples": _worked_examples,
    "worked-examples": _worked_examples,
    "moments": _moments,
    "classify": _classify,
    "oracle": _oracle,
}


def run(argv: Sequence[str]) -> Tuple[int, str]:
    """Execute one command; returns the exit code and the document to print."""
    try:
        args = build_parser().parse_args(_lift_format(argv))
        return VERBS[args.verb](args)
    except UsageError as e:
        return EXIT_USAGE, f"usage error: {e}"
    except SphericalMonogenicError as e:
        return EXIT_USAGE, f"invalid spherical monogenic ({e.reason}): {e.witness}"
    except (FFHError, ValueError) as e:
        if isinstance(e, RuntimeError):
            logger.error(f"❌ {e}")
            return EXIT_FAILED, f"error: {e}"
        return EXIT_USAGE, f"error: {e}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=Config().LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    code, document = run(sys.argv[1:] if argv is None else argv)
    print(document, file=sys.stderr if code == EXIT_USAGE else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

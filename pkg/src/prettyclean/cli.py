"""Command-line entry point.

Exit codes: 0 on success, 2 when the answer is a mathematical "no"
(not Cohen-Macaulay, not sequentially Cohen-Macaulay), 1 on usage or
internal errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import oracle
from .campaign import CampaignConfig, fuzz_campaign
from .construction import KIND_NAMES, build_pretty_clean, codim2_report, layer_condition
from .decomposition import ass_primes, decomposition_json
from .errors import InternalVerificationFailure, NotCohenMacaulay, NotSequentiallyCM, SearchExhausted
from .filtration import classify_filtration, codim2_layer, is_scm, scm_report
from .monomial import Ambient, ParseError, parse_ideal
from .stanley import stanley_report, to_stanley

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for negative answers here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _kinds(text: str) -> list:
    kinds = [k.strip() for k in text.split(",") if k.strip()]
    for k in kinds:
        if k not in KIND_NAMES:
            raise argparse.ArgumentTypeError(f"unknown kind {k!r}; choose from {', '.join(KIND_NAMES)}")
    return kinds


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--vars", default="x,y,z,w", help="comma-separated variable names (default x,y,z,w)")

    parser = _Parser(prog="prettyclean", description="Monomial ideals: decompositions, depth, clean and pretty clean filtrations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "decompose": "irreducible and primary decomposition",
        "ass": "associated primes",
        "dimfilt": "dimension filtration and sequential Cohen-Macaulay test",
        "depth": "depth, dimension and Betti numbers",
        "check": "Cohen-Macaulay and sequentially Cohen-Macaulay tests with the configuration criterion",
        "filtrate": "verified clean or pretty clean prime filtration",
        "stanley": "Stanley decomposition read off a pretty clean filtration",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("ideal", help='e.g. "(x^2,y)" or "intersect((x,y),(x,z))"')
        if name == "filtrate":
            p.add_argument("--strict", action="store_true",
                           help="height-2 layer: fail as soon as the inclusion criterion fails")
    f = sub.add_parser("fuzz", parents=[common], help="randomized cross-validation campaign")
    f.add_argument("--seed", type=int, default=1)
    f.add_argument("--count", type=int, default=100)
    f.add_argument("--max-exp", type=int, default=3)
    f.add_argument("--max-comps", type=int, default=8)
    f.add_argument("--kinds", type=_kinds, default=None, help="comma-separated configuration kinds")
    f.add_argument("--tmax", type=int, default=8, help="degree bound for Hilbert function checks")
    f.add_argument("-v", "--verbose", action="store_true")
    return parser


def _emit(payload, as_json: bool, out) -> None:
    if as_json:
        print(json.dumps(payload, ensure_ascii=False), file=out)
        return
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, ensure_ascii=False)
        elif value is None:
            value = "-"
        elif isinstance(value, bool):
            value = str(value).lower()
        print(f"{key}: {value}", file=out)


def _require_four(I) -> None:
    if I.n != 4:
        raise ValueError("this command works in four variables")


def _check(I) -> tuple:
    _require_four(I)
    out = {"cm": oracle.is_cm(I), "scm": is_scm(I), "config": None, "condition": None}
    _, _, J = codim2_layer(I)
    if not J.is_unit():
        config, report = layer_condition(J)
        out["config"] = config.kind
        out["condition"] = report.to_json()
    return out, EXIT_OK if out["scm"] else EXIT_NEGATIVE


def _filtrate(I, strict: bool) -> tuple:
    _require_four(I)
    if all(p.height == 2 for p in ass_primes(I)):
        rep = codim2_report(I, strict)
        return rep, EXIT_NEGATIVE if rep["error"] else EXIT_OK
    try:
        pf = build_pretty_clean(I, strict=strict)
    except (NotSequentiallyCM, NotCohenMacaulay) as exc:
        return {"filtration": None, "error": type(exc).__name__}, EXIT_NEGATIVE
    return {"filtration": pf.to_json(classify_filtration(pf, verified=True)), "error": None}, EXIT_OK


def _stanley(I) -> tuple:
    _require_four(I)
    try:
        pf = build_pretty_clean(I)
    except (NotSequentiallyCM, NotCohenMacaulay) as exc:
        return {"spaces": None, "error": type(exc).__name__}, EXIT_NEGATIVE
    sd = to_stanley(pf, verified=True)
    return {"spaces": sd.to_json(), **stanley_report(I, sd)}, EXIT_OK


def _dispatch(args) -> tuple:
    if args.command == "fuzz":
        cfg = CampaignConfig(args.seed, args.count, args.max_exp, args.max_comps, args.kinds, args.tmax)
        return fuzz_campaign(cfg).to_json(), EXIT_OK
    ambient = Ambient.from_names(args.vars.split(","))
    I = parse_ideal(args.ideal, ambient)
    if args.command == "decompose":
        return decomposition_json(I), EXIT_OK
    if args.command == "ass":
        return {"ass": [p.names(ambient) for p in ass_primes(I)]}, EXIT_OK
    if args.command == "dimfilt":
        return scm_report(I), EXIT_OK
    if args.command == "depth":
        return oracle.depth_report(I), EXIT_OK
    if args.command == "check":
        return _check(I)
    if args.command == "filtrate":
        return _filtrate(I, args.strict)
    return _stanley(I)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING)
    try:
        payload, code = _dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, InternalVerificationFailure, SearchExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.command == "fuzz":
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False), file=out)
    else:
        _emit(payload, args.json, out)
    return code


if __name__ == "__main__":
    sys.exit(main())

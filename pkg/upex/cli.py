"""
Command-line interface.

Exit status is 0 whenever a command completes, whatever the decision, and
2 on any error. Reports go to standard output as JSON; errors go to
standard error as one line.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .config import DpConfig, GeneratorConfig, OracleConfig, TransformConfig
from .core.io import drawing_to_dict, dumps, instance_to_dict, load_instance, read_json, write_json
from .core.model import Decision, UpeInstance
from .core.verify import validate_instance
from .engines import AUTO, ENGINE_SELECTORS, Dispatcher
from .exceptions import InstanceValidationError, NotExtensibleError, PreconditionReason, UpexError
from .generators import generate_instance
from .logging import configure_logging, get_logger
from .oracle import Certificate, check_certificate
from .svg import render_svg
from .transforms import eliminate_partial_edges, make_distinct_y

logger = get_logger(__name__)

TRANSFORMS = {
    "no-partial-edges": eliminate_partial_edges,
    "distinct-y": make_distinct_y,
}


def decision_report(decision: Decision) -> Dict[str, Any]:
    witness: Dict[str, Any] = {}
    if decision.drawing is not None:
        witness["drawing"] = drawing_to_dict(decision.drawing)
    if decision.embedding is not None:
        witness["embedding"] = decision.embedding.to_dict()
    if decision.certificate is not None:
        witness["certificate"] = decision.certificate.to_json()
    if decision.structure is not None:
        witness["structure"] = decision.structure
    return {
        "decision": decision.label,
        "engine": decision.engine,
        "witness": witness or None,
        "notes": list(decision.notes),
    }


def _load_valid(path: str) -> UpeInstance:
    inst = load_instance(path)
    report = validate_instance(inst)
    if not report.ok:
        raise InstanceValidationError(
            f"{path}: {report.reason.name.lower()}: {report.message}",
            engine_type="cli",
            reason=report.reason,
            element=report.element,
        )
    return inst


def _emit(doc: Any, out: Optional[str]):
    if out:
        write_json(doc, out)
    else:
        sys.stdout.write(dumps(doc))


def cmd_decide(args: argparse.Namespace) -> int:
    inst = _load_valid(args.file)
    dispatcher = Dispatcher(oracle=OracleConfig.from_env(), dp=DpConfig(max_n=args.dp_cap))
    decision = dispatcher.decide(inst, args.engine, cross_check=args.cross_check)
    _emit(decision_report(decision), args.out)
    return 0


def cmd_transform(args: argparse.Namespace) -> int:
    inst = _load_valid(args.file)
    out, emap = TRANSFORMS[args.which](inst, TransformConfig(fast_sweep=not args.slow_sweep))
    logger.info(f"{args.which}: size {inst.size} -> {out.size}")
    _emit({"instance": instance_to_dict(out), "element_map": emap.to_dict()}, args.out)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    config = GeneratorConfig(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        pin_fraction=args.pin_fraction,
        embedded=args.embedded,
        adversarial=args.adversarial,
    )
    _emit(instance_to_dict(generate_instance(config)), args.out)
    return 0


def cmd_draw(args: argparse.Namespace) -> int:
    inst = _load_valid(args.file)
    decision = Dispatcher(oracle=OracleConfig.from_env()).decide(inst, args.engine)
    if not decision.answer:
        raise NotExtensibleError(
            "instance is not extensible, nothing to draw",
            engine_name=decision.engine,
            reason=PreconditionReason.NO_DECISION,
        )
    if decision.drawing is None:
        raise UpexError(f"engine {decision.engine} does not produce drawings", engine_name=decision.engine)
    Path(args.svg).write_text(render_svg(inst, decision.drawing), encoding="utf-8")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    engine = args.engine or {"st": "st-fue", "path": "path-fue", "cycle": "cycle-fue"}[args.kind]
    dispatcher = Dispatcher(dp=DpConfig(max_n=args.dp_cap))
    rows: List[Dict[str, Any]] = []
    for n in args.sizes:
        inst = generate_instance(GeneratorConfig(kind=args.kind, n=n, seed=args.seed, pin_fraction=args.pin_fraction))
        start = time.perf_counter()
        decision = dispatcher.decide(inst, engine)
        rows.append({"n": n, "size": inst.size, "seconds": round(time.perf_counter() - start, 6), "decision": decision.label})
    _emit({"engine": engine, "kind": args.kind, "rows": rows}, args.out)
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    inst = _load_valid(args.file)
    result = check_certificate(inst, Certificate.from_json(read_json(args.certificate)))
    _emit(result.to_dict(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="upex", description="Extend partial upward planar drawings.")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Log to standard error at this level.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="Decide whether an instance is extensible.")
    p.add_argument("file")
    p.add_argument("--engine", default=AUTO, choices=ENGINE_SELECTORS)
    p.add_argument("--cross-check", action="store_true", help="Run every applicable engine and compare.")
    p.add_argument("--dp-cap", type=int, default=DpConfig.max_n, help="Largest path or cycle for the table engines.")
    p.add_argument("--out", default=None, help="Write the report here instead of standard output.")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("transform", help="Apply an equivalence-preserving transform.")
    p.add_argument("file")
    p.add_argument("--which", required=True, choices=sorted(TRANSFORMS))
    p.add_argument("--slow-sweep", action="store_true", help="Recompute every line instead of updating.")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("gen", help="Generate a random instance.")
    p.add_argument("--kind", default="st", choices=["st", "path", "cycle"])
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pin-fraction", type=float, default=1.0)
    p.add_argument("--embedded", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--adversarial", action="store_true", help="Perturb the pins; status unknown.")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("draw", help="Decide an instance and write the witness drawing as SVG.")
    p.add_argument("file")
    p.add_argument("svg")
    p.add_argument("--engine", default=AUTO, choices=ENGINE_SELECTORS)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("bench", help="Time an engine on generated instances.")
    p.add_argument("--kind", default="st", choices=["st", "path", "cycle"])
    p.add_argument("--sizes", type=int, nargs="*", default=[])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pin-fraction", type=float, default=0.5)
    p.add_argument("--engine", default=None, choices=ENGINE_SELECTORS)
    p.add_argument("--dp-cap", type=int, default=DpConfig.max_n)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle-check", help="Check a certificate against an instance.")
    p.add_argument("file")
    p.add_argument("certificate")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        configure_logging(getattr(logging, args.log_level))
    try:
        return args.func(args)
    except (UpexError, OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"upex {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

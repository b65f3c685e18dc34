"""approx-lab command line: solve, compare, batch, trace, validate, serve.

Exit codes partition outcomes for scripting: 0 success, 1 internal
failure, 2 invalid input, 3 solver refusal (cap reached, triangle
inequality violated, or an empirical ratio past its proven bound).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields
from typing import Any

from . import api
from .errors import (
    ApproxLabError,
    BoundViolationError,
    CapExceededError,
    DisconnectedGraphError,
    InvalidInstanceError,
    MetricViolationError,
    UnknownAlgorithmError,
)
from .harness import GeneratorConfig, records_to_csv, run_batch
from .instances import read_instance, write_instance
from .trace import parse_trace, replay_trace

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_REFUSED = 3

_INPUT_ERRORS = (InvalidInstanceError, UnknownAlgorithmError)
_REFUSAL_ERRORS = (
    CapExceededError,
    MetricViolationError,
    DisconnectedGraphError,
    BoundViolationError,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="approx-lab",
        description="Approximation algorithms with exact oracles, ratio experiments, and replayable traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, *, needs_instance: bool) -> None:
        p.add_argument("--instance", required=needs_instance, help="instance document path")
        p.add_argument("--algorithm", help="algorithm name (see README for the catalog)")
        p.add_argument("--epsilon", type=float, help="accuracy parameter for FPTAS algorithms")
        p.add_argument("--root", type=int, help="TSP root vertex (default 0)")
        p.add_argument("--seed", type=int, help="override the batch config seed")
        p.add_argument("--out", help="output file path")
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--force", action="store_true", help="run TSP without the metric guarantee")

    add_common(sub.add_parser("solve", help="run one algorithm on one instance"), needs_instance=True)
    add_common(sub.add_parser("compare", help="approximation vs exact oracle on one instance"), needs_instance=True)
    add_common(sub.add_parser("batch", help="seeded ratio experiment from a batch config"), needs_instance=True)
    trace = sub.add_parser("trace", help="record a step-by-step execution trace")
    add_common(trace, needs_instance=True)
    trace.add_argument("--verify-replay", action="store_true", help="replay the trace and check the certificate")
    add_common(sub.add_parser("validate", help="check an instance document"), needs_instance=True)
    serve = sub.add_parser("serve", help="local HTTP API for the companion UI")
    serve.add_argument("--port", type=int, default=7878)
    serve.add_argument("--host", default="127.0.0.1")

    return parser


def _render_certificate(problem: str, certificate: dict[str, Any] | None) -> str:
    if certificate is None:
        return "none (value-only result)"
    if problem == "vertex_cover":
        return "cover {" + ", ".join(map(str, certificate["cover"])) + "}"
    if problem in ("tsp", "hamiltonian"):
        order = certificate["order"]
        return "tour " + " -> ".join(map(str, order + order[:1]))
    if problem == "subset_sum":
        return "witness {" + ", ".join(map(str, certificate["elements"])) + "}"
    if problem == "knapsack":
        return "items {" + ", ".join(map(str, certificate["items"])) + "}"
    return json.dumps(certificate)


def _machine(document: dict[str, Any]) -> str:
    return json.dumps(document, separators=(",", ":"))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def _require_algorithm(args) -> str:
    if not args.algorithm:
        raise InvalidInstanceError("--algorithm is required")
    return args.algorithm


def _options(args) -> dict[str, Any]:
    return {"epsilon": args.epsilon, "root": args.root, "force": args.force}


def _cmd_solve(args) -> int:
    instance = read_instance(args.instance)
    document = api.solve_document(_require_algorithm(args), instance, **_options(args))
    if args.format == "machine":
        _emit(_machine(document), args.out)
        return EXIT_OK
    lines = [
        f"problem: {document['problem']}",
        f"algorithm: {document['algorithm']}",
        f"value: {document['value']}",
        f"certificate: {_render_certificate(document['problem'], document['certificate'])}",
        f"bound: {document['bound'] if document['guaranteed'] else 'void (forced run)'}",
    ]
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    instance = read_instance(args.instance)
    document = api.compare_document(_require_algorithm(args), instance, **_options(args))
    if args.format == "machine":
        _emit(_machine(document), args.out)
    else:
        lines = [
            f"problem: {document['problem']}",
            f"approx: {document['approx']}",
            f"exact: {document['exact']}",
            f"ratio: {document['ratio']:.6f}",
            f"bound: {document['bound']}",
            f"within bound: {'yes' if document['within_bound'] else 'NO'}",
        ]
        _emit("\n".join(lines), args.out)
    if not document["within_bound"]:
        print("error: ratio exceeds the proven bound", file=sys.stderr)
        return EXIT_REFUSED
    return EXIT_OK


_BATCH_ONLY_KEYS = {"kind", "algorithm", "epsilon"}


def _read_batch_config(args) -> tuple[GeneratorConfig, str, float | None]:
    try:
        with open(args.instance, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise InvalidInstanceError(f"no such batch config: {args.instance}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInstanceError(f"malformed batch config: {exc}") from None
    if not isinstance(doc, dict) or doc.get("kind") != "batch":
        raise InvalidInstanceError('batch config must be an object with "kind": "batch"')
    known = {f.name for f in fields(GeneratorConfig)} | _BATCH_ONLY_KEYS
    unknown = set(doc) - known
    if unknown:
        raise InvalidInstanceError(f"unknown batch config fields: {sorted(unknown)}")
    algorithm = args.algorithm or doc.get("algorithm")
    if not algorithm:
        raise InvalidInstanceError("batch config needs an algorithm (field or --algorithm)")
    epsilon = args.epsilon if args.epsilon is not None else doc.get("epsilon")
    config_fields = {
        k: v for k, v in doc.items() if k not in _BATCH_ONLY_KEYS
    }
    if args.seed is not None:
        config_fields["seed"] = args.seed
    try:
        config = GeneratorConfig(**config_fields)
    except TypeError as exc:
        raise InvalidInstanceError(f"bad batch config: {exc}") from None
    return config.validate(), algorithm, epsilon


def _cmd_batch(args) -> int:
    config, algorithm, epsilon = _read_batch_config(args)
    records, summary = run_batch(config, algorithm, epsilon=epsilon)
    csv_text = records_to_csv(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.format == "machine":
        print(_machine(summary))
    else:
        print(
            f"{summary['count']} instances: mean ratio {summary['mean_ratio']:.6f}, "
            f"max ratio {summary['max_ratio']:.6f}, bound {summary['bound']}, "
            f"violations {summary['violations']}"
        )
    if summary["violations"]:
        print("error: ratio exceeded the proven bound", file=sys.stderr)
        return EXIT_REFUSED
    return EXIT_OK


def _cmd_trace(args) -> int:
    instance = read_instance(args.instance)
    document = api.trace_document(_require_algorithm(args), instance, **_options(args))
    text = _machine(document)
    _emit(text, args.out)
    if args.verify_replay:
        log = parse_trace(text)
        reconstructed = replay_trace(log)
        if reconstructed != log.outcome.certificate:
            print("error: replay does not reconstruct the certificate", file=sys.stderr)
            return EXIT_INTERNAL
        if args.out:  # the document went to the file; confirm on stdout
            print("replay ok")
    return EXIT_OK


def _cmd_validate(args) -> int:
    instance = read_instance(args.instance)
    if args.format == "machine":
        print(_machine({"valid": True, "kind": instance.kind, "canonical": write_instance(instance)}))
    else:
        print(f"valid {instance.kind} instance")
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .server import make_server

    try:
        server = make_server(args.port, args.host)
    except OSError as exc:
        print(f"error: cannot bind port {args.port}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"serving on http://{args.host}:{args.port} (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "compare": _cmd_compare,
    "batch": _cmd_batch,
    "trace": _cmd_trace,
    "validate": _cmd_validate,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _REFUSAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ApproxLabError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

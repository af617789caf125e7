"""Command-line front end: construct, export, measure, verify, predict, bench.

Exit codes: 0 success, 1 usage or environment error, 2 expectation mismatch,
3 non-uniform per-edge counts (the graph is not edge-girth-regular).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, replace

from . import adg, census, predictions
from .automorphisms import (
    EXHAUSTIVE_VERTEX_LIMIT,
    SigmaMap,
    apply_sequence,
    edge_to_base,
    lwenger_relations,
    sampled_edges,
    verify_automorphism,
)
from .census import BaseEdgeOnly, Exhaustive, NonUniformCountsError, Sampled, certify
from .families import Family, FamilySpec, parse_family_spec, relations

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_NONUNIFORM = 3

TABLE_EXHAUSTIVE_CUTOFF = 20_000


@dataclass(frozen=True)
class RunConfig:
    """One census run: what to measure and how."""

    command: str
    family: str
    mode: str = "auto"
    seed: int = 0
    sample_count: int = 256
    workers: int = 1
    output: str | None = None
    expect: tuple[int, int] | None = None


def resolve_workers(flag: int | None) -> int:
    """Explicit --workers wins; else EGR_WORKERS; else all available cores."""
    if flag is not None:
        return flag
    env = os.environ.get("EGR_WORKERS")
    if env:
        return int(env)
    return census.default_workers()


def _emit(text: str, output: str | None) -> None:
    sys.stdout.write(text)
    if output and output != "-":
        with open(output, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _parse_expect(text: str) -> tuple[int, int]:
    fields = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        fields[key.strip()] = int(value)
    try:
        return fields["g"], fields["lambda"]
    except KeyError:
        raise ValueError(f"--expect needs g=<int>,lambda=<int>, got {text!r}") from None


def _census_mode(config: RunConfig, spec: FamilySpec) -> census.CensusMode:
    if config.mode == "exhaustive":
        return Exhaustive()
    if config.mode == "base-edge":
        return BaseEdgeOnly()
    if config.mode == "sampled":
        return Sampled(seed=config.seed, count=config.sample_count)
    return census.auto_mode(spec, census.girth(spec), seed=config.seed)


def cmd_generate(args) -> int:
    spec = parse_family_spec(args.family)
    rel = relations(spec)
    if args.format == "g6":
        _emit(adg.to_graph6(rel) + "\n", args.output)
    else:
        _emit("\n".join(adg.edge_list_lines(rel)) + "\n", args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    config = RunConfig(
        command="certify",
        family=args.family,
        mode=args.mode,
        seed=args.seed,
        sample_count=args.sample_count,
        workers=resolve_workers(args.workers),
        output=args.output,
        expect=_parse_expect(args.expect) if args.expect else None,
    )
    spec = parse_family_spec(config.family)
    mode = _census_mode(config, spec)
    start = time.perf_counter()
    try:
        cert = certify(spec, mode, workers=config.workers)
    except NonUniformCountsError as err:
        json.dump({"error": "non-uniform", "detail": str(err)}, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_NONUNIFORM
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    payload = census.certificate_to_json(
        cert, relations(spec).field, elapsed_ms, config.workers
    )

    expect = config.expect
    if expect is None and args.expect_predicted:
        expect = predictions.predict(spec)
    if expect is not None:
        payload["expected_g"], payload["expected_lambda"] = expect
        payload["match"] = expect == (cert.g, cert.lam)
    _emit(json.dumps(payload, indent=2) + "\n", config.output)
    if expect is not None and not payload["match"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_predict(args) -> int:
    spec = parse_family_spec(args.family)
    g, lam = predictions.predict(spec)
    payload: dict = {
        "family": spec.family.value,
        "q": spec.q,
        "index": spec.index,
        "field": relations(spec).field.to_json(),
        "girth": g,
        "lambda": lam,
    }
    if args.bounds:
        report = predictions.extremal_lower_bounds(spec.q, g, lam)
        if spec.q % 2 and g in (6, 8):
            report = replace(report, sandwich=predictions.sandwich(spec.q, g))
        payload["moore"] = report.moore
        payload["extremal_general"] = report.extremal_general
        payload["extremal_bipartite"] = report.extremal_bipartite
        if report.sandwich is not None:
            payload["sandwich"] = list(report.sandwich)
    if args.turan:
        fam, n = spec.family, spec.index
        wenger_like = fam in (Family.WENGER, Family.WENGER_ALT) and n in (1, 2)
        lie_like = fam in (Family.LIE_M1, Family.LIE_M2)
        if (wenger_like or lie_like) and spec.q % 2:
            ell = 3 if (n == 1 or fam is Family.LIE_M1) else 4
            payload["turan"] = predictions.turan_lower_bound(ell, spec.q)
        else:
            payload["turan"] = None
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(s) for s in text.split(",") if s.strip()]


def cmd_table(args) -> int:
    family = {
        "wenger": Family.WENGER,
        "wenger-alt": Family.WENGER_ALT,
        "lwenger": Family.LINEARIZED,
    }[args.family]
    workers = resolve_workers(args.workers)
    rows = []
    for index in _int_list(args.index):
        for q in _int_list(args.q):
            spec = FamilySpec(family, q, index)
            g_pred, lam_pred = predictions.predict(spec)
            if 2 * q**spec.dimension <= args.cutoff:
                mode: census.CensusMode = Exhaustive()
            else:
                mode = BaseEdgeOnly()
            cert = certify(spec, mode, workers=workers)
            rows.append(
                (
                    spec.label(),
                    cert.v,
                    cert.k,
                    cert.g,
                    cert.lam,
                    lam_pred,
                    cert.mode,
                    "yes" if (cert.g, cert.lam) == (g_pred, lam_pred) else "NO",
                )
            )
    header = ("family", "v", "k", "g", "lambda", "predicted", "mode", "match")
    widths = [
        max(len(str(row[i])) for row in [header, *rows]) for i in range(len(header))
    ]
    lines = []
    for row in [header, *rows]:
        lines.append("  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip())
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_automorphism(args) -> int:
    if args.action != "verify":
        raise ValueError(f"unknown automorphism action {args.action!r}")
    spec = parse_family_spec(args.family)
    if spec.family is not Family.LINEARIZED:
        raise ValueError("explicit automorphisms are implemented for lwenger only")
    m, q = spec.index, spec.q
    rel = lwenger_relations(m, q)
    field = rel.field
    payload: dict = {"family": spec.label(), "mode": args.mode, "ok": True, "counterexample": None}
    maps_checked = 0
    for i in range(m + 2):
        for x in field.elements():
            result = verify_automorphism(rel, SigmaMap(i, x, m), mode=args.mode, seed=args.seed)
            maps_checked += 1
            if not result.ok:
                pt, ln = result.counterexample
                payload.update(
                    ok=False,
                    counterexample={
                        "sigma": {"i": i, "x": x.index},
                        "point": adg.vertex_id(pt, rel),
                        "line": adg.vertex_id(ln, rel),
                    },
                )
                _emit(json.dumps(payload, indent=2) + "\n", args.output)
                return EXIT_ERROR
    base = (adg.vertex_from_id(0, rel), adg.vertex_from_id(field.q**rel.d, rel))
    mode = args.mode
    if mode == "auto":
        mode = "exhaustive" if 2 * q**rel.d <= EXHAUSTIVE_VERTEX_LIMIT else "sampled"
    edge_source = adg.edge_iter(rel) if mode == "exhaustive" else sampled_edges(rel, args.seed)
    edges_checked = 0
    for pt, ln in edge_source:
        maps = edge_to_base((pt, ln), m, q)
        image = (apply_sequence(maps, pt), apply_sequence(maps, ln))
        edges_checked += 1
        if image != base:
            payload.update(
                ok=False,
                counterexample={
                    "edge_to_base": True,
                    "point": adg.vertex_id(pt, rel),
                    "line": adg.vertex_id(ln, rel),
                },
            )
            _emit(json.dumps(payload, indent=2) + "\n", args.output)
            return EXIT_ERROR
    payload["maps_checked"] = maps_checked
    payload["edges_mapped_to_base"] = edges_checked
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    worker_ladder = sorted({1, 2, census.default_workers()})
    lines = []
    for spec_text in args.families:
        config = RunConfig(
            command="bench",
            family=spec_text,
            mode=args.mode,
            seed=args.seed,
            sample_count=args.sample_count,
            output=args.output,
        )
        spec = parse_family_spec(config.family)
        mode = _census_mode(config, spec)
        baseline = None
        for workers in worker_ladder:
            start = time.perf_counter()
            cert = certify(spec, mode, workers=workers)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            lines.append(
                f"{spec.label()}  workers={workers}  mode={cert.mode}  "
                f"lambda={cert.lam}  elapsed_ms={elapsed_ms:.1f}"
            )
            if baseline is None:
                baseline = cert
            elif cert != baseline:
                lines.append(f"MISMATCH across worker counts for {spec.label()}")
                _emit("\n".join(lines) + "\n", args.output)
                return EXIT_ERROR
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egr",
        description="Construct, measure and certify edge-girth-regular graph families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="export a graph as an edge list or graph6")
    gen.add_argument("--family", required=True)
    gen.add_argument("--format", choices=("edges", "g6"), default="edges")
    gen.add_argument("--output", default=None)
    gen.set_defaults(func=cmd_generate)

    cert = sub.add_parser("certify", help="measure (v, k, g, lambda) and verify uniformity")
    cert.add_argument("--family", required=True)
    cert.add_argument(
        "--mode", choices=("auto", "exhaustive", "base-edge", "sampled"), default="auto"
    )
    cert.add_argument("--seed", type=int, default=0)
    cert.add_argument("--sample-count", type=int, default=256)
    cert.add_argument("--workers", type=int, default=None)
    cert.add_argument("--expect", default=None, help="g=<int>,lambda=<int>")
    cert.add_argument(
        "--expect-predicted",
        action="store_true",
        help="compare against the closed-form prediction",
    )
    cert.add_argument("--output", default=None)
    cert.set_defaults(func=cmd_certify)

    pred = sub.add_parser("predict", help="closed-form girth, lambda and bounds")
    pred.add_argument("--family", required=True)
    pred.add_argument("--bounds", action="store_true")
    pred.add_argument("--turan", action="store_true")
    pred.add_argument("--output", default=None)
    pred.set_defaults(func=cmd_predict)

    table = sub.add_parser("table", help="measured vs predicted over a parameter grid")
    table.add_argument("--family", choices=("wenger", "wenger-alt", "lwenger"), required=True)
    table.add_argument("--index", required=True, help="comma-separated n or m values")
    table.add_argument("--q", required=True, help="comma-separated prime powers")
    table.add_argument("--cutoff", type=int, default=TABLE_EXHAUSTIVE_CUTOFF)
    table.add_argument("--workers", type=int, default=None)
    table.add_argument("--output", default=None)
    table.set_defaults(func=cmd_table)

    auto = sub.add_parser("automorphism", help="verify the explicit lwenger automorphisms")
    auto.add_argument("action", choices=("verify",))
    auto.add_argument("--family", required=True)
    auto.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    auto.add_argument("--seed", type=int, default=0)
    auto.add_argument("--output", default=None)
    auto.set_defaults(func=cmd_automorphism)

    bench = sub.add_parser("bench", help="census wall-times across worker counts")
    bench.add_argument("families", nargs="+")
    bench.add_argument(
        "--mode", choices=("auto", "exhaustive", "base-edge", "sampled"), default="auto"
    )
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--sample-count", type=int, default=256)
    bench.add_argument("--output", default=None)
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"egr: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

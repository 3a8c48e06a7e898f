"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 parse error,
3 search budget exceeded or target unreachable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import beams, io as dio, strategies
from .codes import SearchBudgetExceeded, max_cardinality_bound, max_cardinality_bruteforce

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class ExperimentConfig:
    target: str = "1/32"
    degrees: bool = False
    d_min: int = 1
    d_max: int = 20
    methods: list[str] = field(default_factory=lambda: list(strategies.METHODS))
    prior: str = "uniform"
    seed: int = 0
    out: str | None = None
    b_cap: int = 1024

    def target_turns(self) -> Fraction:
        t = dio.parse_fraction(self.target)
        if self.degrees:
            t = t / 360
        if not 0 < t < 1:
            raise dio.ParseError(f"target {self.target} is not inside (0, 1) turn")
        return t

    def check(self) -> None:
        if self.d_min < 1 or self.d_max < self.d_min:
            raise dio.ParseError("delay range must be non-empty and start at >= 1")
        if not self.methods:
            raise dio.ParseError("at least one method is required")
        for m in self.methods:
            if m not in strategies.METHODS:
                raise dio.ParseError(f"unknown method {m!r}")
        self.target_turns()


def _fmt(x) -> str:
    return f"{float(x):.12g}"


def figure2_csv(config: ExperimentConfig) -> str:
    config.check()
    target = config.target_turns()
    prior = dio.load_prior(config.prior)
    buf = io.StringIO()
    header = {k: v for k, v in asdict(config).items() if k != "out"}
    rows = [strategies.duration(method, d, target, prior, b_cap=config.b_cap)
            for method in config.methods for d in range(config.d_min, config.d_max + 1)]
    buf.write("# config: " + json.dumps(header, sort_keys=True) + "\n")
    flagged = [r for r in rows if not r.optimal_regime]
    if flagged:
        ds = ",".join(str(r.d) for r in flagged)
        buf.write(f"# note: non-interactive rows with b > d (d={ds}) lie outside "
                  "the regime where 2b URs is known optimal\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "d", "b", "total_slots", "achieved_width_turns",
                     "achieved_width_degrees"])
    for r in rows:
        writer.writerow([r.method, r.d, r.b, r.total_slots, _fmt(r.achieved_width),
                         _fmt(r.achieved_degrees)])
    return buf.getvalue()


def cmd_validate(args) -> int:
    S = dio.load_beamset(args.beamset)
    defects = beams.validate(S)
    for defect in defects:
        print(defect)
    if defects:
        return EXIT_INVALID
    if not beams.check_theorem1(S):
        print("feedback loop is not a characteristic loop for this delay")
        return EXIT_INVALID
    umap = beams.uncertainty_map(S)
    print(f"ok: b={S.b} d={S.d} URs={len(umap)} component beams={len(umap.components)}")
    return EXIT_OK


def cmd_maxcard(args) -> int:
    bound = max_cardinality_bound(args.b, args.d)
    if args.bruteforce is None:
        print(f"b={args.b} d={args.d} bound={bound}")
        return EXIT_OK
    try:
        oracle = max_cardinality_bruteforce(args.b, args.d, args.bruteforce, budget=args.budget)
    except SearchBudgetExceeded as exc:
        print(f"b={args.b} d={args.d} bound={bound} oracle=budget-exceeded ({exc})")
        return EXIT_BUDGET
    print(f"b={args.b} d={args.d} bound={bound} oracle={oracle} gap={bound - oracle}")
    return EXIT_OK


def _config_from_args(args) -> ExperimentConfig:
    base = {}
    if args.config:
        try:
            base = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise dio.ParseError(f"cannot read config {args.config}: {exc}") from exc
    try:
        config = ExperimentConfig(**base)
    except TypeError as exc:
        raise dio.ParseError(f"bad config keys: {exc}") from exc
    for name in ("target", "d_min", "d_max", "prior", "seed", "out", "b_cap"):
        value = getattr(args, name)
        if value is not None:
            setattr(config, name, value)
    if args.degrees:
        config.degrees = True
    if args.methods:
        config.methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    return config


def cmd_figure2(args) -> int:
    config = _config_from_args(args)
    try:
        text = figure2_csv(config)
    except strategies.TargetUnreachable as exc:
        print(exc, file=sys.stderr)
        return EXIT_BUDGET
    if config.out:
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_simulate(args) -> int:
    S = dio.load_beamset(args.beamset)
    prior = dio.load_prior(args.prior)
    defects = beams.validate(S)
    if defects:
        for defect in defects:
            print(defect)
        return EXIT_INVALID
    exact = beams.expected_beamwidth(S, prior)
    print(f"exact expected width: {dio.fraction_str(exact)} turn "
          f"({float(exact):.8g} turn, {float(exact) * 360:.6g} deg)")
    if args.n > 0:
        mean, se = beams.monte_carlo_beamwidth(S, prior, args.n, args.seed)
        print(f"monte carlo (n={args.n}, seed={args.seed}): {mean:.8g} turn, "
              f"standard error {se:.3g}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    S = dio.load_beamset(args.beamset)
    defects = beams.validate(S)
    if defects:
        for defect in defects:
            print(defect)
        return EXIT_INVALID
    umap = beams.uncertainty_map(S)
    prior = dio.load_prior(args.prior)
    if args.format == "json":
        out = {
            "loop": dio.loop_to_json(umap.loop),
            "component_labels": list(umap.labels),
            "regions": {w: dio.region_to_json(r) for w, r in umap.entries.items()},
        }
        print(json.dumps(out, indent=2))
    else:
        sys.stdout.write(dio.umap_to_csv(umap, prior))
        print("# loop: " + " ".join(umap.loop.words))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delayba", description="Beam alignment with delayed feedback.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a beam set file")
    p.add_argument("beamset")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("maxcard", help="cardinality bound for d-unimodal codes")
    p.add_argument("b", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--bruteforce", type=int, metavar="MAX_LEN",
                   help="also run the exhaustive oracle with this loop-length cap")
    p.add_argument("--budget", type=int, default=5_000_000)
    p.set_defaults(func=cmd_maxcard)

    p = sub.add_parser("figure2", help="BA duration versus delay sweep as CSV")
    p.add_argument("--config", help="JSON file with ExperimentConfig fields")
    p.add_argument("--target", help="target mean width, turns (or degrees with --degrees)")
    p.add_argument("--degrees", action="store_true")
    p.add_argument("--d-min", type=int, dest="d_min")
    p.add_argument("--d-max", type=int, dest="d_max")
    p.add_argument("--methods", help="comma list of " + ",".join(strategies.METHODS))
    p.add_argument("--prior")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--b-cap", type=int, dest="b_cap")
    p.set_defaults(func=cmd_figure2)

    p = sub.add_parser("simulate", help="exact and Monte-Carlo expected width")
    p.add_argument("beamset")
    p.add_argument("--prior", default="uniform")
    p.add_argument("-n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("enumerate", help="dump URs and the feedback loop")
    p.add_argument("beamset")
    p.add_argument("--prior", default="uniform")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except dio.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

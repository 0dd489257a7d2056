"""Command-line front end.

Three command families: ``gen`` streams windows of the limit sequence,
``verify`` runs the finite certificate checks and prints their JSON
reports, ``relations`` classifies orbit pairs and prints JSON verdicts.

Exit codes are scripting-stable: 0 means every requested check or label
passed, 1 means a certificate failed or a label went unwitnessed, 2 means
bad parameters or unreadable input, and 3 means an unexpected crash.
Decimal rendering is presentation only; exact num/den strings are always
emitted and are the values of record.
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .certify import (
    REPORT_SCHEMA,
    check_ones_runs,
    check_returns,
    check_rigidity,
    check_shift_defect,
    check_wm_returns,
)
from .ladder import Ladder, LadderError, ladder_new
from .relations import (
    DELTA_SEPARATED_WITNESSED,
    INCONCLUSIVE,
    PAIR_RECURRENT_WITNESSED,
    PROXIMAL_WITNESSED,
    NotFoundInHorizonError,
    OrbitSource,
    OrbitView,
    alpha_source,
    classify_pair,
    ones_source,
    thmB_witnesses,
    thmC_witnesses,
    window_source,
    zeros_source,
)
from .seqio import WindowFormatError, dumps_csv, dumps_json, load_window
from .sequence import InvalidSpecError, alpha_window

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CRASH = 3

FULL_GRID_LIMIT = 2_000_001

_KNOWN_LABELS = frozenset(
    {PROXIMAL_WITNESSED, DELTA_SEPARATED_WITNESSED, PAIR_RECURRENT_WITNESSED}
)


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def load_schedule_file(path: str) -> tuple[int, ...]:
    """Read a growth-factor schedule: one integer per line, # comments."""
    entries = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            entries.append(int(line))
        except ValueError:
            raise ValueError(
                f"{path}:{lineno}: schedule entry is not an integer: {raw!r}"
            ) from None
    if not entries:
        raise ValueError(f"{path}: schedule file has no entries")
    return tuple(entries)


@dataclass
class RunConfig:
    """Resolved run settings: defaults, then config file, then flags."""

    schedule: tuple[int, ...] | None = None
    format: str = "csv"
    decimals: int = 0
    parallelism: int = 1

    def make_ladder(self) -> Ladder:
        if self.schedule is None:
            return ladder_new("default-minimal")
        return ladder_new(self.schedule)


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        parser = configparser.ConfigParser()
        if not parser.read(args.config):
            raise ValueError(f"config file not found: {args.config}")
        if not parser.has_section("run"):
            raise ValueError(f"{args.config}: missing [run] section")
        section = parser["run"]
        policy = section.get("ladder_policy", "default-minimal")
        if policy == "explicit":
            path = section.get("ladder_schedule")
            if not path:
                raise ValueError(
                    f"{args.config}: explicit ladder policy needs ladder_schedule"
                )
            cfg.schedule = load_schedule_file(path)
        elif policy != "default-minimal":
            raise ValueError(f"{args.config}: unknown ladder_policy {policy!r}")
        if "format" in section:
            cfg.format = section.get("format")
        if "decimals" in section:
            cfg.decimals = section.getint("decimals")
        if "parallelism" in section:
            cfg.parallelism = section.getint("parallelism")
    if args.ladder_schedule:
        cfg.schedule = load_schedule_file(args.ladder_schedule)
    if args.format:
        cfg.format = args.format
    if args.decimals is not None:
        cfg.decimals = args.decimals
    if args.parallelism is not None:
        cfg.parallelism = args.parallelism
    if cfg.format not in ("csv", "json"):
        raise ValueError(f"unknown output format {cfg.format!r}")
    if cfg.decimals < 0 or cfg.parallelism < 1:
        raise ValueError("decimals must be >= 0 and parallelism >= 1")
    return cfg


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_report(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _cmd_gen(args: argparse.Namespace, cfg: RunConfig) -> int:
    window = alpha_window(cfg.make_ladder(), args.start, args.count)
    if cfg.format == "json":
        text = dumps_json(window)
    else:
        text = dumps_csv(window, decimals=cfg.decimals)
    _emit(text, args.out)
    return EXIT_PASS


def _returns_grid(ladder: Ladder, n: int, samples: int | None) -> list[int]:
    ladder.ensure(n)
    p = ladder.p(n)
    if samples is None:
        if 2 * p + 1 > FULL_GRID_LIMIT:
            raise ValueError(
                f"full grid for level {n} has {2 * p + 1} points; pass --samples"
            )
        return list(range(-p, p + 1))
    step = max(1, (2 * p) // samples)
    grid = list(range(-p, p + 1, step))
    if grid[-1] != p:
        grid.append(p)
    return grid


def _cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    ladder = cfg.make_ladder()
    if args.lemma == "rigidity":
        report = check_rigidity(ladder, args.n, args.count)
    elif args.lemma == "returns":
        grid = _returns_grid(ladder, args.n, args.samples)
        report = check_returns(ladder, args.n, grid)
    elif args.lemma == "ones":
        report = check_ones_runs(ladder, args.n, args.window, mode=args.mode)
    elif args.lemma == "wm":
        report = check_wm_returns(ladder, args.n, eps=args.eps)
    else:
        ladder.ensure(max(args.n, args.m) + 1)
        report = check_shift_defect(ladder, args.n, args.m, args.step)
    _emit_report(report.to_json_dict())
    return EXIT_PASS if report.passed else EXIT_FAIL


def _orbit_source(token: str, cfg: RunConfig) -> OrbitSource:
    if token == "alpha":
        return alpha_source(cfg.make_ladder())
    if token == "ones":
        return ones_source()
    if token == "zeros":
        return zeros_source()
    return window_source(load_window(token))


def _parse_required_labels(text: str | None) -> frozenset | None:
    if text is None:
        return None
    labels = frozenset(part.strip() for part in text.split(",") if part.strip())
    unknown = labels - _KNOWN_LABELS
    if unknown:
        raise ValueError(f"unknown labels: {', '.join(sorted(unknown))}")
    if not labels:
        raise ValueError("--require must name at least one label")
    return labels


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for part in text.split(","):
        left, sep, right = part.partition(":")
        if not sep:
            raise ValueError(f"pair must look like m:n, got {part!r}")
        try:
            pairs.append((int(left), int(right)))
        except ValueError:
            raise ValueError(f"pair must use integers, got {part!r}") from None
    if not pairs:
        raise ValueError("--pairs must name at least one pair")
    return pairs


def _cmd_relations(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.subcommand == "classify":
        required = _parse_required_labels(args.require)
        a = OrbitView(_orbit_source(args.a, cfg), args.shift_a)
        b = OrbitView(_orbit_source(args.b, cfg), args.shift_b)
        verdict = classify_pair(
            a, b, args.delta, args.start, args.horizon, args.k, args.tau,
            cfg.parallelism,
        )
        _emit_report(verdict.to_json_dict())
        if required is not None:
            ok = required <= set(verdict.labels)
        else:
            ok = INCONCLUSIVE not in verdict.labels
        return EXIT_PASS if ok else EXIT_FAIL
    if args.subcommand == "thmB":
        pairs = _parse_pairs(args.pairs)
        orbit = _orbit_source(args.orbit, cfg)
        fixed_point = _orbit_source(args.fixed_point, cfg)
        verdicts = thmB_witnesses(
            orbit, fixed_point, pairs, args.horizon, args.k, args.tau,
            cfg.parallelism,
        )
        _emit_report(
            {
                "schema": REPORT_SCHEMA,
                "kind": "pair-verdict-list",
                "verdicts": [v.to_json_dict() for v in verdicts],
            }
        )
        ok = all(INCONCLUSIVE not in v.labels for v in verdicts)
        return EXIT_PASS if ok else EXIT_FAIL
    orbit = _orbit_source(args.orbit, cfg)
    try:
        verdict = thmC_witnesses(
            orbit, args.q, args.delta, args.horizon, args.k, args.tau,
            cfg.parallelism,
        )
    except NotFoundInHorizonError as exc:
        _emit_report(
            {
                "schema": REPORT_SCHEMA,
                "kind": "error",
                "error": "not-found-in-horizon",
                "message": str(exc),
            }
        )
        return EXIT_FAIL
    _emit_report(verdict.to_json_dict())
    return EXIT_PASS if INCONCLUSIVE not in verdict.labels else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wkseq",
        description="Generate, verify and classify exact shift-orbit data.",
    )
    parser.add_argument("--config", metavar="PATH", help="INI config with a [run] section")
    parser.add_argument("--ladder-schedule", metavar="PATH", help="explicit growth schedule, one integer per line")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--decimals", type=_nonneg_int, help="extra decimal column width for CSV output")
    parser.add_argument("--parallelism", type=_positive_int, help="logical chunk count for searches")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a window of the limit sequence")
    gen.add_argument("--from", dest="start", type=_nonneg_int, default=0)
    gen.add_argument("--len", dest="count", type=_positive_int, required=True)
    gen.add_argument("--out", metavar="PATH")

    verify = sub.add_parser("verify", help="run one finite certificate check")
    vsub = verify.add_subparsers(dest="lemma", required=True)
    rig = vsub.add_parser("rigidity", help="sequence-level near-period bound")
    rig.add_argument("--n", type=_nonneg_int, required=True)
    rig.add_argument("--count", type=_positive_int, required=True)
    ret = vsub.add_parser("returns", help="exact return identities at one level")
    ret.add_argument("--n", type=_nonneg_int, required=True)
    ret.add_argument("--samples", type=_positive_int)
    ones = vsub.add_parser("ones", help="syndetic runs of exact ones")
    ones.add_argument("--n", type=_positive_int, required=True)
    ones.add_argument("--window", type=_positive_int, required=True)
    ones.add_argument("--mode", choices=("auto", "scan", "plateau"), default="auto")
    wm = vsub.add_parser("wm", help="double return at consecutive times")
    wm.add_argument("--n", type=_nonneg_int, required=True)
    wm.add_argument("--eps", type=_fraction_arg)
    sd = vsub.add_parser("shift-defect", help="function-level near-period bound")
    sd.add_argument("--n", type=_nonneg_int, required=True)
    sd.add_argument("--m", type=_nonneg_int, required=True)
    sd.add_argument("--step", type=_fraction_arg, default=Fraction(1))

    rel = sub.add_parser("relations", help="orbit-pair witness searches")
    rsub = rel.add_subparsers(dest="subcommand", required=True)
    cls = rsub.add_parser("classify", help="three-way label for one pair")
    cls.add_argument("--a", required=True, metavar="ORBIT")
    cls.add_argument("--b", required=True, metavar="ORBIT")
    cls.add_argument("--shift-a", type=_nonneg_int, default=0)
    cls.add_argument("--shift-b", type=_nonneg_int, default=0)
    cls.add_argument("--delta", type=_fraction_arg, required=True)
    cls.add_argument("--start", type=_nonneg_int, default=0)
    cls.add_argument("--horizon", type=_nonneg_int, required=True)
    cls.add_argument("--k", type=_positive_int, required=True)
    cls.add_argument("--tau", type=_fraction_arg, required=True)
    cls.add_argument("--require", metavar="LABEL[,LABEL]")
    thb = rsub.add_parser("thmB", help="joint proximity and recurrence per pair")
    thb.add_argument("--orbit", required=True, metavar="ORBIT")
    thb.add_argument("--fixed-point", dest="fixed_point", required=True, metavar="ORBIT")
    thb.add_argument("--pairs", required=True, metavar="M:N[,M:N]")
    thb.add_argument("--horizon", type=_nonneg_int, required=True)
    thb.add_argument("--k", type=_positive_int, required=True)
    thb.add_argument("--tau", type=_fraction_arg, required=True)
    thc = rsub.add_parser("thmC", help="separation through a block pattern")
    thc.add_argument("--orbit", required=True, metavar="ORBIT")
    thc.add_argument("--q", type=_positive_int, required=True)
    thc.add_argument("--delta", type=_fraction_arg, required=True)
    thc.add_argument("--horizon", type=_nonneg_int, required=True)
    thc.add_argument("--k", type=_positive_int, required=True)
    thc.add_argument("--tau", type=_fraction_arg, required=True)
    return parser


def console_main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _resolve_config(args)
        if args.command == "gen":
            return _cmd_gen(args, cfg)
        if args.command == "verify":
            return _cmd_verify(args, cfg)
        return _cmd_relations(args, cfg)
    except NotFoundInHorizonError as exc:
        print(f"unwitnessed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (LadderError, InvalidSpecError, WindowFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # crash guard: keep exit 3 distinct from exit 1
        print(f"unexpected failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CRASH

"""Command-line front end: list, verify and sweep identities."""

from __future__ import annotations

import argparse
import itertools
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .errors import MordellKitError
from .identities import VerificationOutcome, get_record, list_identities, verify
from .identities.registry import RECORDS

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepRange:
    name: str
    start: float
    stop: float
    count: int
    spacing: str = "lin"

    @classmethod
    def parse(cls, text: str) -> "SweepRange":
        parts = text.split(":")
        if len(parts) not in (4, 5):
            raise UsageError(f"bad range {text!r}; expected name:start:stop:count[:lin|log|rand]")
        name, start, stop, count = parts[:4]
        spacing = parts[4] if len(parts) == 5 else "lin"
        try:
            start, stop, count = float(start), float(stop), int(count)
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
        if count < 1:
            raise UsageError(f"range {name}: count must be >= 1")
        if spacing not in ("lin", "log", "rand"):
            raise UsageError(f"range {name}: spacing must be lin, log or rand")
        if spacing == "log" and not (start > 0 and stop > 0):
            raise UsageError(f"range {name}: log spacing needs positive endpoints")
        return cls(name, start, stop, count, spacing)

    def points(self, rng: np.random.Generator) -> list[float]:
        if self.count == 1:
            return [self.start]
        if self.spacing == "log":
            pts = np.geomspace(self.start, self.stop, self.count)
        elif self.spacing == "rand":
            pts = np.sort(rng.uniform(self.start, self.stop, self.count))
        else:
            pts = np.linspace(self.start, self.stop, self.count)
        return [float(v) for v in pts]

    def to_text(self) -> str:
        return f"{self.name}:{self.start!r}:{self.stop!r}:{self.count}:{self.spacing}"


@dataclass
class RunConfig:
    command: str
    ids: list[str]
    params: dict = field(default_factory=dict)
    ranges: list[SweepRange] = field(default_factory=list)
    tol: float | None = None
    fmt: str = "text"
    jobs: int = 1
    seed: int = 0
    timings: bool = False
    out: str | None = None

    def echo(self) -> dict:
        return {
            "command": self.command,
            "ids": list(self.ids),
            "params": dict(self.params),
            "ranges": [r.to_text() for r in self.ranges],
            "tol": self.tol,
            "format": self.fmt,
            "jobs": self.jobs,
            "seed": self.seed,
        }


def _clean(x):
    """JSON-safe copy: non-finite floats become None."""
    if isinstance(x, float):
        return x if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    return x


@dataclass
class ReportDocument:
    version: str
    timestamp: str
    config: dict
    outcomes: list[VerificationOutcome]
    timings: bool = False

    @property
    def summary(self) -> dict:
        asserted = [o for o in self.outcomes if o.asserted]
        rels = [o.rel_diff for o in asserted if o.status != "inconclusive" and math.isfinite(o.rel_diff)]
        return {
            "total": len(self.outcomes),
            "pass": sum(o.status == "pass" for o in asserted),
            "fail": sum(o.status == "fail" for o in asserted),
            "inconclusive": sum(o.status == "inconclusive" for o in asserted),
            "exploratory": len(self.outcomes) - len(asserted),
            "max_rel_diff": max(rels) if rels else 0.0,
        }

    @property
    def exit_status(self) -> int:
        s = self.summary
        return EXIT_OK if s["fail"] == 0 and s["inconclusive"] == 0 else EXIT_FAIL

    def to_dict(self) -> dict:
        return _clean({
            "version": self.version,
            "timestamp": self.timestamp,
            "config": self.config,
            "outcomes": [o.to_dict(timings=self.timings) for o in self.outcomes],
            "summary": self.summary,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        outcomes = [VerificationOutcome.from_dict(_restore(o)) for o in d["outcomes"]]
        timings = any("elapsed" in o for o in d["outcomes"])
        return cls(d["version"], d["timestamp"], d["config"], outcomes, timings)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def _restore(o: dict) -> dict:
    o = dict(o)
    for k in ("lhs", "rhs", "abs_diff", "rel_diff", "lhs_error", "rhs_error"):
        if o.get(k) is None:
            o[k] = math.nan
    return o


def _fmt_value(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(f"{x:.10g}" for x in v) + ")"
    return f"{v:.12g}"


def render_text(report: ReportDocument) -> str:
    head = ["id", "params", "status", "lhs", "rhs", "abs_diff", "rel_diff"]
    if report.timings:
        head.append("elapsed")
    rows = []
    for o in report.outcomes:
        status = o.status if o.asserted else f"{o.status}*"
        pars = " ".join(f"{k}={v:.6g}" for k, v in o.params.items())
        row = [o.identity_id, pars or "-", status, _fmt_value(o.lhs), _fmt_value(o.rhs),
               f"{o.abs_diff:.3e}", f"{o.rel_diff:.3e}"]
        if report.timings:
            row.append(f"{o.elapsed:.3f}s")
        rows.append(row)
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [head] + rows]
    s = report.summary
    lines.append("")
    lines.append(
        f"{s['pass']} passed, {s['fail']} failed, {s['inconclusive']} inconclusive, "
        f"{s['exploratory']} exploratory (*, not asserted); max rel_diff {s['max_rel_diff']:.3e}"
    )
    return "\n".join(lines) + "\n"


def cmd_list() -> str:
    rows = [("id", "citation", "domain", "constraint")]
    for s in list_identities():
        tag = "" if s.asserted else " [exploratory]"
        rows.append((s.id, s.citation + tag, s.domain, s.constraint or "-"))
    w0 = max(len(r[0]) for r in rows)
    return "\n".join(f"{r[0].ljust(w0)}  {r[1]}  |  {r[2]}  |  {r[3]}" for r in rows) + "\n"


def _resolve_ids(ids: list[str]) -> list[str]:
    if ids == ["all"]:
        return sorted(RECORDS)
    unknown = [i for i in ids if i not in RECORDS]
    if unknown:
        raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    return list(ids)


def _params_for(identity_id: str, params: dict) -> dict:
    names = {p.name for p in get_record(identity_id).params}
    return {k: v for k, v in params.items() if k in names}


def build_tasks(config: RunConfig) -> list[tuple[str, dict, float | None]]:
    """Every (identity, point) in deterministic order, validated up front."""
    ids = _resolve_ids(config.ids)
    if config.tol is not None and not config.tol > 0:
        raise UsageError("--tol must be positive")
    tasks = []
    if config.command == "sweep":
        rec = get_record(ids[0])
        free = set(rec.free_params)
        for r in config.ranges:
            if r.name not in free:
                raise UsageError(f"{rec.id}: {r.name} is not a free parameter (free: {', '.join(rec.free_params)})")
        names = [r.name for r in config.ranges]
        if len(set(names)) != len(names):
            raise UsageError("a parameter is swept twice")
        clash = set(names) & set(config.params)
        if clash:
            raise UsageError(f"{', '.join(sorted(clash))} both swept and fixed")
        rng = np.random.default_rng(config.seed)
        grids = [r.points(rng) for r in config.ranges]
        for combo in itertools.product(*grids):
            p = dict(config.params)
            p.update(zip(names, combo))
            tasks.append((rec.id, p, config.tol))
    else:
        declared = set().union(*({p.name for p in get_record(i).params} for i in ids))
        stray = set(config.params) - declared
        if stray:
            raise UsageError(f"no selected identity has parameter(s) {', '.join(sorted(stray))}")
        for i in ids:
            p = config.params if len(ids) == 1 else _params_for(i, config.params)
            tasks.append((i, dict(p), config.tol))
    for i, p, _ in tasks:
        try:
            get_record(i).resolve(p)
        except MordellKitError as exc:
            raise UsageError(str(exc)) from None
    return tasks


def _run_one(task):
    identity_id, params, tol = task
    return verify(identity_id, params, tol)


def run(config: RunConfig) -> ReportDocument:
    tasks = build_tasks(config)
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_run_one, tasks))
    else:
        outcomes = [_run_one(t) for t in tasks]
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return ReportDocument(__version__, stamp, config.echo(), outcomes, config.timings)


def _parse_params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"bad --param {item!r}; expected name=value")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = float(v)
        except ValueError:
            raise UsageError(f"bad value in --param {item!r}") from None
    return out


def _default_jobs() -> int:
    env = os.environ.get("MORDELLKIT_JOBS")
    if not env:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        raise UsageError(f"MORDELLKIT_JOBS must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mordellkit", description="Verify Fourier, Mordell-integral and series identities numerically.")
    ap.add_argument("--version", action="version", version=f"mordellkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="list registered identities")

    def common(p):
        p.add_argument("--param", action="append", metavar="K=V", help="fix a parameter (repeatable)")
        p.add_argument("--tol", type=float, help="comparison tolerance (default: per identity)")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--jobs", type=int, help="worker processes (default: $MORDELLKIT_JOBS or 1)")
        p.add_argument("--seed", type=int, default=0, help="seed for randomly sampled sweep grids")
        p.add_argument("--timings", action="store_true", help="include wall-clock times")

    v = sub.add_parser("verify", help="verify identities at one parameter point")
    v.add_argument("ids", nargs="+", help="identity ids, or 'all'")
    common(v)
    s = sub.add_parser("sweep", help="verify one identity over a parameter grid")
    s.add_argument("id")
    s.add_argument("--range", action="append", required=True, metavar="NAME:START:STOP:COUNT[:lin|log|rand]")
    common(s)
    return ap


def _config_from_args(args) -> RunConfig:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    return RunConfig(
        command=args.command,
        ids=args.ids if args.command == "verify" else [args.id],
        params=_parse_params(args.param),
        ranges=[SweepRange.parse(r) for r in (args.range if args.command == "sweep" else [])],
        tol=args.tol,
        fmt=args.format,
        jobs=jobs,
        seed=args.seed,
        timings=args.timings,
        out=args.out,
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "list":
        sys.stdout.write(cmd_list())
        return EXIT_OK
    try:
        config = _config_from_args(args)
        report = run(config)
    except UsageError as exc:
        print(f"mordellkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json() + "\n" if config.fmt == "json" else render_text(report)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())

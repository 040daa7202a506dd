"""Command line: ``mhdouble verify ...`` and ``mhdouble controls``.

Exit status: 0 when every check passes, 1 on any check failure, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict, dataclass

from .errors import ConfigError, MhaError
from .report import build_document, serialize, write_report
from .scalars import parse_field
from .verify import (
    CORRUPTIONS,
    NEGATIVE_CONTROLS,
    SamplePlan,
    build_instance,
    parse_suite,
    run_negative_control,
    run_suite,
)

SEED_ENV = "MHDOUBLE_SEED"
EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    instance: str = "group"
    group: str = "zn:6"
    field: str = "rational"
    taft_m: int = 2
    taft_i: int = 1
    taft_lambda: int | None = None
    suite: str = "all"
    samples: str = "200"
    seed: int = 0
    window: int = 8
    report: str = "text"
    output: str | None = None
    corrupt: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        return cls(**d)

    def validate(self) -> None:
        if self.instance not in ("group", "qtaft"):
            raise ConfigError(f"--instance must be 'group' or 'qtaft', not {self.instance!r}")
        if self.report not in ("text", "json"):
            raise ConfigError(f"--report must be 'text' or 'json', not {self.report!r}")
        if self.corrupt is not None and self.corrupt not in CORRUPTIONS:
            raise ConfigError(f"--corrupt must be one of {', '.join(CORRUPTIONS)}")
        parse_suite(self.suite)
        self.plan()

    def plan(self) -> SamplePlan:
        if self.samples == "exhaustive":
            return SamplePlan("exhaustive", 0, self.seed, self.window)
        try:
            n = int(self.samples)
        except ValueError:
            raise ConfigError(f"--samples must be 'exhaustive' or a positive integer, not {self.samples!r}") from None
        return SamplePlan("randomized", n, self.seed, self.window)


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def run(config: RunConfig) -> tuple[int, str]:
    """Build the instance, run the suite and render the report.

    Configuration problems raise :class:`ConfigError` (or another library
    error); the caller maps them to exit status 2.
    """
    config.validate()
    field = parse_field(config.field)
    inst = build_instance(
        kind=config.instance, group=config.group, field=field,
        taft_m=config.taft_m, taft_i=config.taft_i, lam=config.taft_lambda,
        window=config.window, corrupt=config.corrupt,
    )
    result = run_suite(inst, config.plan(), config.suite)
    doc = build_document(result, config.suite)
    return (EXIT_PASS if doc["all_pass"] else EXIT_FAIL), serialize(doc, config.report)


def _verify_parser(sub) -> None:
    p = sub.add_parser("verify", help="run a verification suite on one instance")
    p.add_argument("--instance", choices=("group", "qtaft"), default="group")
    p.add_argument("--group", default="zn:6", help="zn:<n>, sym:<n>, dihedral:<n> or z (default zn:6)")
    p.add_argument("--field", "--taft-field", dest="field", default="rational",
                   help="rational or fq:<prime> (default rational)")
    p.add_argument("--taft-m", type=int, default=2)
    p.add_argument("--taft-i", type=int, default=1)
    p.add_argument("--taft-lambda", type=int, default=None,
                   help="explicit λ (integer representative); default: smallest admissible")
    p.add_argument("--truncate", "--window", dest="window", type=int, default=None,
                   help="sampling window for infinite label sets (default 8 for groups, 4 for qtaft)")
    p.add_argument("--suite", default="all",
                   help="comma list of: all, axioms, pairing, twists, module, module_algebra, comodule, "
                        "yd, commutativity, factorization, braided, taft, displays")
    p.add_argument("--samples", default="200", help="'exhaustive' or a sample count (default 200)")
    p.add_argument("--seed", type=int, default=None, help=f"sampling seed (default ${SEED_ENV} or 0)")
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None, help="write the report here instead of stdout")
    p.add_argument("--corrupt", choices=CORRUPTIONS, default=None,
                   help="build a deliberately broken variant (negative control)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mhdouble",
        description="Exact verification of Drinfel'd and Heisenberg doubles of paired multiplier Hopf algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _verify_parser(sub)
    c = sub.add_parser("controls", help="run every negative control and confirm each one is caught")
    c.add_argument("--report", choices=("text", "json"), default="text")
    return parser


def _config_from_args(args) -> RunConfig:
    seed = args.seed if args.seed is not None else default_seed()
    window = args.window if args.window is not None else (4 if args.instance == "qtaft" else 8)
    return RunConfig(
        instance=args.instance, group=args.group, field=args.field,
        taft_m=args.taft_m, taft_i=args.taft_i, taft_lambda=args.taft_lambda,
        suite=args.suite, samples=args.samples, seed=seed, window=window,
        report=args.report, output=args.output, corrupt=args.corrupt,
    )


def _controls(fmt: str) -> tuple[int, str]:
    """Exit 0 iff every corruption makes its target check fail."""
    import json

    rows = []
    ok = True
    for name in NEGATIVE_CONTROLS:
        res = run_negative_control(name)
        failing = [r for r in res.reports if not r.passed]
        caught = bool(failing) and all(r.samples > 0 for r in res.reports)
        ok &= caught
        witness = failing[0].failures[0] if failing and failing[0].failures else None
        rows.append({
            "corruption": name,
            "instance": res.instance.description,
            "failing_checks": [r.name for r in failing],
            "caught": caught,
            "witness": witness,
        })
    if fmt == "json":
        text = json.dumps({"controls": rows, "all_caught": ok}, indent=2, ensure_ascii=False) + "\n"
    else:
        lines = [f"{'corruption':<16} {'caught':<7} failing checks"]
        for r in rows:
            lines.append(f"{r['corruption']:<16} {'yes' if r['caught'] else 'NO':<7} {', '.join(r['failing_checks'])}")
        text = "\n".join(lines) + "\n"
    return (EXIT_PASS if ok else EXIT_FAIL), text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "controls":
            status, text = _controls(args.report)
            write_report(text, None)
            return status
        config = _config_from_args(args)
        status, text = run(config)
        write_report(text, config.output)
        return status
    except MhaError as e:
        print(f"mhdouble: error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

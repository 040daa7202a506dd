"""Report documents: JSON for machines, a fixed-width table for people.

Both renderings are pure functions of the suite result, so identical runs
produce byte-identical output.
"""

from __future__ import annotations

import json
import sys

from .errors import ConfigError
from .verify import SuiteResult

SCHEMA_VERSION = 1


def build_document(result: SuiteResult, suite: str = "all") -> dict:
    inst, plan = result.instance, result.plan
    samples = "exhaustive" if plan.mode == "exhaustive" else plan.count
    return {
        "schema_version": SCHEMA_VERSION,
        "instance": inst.kind,
        "description": inst.description,
        "params": dict(inst.params),
        "field": inst.field.spec(),
        "seed": plan.seed,
        "window": inst.window,
        "samples": samples,
        "suite": suite,
        "corrupt": inst.corrupt,
        "checks": [r.to_dict() for r in result.reports],
        "all_pass": result.all_pass,
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ConfigError(f"unsupported report schema version {doc.get('schema_version')!r}")
    return doc


def to_text(doc: dict) -> str:
    lines = [
        f"instance : {doc['description']}",
        f"params   : " + ", ".join(f"{k}={v}" for k, v in doc["params"].items()),
        f"plan     : samples={doc['samples']} seed={doc['seed']} window={doc['window']} suite={doc['suite']}",
    ]
    if doc.get("corrupt"):
        lines.append(f"corrupt  : {doc['corrupt']}")
    lines.append("")
    lines.append(f"{'check':<48} {'samples':>8} {'failures':>9}  status")
    lines.append("-" * 75)
    for c in doc["checks"]:
        status = "PASS" if c["pass"] else "FAIL"
        lines.append(f"{c['name']:<48} {c['samples']:>8} {c['failure_count']:>9}  {status}")
    lines.append("-" * 75)
    lines.append(f"all checks pass: {'yes' if doc['all_pass'] else 'no'}")
    for c in doc["checks"]:
        if c["notes"]:
            lines.append("")
            lines.append(f"[{c['name']}] notes")
            lines.extend(f"  {n}" for n in c["notes"])
        if c["failures"]:
            lines.append("")
            shown = len(c["failures"])
            lines.append(f"[{c['name']}] first {shown} of {c['failure_count']} failures")
            for f in c["failures"]:
                lines.append(f"  inputs  : {' | '.join(f['inputs'])}")
                lines.append(f"  identity: {f['identity']}")
                lines.append(f"  lhs     : {f['lhs']}")
                lines.append(f"  rhs     : {f['rhs']}")
    return "\n".join(lines) + "\n"


def serialize(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "text":
        return to_text(doc)
    raise ConfigError(f"unknown report format {fmt!r}; use 'text' or 'json'")


def write_report(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise ConfigError(f"cannot write report to {path!r}: {e.strerror}") from None

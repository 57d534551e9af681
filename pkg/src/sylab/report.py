"""Verification reports and their JSON / plain-text renderings."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

CLAIMS = ("t11", "mckay", "awc", "amk", "lemma21", "lemma23", "lemma33-orbits", "sylow-parity")
VERDICTS = ("PASS", "FAIL", "VACUOUS", "ERROR")

_FIELDS = ("schema_version", "claim", "group", "group_hash", "prime", "hypothesis",
           "verdict", "quantities", "witness", "flags", "error", "seconds")


@dataclass
class VerificationReport:
    claim: str
    group: str
    group_hash: str
    prime: int | None
    verdict: str
    hypothesis: str | None = None          # "HOLDS", "FAILS" or None if not applicable
    quantities: dict = field(default_factory=dict)
    witness: dict | None = None
    flags: list = field(default_factory=list)
    error: str | None = None
    seconds: float = 0.0

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "FAIL" and not self.witness:
            raise ValueError("a FAIL verdict needs a witness")

    @property
    def ok(self):
        return self.verdict in ("PASS", "VACUOUS")

    def to_dict(self, timing=True):
        d = {"schema_version": SCHEMA_VERSION}
        for name in _FIELDS[1:]:
            d[name] = getattr(self, name)
        if not timing:
            d.pop("seconds")
        return d

    @classmethod
    def from_dict(cls, d):
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema_version')!r}")
        kw = {k: d[k] for k in _FIELDS[1:] if k in d}
        return cls(**kw)


def report_for(claim, G, p, verdict, **kw):
    return VerificationReport(claim=claim, group=G.name or "group", group_hash=G.content_hash(),
                              prime=p, verdict=verdict, **kw)


@contextmanager
def stopwatch():
    box = {}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["seconds"] = round(time.perf_counter() - t0, 3)


def summarize(reports):
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        counts[r.verdict] += 1
    counts["total"] = len(reports)
    return counts


def exit_code(reports):
    """0 if everything passed or was vacuous, 1 on any FAIL, 2 on ERROR."""
    verdicts = {r.verdict for r in reports}
    if "ERROR" in verdicts:
        return 2
    if "FAIL" in verdicts:
        return 1
    return 0


def to_json(reports, timing=True):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "summary": summarize(reports),
        "reports": [r.to_dict(timing) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def from_json(text):
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported report schema")
    return [VerificationReport.from_dict(d) for d in doc["reports"]]


def _short(quantities, width=60):
    parts = []
    for k, v in quantities.items():
        if isinstance(v, (list, dict)) and len(str(v)) > 24:
            continue
        parts.append(f"{k}={v}")
    s = " ".join(parts)
    return s if len(s) <= width else s[: width - 3] + "..."


def to_text(reports):
    rows = [("group", "p", "claim", "hyp", "verdict", "details")]
    for r in reports:
        detail = r.error if r.verdict == "ERROR" else _short(r.quantities)
        rows.append((r.group, "-" if r.prime is None else str(r.prime), r.claim,
                     r.hypothesis or "-", r.verdict, detail or ""))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = []
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row[:5], widths)) + "  " + row[5])
    s = summarize(reports)
    lines.append(f"{s['total']} checks: {s['PASS']} pass, {s['VACUOUS']} vacuous, "
                 f"{s['FAIL']} fail, {s['ERROR']} error")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def emit_report(reports, fmt="json", path=None, timing=True):
    """Render reports as "json" or "text"; write to ``path`` if given, return the text."""
    if fmt == "json":
        text = to_json(reports, timing)
    elif fmt == "text":
        text = to_text(reports)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text

"""Machine-readable run reports.

Reports serialize deterministically: keys are emitted in sorted order and
every float is rounded to 12 significant digits at construction time, so
re-running with the same configuration reproduces byte-identical output apart
from the timestamp.  The JSON field layout is documented in
docs/report-schema.md; scan grids use the CSV header
``k,p,verdict,witness,min_margin``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from . import __version__
from .certify import Certificate

CSV_HEADER = ("k", "p", "verdict", "witness", "min_margin")


def sig12(x):
    """Round a float to 12 significant digits (the report precision)."""
    if x is None or isinstance(x, (str, bool, int)):
        return x
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(f"{x:.12g}")
    return x


def fmt12(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.12g}"
    return str(x)


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return sig12(obj)


def certificate_dict(cert: Certificate) -> dict:
    out = {
        "status": cert.status.value,
        "window": [sig12(cert.window[0]), sig12(cert.window[1])],
        "guards": {
            name: {
                "status": g.status,
                "justification": g.justification,
                "cutoff": sig12(g.cutoff),
            }
            for name, g in cert.guards.items()
        },
        "witness": sig12(cert.witness),
        "subintervals": cert.subintervals,
        "min_margin": sig12(None if math.isinf(cert.min_margin) else cert.min_margin),
        "precision_used": cert.precision_used,
        "mode": cert.mode,
        "notes": list(cert.notes),
    }
    if cert.links is not None:
        out["links"] = _clean(cert.links)
    return out


@dataclass
class RunReport:
    command: str
    statement: Optional[str] = None
    params: Optional[dict] = None
    mode: Optional[str] = None
    certificate: Optional[dict] = None
    thresholds: Optional[dict] = None
    result: dict = field(default_factory=dict)
    scan_rows: Optional[list] = None
    precision_used: str = "float64-outward"
    tool_version: str = __version__
    timestamp: str = ""

    def __post_init__(self):
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        self.params = _clean(self.params) if self.params else None
        self.result = _clean(self.result)
        self.thresholds = _clean(self.thresholds) if self.thresholds else None

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "statement": self.statement,
            "params": self.params,
            "mode": self.mode,
            "certificate": self.certificate,
            "thresholds": self.thresholds,
            "result": self.result,
            "precision_used": self.precision_used,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }
        if self.scan_rows is not None:
            out["scan"] = _clean(self.scan_rows)
        return out

    # -- renderers ---------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        rows = self.scan_rows
        if rows is None and self.certificate is not None:
            rows = [
                {
                    "k": (self.params or {}).get("k"),
                    "p": (self.params or {}).get("p"),
                    "verdict": self.certificate["status"],
                    "witness": self.certificate.get("witness"),
                    "min_margin": self.certificate.get("min_margin"),
                }
            ]
        for row in rows or []:
            writer.writerow([fmt12(row.get(k)) for k in CSV_HEADER])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"wilkercert {self.tool_version} :: {self.command}"]
        if self.statement:
            lines.append(f"statement: {self.statement}")
        if self.params:
            lines.append("params: " + ", ".join(f"{k}={fmt12(v)}" for k, v in self.params.items()))
        if self.mode:
            lines.append(f"mode: {self.mode}")
        if self.certificate:
            c = self.certificate
            lines.append(f"verdict: {c['status']}")
            lines.append(f"window: [{fmt12(c['window'][0])}, {fmt12(c['window'][1])}]")
            for name, g in c["guards"].items():
                extra = f" (cutoff {fmt12(g['cutoff'])})" if g.get("cutoff") is not None else ""
                lines.append(f"guard {name}: {g['status']}{extra} {g['justification']}".rstrip())
            if c.get("witness") is not None:
                lines.append(f"witness: {fmt12(c['witness'])}")
            if c.get("min_margin") is not None:
                lines.append(f"min margin: {fmt12(c['min_margin'])}")
            lines.append(f"subintervals: {c['subintervals']}")
            for link in c.get("links", []):
                lines.append(
                    f"  link {link['link']}: {link['status']}"
                    + (f" witness={fmt12(link['witness'])}" if link.get("witness") is not None else "")
                )
            for note in c.get("notes", []):
                lines.append(f"note: {note}")
        if self.thresholds:
            lines.append(
                "thresholds: " + ", ".join(f"{k}={fmt12(v)}" for k, v in self.thresholds.items())
            )
        for key, val in self.result.items():
            lines.append(f"{key}: {fmt12(val)}")
        lines.append(f"precision: {self.precision_used}")
        lines.append(f"timestamp: {self.timestamp}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown report format {fmt!r}")


def emit_report(report: RunReport, fmt: str, path: Optional[str] = None) -> str:
    """Render and write a report; returns the rendered payload."""
    payload = report.render(fmt)
    if path is None or path == "-":
        print(payload, end="")
    else:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc}") from exc
    return payload

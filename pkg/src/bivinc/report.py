"""
Rendering of classification reports as Markdown, CSV or JSON.

Markdown uses the tuple notation ``(132,{0,1},{2})`` for patterns because
the ``|`` of the wire format would split table cells.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from bivinc import __version__
from bivinc.enumeration import ClassificationReport, WilfClass
from bivinc.patterns import parse_pattern

FORMATS = ("md", "csv", "json")
CSV_HEADER = ("representative", "terms", "formula_id", "oeis_id", "provenance")


@dataclass
class ReportDocument:
    metadata: dict = field(default_factory=dict)
    rows: list[WilfClass] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @classmethod
    def from_classification(cls, report: ClassificationReport) -> ReportDocument:
        meta = {"tool": "bivinc", "version": __version__, "k": report.k, "horizon": report.horizon}
        return cls(meta, list(report.classes), list(report.notes))

    def to_dict(self) -> dict:
        return {
            "metadata": dict(self.metadata),
            "rows": [asdict(r) for r in self.rows],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ReportDocument:
        return cls(
            dict(d.get("metadata", {})),
            [WilfClass(**r) for r in d.get("rows", [])],
            list(d.get("notes", [])),
        )


def tuple_notation(text: str) -> str:
    p = parse_pattern(text)

    def fmt(s):
        return "{" + ",".join(map(str, sorted(s))) + "}" if s else "∅"

    return f"({''.join(map(str, p.sigma))},{fmt(p.X)},{fmt(p.Y)})"


def _source(row: WilfClass) -> str:
    parts = [x for x in (row.formula_id, row.oeis_id) if x]
    return " ".join(parts) if parts else "-"


def render_md(doc: ReportDocument) -> str:
    meta = doc.metadata
    title = f"Wilf classes of bi-vincular patterns of length {meta.get('k', '?')}"
    lines = [
        f"# {title}",
        "",
        f"Horizon {meta.get('horizon', '?')}; {len(doc.rows)} classes.",
        "",
        "| representative | sequence | formula / OEIS | provenance |",
        "|---|---|---|---|",
    ]
    for r in doc.rows:
        rep = tuple_notation(r.representative)
        if r.note:
            rep += " *"
        seq = ", ".join(map(str, r.terms))
        lines.append(f"| {rep} | {seq} | {_source(r)} | {r.provenance} |")
    footnotes = [f"* {r.representative}: {r.note}" for r in doc.rows if r.note]
    if footnotes or doc.notes:
        lines.append("")
        lines.extend(footnotes)
        lines.extend(f"Note: {n}" for n in doc.notes)
    return "\n".join(lines) + "\n"


def render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in doc.rows:
        w.writerow([
            r.representative,
            " ".join(map(str, r.terms)),
            r.formula_id or "",
            r.oeis_id or "",
            r.provenance,
        ])
    return buf.getvalue()


def render_json(doc: ReportDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False) + "\n"


def emit_report(doc: ReportDocument, fmt: str) -> str:
    if fmt == "md":
        return render_md(doc)
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "json":
        return render_json(doc)
    raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")


def parse_json_report(text: str) -> ReportDocument:
    return ReportDocument.from_dict(json.loads(text))

"""Lossless report documents and their JSON/CSV/table renderings.

Rationals are serialized as exact strings ("3", "-1/2"), never floats, and
all orderings are fixed at construction, so emitted documents are
byte-for-byte reproducible and parse back to equal values.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .classify import TheoremReport
from .core import RootSystem
from .linalg import Vector

SCHEMA_VERSION = "1"


def rational_str(x: Fraction) -> str:
    return str(Fraction(x))


def vector_strs(v: Vector) -> tuple[str, ...]:
    return tuple(rational_str(x) for x in v)


def parse_vector(items) -> tuple[str, ...]:
    return tuple(str(Fraction(x)) for x in items)


@dataclass(frozen=True)
class ReportRow:
    index: int
    bourbaki: int
    simple_root: tuple[str, ...]
    m: int
    m_dual: int
    special: bool
    cospecial: bool
    quasi_constant: bool
    dom_eq_levi_dom: bool
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class ReportDocument:
    schema_version: str
    ctype: str
    all_equivalent: bool
    highest_root: tuple[str, ...]
    highest_short: tuple[str, ...]
    rows: tuple[ReportRow, ...]


def document_from_report(s: RootSystem, report: TheoremReport) -> ReportDocument:
    rows = []
    for r in report.rows:
        rows.append(ReportRow(
            index=r.simple_index,
            bourbaki=r.simple_index + 1,
            simple_root=vector_strs(s.simples[r.simple_index]),
            m=r.m,
            m_dual=r.m_dual,
            special=r.special,
            cospecial=r.cospecial,
            quasi_constant=r.quasi_constant,
            dom_eq_levi_dom=r.dom_eq_levi_dom,
            witness=tuple(r.witness.letters) if r.witness is not None else None,
        ))
    return ReportDocument(
        schema_version=SCHEMA_VERSION,
        ctype=str(report.ctype),
        all_equivalent=report.all_equivalent,
        highest_root=vector_strs(report.highest_root),
        highest_short=vector_strs(report.highest_short),
        rows=tuple(rows),
    )


def to_json(doc: ReportDocument) -> str:
    payload = {
        "schema_version": doc.schema_version,
        "ctype": doc.ctype,
        "all_equivalent": doc.all_equivalent,
        "highest_root": list(doc.highest_root),
        "highest_short": list(doc.highest_short),
        "rows": [
            {
                "index": r.index,
                "bourbaki": r.bourbaki,
                "simple_root": list(r.simple_root),
                "m": r.m,
                "m_dual": r.m_dual,
                "special": r.special,
                "cospecial": r.cospecial,
                "quasi_constant": r.quasi_constant,
                "dom_eq_levi_dom": r.dom_eq_levi_dom,
                "witness": list(r.witness) if r.witness is not None else None,
            }
            for r in doc.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> ReportDocument:
    data = json.loads(text)
    rows = tuple(
        ReportRow(
            index=int(r["index"]),
            bourbaki=int(r["bourbaki"]),
            simple_root=parse_vector(r["simple_root"]),
            m=int(r["m"]),
            m_dual=int(r["m_dual"]),
            special=bool(r["special"]),
            cospecial=bool(r["cospecial"]),
            quasi_constant=bool(r["quasi_constant"]),
            dom_eq_levi_dom=bool(r["dom_eq_levi_dom"]),
            witness=tuple(int(x) for x in r["witness"]) if r["witness"] is not None else None,
        )
        for r in data["rows"]
    )
    return ReportDocument(
        schema_version=str(data["schema_version"]),
        ctype=str(data["ctype"]),
        all_equivalent=bool(data["all_equivalent"]),
        highest_root=parse_vector(data["highest_root"]),
        highest_short=parse_vector(data["highest_short"]),
        rows=rows,
    )


_CSV_FIELDS = ["ctype", "index", "bourbaki", "simple_root", "m", "m_dual",
               "special", "cospecial", "quasi_constant", "dom_eq_levi_dom",
               "witness"]


def to_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for r in doc.rows:
        writer.writerow([
            doc.ctype,
            r.index,
            r.bourbaki,
            " ".join(r.simple_root),
            r.m,
            r.m_dual,
            str(r.special).lower(),
            str(r.cospecial).lower(),
            str(r.quasi_constant).lower(),
            str(r.dom_eq_levi_dom).lower(),
            " ".join(str(x) for x in r.witness) if r.witness is not None else "",
        ])
    return buf.getvalue()


def to_table(doc: ReportDocument) -> str:
    header = ["idx", "bourbaki", "simple root", "m", "m_dual", "special",
              "cospecial", "quasi_constant", "dom=levi_dom", "witness"]
    body = []
    for r in doc.rows:
        body.append([
            str(r.index),
            f"a{r.bourbaki}",
            "[" + ", ".join(r.simple_root) + "]",
            str(r.m),
            str(r.m_dual),
            "yes" if r.special else "no",
            "yes" if r.cospecial else "no",
            "yes" if r.quasi_constant else "no",
            "yes" if r.dom_eq_levi_dom else "no",
            "[" + " ".join(str(x) for x in r.witness) + "]" if r.witness is not None else "-",
        ])
    widths = [max(len(header[c]), *(len(row[c]) for row in body)) if body
              else len(header[c]) for c in range(len(header))]
    lines = [
        f"{doc.ctype}: all_equivalent={'yes' if doc.all_equivalent else 'no'}  "
        f"highest_root=[{', '.join(doc.highest_root)}]  "
        f"highest_short=[{', '.join(doc.highest_short)}]",
        "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
    ]
    for row in body:
        lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"

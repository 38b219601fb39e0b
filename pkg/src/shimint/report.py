"""Canonical JSON documents for intersection reports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .dirichlet import LogLinear
from .heegner import HClass, HeegnerInput, Level
from .intersect import IntersectionReport, LocalTerm, TermRow

SCHEMA_VERSION = 1
ETA_NORMALIZED = "eta-normalized"


def rational_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str):
        raise ValueError(f"rational must be a string, got {s!r}")
    return Fraction(s)


def loglinear_to_json(x: LogLinear) -> dict[str, str]:
    return {str(p): rational_str(c) for p, c in x.terms.items()}


def loglinear_from_json(d: dict[str, str]) -> LogLinear:
    return LogLinear({int(p): parse_rational(c) for p, c in d.items()})


def round15(x: float) -> float:
    return float(f"{x:.15g}")


@dataclass(frozen=True)
class ReportDocument:
    input: HeegnerInput
    method: str
    rows: tuple[TermRow, ...]
    prefactor: Fraction
    total: LogLinear
    total_float: float
    h_class: Optional[HClass] = None
    genus_source: Optional[str] = None
    status: str = "ok"
    reason: Optional[str] = None
    warnings: tuple[str, ...] = ()
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_report(cls, r: IntersectionReport) -> "ReportDocument":
        return cls(
            r.input, r.method, r.rows, r.prefactor, r.total, round15(r.total_float),
            r.h_class, r.genus_source, r.status, r.reason, tuple(r.warnings),
        )

    def to_dict(self) -> dict[str, Any]:
        inp = self.input
        return {
            "schema_version": self.schema_version,
            "input": {
                "d1": inp.d1,
                "d2": inp.d2,
                "nplus": inp.level.Nplus,
                "nminus": inp.level.Nminus,
                "m": ETA_NORMALIZED if inp.m is None else inp.m,
            },
            "method": self.method,
            "genus_source": self.genus_source,
            "h_class": None
            if self.h_class is None
            else {"modulus": self.h_class.modulus, "residues": list(self.h_class.residues)},
            "status": self.status,
            "reason": self.reason,
            "rows": [_row_to_dict(row) for row in self.rows],
            "prefactor": rational_str(self.prefactor),
            "total": loglinear_to_json(self.total),
            "total_float": self.total_float,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ReportDocument":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        i = d["input"]
        m = None if i["m"] == ETA_NORMALIZED else int(i["m"])
        inp = HeegnerInput(int(i["d1"]), int(i["d2"]), Level(int(i["nplus"]), int(i["nminus"])), m)
        hc = d.get("h_class")
        return cls(
            input=inp,
            method=d["method"],
            rows=tuple(_row_from_dict(r) for r in d["rows"]),
            prefactor=parse_rational(d["prefactor"]),
            total=loglinear_from_json(d["total"]),
            total_float=float(d["total_float"]),
            h_class=None if hc is None else HClass(int(hc["modulus"]), tuple(int(x) for x in hc["residues"])),
            genus_source=d.get("genus_source"),
            status=d.get("status", "ok"),
            reason=d.get("reason"),
            warnings=tuple(d.get("warnings", ())),
            schema_version=d["schema_version"],
        )

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def _row_to_dict(row: TermRow) -> dict[str, Any]:
    out: dict[str, Any] = {
        "n": row.n,
        "delta": row.delta,
        "delta_plus": row.plus,
        "delta_minus": row.minus,
        "m_plus": row.Mplus,
        "m_minus": row.Mminus,
        "contribution": loglinear_to_json(row.contribution),
    }
    if row.local_terms:
        out["local_terms"] = [
            {"p": t.p, "genus": rational_str(t.genus), "alpha": rational_str(t.alpha)}
            for t in row.local_terms
        ]
    return out


def _row_from_dict(d: dict[str, Any]) -> TermRow:
    terms = tuple(
        LocalTerm(int(t["p"]), parse_rational(t["genus"]), parse_rational(t["alpha"]))
        for t in d.get("local_terms", ())
    )
    return TermRow(
        int(d["n"]), int(d["delta"]), int(d["delta_plus"]), int(d["delta_minus"]),
        int(d["m_plus"]), int(d["m_minus"]), loglinear_from_json(d["contribution"]), terms,
    )


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def render_table(doc: ReportDocument) -> str:
    inp = doc.input
    m = ETA_NORMALIZED if inp.m is None else f"m = {inp.m}"
    lines = [
        f"D1 = {inp.d1}, D2 = {inp.d2}, N+ = {inp.level.Nplus}, N- = {inp.level.Nminus}, {m}",
        f"method: {doc.method}"
        + (f" (genus source: {doc.genus_source})" if doc.genus_source else "")
        + (f", class {doc.h_class}" if doc.h_class else ""),
    ]
    if doc.status != "ok":
        lines.append(f"status: {doc.status} ({doc.reason})")
    header = ("n", "delta", "delta+", "delta-", "M+", "M-", "contribution")
    body = [
        (str(r.n), str(r.delta), str(r.plus), str(r.minus), str(r.Mplus), str(r.Mminus), str(r.contribution))
        for r in doc.rows
    ]
    if body:
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        fmt = "  ".join(f"{{:>{w}}}" for w in widths[:-1]) + "  {}"
        lines.append(fmt.format(*header))
        lines += [fmt.format(*b) for b in body]
    lines.append(f"prefactor: {rational_str(doc.prefactor)}")
    lines.append(f"total: {doc.total}")
    lines.append(f"total (float): {doc.total_float:.15g}")
    lines += [f"warning: {w}" for w in doc.warnings]
    return "\n".join(lines) + "\n"

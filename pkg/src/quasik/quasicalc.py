"""Assembly of the degree-zero coefficient tables.

For each orbit of commuting n-tuples sigma the equivariant K-theory of a
point for Lambda_G(sigma) is the representation ring R Lambda_G(sigma),
free over Z[q_1, q_1^-1, ..., q_n, q_n^-1] with one basis element per
irreducible of the centralizer.  The assembled table records, per orbit,
the rank and the multiset of q-twist exponents of the basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import QuasiError
from .groups import (
    CommTuple,
    GroupTable,
    Subgroup,
    TupleOrbit,
    commuting_tuples,
    contains_conjugate,
    generated_subgroup_of_tuple,
)
from .lambdarep import lambda_basis, lambda_desc

DEFAULT_TUPLE_CAP = 4096
DEFAULT_ORDER_CAP = 48


@dataclass(frozen=True)
class QuasiRecord:
    """One coefficient-ring factor: rank and twist data for a tuple orbit."""

    sigma_labels: tuple[str, ...]
    orbit_size: int
    centralizer_order: int
    rank: int
    twists: tuple[tuple[Fraction, ...], ...]
    orbit: Optional[TupleOrbit] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class QuasiTable:
    group: str
    n: int
    records: tuple[QuasiRecord, ...]
    total_rank: int
    theory: str = "K"


def quasi_coefficients(
    G: GroupTable,
    n: int,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
    max_order: int = DEFAULT_ORDER_CAP,
) -> QuasiTable:
    """One record per orbit of commuting n-tuples, with the free-module rank
    and basis twists of the corresponding representation ring."""
    records = []
    total = 0
    for orbit in commuting_tuples(G, n, cap=tuple_cap):
        sigma = orbit.representative
        desc = lambda_desc(G, sigma, max_order=max_order)
        basis = lambda_basis(desc)
        twists = tuple(b.weight for b in basis)
        rank = len(basis)
        total += rank
        records.append(
            QuasiRecord(
                sigma_labels=tuple(G.label(s) for s in sigma.entries),
                orbit_size=orbit.orbit_size,
                centralizer_order=desc.centralizer.order,
                rank=rank,
                twists=twists,
                orbit=orbit,
            )
        )
    return QuasiTable(group=G.name, n=n, records=tuple(records), total_rank=total)


# -- fixed-point dichotomy -------------------------------------------------------


@dataclass(frozen=True)
class SFixedVerdict:
    """Homotopy type of the auxiliary fixed-point space: empty or a point."""

    empty: bool

    @property
    def label(self) -> str:
        return "Empty" if self.empty else "Contractible"


def s_fixed_predicate(G: GroupTable, sigma: CommTuple, H: Subgroup) -> SFixedVerdict:
    """Empty iff some conjugate of the subgroup generated by the tuple lies in H."""
    gamma = generated_subgroup_of_tuple(G, sigma)
    return SFixedVerdict(empty=contains_conjugate(G, gamma, H))


# -- Laurent-series base change ----------------------------------------------------


def tate_rank_report(table: QuasiTable) -> dict:
    """Ranks after base change to the Laurent-series ring; free-module ranks
    are preserved, so this is bookkeeping only."""
    base = "Z((q))" if table.n == 1 else f"Z((q))^(x{table.n})"
    return {
        "group": table.group,
        "n": table.n,
        "base": base,
        "record_ranks": [r.rank for r in table.records],
        "total_rank": table.total_rank,
    }


def render_tate_report(report: dict) -> str:
    lines = [
        f"base change to {report['base']} for {report['group']} (n={report['n']})",
        f"record ranks: {', '.join(str(r) for r in report['record_ranks']) or '(none)'}",
        f"total rank: {report['total_rank']}",
    ]
    return "\n".join(lines)


# -- serialization ------------------------------------------------------------------


def _record_to_json(rec: QuasiRecord) -> dict:
    return {
        "sigma": list(rec.sigma_labels),
        "orbit_size": rec.orbit_size,
        "centralizer_order": rec.centralizer_order,
        "rank": rec.rank,
        "twists": [[str(w) for w in twist] for twist in rec.twists],
    }


def serialize_quasi(table: QuasiTable, fmt: str = "json") -> bytes:
    """Deterministic byte serialization in 'json' or 'text' format."""
    if fmt == "json":
        doc = {
            "group": table.group,
            "n": table.n,
            "E": table.theory,
            "records": [_record_to_json(r) for r in table.records],
            "total_rank": table.total_rank,
        }
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        return (render_quasi_text(table) + "\n").encode("utf-8")
    raise QuasiError(f"unknown serialization format {fmt!r}")


def render_quasi_text(table: QuasiTable) -> str:
    header = f"coefficients of Q{table.theory}^0_{{{table.n},G}}(pt) for G = {table.group}"
    cols = ["sigma", "orbit", "|C|", "rank", "twists"]
    rows = []
    for rec in table.records:
        twists = " ".join("(" + ",".join(str(w) for w in t) + ")" for t in rec.twists)
        rows.append(
            [
                "(" + ",".join(rec.sigma_labels) + ")",
                str(rec.orbit_size),
                str(rec.centralizer_order),
                str(rec.rank),
                twists,
            ]
        )
    widths = [max(len(r[i]) for r in rows + [cols]) for i in range(len(cols))]
    lines = [header]
    lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    lines.append(f"total rank: {table.total_rank}")
    return "\n".join(lines)


def parse_quasi(data: bytes | str) -> QuasiTable:
    """Parse the JSON serialization back into a QuasiTable."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    doc = json.loads(data)
    records = []
    for rec in doc["records"]:
        records.append(
            QuasiRecord(
                sigma_labels=tuple(rec["sigma"]),
                orbit_size=int(rec["orbit_size"]),
                centralizer_order=int(rec["centralizer_order"]),
                rank=int(rec["rank"]),
                twists=tuple(tuple(Fraction(w) for w in t) for t in rec["twists"]),
            )
        )
    table = QuasiTable(
        group=doc["group"],
        n=int(doc["n"]),
        records=tuple(records),
        total_rank=int(doc["total_rank"]),
        theory=doc.get("E", "K"),
    )
    if table.total_rank != sum(r.rank for r in table.records):
        raise QuasiError("total_rank does not match the records")
    return table

"""Batch command-line front end.

Commands: classes, chartab, gnz, lambda-basis, faithful, sfixed, quasi.
Results go to stdout, errors to stderr; exit codes are 0 (success),
1 (domain error) and 2 (usage error).  Output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO

from .chartable import character_table
from .errors import QuasiError, SelectorError
from .groups import (
    GroupTable,
    build_group,
    conjugacy_classes,
    make_comm_tuple,
    subgroup_from_generators,
    commuting_tuples,
)
from .lambdarep import (
    fixed_part_rep,
    kernel,
    lambda_basis,
    lambda_desc,
    q_twist,
    real_v_sigma,
    v_sigma,
)
from .quasicalc import (
    quasi_coefficients,
    render_quasi_text,
    s_fixed_predicate,
    serialize_quasi,
)

COMMANDS = ("classes", "chartab", "gnz", "lambda-basis", "faithful", "sfixed", "quasi")
CONSTRUCTIONS = ("plain", "q", "fixed", "real")


@dataclass
class CliConfig:
    command: str
    group_spec: str
    n: int = 1
    sigma: tuple[str, ...] = ()
    subgroup: tuple[str, ...] = ()
    rep: Optional[str] = None
    construction: str = "plain"
    fmt: str = "text"
    threads: int = 1
    max_order: int = 48
    tuple_cap: int = field(default=4096)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasik",
        description="exact coefficient tables for twisted equivariant K-theory of finite groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, sigma=False, subgroup=False, rep=False, n=False):
        p.add_argument("--group", required=True, help="builtin name or group file path")
        if n:
            p.add_argument("-n", type=int, default=1, help="tuple length (default 1)")
        if sigma:
            p.add_argument("--sigma", required=True, help="comma-separated element labels")
        if subgroup:
            p.add_argument("--H", dest="subgroup", required=True,
                           help="comma-separated generator labels of the subgroup")
        if rep:
            p.add_argument("--rep", required=True, help="representation label (chiK or regular)")
            p.add_argument("--construction", choices=CONSTRUCTIONS, default="plain",
                           help="plain=(V)_sigma, q=plain+q^-1 twist, fixed=plain+fixed part, real")
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=1, help="accepted for compatibility")
        p.add_argument("--max-order", dest="max_order", type=int, default=48,
                       help="size cap for subgroup/table computations")

    common(sub.add_parser("classes", help="conjugacy classes"))
    common(sub.add_parser("chartab", help="irreducible character table"))
    common(sub.add_parser("gnz", help="orbits of commuting n-tuples"), n=True)
    common(sub.add_parser("lambda-basis", help="free basis with q-twist exponents"), sigma=True)
    common(sub.add_parser("faithful", help="kernel/faithfulness of a twisted representation"),
           sigma=True, rep=True)
    common(sub.add_parser("sfixed", help="fixed-point dichotomy for a subgroup"),
           sigma=True, subgroup=True)
    common(sub.add_parser("quasi", help="full coefficient table"), n=True)
    return parser


def parse_args(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(argv)
    sigma = tuple(s for s in (ns.sigma.split(",") if getattr(ns, "sigma", None) else ()) if s)
    subgroup = tuple(
        s for s in (ns.subgroup.split(",") if getattr(ns, "subgroup", None) else ()) if s
    )
    cfg = CliConfig(
        command=ns.command,
        group_spec=ns.group,
        n=getattr(ns, "n", 1),
        sigma=sigma,
        subgroup=subgroup,
        rep=getattr(ns, "rep", None),
        construction=getattr(ns, "construction", "plain"),
        fmt=ns.fmt,
        threads=ns.threads,
        max_order=ns.max_order,
    )
    cfg.tuple_cap = max(4096, cfg.max_order**2)
    if cfg.n < 1:
        raise SelectorError("-n must be at least 1")
    if cfg.threads < 1:
        raise SelectorError("--threads must be at least 1")
    return cfg


def _lookup_elements(G: GroupTable, labels: Sequence[str]) -> tuple[int, ...]:
    out = []
    for s in labels:
        try:
            out.append(G.index_of(s))
        except KeyError:
            raise SelectorError(
                f"no element labelled {s!r} in {G.name}; labels are: "
                + ", ".join(G.labels)
            ) from None
    return tuple(out)


def _lookup_rep(G: GroupTable, label: str, max_order: int):
    table = character_table(G, max_order=max_order)
    if label == "regular":
        return table.regular_character()
    if label.startswith("chi"):
        try:
            idx = int(label[3:])
        except ValueError:
            idx = -1
        if 0 <= idx < len(table.rows):
            return table.irreducible(idx)
    raise SelectorError(
        f"unknown representation label {label!r}; use chi0..chi{len(table.rows) - 1} or regular"
    )


def run(cfg: CliConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Dispatch a parsed configuration; returns the process exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        G = build_group(cfg.group_spec, max_order=max(cfg.tuple_cap, 10000))
        handler = _HANDLERS[cfg.command]
        handler(cfg, G, out)
        return 0
    except QuasiError as exc:
        print(f"error: {exc}", file=err)
        return 1


def _emit(out: TextIO, cfg: CliConfig, text: str, doc: object) -> None:
    if cfg.fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _cmd_classes(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    classes = conjugacy_classes(G)
    lines = [f"{len(classes)} conjugacy classes of {G.name} (order {G.order})"]
    doc = {"group": G.name, "order": G.order, "classes": []}
    for cls in classes:
        lines.append(f"  {G.label(cls.rep)}: size {cls.size}")
        doc["classes"].append(
            {"rep": G.label(cls.rep), "size": cls.size,
             "members": [G.label(x) for x in cls.members]}
        )
    _emit(out, cfg, "\n".join(lines), doc)


def _cmd_chartab(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    table = character_table(G, max_order=cfg.max_order)
    reps = [G.label(c.rep) for c in table.classes]
    sizes = [str(c.size) for c in table.classes]
    cells = [[v.render() for v in row] for row in table.rows]
    widths = [
        max(len(reps[c]), len(sizes[c]), *(len(cells[r][c]) for r in range(len(cells))))
        for c in range(len(reps))
    ]
    lw = max(len(s) for s in table.labels)
    lines = [f"character table of {G.name} (order {G.order})"]
    lines.append(" " * lw + "  " + "  ".join(r.rjust(w) for r, w in zip(reps, widths)))
    lines.append("size".ljust(lw) + "  " + "  ".join(s.rjust(w) for s, w in zip(sizes, widths)))
    for i, row in enumerate(cells):
        lines.append(
            table.labels[i].ljust(lw) + "  " + "  ".join(v.rjust(w) for v, w in zip(row, widths))
        )
    doc = {
        "group": G.name,
        "classes": [{"rep": r, "size": c.size} for r, c in zip(reps, table.classes)],
        "irreducibles": [
            {"label": table.labels[i], "degree": table.degrees[i], "values": cells[i]}
            for i in range(len(cells))
        ],
    }
    _emit(out, cfg, "\n".join(lines), doc)


def _cmd_gnz(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    orbits = commuting_tuples(G, cfg.n, cap=cfg.tuple_cap)
    lines = [f"{len(orbits)} orbits of commuting {cfg.n}-tuples in {G.name}"]
    doc = {"group": G.name, "n": cfg.n, "orbits": []}
    for orb in orbits:
        labels = [G.label(x) for x in orb.representative.entries]
        lines.append(f"  ({','.join(labels)}) x {orb.orbit_size}")
        doc["orbits"].append({"sigma": labels, "orbit_size": orb.orbit_size})
    _emit(out, cfg, "\n".join(lines), doc)


def _cmd_lambda_basis(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    sigma = make_comm_tuple(G, _lookup_elements(G, cfg.sigma))
    desc = lambda_desc(G, sigma, max_order=cfg.max_order)
    basis = lambda_basis(desc)
    lines = [
        f"basis of R(Lambda) over the torus characters; centralizer order "
        f"{desc.centralizer.order}, rank {len(basis)}"
    ]
    doc = {"group": G.name, "sigma": [G.label(x) for x in sigma.entries], "basis": []}
    for b in basis:
        ws = ", ".join(str(w) for w in b.weight)
        lines.append(f"  ({desc.table.labels[b.lam]}, q^({ws})) x 1")
        doc["basis"].append(
            {"irrep": desc.table.labels[b.lam], "twist": [str(w) for w in b.weight]}
        )
    _emit(out, cfg, "\n".join(lines), doc)


def _cmd_faithful(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    sigma = make_comm_tuple(G, _lookup_elements(G, cfg.sigma))
    desc = lambda_desc(G, sigma, max_order=cfg.max_order)
    chi = _lookup_rep(G, cfg.rep or "", cfg.max_order)
    if cfg.construction == "plain":
        rep = v_sigma(chi, desc)
    elif cfg.construction == "q":
        base = v_sigma(chi, desc)
        rep = base + q_twist(base, -1)
    elif cfg.construction == "fixed":
        rep = v_sigma(chi, desc) + fixed_part_rep(chi, desc)
    else:
        rep = real_v_sigma(chi, desc)
    ker = kernel(rep)
    verdict = "faithful" if ker.is_trivial else "not faithful"
    lines = [rep.render(), f"torus_rank: {ker.torus_rank}"]
    if ker.full_group:
        lines.append("kernel: the whole group acts trivially")
    for a, t in ker.finite_points:
        ts = ", ".join(str(x) for x in t)
        lines.append(f"kernel point: ({desc.cent_group.label(a)}; t = ({ts}))")
    lines.append(verdict)
    doc = {
        "group": G.name,
        "sigma": [G.label(x) for x in sigma.entries],
        "rep": cfg.rep,
        "construction": cfg.construction,
        "components": [
            {
                "irrep": desc.table.labels[c.lam],
                "twist": [str(w) for w in c.weight],
                "multiplicity": m,
            }
            for c, m in rep.components
        ],
        "torus_rank": ker.torus_rank,
        "full_group": ker.full_group,
        "kernel_points": [
            {"element": desc.cent_group.label(a), "t": [str(x) for x in t]}
            for a, t in ker.finite_points
        ],
        "faithful": ker.is_trivial,
    }
    _emit(out, cfg, "\n".join(lines), doc)


def _cmd_sfixed(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    sigma = make_comm_tuple(G, _lookup_elements(G, cfg.sigma))
    H = subgroup_from_generators(G, _lookup_elements(G, cfg.subgroup))
    verdict = s_fixed_predicate(G, sigma, H)
    doc = {
        "group": G.name,
        "sigma": [G.label(x) for x in sigma.entries],
        "H": [G.label(x) for x in H.elements],
        "verdict": verdict.label,
    }
    _emit(out, cfg, verdict.label, doc)


def _cmd_quasi(cfg: CliConfig, G: GroupTable, out: TextIO) -> None:
    table = quasi_coefficients(G, cfg.n, tuple_cap=cfg.tuple_cap, max_order=cfg.max_order)
    if cfg.fmt == "json":
        out.write(serialize_quasi(table, "json").decode("utf-8"))
    else:
        out.write(render_quasi_text(table) + "\n")


_HANDLERS = {
    "classes": _cmd_classes,
    "chartab": _cmd_chartab,
    "gnz": _cmd_gnz,
    "lambda-basis": _cmd_lambda_basis,
    "faithful": _cmd_faithful,
    "sfixed": _cmd_sfixed,
    "quasi": _cmd_quasi,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else list(argv))
    except SelectorError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())

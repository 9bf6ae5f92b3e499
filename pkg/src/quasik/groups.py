"""Finite groups as index tables: construction, conjugacy, centralizers,
subgroup lattices and commuting-tuple orbits.

Elements are indices 0..order-1 with a full multiplication table.  Indexing
is deterministic (permutation groups are sorted by permutation tuple), so
every downstream report is reproducible byte for byte.  All values are
immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import (
    GroupInputError,
    HomomorphismError,
    NonCommutingTupleError,
    SizeLimitError,
)

DEFAULT_ORDER_CAP = 48
DEFAULT_TUPLE_CAP = 4096
DEFAULT_CLOSURE_CAP = 10000


class GroupTable:
    """A finite group on element indices 0..order-1."""

    def __init__(
        self,
        mul_table: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        perms: Optional[Sequence[tuple[int, ...]]] = None,
        validate: bool = False,
    ):
        n = len(mul_table)
        if n == 0:
            raise GroupInputError("group must have at least one element")
        table = tuple(tuple(int(x) for x in row) for row in mul_table)
        for i, row in enumerate(table):
            if len(row) != n or any(x < 0 or x >= n for x in row):
                raise GroupInputError(f"multiplication table row {i} malformed")
            if len(set(row)) != n:
                raise GroupInputError(f"row {i} is not a permutation of the elements")
        for j in range(n):
            if len({table[i][j] for i in range(n)}) != n:
                raise GroupInputError(f"column {j} is not a permutation of the elements")
        self.order = n
        self._mul = table
        identity = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise GroupInputError("table has no two-sided identity")
        self.identity = identity
        inv = []
        for a in range(n):
            b = table[a].index(identity)
            if table[b][a] != identity:
                raise GroupInputError(f"element {a} has no two-sided inverse")
            inv.append(b)
        self._inv = tuple(inv)
        if validate:
            for a in range(n):
                for b in range(n):
                    ab = table[a][b]
                    for c in range(n):
                        if table[ab][c] != table[a][table[b][c]]:
                            raise GroupInputError("table is not associative")
        orders = []
        for a in range(n):
            k, x = 1, a
            while x != identity:
                x = table[x][a]
                k += 1
            orders.append(k)
        self.elem_orders = tuple(orders)
        if labels is None:
            labels = [f"x{i}" for i in range(n)]
        if len(labels) != n or len(set(labels)) != n:
            raise GroupInputError("labels must be distinct, one per element")
        self.labels = tuple(str(s) for s in labels)
        self.name = name or f"group{n}"
        self.perms = tuple(perms) if perms is not None else None
        self._label_index = {s: i for i, s in enumerate(self.labels)}
        self._classes: Optional[tuple[ConjugacyClass, ...]] = None
        self._class_of: Optional[tuple[int, ...]] = None
        self._char_table = None

    # -- element operations ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def order_of(self, a: int) -> int:
        return self.elem_orders[a]

    def power(self, a: int, k: int) -> int:
        k %= self.elem_orders[a]
        x = self.identity
        for _ in range(k):
            x = self._mul[x][a]
        return x

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self._mul[self._mul[g][x]][self._inv[g]]

    def commutes(self, a: int, b: int) -> bool:
        return self._mul[a][b] == self._mul[b][a]

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r} in {self.name}") from None

    # -- whole-group queries -------------------------------------------------

    def is_abelian(self) -> bool:
        return all(
            self._mul[a][b] == self._mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def exponent(self) -> int:
        return lcm(*self.elem_orders) if self.order > 1 else 1

    def center(self) -> tuple[int, ...]:
        return tuple(
            a for a in range(self.order) if all(self.commutes(a, b) for b in range(self.order))
        )

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


# -- permutations -----------------------------------------------------------


def parse_permutation(text: str, degree: Optional[int] = None) -> tuple[int, ...]:
    """Parse disjoint-cycle notation, e.g. '(1 2)(3 4)', '(12)(34)' or '()'.

    Points are 1-based in the text.  Multi-digit points need space or comma
    separators inside a cycle.
    """
    text = text.strip()
    if not re.fullmatch(r"(\(\s*\)|\((\s*\d+[\s,]*)+\))+", text):
        raise GroupInputError(f"bad cycle notation: {text!r}")
    cycles: list[list[int]] = []
    for body in re.findall(r"\(([^()]*)\)", text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            points = [int(p) for p in re.split(r"[\s,]+", body) if p]
        else:
            points = [int(ch) for ch in body]
        if any(p < 1 for p in points) or len(set(points)) != len(points):
            raise GroupInputError(f"bad cycle {body!r}")
        cycles.append(points)
    maxpoint = max((p for cyc in cycles for p in cyc), default=0)
    deg = degree if degree is not None else maxpoint
    if maxpoint > deg:
        raise GroupInputError(f"cycle uses point {maxpoint} beyond degree {deg}")
    perm = list(range(deg))
    seen: set[int] = set()
    for cyc in cycles:
        if seen.intersection(cyc):
            raise GroupInputError(f"cycles are not disjoint in {text!r}")
        seen.update(cyc)
        for i, p in enumerate(cyc):
            perm[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(perm)


def cycle_label(perm: Sequence[int]) -> str:
    """Disjoint-cycle notation for a 0-based permutation tuple."""
    deg = len(perm)
    seen = [False] * deg
    spaced = deg > 9
    parts = []
    for start in range(deg):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        pts = [str(p + 1) for p in cyc]
        parts.append("(" + (" ".join(pts) if spaced else "".join(pts)) + ")")
    return "".join(parts) if parts else "()"


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p*q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def group_from_generators(
    generators: Iterable[Sequence[int]],
    degree: Optional[int] = None,
    name: str = "",
    max_order: int = DEFAULT_CLOSURE_CAP,
) -> GroupTable:
    """Closure of a set of permutations under composition.

    Generators are 0-based permutation tuples on a common point set; the
    closure is capped at max_order elements.
    """
    gens = [tuple(g) for g in generators]
    if degree is None:
        degree = max((len(g) for g in gens), default=1)
    padded = []
    for g in gens:
        if sorted(g) != list(range(len(g))):
            raise GroupInputError(f"generator {g} is not a bijection")
        if len(g) > degree:
            raise GroupInputError("generator degree exceeds requested degree")
        padded.append(tuple(g) + tuple(range(len(g), degree)))
    ident = tuple(range(degree))
    found = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in padded:
                q = _compose(p, g)
                if q not in found:
                    if len(found) >= max_order:
                        raise SizeLimitError(
                            f"closure exceeds the size cap of {max_order} elements"
                        )
                    found.add(q)
                    nxt.append(q)
        frontier = nxt
    perms = sorted(found)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_compose(p, q)] for q in perms] for p in perms]
    labels = [cycle_label(p) for p in perms]
    return GroupTable(table, labels=labels, name=name or f"perm{degree}", perms=perms)


# -- builtin groups ----------------------------------------------------------


def cyclic_group(k: int) -> GroupTable:
    if k < 1:
        raise GroupInputError("cyclic order must be positive")
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    labels = ["e"] + [f"g{i}" for i in range(1, k)]
    return GroupTable(table, labels=labels, name=f"cyclic:{k}")


def symmetric_group(k: int) -> GroupTable:
    if k < 1:
        raise GroupInputError("symmetric degree must be positive")
    gens = []
    if k >= 2:
        gens.append(parse_permutation("(1 2)", k))
    if k >= 3:
        gens.append(tuple(list(range(1, k)) + [0]))  # the k-cycle (1 2 ... k)
    return group_from_generators(gens, degree=k, name=f"symmetric:{k}")


def alternating_group(k: int) -> GroupTable:
    if k < 3:
        return group_from_generators([], degree=max(k, 1), name=f"alternating:{k}")
    gens = [parse_permutation(f"(1 2 {m})", k) for m in range(3, k + 1)]
    return group_from_generators(gens, degree=k, name=f"alternating:{k}")


def dihedral_group(k: int) -> GroupTable:
    """Symmetries of the regular k-gon, order 2k, as permutations of vertices."""
    if k < 3:
        raise GroupInputError("dihedral takes k >= 3 (use cyclic:2 for order 2)")
    rot = tuple(list(range(1, k)) + [0])
    refl = tuple(k - 1 - i for i in range(k))
    return group_from_generators([rot, refl], degree=k, name=f"dihedral:{k}")


def quaternion_group() -> GroupTable:
    """The quaternion group of order 8 on units {±1, ±i, ±j, ±k}."""
    units = ["1", "i", "j", "k"]
    # ax * bx -> (sign, unit) for the unit parts
    rule = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    elems.sort(key=lambda e: (units.index(e[1]), -e[0]))
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for sa, ua in elems:
        row = []
        for sb, ub in elems:
            s, u = rule[(ua, ub)]
            row.append(index[(sa * sb * s, u)])
        table.append(row)
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    return GroupTable(table, labels=labels, name="quaternion8")


_BUILTIN_RE = re.compile(r"(cyclic|symmetric|alternating|dihedral):(\d+)$")


def build_group(spec: str, max_order: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    """Resolve a builtin name (cyclic:k, dihedral:k, symmetric:k,
    alternating:k, quaternion8) or a group definition file path."""
    spec = spec.strip()
    if spec == "quaternion8":
        return quaternion_group()
    m = _BUILTIN_RE.fullmatch(spec)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "cyclic":
            return cyclic_group(k)
        if kind == "symmetric":
            return symmetric_group(k)
        if kind == "alternating":
            return alternating_group(k)
        return dihedral_group(k)
    path = Path(spec)
    if path.exists():
        return load_group_file(path, max_order=max_order)
    raise GroupInputError(f"unknown group spec {spec!r} (not a builtin, not a file)")


def load_group_file(path: Path | str, max_order: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    """Load a group from a definition file.

    Format A: 'perm <degree>' then one generator per line in cycle notation.
    Format B: 'table <n>' then n rows of n space-separated indices.
    """
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GroupInputError(f"{path}: empty group file")
    head = lines[0].split()
    if head[0] == "perm" and len(head) == 2:
        degree = int(head[1])
        gens = [parse_permutation(ln, degree) for ln in lines[1:]]
        return group_from_generators(gens, degree=degree, name=path.stem, max_order=max_order)
    if head[0] == "table" and len(head) == 2:
        n = int(head[1])
        if len(lines) != n + 1:
            raise GroupInputError(f"{path}: expected {n} table rows")
        table = [[int(x) for x in ln.split()] for ln in lines[1:]]
        return GroupTable(table, name=path.stem, validate=True)
    raise GroupInputError(f"{path}: first line must be 'perm <degree>' or 'table <n>'")


# -- conjugacy ----------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(G: GroupTable) -> tuple[ConjugacyClass, ...]:
    """Conjugacy classes, sorted by their least element (the representative)."""
    if G._classes is not None:
        return G._classes
    seen = [False] * G.order
    classes = []
    for a in range(G.order):
        if seen[a]:
            continue
        members = sorted({G.conjugate(g, a) for g in range(G.order)})
        for x in members:
            seen[x] = True
        classes.append(ConjugacyClass(rep=members[0], members=tuple(members)))
    result = tuple(classes)
    G._classes = result
    class_of = [0] * G.order
    for ci, cls in enumerate(result):
        for x in cls.members:
            class_of[x] = ci
    G._class_of = tuple(class_of)
    return result


def class_index_map(G: GroupTable) -> tuple[int, ...]:
    """Element index -> index of its conjugacy class."""
    conjugacy_classes(G)
    assert G._class_of is not None
    return G._class_of


# -- subgroups -----------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    parent: GroupTable
    elements: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, x: int) -> bool:
        return x in self._element_set()

    def _element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


def _closure(G: GroupTable, gens: Iterable[int]) -> tuple[int, ...]:
    found = {G.identity}
    frontier = [G.identity]
    gens = sorted(set(gens))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
                y = G.mul(x, G.inverse(g))
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(found))


def subgroup_from_generators(G: GroupTable, gens: Iterable[int]) -> Subgroup:
    gens = tuple(sorted(set(gens)))
    return Subgroup(parent=G, elements=_closure(G, gens), generators=gens)


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(parent=G, elements=(G.identity,), generators=())


def full_subgroup(G: GroupTable) -> Subgroup:
    return subgroup_from_generators(G, range(G.order))


def _witness_generators(G: GroupTable, elements: tuple[int, ...]) -> tuple[int, ...]:
    gens: list[int] = []
    have: tuple[int, ...] = (G.identity,)
    for x in elements:
        if x not in have:
            gens.append(x)
            have = _closure(G, gens)
    return tuple(gens)


def centralizer(G: GroupTable, entries: Sequence[int] | "CommTuple") -> Subgroup:
    """The joint centralizer of a tuple of elements."""
    if isinstance(entries, CommTuple):
        entries = entries.entries
    elems = tuple(
        sorted(
            a
            for a in range(G.order)
            if all(G.commutes(a, s) for s in entries)
        )
    )
    return Subgroup(parent=G, elements=elems, generators=_witness_generators(G, elems))


def subgroups(G: GroupTable, cap: int = DEFAULT_ORDER_CAP) -> tuple[Subgroup, ...]:
    """All subgroups, sorted by (order, element tuple)."""
    if G.order > cap:
        raise SizeLimitError(f"subgroup lattice capped at order {cap}, group has {G.order}")
    triv = (G.identity,)
    found: dict[tuple[int, ...], tuple[int, ...]] = {triv: ()}
    frontier = [triv]
    while frontier:
        nxt = []
        for elems in frontier:
            gens = found[elems]
            inside = set(elems)
            for g in range(G.order):
                if g in inside:
                    continue
                new_gens = tuple(sorted(set(gens) | {g}))
                new_elems = _closure(G, new_gens)
                if new_elems not in found:
                    found[new_elems] = new_gens
                    nxt.append(new_elems)
        frontier = nxt
    out = [
        Subgroup(parent=G, elements=elems, generators=found[elems])
        for elems in sorted(found, key=lambda t: (len(t), t))
    ]
    return tuple(out)


def contains_conjugate(G: GroupTable, gamma: Subgroup, H: Subgroup) -> bool:
    """True iff some conjugate b^-1 * gamma * b lies inside H."""
    hset = H._element_set()
    gens = gamma.generators if gamma.generators else gamma.elements
    for b in range(G.order):
        binv = G.inverse(b)
        if all(G.mul(G.mul(binv, g), b) in hset for g in gens):
            return True
    return False


# -- commuting tuples ----------------------------------------------------------


@dataclass(frozen=True)
class CommTuple:
    entries: tuple[int, ...]
    orders: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)


def make_comm_tuple(G: GroupTable, entries: Sequence[int]) -> CommTuple:
    entries = tuple(int(x) for x in entries)
    if len(entries) < 1:
        raise NonCommutingTupleError("a commuting tuple needs at least one entry")
    for i, a in enumerate(entries):
        if not 0 <= a < G.order:
            raise GroupInputError(f"element index {a} out of range")
        for b in entries[i + 1 :]:
            if not G.commutes(a, b):
                raise NonCommutingTupleError(
                    f"{G.label(a)} and {G.label(b)} do not commute in {G.name}"
                )
    return CommTuple(entries=entries, orders=tuple(G.order_of(x) for x in entries))


@dataclass(frozen=True)
class TupleOrbit:
    representative: CommTuple
    orbit_size: int


def commuting_tuples(G: GroupTable, n: int, cap: int = DEFAULT_TUPLE_CAP) -> tuple[TupleOrbit, ...]:
    """Orbits of simultaneous conjugation on pairwise-commuting n-tuples.

    The representative of each orbit is its lexicographically least member.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if G.order**n > cap:
        raise SizeLimitError(f"|G|^n = {G.order ** n} exceeds the tuple scan cap {cap}")
    tuples: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], candidates: Sequence[int]) -> None:
        if len(prefix) == n:
            tuples.append(prefix)
            return
        for x in candidates:
            extend(prefix + (x,), [y for y in candidates if G.commutes(x, y)])

    extend((), list(range(G.order)))
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for t in tuples:  # already in lexicographic order
        if t in seen:
            continue
        orbit = {tuple(G.conjugate(g, x) for x in t) for g in range(G.order)}
        seen.update(orbit)
        orbits.append(TupleOrbit(representative=make_comm_tuple(G, t), orbit_size=len(orbit)))
    return tuple(orbits)


def generated_subgroup_of_tuple(G: GroupTable, sigma: CommTuple) -> Subgroup:
    """The subgroup generated by the entries of a commuting tuple."""
    return subgroup_from_generators(G, sigma.entries)


# -- subgroup tables and homomorphisms -------------------------------------------


@lru_cache(maxsize=None)
def _subgroup_table_cached(G: GroupTable, elements: tuple[int, ...]) -> tuple[GroupTable, tuple[int, ...]]:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[G.mul(a, b)] for b in elements] for a in elements]
    labels = [G.label(x) for x in elements]
    sub = GroupTable(table, labels=labels, name=f"{G.name}<{len(elements)}>")
    return sub, elements


def subgroup_table(sub: Subgroup) -> tuple[GroupTable, tuple[int, ...]]:
    """Re-index a subgroup as a standalone GroupTable.

    Returns (table, to_parent) where to_parent maps the new indices back to
    parent element indices.  Labels are inherited from the parent.
    """
    return _subgroup_table_cached(sub.parent, sub.elements)


@dataclass(frozen=True)
class Homomorphism:
    source: GroupTable
    target: GroupTable
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]


def hom_from_images(
    source: GroupTable,
    gens: Sequence[int],
    images: Sequence[int],
    target: GroupTable,
) -> Homomorphism:
    """Extend generator images to a homomorphism, verifying multiplicativity."""
    if len(gens) != len(images):
        raise HomomorphismError("need one image per generator")
    full: list[Optional[int]] = [None] * source.order
    full[source.identity] = target.identity
    frontier = [source.identity]
    while frontier:
        nxt = []
        for x in frontier:
            fx = full[x]
            assert fx is not None
            for g, img in zip(gens, images):
                y = source.mul(x, g)
                fy = target.mul(fx, img)
                if full[y] is None:
                    full[y] = fy
                    nxt.append(y)
                elif full[y] != fy:
                    raise HomomorphismError("generator images are inconsistent")
        frontier = nxt
    if any(v is None for v in full):
        raise HomomorphismError("generators do not generate the source group")
    imgs = tuple(int(v) for v in full)  # type: ignore[arg-type]
    for a in range(source.order):
        for b in range(source.order):
            if imgs[source.mul(a, b)] != target.mul(imgs[a], imgs[b]):
                raise HomomorphismError("images do not define a homomorphism")
    return Homomorphism(source=source, target=target, images=imgs)


def identity_hom(G: GroupTable) -> Homomorphism:
    return Homomorphism(source=G, target=G, images=tuple(range(G.order)))


def inclusion_hom(sub: Subgroup) -> tuple[Homomorphism, GroupTable]:
    """The inclusion of a subgroup (re-indexed as its own table) into the parent."""
    table, to_parent = subgroup_table(sub)
    return Homomorphism(source=table, target=sub.parent, images=to_parent), table


@lru_cache(maxsize=None)
def direct_product(G: GroupTable, H: GroupTable, max_order: int = DEFAULT_TUPLE_CAP) -> GroupTable:
    """Direct product with indices packed as a*|H| + b and labels '(la,lb)'.

    Cached per factor pair, so repeated products share one instance (and its
    memoized class/table data).
    """
    if G.order * H.order > max_order:
        raise SizeLimitError(f"product order {G.order * H.order} exceeds cap {max_order}")
    n_h = H.order
    table = []
    for a1 in range(G.order):
        for b1 in range(n_h):
            row = []
            for a2 in range(G.order):
                for b2 in range(n_h):
                    row.append(G.mul(a1, a2) * n_h + H.mul(b1, b2))
            table.append(row)
    labels = [f"({G.label(a)},{H.label(b)})" for a in range(G.order) for b in range(n_h)]
    return GroupTable(table, labels=labels, name=f"{G.name}x{H.name}")

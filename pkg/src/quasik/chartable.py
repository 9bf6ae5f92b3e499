"""Exact irreducible character tables of finite groups.

The table is computed by the classical modular method: simultaneous
eigenvectors of the class-sum matrices over a prime field F_p with
p = 1 (mod exponent), lifted to exact cyclotomic values by counting
eigenvalue multiplicities through a discrete Fourier inversion.  Every
finished table is verified against row and column orthogonality and the
degree sum before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from .cyclotomic import Cyc, as_root_of_unity
from .errors import (
    NonScalarError,
    QuasiError,
    SizeLimitError,
    VirtualCharacterError,
)
from .groups import (
    GroupTable,
    Homomorphism,
    class_index_map,
    conjugacy_classes,
)

DEFAULT_ORDER_CAP = 48


class CharacterTable:
    """Irreducible characters of a finite group, one row per irreducible.

    Rows are sorted by (degree, value vector) with the trivial character
    first, so the layout is deterministic.  Columns follow the conjugacy
    class order (sorted by least member).
    """

    def __init__(self, group: GroupTable, rows: Sequence[tuple[Cyc, ...]]):
        self.group = group
        self.classes = conjugacy_classes(group)
        self.class_of = class_index_map(group)
        self.id_class = self.class_of[group.identity]
        self.rows = tuple(rows)
        self.degrees = tuple(int(r[self.id_class].rational_value()) for r in self.rows)
        self.labels = tuple(f"chi{i}" for i in range(len(self.rows)))
        self.n_classes = len(self.classes)
        self._conj_rows: Optional[tuple[int, ...]] = None

    def value(self, irrep: int, class_index: int) -> Cyc:
        return self.rows[irrep][class_index]

    def value_at_element(self, irrep: int, element: int) -> Cyc:
        return self.rows[irrep][self.class_of[element]]

    def irreducible(self, irrep: int) -> "ClassFunction":
        return ClassFunction(self, self.rows[irrep])

    def trivial_index(self) -> int:
        one = Cyc(1)
        for i, row in enumerate(self.rows):
            if all(v == one for v in row):
                return i
        raise QuasiError("table has no trivial character")  # unreachable

    def regular_character(self) -> "ClassFunction":
        vals = [Cyc(0)] * self.n_classes
        vals[self.id_class] = Cyc(self.group.order)
        return ClassFunction(self, tuple(vals))

    def conjugate_row(self, irrep: int) -> int:
        """Index of the complex-conjugate irreducible."""
        if self._conj_rows is None:
            lookup = {row: i for i, row in enumerate(self.rows)}
            self._conj_rows = tuple(
                lookup[tuple(v.conj() for v in row)] for row in self.rows
            )
        return self._conj_rows[irrep]

    def __repr__(self) -> str:
        return f"CharacterTable({self.group.name}, {len(self.rows)} irreducibles)"


@dataclass(frozen=True)
class ClassFunction:
    table: CharacterTable
    values: tuple[Cyc, ...]

    def __post_init__(self):
        if len(self.values) != self.table.n_classes:
            raise QuasiError("class function has the wrong number of values")

    @property
    def degree(self) -> Cyc:
        return self.values[self.table.id_class]

    def value_at_element(self, element: int) -> Cyc:
        return self.values[self.table.class_of[element]]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if other.table is not self.table:
            raise QuasiError("class functions live on different tables")
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, k: int) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v * k for v in self.values))

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v.conj() for v in self.values))


def class_function_from_element_values(
    table: CharacterTable, values: Sequence[Cyc | int | Fraction]
) -> ClassFunction:
    """Build a class function from one value per element, checking constancy."""
    vals = [Cyc(v) if not isinstance(v, Cyc) else v for v in values]
    if len(vals) != table.group.order:
        raise QuasiError("need one value per group element")
    out = []
    for cls in table.classes:
        v = vals[cls.rep]
        if any(vals[x] != v for x in cls.members):
            raise QuasiError("values are not constant on conjugacy classes")
        out.append(v)
    return ClassFunction(table, tuple(out))


@dataclass(frozen=True)
class RepDecomposition:
    table: CharacterTable
    entries: tuple[tuple[int, int], ...]  # (irreducible index, multiplicity)

    def multiplicity(self, irrep: int) -> int:
        for i, m in self.entries:
            if i == irrep:
                return m
        return 0

    def reassemble(self) -> ClassFunction:
        vals = [Cyc(0)] * self.table.n_classes
        for i, m in self.entries:
            row = self.table.rows[i]
            vals = [v + row[c] * m for c, v in enumerate(vals)]
        return ClassFunction(self.table, tuple(vals))

    @property
    def dimension(self) -> int:
        return sum(m * self.table.degrees[i] for i, m in self.entries)


# -- table construction -----------------------------------------------------


def character_table(G: GroupTable, max_order: int = DEFAULT_ORDER_CAP) -> CharacterTable:
    """The exact irreducible character table of G (cached per group)."""
    if G._char_table is not None:
        return G._char_table
    if G.order > max_order:
        raise SizeLimitError(
            f"character table capped at order {max_order}, group has {G.order}"
        )
    rows = _modular_character_rows(G)
    rows.sort(key=lambda row: (
        row[class_index_map(G)[G.identity]].rational_value(),
        tuple(v.sort_key() for v in row),
    ))
    table = CharacterTable(G, rows)
    _verify_table(table)
    G._char_table = table
    return table


def _smallest_valid_prime(exponent: int, order: int) -> int:
    def is_prime(n: int) -> bool:
        if n < 2:
            return False
        for d in range(2, isqrt(n) + 1):
            if n % d == 0:
                return False
        return True

    p = exponent + 1
    while True:
        if p > 2 * isqrt(order) + 1 and is_prime(p):
            return p
        p += exponent


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise QuasiError("no primitive root found")  # unreachable for prime p


def _nullspace_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right null space of a matrix over F_p."""
    mat = [row[:] for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if mat[i][c] % p), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-mat[i][fc]) % p
        basis.append(vec)
    return basis


def _modular_character_rows(G: GroupTable) -> list[tuple[Cyc, ...]]:
    classes = conjugacy_classes(G)
    class_of = class_index_map(G)
    k = len(classes)
    reps = [c.rep for c in classes]
    sizes = [c.size for c in classes]
    exponent = G.exponent()
    p = _smallest_valid_prime(exponent, G.order)

    # class-sum structure matrices: (A_i)[j][t] = #{x in C_i : x^-1 * z_t in C_j}
    mats = []
    for i in range(k):
        mat = [[0] * k for _ in range(k)]
        for t in range(k):
            z = reps[t]
            for x in classes[i].members:
                j = class_of[G.mul(G.inverse(x), z)]
                mat[j][t] += 1
        mats.append(mat)

    # split the common eigenspaces over F_p
    spaces: list[list[list[int]]] = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for mi in range(k):
        if all(len(space) == 1 for space in spaces):
            break
        mat = mats[mi]
        new_spaces = []
        for space in spaces:
            if len(space) == 1:
                new_spaces.append(space)
                continue
            # images of the space basis under A_i, as columns
            cols = [[sum(mat[r][c] * v[c] for c in range(k)) % p for v in space] for r in range(k)]
            remaining = len(space)
            for lam in range(p):
                shifted = [
                    [(cols[r][c] - lam * space[c][r]) % p for c in range(len(space))]
                    for r in range(k)
                ]
                coeffs = _nullspace_mod_p(shifted, p)
                if not coeffs:
                    continue
                vecs = [
                    [sum(co[c] * space[c][r] for c in range(len(space))) % p for r in range(k)]
                    for co in coeffs
                ]
                new_spaces.append(vecs)
                remaining -= len(vecs)
                if remaining == 0:
                    break
        spaces = new_spaces
    if any(len(space) != 1 for space in spaces):
        raise QuasiError("class algebra failed to split into one-dimensional pieces")

    id_class = class_of[G.identity]
    inv_class = [class_of[G.inverse(r)] for r in reps]
    w = _primitive_root(p)

    rows: list[tuple[Cyc, ...]] = []
    for space in spaces:
        v = space[0]
        scale = pow(v[id_class], -1, p)
        omega = [(x * scale) % p for x in v]  # omega_i = |C_i| chi(g_i) / d  (mod p)
        denom = sum(omega[i] * omega[inv_class[i]] * pow(sizes[i], -1, p) for i in range(k)) % p
        d_sq = (G.order * pow(denom, -1, p)) % p
        d0 = next(d for d in range(1, p) if (d * d) % p == d_sq)
        d = d0 if d0 * d0 <= G.order else p - d0
        if d * d > G.order:
            raise QuasiError("degree lift out of range")

        def chi_mod(elem: int) -> int:
            c = class_of[elem]
            return (d * omega[c] * pow(sizes[c], -1, p)) % p

        row = []
        for t in range(k):
            g = reps[t]
            m = G.order_of(g)
            z_m = pow(w, (p - 1) // m, p)
            z_inv = pow(z_m, -1, p)
            m_inv = pow(m, -1, p)
            value = Cyc(0)
            total = 0
            powers_chi = [chi_mod(G.power(g, u)) for u in range(m)]
            for j in range(m):
                acc = 0
                for u in range(m):
                    acc = (acc + powers_chi[u] * pow(z_inv, j * u, p)) % p
                c_j = (acc * m_inv) % p
                if c_j:
                    total += c_j
                    value = value + Cyc.zeta(m, j) * c_j
            if total != d:
                raise QuasiError("eigenvalue multiplicities do not sum to the degree")
            row.append(value)
        rows.append(tuple(row))
    return rows


def _verify_table(table: CharacterTable) -> None:
    G = table.group
    k = table.n_classes
    if sum(d * d for d in table.degrees) != G.order:
        raise QuasiError("degree check failed")
    for i in range(k):
        for j in range(i, k):
            acc = Cyc(0)
            for c in range(k):
                acc = acc + table.rows[i][c] * table.rows[j][c].conj() * table.classes[c].size
            expected = Cyc(G.order) if i == j else Cyc(0)
            if acc != expected:
                raise QuasiError("row orthogonality failed")
    for c1 in range(k):
        for c2 in range(c1, k):
            acc = Cyc(0)
            for i in range(k):
                acc = acc + table.rows[i][c1] * table.rows[i][c2].conj()
            expected = (
                Cyc(G.order) * Fraction(1, table.classes[c1].size) if c1 == c2 else Cyc(0)
            )
            if acc != expected:
                raise QuasiError("column orthogonality failed")


# -- character-level services --------------------------------------------------


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Cyc:
    """(1/|G|) sum_g chi(g) * conj(psi(g)), computed classwise."""
    if chi.table is not psi.table:
        raise QuasiError("class functions live on different tables")
    table = chi.table
    acc = Cyc(0)
    for c, cls in enumerate(table.classes):
        acc = acc + chi.values[c] * psi.values[c].conj() * cls.size
    return acc * Fraction(1, table.group.order)


def decompose(chi: ClassFunction) -> RepDecomposition:
    """Isotypic multiplicities of a genuine character."""
    table = chi.table
    entries = []
    for i in range(len(table.rows)):
        m = inner_product(chi, table.irreducible(i))
        if not m.is_rational:
            raise VirtualCharacterError("multiplicity is not rational")
        q = m.rational_value()
        if q.denominator != 1 or q < 0:
            raise VirtualCharacterError(
                f"multiplicity of {table.labels[i]} is {q}, not a non-negative integer"
            )
        if q:
            entries.append((i, int(q)))
    dec = RepDecomposition(table, tuple(entries))
    if dec.reassemble().values != chi.values:
        raise VirtualCharacterError("class function is not a sum of irreducibles")
    return dec


def central_scalar(table: CharacterTable, irrep: int, z: int, l: Optional[int] = None) -> tuple[int, int]:
    """The scalar by which z acts on an irreducible, as a root-of-unity exponent.

    Returns (m, l) with chi(z)/chi(e) = zeta_l^m and 0 < m <= l, where l is
    the order of z.  Raises NonScalarError when z does not act as a scalar.
    """
    if l is None:
        l = table.group.order_of(z)
    deg = table.degrees[irrep]
    val = table.value_at_element(irrep, z)
    if val.abs_squared() != deg * deg:
        raise NonScalarError(
            f"{table.group.label(z)} does not act as a scalar on {table.labels[irrep]}"
        )
    scalar = val * Fraction(1, deg)
    m = as_root_of_unity(scalar, l)
    if m is None:
        raise NonScalarError("scalar is not a root of unity of the stated order")
    return m, l


def restrict_character(chi: ClassFunction, phi: Homomorphism) -> ClassFunction:
    """Pull a class function on the target group back along a homomorphism."""
    if phi.target is not chi.table.group:
        raise QuasiError("homomorphism target does not match the class function")
    source_table = character_table(phi.source)
    vals = tuple(chi.value_at_element(phi(cls.rep)) for cls in source_table.classes)
    return ClassFunction(source_table, vals)


def fs_indicator(table: CharacterTable, irrep: int) -> int:
    """Frobenius-Schur indicator: +1 real, 0 complex, -1 quaternionic."""
    G = table.group
    acc = Cyc(0)
    for cls in table.classes:
        sq = G.mul(cls.rep, cls.rep)
        acc = acc + table.value_at_element(irrep, sq) * cls.size
    val = (acc * Fraction(1, G.order)).rational_value()
    if val.denominator != 1 or val not in (-1, 0, 1):
        raise QuasiError("Frobenius-Schur indicator out of range")
    return int(val)

"""Representations of the groups Lambda_G(sigma).

For a pairwise-commuting tuple sigma in a finite group G, Lambda_G(sigma)
is the quotient of C_G(sigma) x R^n by the lattice spanned by the pairs
(sigma_i, -e_i).  Its finite-type representations are modelled here as
multisets of (irreducible of the centralizer, rational weight vector)
pairs: the weight records the rotation speed of the R^n factor, and the
entry sigma_i must act on the irreducible by the scalar e^(2 pi i w_i).

Everything is decided at character level with exact cyclotomic numbers:
restriction, isotypic decomposition, q-twists, duals, fixed parts, real
forms, and an exact kernel/faithfulness solver based on integer Smith
normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Optional, Sequence

from .chartable import (
    CharacterTable,
    ClassFunction,
    central_scalar,
    character_table,
    decompose,
    fs_indicator,
    restrict_character,
)
from .cyclotomic import Cyc, as_root_of_unity
from .errors import NotRealizableError, QuasiError, SizeLimitError
from .groups import (
    CommTuple,
    GroupTable,
    Homomorphism,
    Subgroup,
    centralizer,
    direct_product,
    generated_subgroup_of_tuple,
    make_comm_tuple,
    subgroup_table,
)
from .snf import mat_vec, smith_normal_form

KERNEL_ENUM_CAP = 1 << 20


class LambdaDesc:
    """Precomputed data for one group Lambda_G(sigma)."""

    def __init__(self, group: GroupTable, sigma: CommTuple, max_order: int = 48):
        self.group = group
        self.sigma = sigma
        self.orders = sigma.orders
        self.n = sigma.n
        self.centralizer: Subgroup = centralizer(group, sigma)
        cent_table_group, to_parent = subgroup_table(self.centralizer)
        self.cent_group = cent_table_group
        self.to_parent = to_parent
        self.from_parent = {p: i for i, p in enumerate(to_parent)}
        self.sigma_in_cent = tuple(self.from_parent[s] for s in sigma.entries)
        for s in self.sigma_in_cent:
            if any(not self.cent_group.commutes(s, x) for x in range(self.cent_group.order)):
                raise QuasiError("tuple entry is not central in its centralizer")
        self.table: CharacterTable = character_table(self.cent_group, max_order=max_order)
        # scalar exponents: scalars[lam][i] = m with lambda(sigma_i) = zeta_{l_i}^m
        self.scalars = tuple(
            tuple(
                central_scalar(self.table, lam, s, l)[0]
                for s, l in zip(self.sigma_in_cent, self.orders)
            )
            for lam in range(len(self.table.rows))
        )

    def basis_weight(self, lam: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(m, l) for m, l in zip(self.scalars[lam], self.orders))

    def same_as(self, other: "LambdaDesc") -> bool:
        return self.group is other.group and self.sigma.entries == other.sigma.entries

    def __repr__(self) -> str:
        names = ",".join(self.group.label(s) for s in self.sigma.entries)
        return f"LambdaDesc({self.group.name}; sigma=({names}))"


def lambda_desc(G: GroupTable, sigma: CommTuple | Sequence[int], max_order: int = 48) -> LambdaDesc:
    """Build the centralizer, its character table, and the twist data for sigma."""
    if not isinstance(sigma, CommTuple):
        sigma = make_comm_tuple(G, sigma)
    return LambdaDesc(G, sigma, max_order=max_order)


@dataclass(frozen=True, order=True)
class TwistedIrrep:
    """One irreducible of the centralizer carrying a rational weight vector."""

    lam: int
    weight: tuple[Fraction, ...]


class LambdaRep:
    """A finite-type representation: a canonical multiset of twisted irreducibles."""

    def __init__(self, desc: LambdaDesc, components: Iterable[tuple[TwistedIrrep, int]]):
        self.desc = desc
        merged: dict[TwistedIrrep, int] = {}
        for comp, mult in components:
            if mult < 0:
                raise QuasiError("multiplicities must be non-negative")
            if mult:
                merged[comp] = merged.get(comp, 0) + mult
        for comp in merged:
            self._check_compatible(comp)
        self.components = tuple(sorted(merged.items()))

    def _check_compatible(self, comp: TwistedIrrep) -> None:
        d = self.desc
        if len(comp.weight) != d.n:
            raise QuasiError("weight vector has the wrong arity")
        for i, w in enumerate(comp.weight):
            expected = Fraction(d.scalars[comp.lam][i], d.orders[i])
            if (w - expected).denominator != 1:
                raise QuasiError(
                    f"weight {w} is incompatible with the scalar action "
                    f"{expected} of entry {i} on {d.table.labels[comp.lam]}"
                )

    @property
    def is_empty(self) -> bool:
        return not self.components

    def dimension(self) -> int:
        return sum(self.desc.table.degrees[c.lam] * m for c, m in self.components)

    def __add__(self, other: "LambdaRep") -> "LambdaRep":
        if not self.desc.same_as(other.desc):
            raise QuasiError("representations live over different groups")
        return LambdaRep(self.desc, self.components + other.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LambdaRep):
            return NotImplemented
        return self.desc.same_as(other.desc) and self.components == other.components

    def __hash__(self) -> int:
        return hash((id(self.desc.group), self.desc.sigma.entries, self.components))

    def render(self) -> str:
        d = self.desc
        lines = []
        for comp, mult in self.components:
            ws = ", ".join(str(w) for w in comp.weight)
            lines.append(f"({d.table.labels[comp.lam]}, q^({ws})) x {mult}")
        return "\n".join(lines) if lines else "(empty)"

    def __repr__(self) -> str:
        return f"LambdaRep[{'; '.join(self.render().splitlines())}]"


# -- constructions -------------------------------------------------------------


def lambda_basis(d: LambdaDesc) -> list[TwistedIrrep]:
    """The free basis over the torus character ring: one twisted irreducible
    per irreducible of the centralizer, with weights in (0, 1]."""
    return [TwistedIrrep(lam, d.basis_weight(lam)) for lam in range(len(d.table.rows))]


def _restrict_to_centralizer(chi: ClassFunction, d: LambdaDesc) -> ClassFunction:
    if chi.table.group is not d.group:
        raise QuasiError("character does not live on the ambient group")
    vals = tuple(chi.value_at_element(d.to_parent[cls.rep]) for cls in d.table.classes)
    return ClassFunction(d.table, vals)


def v_sigma(chi: ClassFunction, d: LambdaDesc) -> LambdaRep:
    """Restrict a character of G to the centralizer and give each isotypic
    piece its basis weight."""
    dec = decompose(_restrict_to_centralizer(chi, d))
    rep = LambdaRep(d, [(TwistedIrrep(lam, d.basis_weight(lam)), m) for lam, m in dec.entries])
    want = chi.degree.rational_value()
    if rep.dimension() != want:
        raise QuasiError("dimension bookkeeping failed in v_sigma")  # unreachable
    return rep


def q_twist(rep: LambdaRep, shift: int | Sequence[int]) -> LambdaRep:
    """Tensor by an integer character of the torus: shift every weight."""
    n = rep.desc.n
    if isinstance(shift, int):
        vec = (shift,) * n
    else:
        vec = tuple(int(s) for s in shift)
        if len(vec) != n:
            raise QuasiError("shift vector has the wrong arity")
    return LambdaRep(
        rep.desc,
        [
            (TwistedIrrep(c.lam, tuple(w + s for w, s in zip(c.weight, vec))), m)
            for c, m in rep.components
        ],
    )


def dual(rep: LambdaRep) -> LambdaRep:
    """Complex dual: conjugate each irreducible and negate each weight."""
    d = rep.desc
    return LambdaRep(
        d,
        [
            (TwistedIrrep(d.table.conjugate_row(c.lam), tuple(-w for w in c.weight)), m)
            for c, m in rep.components
        ],
    )


def fixed_part_rep(chi: ClassFunction, d: LambdaDesc) -> LambdaRep:
    """The subrepresentation on which every tuple entry acts as the scalar 1,
    placed at weight zero."""
    dec = decompose(_restrict_to_centralizer(chi, d))
    zero = (Fraction(0),) * d.n
    comps = []
    for lam, m in dec.entries:
        if all(s == l for s, l in zip(d.scalars[lam], d.orders)):
            comps.append((TwistedIrrep(lam, zero), m))
    return LambdaRep(d, comps)


def fixed_space_dimension(chi: ClassFunction, d: LambdaDesc) -> int:
    """dim V^sigma via averaging the character over the subgroup the tuple generates."""
    gamma = generated_subgroup_of_tuple(d.group, d.sigma)
    acc = Cyc(0)
    for x in gamma.elements:
        acc = acc + chi.value_at_element(x)
    val = (acc * Fraction(1, gamma.order)).rational_value()
    if val.denominator != 1:
        raise QuasiError("fixed-space dimension is not an integer")
    return int(val)


# -- kernel solver ---------------------------------------------------------------


@dataclass(frozen=True)
class KernelDescription:
    """Exact kernel of a LambdaRep action.

    finite_points lists the canonical non-identity kernel elements
    (a, t in [0,1)^n) and is complete whenever torus_rank is zero.  A
    positive torus_rank means the kernel contains a positive-dimensional
    subtorus (the representation cannot be faithful); full_group flags the
    completely trivial action.
    """

    torus_rank: int
    finite_points: tuple[tuple[int, tuple[Fraction, ...]], ...]
    full_group: bool = False

    @property
    def is_trivial(self) -> bool:
        return self.torus_rank == 0 and not self.finite_points and not self.full_group


def _scalar_argument(d: LambdaDesc, lam: int, a: int) -> Optional[Fraction]:
    """Fraction r with the action of a on lam equal to e^(2 pi i r), or None."""
    table = d.table
    deg = table.degrees[lam]
    val = table.value_at_element(lam, a)
    if val.abs_squared() != deg * deg:
        return None
    la = table.group.order_of(a)
    m = as_root_of_unity(val * Fraction(1, deg), la)
    if m is None:
        return None
    return Fraction(m % la, la)


def kernel(rep: LambdaRep) -> KernelDescription:
    """Exact kernel of the action, by integer linear algebra.

    An element [a, t] acts on a component (lam, w) by rho_lam(a) * e^(2 pi i w.t),
    so it is in the kernel iff a acts as a scalar on every component and the
    congruences w_j . t = -arg_j(a) (mod 1) hold simultaneously.  Solutions are
    reduced to the canonical fundamental domain t in [0,1)^n.
    """
    d = rep.desc
    n = d.n
    C = d.cent_group
    trivial_row = d.table.trivial_index()
    zero = (Fraction(0),) * n
    comps = [c for c, _ in rep.components]
    if not comps or all(c.lam == trivial_row and c.weight == zero for c in comps):
        return KernelDescription(torus_rank=n, finite_points=(), full_group=True)

    weights = [c.weight for c in comps]
    den = lcm(*(w.denominator for row in weights for w in row), C.exponent())
    A = [[int(w * den) for w in row] for row in weights]
    S, U, V = smith_normal_form(A)
    diag = [S[i][i] for i in range(min(len(S), n))]
    rank = sum(1 for s in diag if s)
    torus_rank = n - rank

    points: list[tuple[int, tuple[Fraction, ...]]] = []
    if torus_rank > 0:
        # rank deficiency already decides non-faithfulness; points are not finite
        return KernelDescription(torus_rank=torus_rank, finite_points=())
    combos = 1
    for s in diag:
        combos *= s
    if combos * C.order > KERNEL_ENUM_CAP:
        raise SizeLimitError("kernel solution enumeration exceeds the cap")
    for a in range(C.order):
        args: list[Fraction] = []
        for c in comps:
            arg = _scalar_argument(d, c.lam, a)
            if arg is None:
                break
            args.append(arg)
        if len(args) != len(comps):
            continue
        b = [int(-arg * den) for arg in args]
        c_vec = mat_vec(U, b)
        if any(c_vec[i] % den for i in range(rank, len(comps))):
            continue
        choices = [
            [Fraction(c_vec[i] + den * k, diag[i]) for k in range(diag[i])] for i in range(n)
        ]
        for y in product(*choices):
            t = [sum(Fraction(V[i][j]) * y[j] for j in range(n)) % den for i in range(n)]
            if all(coord < 1 for coord in t):
                points.append((a, tuple(t)))
    e = C.identity
    finite = tuple(sorted(p for p in points if p != (e, zero)))
    return KernelDescription(torus_rank=0, finite_points=finite)


def is_faithful(rep: LambdaRep) -> bool:
    return kernel(rep).is_trivial


# -- sums, restrictions, real forms ----------------------------------------------


def _product_factor_irrep(
    desc_p: LambdaDesc,
    factor_table: CharacterTable,
    factor_to_parent: tuple[int, ...],
    lam: int,
    left: bool,
    h_order: int,
) -> int:
    """Index in the product centralizer's table of lam boxtimes trivial (or
    trivial boxtimes lam)."""
    local_index = {p: i for i, p in enumerate(factor_to_parent)}
    wanted = []
    for cls in desc_p.table.classes:
        parent_idx = desc_p.to_parent[cls.rep]  # index in G x H
        a, b = divmod(parent_idx, h_order)
        part = a if left else b
        wanted.append(factor_table.value_at_element(lam, local_index[part]))
    wanted_t = tuple(wanted)
    for i, row in enumerate(desc_p.table.rows):
        if row == wanted_t:
            return i
    raise QuasiError("factor irreducible not found in the product table")  # unreachable


def external_sum(rep_g: LambdaRep, rep_h: LambdaRep) -> LambdaRep:
    """Direct sum over the product group: components re-expressed over
    C_{GxH}(sigma, tau) = C_G(sigma) x C_H(tau)."""
    dg, dh = rep_g.desc, rep_h.desc
    if dg.n != dh.n:
        raise QuasiError("tuple arities differ")
    G, H = dg.group, dh.group
    P = direct_product(G, H)
    pair = tuple(
        s * H.order + t for s, t in zip(dg.sigma.entries, dh.sigma.entries)
    )
    dp = lambda_desc(P, pair)
    if dp.centralizer.order != dg.centralizer.order * dh.centralizer.order:
        raise QuasiError("product centralizer is not the product of centralizers")
    comps: list[tuple[TwistedIrrep, int]] = []
    for c, m in rep_g.components:
        lam_p = _product_factor_irrep(dp, dg.table, dg.to_parent, c.lam, True, H.order)
        comps.append((TwistedIrrep(lam_p, c.weight), m))
    for c, m in rep_h.components:
        lam_p = _product_factor_irrep(dp, dh.table, dh.to_parent, c.lam, False, H.order)
        comps.append((TwistedIrrep(lam_p, c.weight), m))
    return LambdaRep(dp, comps)


def restrict_lambda(
    phi: Homomorphism, tau: CommTuple | Sequence[int], chi: ClassFunction
) -> tuple[LambdaRep, LambdaRep, bool]:
    """Compare pulling back along Lambda_H(tau) -> Lambda_G(phi tau) with the
    direct construction from the restricted character.

    Returns (pulled_back, direct, equal); the two sides agree as multisets.
    """
    H, G = phi.source, phi.target
    if chi.table.group is not G:
        raise QuasiError("character does not live on the homomorphism target")
    if not isinstance(tau, CommTuple):
        tau = make_comm_tuple(H, tau)
    sigma = make_comm_tuple(G, tuple(phi(t) for t in tau.entries))
    dg = lambda_desc(G, sigma)
    dh = lambda_desc(H, tau)

    upstairs = v_sigma(chi, dg)
    comps: list[tuple[TwistedIrrep, int]] = []
    for c, m in upstairs.components:
        vals = []
        for cls in dh.table.classes:
            g_elem = phi(dh.to_parent[cls.rep])
            vals.append(dg.table.value_at_element(c.lam, dg.from_parent[g_elem]))
        dec = decompose(ClassFunction(dh.table, tuple(vals)))
        for mu, mult in dec.entries:
            comps.append((TwistedIrrep(mu, c.weight), m * mult))
    pulled = LambdaRep(dh, comps)
    direct = v_sigma(restrict_character(chi, phi), dh)
    return pulled, direct, pulled == direct


def real_v_sigma(chi: ClassFunction, d: LambdaDesc) -> LambdaRep:
    """Twist of a complexified real representation: the twisted restriction
    plus its complex dual; complex dimension doubles."""
    table = chi.table
    if chi.conj().values != chi.values:
        raise NotRealizableError("character is not self-dual")
    dec = decompose(chi)
    for lam, m in dec.entries:
        if fs_indicator(table, lam) == -1 and m % 2:
            raise NotRealizableError(
                f"quaternionic constituent {table.labels[lam]} has odd multiplicity"
            )
    base = v_sigma(chi, d)
    return base + dual(base)


@dataclass(frozen=True)
class RealBasisEntry:
    """One real irreducible of the centralizer with its twisted lift."""

    constituents: tuple[int, ...]  # complex irreducibles of the complexification
    indicator: int
    dimension: int  # complex dimension of the lifted object
    rep: LambdaRep


def real_basis(d: LambdaDesc) -> list[RealBasisEntry]:
    """Free basis data over the real torus character ring: one entry per real
    irreducible of the centralizer.

    For a nontrivial tuple each entry is (complexification at basis weights)
    plus its dual, with twice the complexification dimension; for the trivial
    tuple the entry keeps its underlying space and dimension.
    """
    table = d.table
    sigma_trivial = all(s == d.cent_group.identity for s in d.sigma_in_cent)
    seen: set[int] = set()
    entries = []
    for lam in range(len(table.rows)):
        if lam in seen:
            continue
        ind = fs_indicator(table, lam)
        conj = table.conjugate_row(lam)
        if ind == 0:
            constituents = tuple(sorted((lam, conj)))
            seen.update(constituents)
            counts = {lam: 1, conj: 1}
        elif ind == 1:
            constituents = (lam,)
            seen.add(lam)
            counts = {lam: 1}
        else:
            constituents = (lam,)
            seen.add(lam)
            counts = {lam: 2}
        comps = [
            (TwistedIrrep(mu, d.basis_weight(mu)), m) for mu, m in sorted(counts.items())
        ]
        complexification = LambdaRep(d, comps)
        if sigma_trivial:
            rep = complexification
        else:
            rep = complexification + dual(complexification)
        entries.append(
            RealBasisEntry(
                constituents=constituents,
                indicator=ind,
                dimension=rep.dimension(),
                rep=rep,
            )
        )
    return entries

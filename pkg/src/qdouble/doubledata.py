"""Modular data of the twisted Drinfeld double of a finite group.

Simple objects are pairs (a, chi): a conjugacy class representative and an
irreducible projective character of its centralizer for the conjugation
2-cocycle beta_a. Everything is computed exactly over Q(zeta_N) with
N = modulus(omega) * |G|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .characters import ProjectiveCharacterTable, projective_table
from .cocycles import ThreeCocycle, trivial_cocycle
from .cyclotomic import Cyclo, CycloContext
from .groups import FiniteGroup


class VerlindeNonInteger(ArithmeticError):
    """A fusion coefficient failed to be a nonnegative integer."""


@dataclass(frozen=True)
class SimpleObject:
    """A simple object (a, chi) of the double."""

    index: int
    a: int                      # class representative, minimal in its class
    char_index: int             # row in the centralizer's projective table
    degree: int
    dim: int
    twist: Cyclo = field(compare=False)

    def key(self) -> tuple[int, int]:
        return (self.a, self.char_index)


@dataclass(frozen=True)
class CentralizerData:
    """A centralizer C_G(a) materialized as a standalone group."""

    rep: int
    members: tuple[int, ...]            # parent elements, sorted
    local_of: dict                      # parent element -> local index
    group: FiniteGroup = field(compare=False)
    table: ProjectiveCharacterTable = field(compare=False)

    def value(self, char_index: int, parent_element: int) -> Cyclo:
        return self.table.value(char_index, self.local_of[parent_element])


class TwistedDouble:
    """Bundle of (G, omega) with cached exact modular data."""

    def __init__(self, G: FiniteGroup, omega: ThreeCocycle | None = None):
        if omega is None:
            omega = trivial_cocycle(G)
        if omega.group is not G and omega.group.mult != G.mult:
            raise ValueError("cocycle is not defined on this group")
        self.group = G
        self.omega = omega
        self.ctx = CycloContext(omega.modulus * G.order)
        self.scale = self.ctx.N // omega.modulus
        self._centralizers: dict[int, CentralizerData] = {}
        self._gamma: tuple[SimpleObject, ...] | None = None
        self._gamma_index: dict[tuple[int, int], int] = {}
        self._smatrix: tuple[tuple[Cyclo, ...], ...] | None = None
        self._fusion: tuple[tuple[tuple[int, ...], ...], ...] | None = None
        self._duals: tuple[int, ...] | None = None
        self._conj_lists: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        self._commuting_classes: dict[tuple[int, int], bool] = {}
        self.subcat_caches: dict = {}

    # -- cocycle values in the field --------------------------------------------

    def root_of_exp(self, e: int) -> Cyclo:
        """zeta_m^e as an element of Q(zeta_N)."""
        return self.ctx.root((e % self.omega.modulus) * self.scale)

    def beta(self, a: int, x: int, y: int) -> int:
        return self.omega.beta(a, x, y)

    # -- simple objects -----------------------------------------------------------

    def centralizer_data(self, a: int) -> CentralizerData:
        """Centralizer of a class representative with its projective table."""
        if a not in self._centralizers:
            G = self.group
            members = G.centralizer_members(a)
            local_of = {g: i for i, g in enumerate(members)}
            n = len(members)
            table = [[local_of[G.mul(x, y)] for y in members] for x in members]
            C = FiniteGroup(table, name=f"C({G.name},{a})", validate=False)
            m = self.omega.modulus
            beta = [[self.omega.beta(a, x, y) % m for y in members] for x in members]
            P = projective_table(self.ctx, C, beta, m)
            self._centralizers[a] = CentralizerData(a, members, local_of, C, P)
        return self._centralizers[a]

    @property
    def gamma(self) -> tuple[SimpleObject, ...]:
        if self._gamma is None:
            G = self.group
            simples = []
            for a in G.class_reps:
                cd = self.centralizer_data(a)
                ksize = len(G.class_of(a))
                for ci in range(cd.table.n_chars):
                    deg = cd.table.degrees[ci]
                    theta = cd.value(ci, a) / deg
                    if self.ctx.root_exponent(theta) is None:
                        raise ArithmeticError(
                            f"twist of ({a}, {ci}) is not a root of unity: {theta}")
                    simples.append(SimpleObject(len(simples), a, ci, deg,
                                                ksize * deg, theta))
            total = sum(s.dim * s.dim for s in simples)
            if total != G.order ** 2:
                raise ArithmeticError(
                    f"squared dimensions sum to {total}, expected {G.order ** 2}")
            self._gamma = tuple(simples)
            self._gamma_index = {s.key(): s.index for s in simples}
        return self._gamma

    def simple(self, a: int, char_index: int) -> SimpleObject:
        self.gamma
        return self._gamma[self._gamma_index[(a, char_index)]]

    @property
    def unit_index(self) -> int:
        return 0

    def char_value(self, s: SimpleObject, parent_element: int) -> Cyclo:
        return self.centralizer_data(s.a).value(s.char_index, parent_element)

    # -- pairwise class data ----------------------------------------------------------

    def classes_commute(self, a: int, b: int) -> bool:
        """Whether the classes of a and b commute elementwise."""
        key = (min(a, b), max(a, b))
        if key not in self._commuting_classes:
            G = self.group
            ca, cb = G.class_of(a), G.class_of(b)
            self._commuting_classes[key] = all(G.commute(u, v) for u in ca for v in cb)
        return self._commuting_classes[key]

    def _pair_terms(self, a: int, b: int) -> list[tuple[int, int, int]]:
        """Triples (g, g b g^{-1}, g^{-1} a g) over g with a and gbg^{-1} commuting."""
        key = (a, b)
        if key not in self._conj_lists:
            G = self.group
            terms = []
            for g in range(G.order):
                u = G.conj(g, b)
                if G.commute(a, u):
                    terms.append((g, u, G.conj(G.inverse(g), a)))
            self._conj_lists[key] = terms
        return self._conj_lists[key]

    # -- S-matrix and fusion (defined for trivial cocycle) ------------------------------

    @property
    def s_matrix(self) -> tuple[tuple[Cyclo, ...], ...]:
        if self._smatrix is None:
            if not self.omega.is_trivial:
                raise NotImplementedError("S-matrix requires the trivial cocycle")
            G = self.group
            gamma = self.gamma
            n = len(gamma)
            rows: list[list[Cyclo]] = [[None] * n for _ in range(n)]
            for i in range(n):
                si = gamma[i]
                cdi = self.centralizer_data(si.a)
                for j in range(i, n):
                    sj = gamma[j]
                    cdj = self.centralizer_data(sj.a)
                    pref = Fraction(G.order,
                                    len(cdi.members) * len(cdj.members))
                    total = self.ctx.sum(
                        cdi.value(si.char_index, u).conj()
                        * cdj.value(sj.char_index, v).conj()
                        for _, u, v in self._pair_terms(si.a, sj.a))
                    entry = total * pref
                    rows[i][j] = entry
                    rows[j][i] = entry
            S = tuple(tuple(row) for row in rows)
            dims = [s.dim for s in gamma]
            for j in range(n):
                if S[0][j] != self.ctx.from_int(dims[j]):
                    raise ArithmeticError("first S-matrix row does not match dimensions")
            order2 = self.ctx.from_int(G.order ** 2)
            for i in range(n):
                for j in range(i, n):
                    inner = self.ctx.sum(S[i][k] * S[j][k].conj() for k in range(n))
                    if inner != (order2 if i == j else self.ctx.zero):
                        raise ArithmeticError(f"S-matrix rows {i}, {j} not orthogonal")
            self._smatrix = S
        return self._smatrix

    @property
    def fusion(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Fusion coefficients N[i][j][k], exact nonnegative integers."""
        if self._fusion is None:
            S = self.s_matrix
            gamma = self.gamma
            n = len(gamma)
            order2 = self.group.order ** 2
            conj_rows = [[S[k][s].conj() for s in range(n)] for k in range(n)]
            N = [[[0] * n for _ in range(n)] for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    t = [S[i][s] * S[j][s] / gamma[s].dim for s in range(n)]
                    for k in range(n):
                        val = self.ctx.sum(t[s] * conj_rows[k][s] for s in range(n))
                        q = val.as_fraction() / order2
                        if q.denominator != 1 or q < 0:
                            raise VerlindeNonInteger(
                                f"N[{i}][{j}][{k}] = {q} is not a nonnegative integer")
                        N[i][j][k] = N[j][i][k] = int(q)
            self._fusion = tuple(tuple(tuple(r) for r in p) for p in N)
        return self._fusion

    @property
    def duals(self) -> tuple[int, ...]:
        if self._duals is None:
            N = self.fusion
            n = len(self.gamma)
            duals = []
            for i in range(n):
                ks = [k for k in range(n) if N[i][k][0] == 1]
                if len(ks) != 1:
                    raise ArithmeticError(f"dual of {i} is not unique: {ks}")
                duals.append(ks[0])
            self._duals = tuple(duals)
        return self._duals

    # -- exact braiding predicates -----------------------------------------------------

    def centralize(self, i: int, j: int) -> bool:
        """Whether simples i and j have trivial double braiding, via character values."""
        gamma = self.gamma
        si, sj = gamma[i], gamma[j]
        a, b = si.a, sj.a
        if not self.classes_commute(a, b):
            return False
        G = self.group
        cdi = self.centralizer_data(a)
        cdj = self.centralizer_data(b)
        degdeg = self.ctx.from_int(si.degree * sj.degree)
        if self.omega.is_trivial:
            for _, u, v in self._pair_terms(a, b):
                if cdi.value(si.char_index, u) * cdj.value(sj.char_index, v) != degdeg:
                    return False
            return True
        beta = self.omega.beta
        m = self.omega.modulus
        for x in range(G.order):
            xi = G.inverse(x)
            ax = G.conj(xi, a)           # x^{-1} a x
            for y in range(G.order):
                yi = G.inverse(y)
                by = G.conj(yi, b)       # y^{-1} b y
                e = (beta(a, x, by) + beta(a, G.mul(x, by), xi)
                     + beta(b, y, ax) + beta(b, G.mul(y, ax), yi)
                     - beta(a, x, xi) - beta(b, y, yi)) % m
                lhs = (self.root_of_exp(e)
                       * cdi.value(si.char_index, G.conj(x, by))
                       * cdj.value(sj.char_index, G.conj(y, ax)))
                if lhs != degdeg:
                    return False
        return True

    def magnitude_centralize(self, i: int, j: int) -> bool:
        """Whether |S(i, j)| = dim(i) dim(j); defined for the trivial cocycle."""
        S = self.s_matrix
        gamma = self.gamma
        d = gamma[i].dim * gamma[j].dim
        return S[i][j].norm_squared() == self.ctx.from_int(d * d)

    # -- fusion-closure helpers (used by the oracle and adjoint computations) -----------

    def tensor_components(self, i: int, j: int) -> tuple[int, ...]:
        N = self.fusion
        return tuple(k for k in range(len(self.gamma)) if N[i][j][k])

"""Fusion subcategories of the double, as triples (K, H, B).

A subcategory is determined by a pair of elementwise-commuting normal
subgroups K, H and a G-invariant bicharacter B: K x H -> roots of unity,
stored by discrete log mod N. The lattice operations (centralizer, meet,
join, center) act on these triples directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt
from typing import Iterable, Sequence

from .cyclotomic import Cyclo
from .doubledata import TwistedDouble
from .groups import Subgroup
from .linmod import solve_mod


class DimensionMismatch(ArithmeticError):
    """The members of a triple do not carry its predicted dimension."""


class NotASubcategory(ValueError):
    """A set of simple objects is not closed in the required sense."""


class UnsupportedTriple(ValueError):
    """The operation is only defined for trivial cocycle and pairing."""


@dataclass(frozen=True)
class Pairing:
    """A pairing K x H -> mu_N by discrete log over sorted members."""

    K: Subgroup = field(compare=False)
    H: Subgroup = field(compare=False)
    N: int
    dlog: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.dlog) != len(self.K.members) or \
           any(len(r) != len(self.H.members) for r in self.dlog):
            raise ValueError("pairing table shape mismatch")

    @property
    def _kpos(self) -> dict:
        d = self.__dict__.get("_kpos_cache")
        if d is None:
            d = {g: i for i, g in enumerate(self.K.members)}
            self.__dict__["_kpos_cache"] = d
        return d

    @property
    def _hpos(self) -> dict:
        d = self.__dict__.get("_hpos_cache")
        if d is None:
            d = {g: i for i, g in enumerate(self.H.members)}
            self.__dict__["_hpos_cache"] = d
        return d

    def exp(self, k: int, h: int) -> int:
        """Discrete log of B(k, h) base zeta_N."""
        return self.dlog[self._kpos[k]][self._hpos[h]]

    def op(self) -> "Pairing":
        """B^op on H x K: (h, k) -> B(k, h)."""
        rows = tuple(tuple(self.dlog[i][j] for i in range(len(self.K.members)))
                     for j in range(len(self.H.members)))
        return Pairing(self.H, self.K, self.N, rows)

    def inverse(self) -> "Pairing":
        rows = tuple(tuple((-e) % self.N for e in row) for row in self.dlog)
        return Pairing(self.K, self.H, self.N, rows)

    def op_inverse(self) -> "Pairing":
        return self.op().inverse()

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for row in self.dlog for e in row)

    def flat(self) -> tuple[int, ...]:
        return tuple(e for row in self.dlog for e in row)


def trivial_pairing(K: Subgroup, H: Subgroup, N: int) -> Pairing:
    return Pairing(K, H, N, tuple((0,) * len(H.members) for _ in K.members))


@dataclass(frozen=True)
class Triple:
    """A fusion subcategory presented as (K, H, B)."""

    K: Subgroup
    H: Subgroup
    B: Pairing

    def __post_init__(self) -> None:
        if self.B.K.members != self.K.members or self.B.H.members != self.H.members:
            raise ValueError("pairing domain does not match (K, H)")

    def sort_key(self) -> tuple:
        return (len(self.K), self.K.bitmask, len(self.H), self.H.bitmask, self.B.dlog)

    def dim(self, group_order: int) -> int:
        return len(self.K) * (group_order // len(self.H))


@dataclass(frozen=True)
class TripleFlags:
    symmetric: bool
    isotropic: bool
    lagrangian: bool
    nondegenerate: bool

    def short(self) -> str:
        parts = []
        if self.symmetric:
            parts.append("sym")
        if self.isotropic:
            parts.append("iso")
        if self.lagrangian:
            parts.append("lag")
        if self.nondegenerate:
            parts.append("nondeg")
        return ",".join(parts) if parts else "-"


# -- bicharacter enumeration ------------------------------------------------------


def _pair_is_centralizing(dd: TwistedDouble, K: Subgroup, H: Subgroup) -> None:
    G = dd.group
    if not (K.is_normal and H.is_normal):
        raise ValueError("K and H must be normal subgroups")
    if not all(G.commute(k, h) for k in K.members for h in H.members):
        raise ValueError("K and H must commute elementwise")


def bicharacters(dd: TwistedDouble, K: Subgroup, H: Subgroup) -> tuple[Pairing, ...]:
    """All G-invariant bicharacters on K x H for the ambient cocycle, sorted."""
    key = ("bichars", K.members, H.members)
    cached = dd.subcat_caches.get(key)
    if cached is not None:
        return cached
    _pair_is_centralizing(dd, K, H)
    G = dd.group
    N = dd.ctx.N
    scale = dd.scale
    beta = dd.omega.beta
    km, hm = K.members, H.members
    kpos = {g: i for i, g in enumerate(km)}
    hpos = {g: i for i, g in enumerate(hm)}
    nk, nh = len(km), len(hm)
    nu = (nk - 1) * (nh - 1)

    def var(k: int, h: int) -> int | None:
        if k == 0 or h == 0:
            return None
        return (kpos[k] - 1) * (nh - 1) + (hpos[h] - 1)

    equations: list[tuple[list[int], int]] = []

    def add(terms: Sequence[tuple[int, int, int]], rhs: int) -> None:
        row = [0] * nu
        for k, h, sign in terms:
            v = var(k, h)
            if v is not None:
                row[v] += sign
        equations.append((row, rhs))

    # multiplicativity in the second slot, twisted by beta_k
    for k in km:
        for h1 in hm:
            for h2 in hm:
                add(((k, G.mul(h1, h2), 1), (k, h1, -1), (k, h2, -1)),
                    -scale * beta(k, h1, h2))
    # multiplicativity in the first slot, twisted by beta_h
    for h in hm:
        for k1 in km:
            for k2 in km:
                add(((G.mul(k1, k2), h, 1), (k1, h, -1), (k2, h, -1)),
                    scale * beta(h, k1, k2))
    # G-invariance
    for k in km:
        for x in range(G.order):
            kx = G.conj(G.inverse(x), k)
            xi = G.inverse(x)
            for h in hm:
                rhs = scale * (beta(k, x, h) + beta(k, G.mul(x, h), xi)
                               - beta(k, x, xi))
                add(((kx, h, 1), (k, G.conj(x, h), -1)), rhs)

    sols = solve_mod(equations, nu, N)
    out = []
    for s in sols:
        rows = []
        for i in range(nk):
            if i == 0:
                rows.append((0,) * nh)
            else:
                rows.append((0,) + tuple(s[(i - 1) * (nh - 1) + (j - 1)]
                                         for j in range(1, nh)))
        out.append(Pairing(K, H, N, tuple(rows)))
    result = tuple(out)
    dd.subcat_caches[key] = result
    return result


# -- membership and canonical triples -------------------------------------------------


def subcat_members(dd: TwistedDouble, t: Triple) -> frozenset[int]:
    """Simple objects of S(K, H, B), with the dimension identity enforced."""
    key = ("members", t.K.members, t.H.members, t.B.dlog)
    cached = dd.subcat_caches.get(key)
    if cached is not None:
        return cached
    G = dd.group
    ctx = dd.ctx
    members = []
    kset = t.K.member_set
    for s in dd.gamma:
        if s.a not in kset:
            continue
        cd = dd.centralizer_data(s.a)
        deg = s.degree
        ok = all(cd.value(s.char_index, h) == ctx.root(t.B.exp(s.a, h)) * deg
                 for h in t.H.members)
        if ok:
            members.append(s.index)
    dim = sum(dd.gamma[i].dim ** 2 for i in members)
    expected = t.dim(G.order)
    if dim != expected:
        raise DimensionMismatch(
            f"members carry dimension {dim}, triple predicts {expected}")
    result = frozenset(members)
    dd.subcat_caches[key] = result
    return result


def build_subcat(dd: TwistedDouble, K: Subgroup, H: Subgroup, B: Pairing) -> Triple:
    """Validate and assemble a triple; raises if (K, H) is not a centralizing pair."""
    _pair_is_centralizing(dd, K, H)
    t = Triple(K, H, B)
    subcat_members(dd, t)
    return t


def triple_of(dd: TwistedDouble, simples: Iterable[int]) -> Triple:
    """Canonical triple of a set of simple objects; NotASubcategory if malformed."""
    G = dd.group
    ctx = dd.ctx
    gamma = dd.gamma
    idx = frozenset(simples)
    if dd.unit_index not in idx:
        raise NotASubcategory("the unit object is missing")

    # support subgroup: union of the classes of all a that occur
    support = set()
    for i in idx:
        support.update(G.class_of(gamma[i].a))
    try:
        K = G.subgroup(support)
    except ValueError as exc:
        raise NotASubcategory(f"supports are not a subgroup: {exc}") from exc

    # intersection of kernels of the characters at a = e
    hset = set(range(G.order))
    for i in idx:
        s = gamma[i]
        if s.a != 0:
            continue
        cd = dd.centralizer_data(0)
        deg = ctx.from_int(s.degree)
        ker = {g for g in range(G.order) if cd.value(s.char_index, g) == deg}
        hset &= ker
    H = G.subgroup(hset)

    # extract B on K x H from every member and every conjugator, consistently
    N = ctx.N
    table: dict[tuple[int, int], int] = {}
    beta = dd.omega.beta
    scale = dd.scale
    for i in sorted(idx):
        s = gamma[i]
        a = s.a
        cd = dd.centralizer_data(a)
        deg = s.degree
        for x in range(G.order):
            xi = G.inverse(x)
            k = G.conj(xi, a)
            for h in H.members:
                e = scale * (beta(a, x, h) + beta(a, G.mul(x, h), xi)
                             - beta(a, x, xi))
                val = ctx.root(e % N) * cd.value(s.char_index, G.conj(x, h)) / deg
                exp = ctx.root_exponent(val)
                if exp is None:
                    raise NotASubcategory(
                        f"pairing value at ({k}, {h}) is not a root of unity")
                prev = table.setdefault((k, h), exp)
                if prev != exp:
                    raise NotASubcategory(
                        f"inconsistent pairing value at ({k}, {h})")
    for k in K.members:
        for h in H.members:
            if (k, h) not in table:
                raise NotASubcategory(f"no pairing value determined at ({k}, {h})")
    rows = tuple(tuple(table[(k, h)] for h in H.members) for k in K.members)
    B = Pairing(K, H, N, rows)
    t = Triple(K, H, B)

    try:
        _pair_is_centralizing(dd, K, H)
    except ValueError as exc:
        raise NotASubcategory(str(exc)) from exc
    if subcat_members(dd, t) != idx:
        raise NotASubcategory("the canonical triple rebuilds a different set")
    return t


# -- enumeration -------------------------------------------------------------------


def enumerate_all(dd: TwistedDouble) -> tuple[Triple, ...]:
    """Every fusion subcategory of the double, sorted canonically."""
    key = ("all",)
    cached = dd.subcat_caches.get(key)
    if cached is not None:
        return cached
    triples = []
    for K, H in dd.group.centralizing_pairs():
        for B in bicharacters(dd, K, H):
            triples.append(Triple(K, H, B))
    triples.sort(key=Triple.sort_key)
    if len(set(triples)) != len(triples):
        raise AssertionError("duplicate triples in enumeration")
    result = tuple(triples)
    dd.subcat_caches[key] = result
    return result


def whole_triple(dd: TwistedDouble) -> Triple:
    G = dd.group
    return Triple(G.whole_group, G.trivial_subgroup,
                  trivial_pairing(G.whole_group, G.trivial_subgroup, dd.ctx.N))


def trivial_triple(dd: TwistedDouble) -> Triple:
    G = dd.group
    return Triple(G.trivial_subgroup, G.whole_group,
                  trivial_pairing(G.trivial_subgroup, G.whole_group, dd.ctx.N))


# -- lattice operations ------------------------------------------------------------


def centralizer_triple(dd: TwistedDouble, t: Triple) -> Triple:
    """S(K, H, B)' = S(H, K, (B^op)^{-1})."""
    return Triple(t.H, t.K, t.B.op_inverse())


def contains(dd: TwistedDouble, t1: Triple, t2: Triple) -> bool:
    """Whether S(t1) is a subcategory of S(t2)."""
    if not (t1.K.member_set <= t2.K.member_set and
            t2.H.member_set <= t1.H.member_set):
        return False
    return all(t1.B.exp(k, h) == t2.B.exp(k, h)
               for k in t1.K.members for h in t2.H.members)


def meet(dd: TwistedDouble, t1: Triple, t2: Triple) -> Triple:
    """Intersection of two subcategories."""
    G = dd.group
    N = dd.ctx.N
    scale = dd.scale
    beta = dd.omega.beta
    H_meet = G.product_subgroup(t1.H, t2.H)
    KK = G.intersect(t1.K, t2.K)
    HH = G.intersect(t1.H, t2.H)
    kernel = [a for a in KK.members
              if all(t1.B.exp(a, h) == t2.B.exp(a, h) for h in HH.members)]
    K_meet = G.subgroup(kernel)  # closure check: kernel of a homomorphism

    # pairing on K_meet x H1H2: psi(a, h1 h2) = beta_a(h1, h2)^{-1} B1(a,h1) B2(a,h2),
    # independent of the factorization
    rows = []
    for a in K_meet.members:
        row = {}
        for h1 in t1.H.members:
            for h2 in t2.H.members:
                h = G.mul(h1, h2)
                e = (-scale * beta(a, h1, h2)
                     + t1.B.exp(a, h1) + t2.B.exp(a, h2)) % N
                prev = row.setdefault(h, e)
                if prev != e:
                    raise AssertionError(
                        f"pairing not well defined at ({a}, {h}): {prev} != {e}")
        rows.append(tuple(row[h] for h in H_meet.members))
    B = Pairing(K_meet, H_meet, N, tuple(rows))
    return Triple(K_meet, H_meet, B)


def join(dd: TwistedDouble, t1: Triple, t2: Triple) -> Triple:
    """Smallest subcategory containing both, via duality from the meet."""
    c = meet(dd, centralizer_triple(dd, t1), centralizer_triple(dd, t2))
    return centralizer_triple(dd, c)


def muger_center(dd: TwistedDouble, t: Triple) -> Triple:
    """Z_2(S) = S meet S'."""
    return meet(dd, t, centralizer_triple(dd, t))


# -- invariants --------------------------------------------------------------------


def classify(dd: TwistedDouble, t: Triple) -> TripleFlags:
    N = dd.ctx.N
    K, H, B = t.K, t.H, t.B
    k_in_h = K.member_set <= H.member_set
    symmetric = k_in_h and all(
        (B.exp(k1, k2) + B.exp(k2, k1)) % N == 0
        for k1 in K.members for k2 in K.members)
    isotropic = k_in_h and all(B.exp(k, k) % N == 0 for k in K.members)
    lagrangian = isotropic and K.members == H.members
    G = dd.group
    KH = G.intersect(K, H)
    hk_all = len(G.product_subgroup(t.H, t.K)) == G.order
    radical = [a for a in KH.members
               if all((B.exp(a, j) + B.exp(j, a)) % N == 0 for j in KH.members)]
    nondegenerate = hk_all and len(radical) == 1
    return TripleFlags(symmetric, isotropic, lagrangian, nondegenerate)


def is_whole(dd: TwistedDouble, t: Triple) -> bool:
    return t.K.is_whole and t.H.is_trivial


def is_trivial_triple(dd: TwistedDouble, t: Triple) -> bool:
    return t.K.is_trivial and t.H.is_whole


def nondegenerate_count(dd: TwistedDouble) -> int:
    """Number of proper nontrivial nondegenerate subcategories."""
    count = 0
    for t in enumerate_all(dd):
        if is_whole(dd, t) or is_trivial_triple(dd, t):
            continue
        if classify(dd, t).nondegenerate:
            count += 1
    return count


def is_prime(dd: TwistedDouble) -> bool:
    """No proper nontrivial subcategory is nondegenerate."""
    G = dd.group
    for K, H in G.centralizing_pairs():
        extreme = (K.is_whole and H.is_trivial) or (K.is_trivial and H.is_whole)
        if extreme:
            continue
        if len(G.product_subgroup(H, K)) != G.order:
            continue
        for B in bicharacters(dd, K, H):
            if classify(dd, Triple(K, H, B)).nondegenerate:
                return False
    return True


def gauss_sum(dd: TwistedDouble, t: Triple) -> Cyclo:
    """Gauss sum, computed from the triple and re-derived from twists."""
    G = dd.group
    ctx = dd.ctx
    KH = G.intersect(t.K, t.H)
    reps = [a for a in G.class_reps if a in KH.member_set]
    total = ctx.sum(ctx.root(t.B.exp(a, a)) * len(G.class_of(a)) for a in reps)
    tau = total * (G.order // len(t.H))

    members = subcat_members(dd, t)
    tau_theta = ctx.sum(dd.gamma[i].twist * (dd.gamma[i].dim ** 2) for i in members)
    if tau != tau_theta:
        raise ArithmeticError(
            f"Gauss sum mismatch: formula {tau}, twist sum {tau_theta}")
    return tau


def central_charge(dd: TwistedDouble, t: Triple) -> complex:
    """tau / sqrt(dim), as a complex float."""
    tau = gauss_sum(dd, t)
    dim = t.dim(dd.group.order)
    return tau.to_complex() / (dim ** 0.5)


# -- adjoint and central series (trivial cocycle, trivial pairing) -------------------


def adjoint_triple(dd: TwistedDouble, t: Triple) -> Triple:
    """S(K, H, 1)_ad = S([G, K], C_G(K) n preimage(Z(G/H)), 1)."""
    if not dd.omega.is_trivial:
        raise UnsupportedTriple("adjoint formula requires the trivial cocycle")
    if not t.B.is_trivial:
        raise UnsupportedTriple("adjoint formula requires the trivial pairing")
    G = dd.group
    K_ad = G.commutator_subgroup(t.K)
    H_ad = G.intersect(G.centralizer_of_subgroup(t.K),
                       G.preimage_of_center_of_quotient(t.H))
    return Triple(K_ad, H_ad, trivial_pairing(K_ad, H_ad, dd.ctx.N))


def adjoint_series_term(dd: TwistedDouble, n: int) -> Triple:
    """n-th iterated adjoint of the whole category."""
    if not dd.omega.is_trivial:
        raise UnsupportedTriple("central series require the trivial cocycle")
    if n == 0:
        return whole_triple(dd)
    G = dd.group
    K = G.lower_central_term(n)
    H = G.intersect(G.centralizer_of_subgroup(G.lower_central_term(n - 1)),
                    G.upper_central_term(n))
    return Triple(K, H, trivial_pairing(K, H, dd.ctx.N))


def central_series_term(dd: TwistedDouble, n: int) -> Triple:
    """Centralizer of the n-th adjoint term; n = 1 gives the pointed part's dual."""
    if n == 0:
        return trivial_triple(dd)
    return centralizer_triple(dd, adjoint_series_term(dd, n))

"""Brute-force cross-checks for the triple enumeration.

The oracle works directly on sets of simple objects: fusion closure uses the
Verlinde coefficients (so it is independent of the triple machinery), and the
full lattice of closed sets is generated by saturating pairwise joins of
singleton closures.
"""

from __future__ import annotations

from typing import Iterable

from .doubledata import TwistedDouble
from . import subcats as sc


def fusion_closure(dd: TwistedDouble, seed: Iterable[int]) -> frozenset[int]:
    """Smallest set of simples containing the seed and the unit, closed under
    duals and tensor constituents."""
    cur = set(seed)
    cur.add(dd.unit_index)
    duals = dd.duals
    frontier = list(cur)
    while frontier:
        nxt = []
        for i in frontier:
            d = duals[i]
            if d not in cur:
                cur.add(d)
                nxt.append(d)
        snapshot = list(cur)
        for i in snapshot:
            for j in snapshot:
                for k in dd.tensor_components(i, j):
                    if k not in cur:
                        cur.add(k)
                        nxt.append(k)
        frontier = nxt
    return frozenset(cur)


def all_closed_sets(dd: TwistedDouble) -> frozenset[frozenset[int]]:
    """Every fusion-closed set of simples, by saturating joins of closures."""
    closed = {fusion_closure(dd, ())}
    closed.update(fusion_closure(dd, (i,)) for i in range(len(dd.gamma)))
    while True:
        new = set()
        current = sorted(closed, key=sorted)
        for a in current:
            for b in current:
                u = a | b
                if u in closed:
                    continue
                c = fusion_closure(dd, u)
                if c not in closed and c not in new:
                    new.add(c)
        if not new:
            return frozenset(closed)
        closed.update(new)


def adjoint_closure(dd: TwistedDouble, members: Iterable[int]) -> frozenset[int]:
    """Fusion closure of all constituents of X (x) X* over the given simples."""
    duals = dd.duals
    seed = set()
    for i in members:
        seed.update(dd.tensor_components(i, duals[i]))
    return fusion_closure(dd, seed)


def centralizing_simples(dd: TwistedDouble, members: Iterable[int]) -> frozenset[int]:
    """Simples that centralize every member, by the braiding predicate."""
    ms = list(members)
    return frozenset(i for i in range(len(dd.gamma))
                     if all(dd.centralize(i, j) for j in ms))


def projectively_centralizing_simples(dd: TwistedDouble,
                                      members: Iterable[int]) -> frozenset[int]:
    """Simples whose S-matrix entries against the set have maximal magnitude.

    These are exactly the simples centralizing the adjoint of the subcategory
    the set spans.
    """
    ms = list(members)
    return frozenset(i for i in range(len(dd.gamma))
                     if all(dd.magnitude_centralize(i, j) for j in ms))


def certify(dd: TwistedDouble) -> dict:
    """Cross-validate the triple enumeration against set-level oracles.

    Untwisted doubles get the full closure oracle: the member sets of the
    enumerated triples must coincide with the fusion-closed sets, bijectively.
    Twisted doubles (no Verlinde data) are checked by the double-centralizer
    identity and the dimension product law instead.
    """
    triples = sc.enumerate_all(dd)
    members = {t: sc.subcat_members(dd, t) for t in triples}
    sets = list(members.values())
    if len(set(sets)) != len(sets):
        raise AssertionError("two distinct triples share one member set")

    report = {"triples": len(triples)}
    order = dd.group.order
    whole_dim = order * order
    for t in triples:
        c = sc.centralizer_triple(dd, t)
        if sc.subcat_members(dd, c) != centralizing_simples(dd, members[t]):
            raise AssertionError(f"centralizer member set wrong at {t}")
        if sc.subcat_members(dd, sc.centralizer_triple(dd, c)) != members[t]:
            raise AssertionError(f"double centralizer failed at {t}")
        if t.dim(order) * c.dim(order) != whole_dim:
            raise AssertionError(f"dimension product law failed at {t}")

    if dd.omega.is_trivial:
        closed = all_closed_sets(dd)
        if frozenset(sets) != closed:
            missing = closed - frozenset(sets)
            extra = frozenset(sets) - closed
            raise AssertionError(
                f"enumeration mismatch: {len(missing)} closed sets missing, "
                f"{len(extra)} member sets not closed")
        report["closed_sets"] = len(closed)
        report["bijection"] = True
    else:
        report["closed_sets"] = None
        report["bijection"] = None
    return report

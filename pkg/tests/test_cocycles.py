"""3-cocycles: validation, builtin families, derived 2-cochains."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from qdouble import (NotACocycle, NotNormalized, ThreeCocycle, builtin_cyclic,
                     builtin_group, check_identities, coboundary, cyclic_group,
                     pullback, trivial_cocycle, validate)
from qdouble.cocycles import product


def test_trivial_validates():
    for name in ("Z2", "S3", "D4"):
        om = trivial_cocycle(builtin_group(name))
        validate(om)
        assert om.is_trivial
        check_identities(om)


def test_builtin_cyclic_formula():
    n, q = 4, 3
    om = builtin_cyclic(n, q)
    validate(om)
    G = om.group
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert om.value(a, b, c) == (q * a * ((b + c) // n)) % n


def test_builtin_cyclic_families_validate():
    for n in range(2, 7):
        for q in range(n):
            om = builtin_cyclic(n, q)
            validate(om)
            check_identities(om)


def test_semion_cocycle_values():
    om = builtin_cyclic(2, 1)
    # omega(1,1,1) = -1 and all slots touching the identity are 1
    assert om.value(1, 1, 1) == 1 and om.modulus == 2
    assert om.value(0, 1, 1) == 0 and om.value(1, 0, 1) == 0


def test_semion_not_a_coboundary():
    G = cyclic_group(2)
    target = builtin_cyclic(2, 1)
    # normalized 2-cochains mod 2 on Z2 have one free value mu(1,1)
    for m11 in (0, 1):
        mu = ((0, 0), (0, m11))
        db = coboundary(G, mu, 2)
        validate(db)
        assert db.dlog != target.dlog


def test_not_a_cocycle_witness():
    G = cyclic_group(3)
    dlog = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    dlog[1][1][1] = 1
    with pytest.raises(NotACocycle) as ei:
        validate(ThreeCocycle(G, 3, tuple(tuple(tuple(r) for r in p) for p in dlog)))
    assert ei.value.witness == (1, 1, 1, 1)


def test_not_normalized_witness():
    G = cyclic_group(2)
    dlog = (((0, 0), (0, 0)), ((0, 1), (0, 0)))
    with pytest.raises(NotNormalized):
        validate(ThreeCocycle(G, 2, dlog))


def test_coboundary_validates():
    rng = random.Random(11)
    for name in ("Z4", "S3", "D4"):
        G = builtin_group(name)
        for m in (2, 3, 4):
            mu = [[0] * G.order for _ in range(G.order)]
            for a in range(1, G.order):
                for b in range(1, G.order):
                    mu[a][b] = rng.randrange(m)
            om = coboundary(G, mu, m)
            validate(om)
            check_identities(om)


def test_product_and_pullback():
    a = builtin_cyclic(4, 1)
    b = builtin_cyclic(4, 2)
    ab = product(a, b)
    validate(ab)
    m = ab.modulus
    for x in range(4):
        for y in range(4):
            for z in range(4):
                assert ab.value(x, y, z) == (
                    a.value(x, y, z) * (m // a.modulus)
                    + b.value(x, y, z) * (m // b.modulus)) % m
    # pull back the Z2 semion along Z4 ->> Z2
    G4 = cyclic_group(4)
    hom = [0, 1, 0, 1]
    pulled = pullback(builtin_cyclic(2, 1), hom, G4)
    validate(pulled)
    check_identities(pulled)
    assert not pulled.is_trivial


def test_pullback_rejects_non_hom():
    G4 = cyclic_group(4)
    with pytest.raises(ValueError):
        pullback(builtin_cyclic(2, 1), [0, 1, 1, 0], G4)


def test_identity_families_counts():
    counts = check_identities(builtin_cyclic(3, 1))
    assert set(counts) == {"beta_cocycle", "centralizer_agreement", "gamma_product",
                           "nu_product", "commuting_nu_swap", "commuting_nu_conj",
                           "commuting_beta_sym"}
    assert all(v > 0 for v in counts.values())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from((("Z4", 2), ("S3", 2), ("Z2xZ2", 4))), st.data())
def test_beta_relation_random(spec, data):
    name, m = spec
    G = builtin_group(name)
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    mu = [[0] * G.order for _ in range(G.order)]
    for a in range(1, G.order):
        for b in range(1, G.order):
            mu[a][b] = rng.randrange(m)
    om = coboundary(G, mu, m)
    a, x, y, z = (data.draw(st.integers(0, G.order - 1)) for _ in range(4))
    lhs = (om.beta(a, x, y) + om.beta(a, G.mul(x, y), z)) % m
    rhs = (om.beta(a, x, G.mul(y, z))
           + om.beta(G.conj(G.inverse(x), a), y, z)) % m
    assert lhs == rhs

"""Normalized 3-cocycles on a finite group, stored by discrete log.

A cocycle takes values in the roots of unity mu_m; we store the exponent
(an integer mod m) per triple. The derived 2-cochains beta/eta/gamma/nu are
returned as exponents too; conversion to field values happens downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Sequence

from .groups import FiniteGroup, cyclic_group


class NotACocycle(ValueError):
    """The 3-cochain fails the cocycle identity; carries a witness quadruple."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"cocycle identity fails at {witness}")
        self.witness = witness


class NotNormalized(ValueError):
    """The 3-cochain fails normalization; carries a witness pair."""

    def __init__(self, witness: tuple[int, int]):
        super().__init__(f"normalization fails at {witness}")
        self.witness = witness


class IdentityViolation(AssertionError):
    """A derived 2-cochain identity fails; carries the identity name and witness."""

    def __init__(self, name: str, witness: tuple):
        super().__init__(f"identity {name} fails at {witness}")
        self.name = name
        self.witness = witness


@dataclass(frozen=True)
class ThreeCocycle:
    """A normalized 3-cocycle with values zeta_m^dlog[x][y][z]; dlog None means 1."""

    group: FiniteGroup = field(compare=False)
    modulus: int
    dlog: tuple[tuple[tuple[int, ...], ...], ...] | None

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus >= 1")
        if self.dlog is not None:
            n = self.group.order
            if len(self.dlog) != n or any(len(p) != n for p in self.dlog) or \
               any(len(r) != n for p in self.dlog for r in p):
                raise ValueError("dlog table is not n x n x n")
            if any(not (0 <= v < self.modulus) for p in self.dlog for r in p for v in r):
                raise ValueError("dlog entries must lie in 0..modulus-1")

    @property
    def is_trivial(self) -> bool:
        if self.dlog is None:
            return True
        return all(v == 0 for p in self.dlog for r in p for v in r)

    def value(self, x: int, y: int, z: int) -> int:
        """Exponent of omega(x, y, z) relative to zeta_modulus."""
        if self.dlog is None:
            return 0
        return self.dlog[x][y][z]

    # -- derived 2-cochains, as exponents mod modulus ---------------------------

    def beta(self, a: int, x: int, y: int) -> int:
        """Conjugation 2-cochain on the first slot."""
        if self.dlog is None:
            return 0
        G = self.group
        xy = G.mul(x, y)
        return (self.dlog[a][x][y]
                + self.dlog[x][y][G.conj(G.inverse(xy), a)]
                - self.dlog[x][G.conj(G.inverse(x), a)][y]) % self.modulus

    def eta(self, a: int, x: int, y: int) -> int:
        """Conjugation 2-cochain on the last slot."""
        if self.dlog is None:
            return 0
        G = self.group
        xy = G.mul(x, y)
        return (self.dlog[x][y][a]
                + self.dlog[G.conj(xy, a)][x][y]
                - self.dlog[x][G.conj(y, a)][y]) % self.modulus

    def gamma(self, a: int, x: int, y: int) -> int:
        """Right-translation 2-cochain."""
        if self.dlog is None:
            return 0
        G = self.group
        ai = G.inverse(a)
        xa = G.conj(ai, x)
        ya = G.conj(ai, y)
        return (self.dlog[x][y][a]
                + self.dlog[a][xa][ya]
                - self.dlog[x][a][ya]) % self.modulus

    def nu(self, a: int, x: int, y: int) -> int:
        """Left-translation 2-cochain."""
        if self.dlog is None:
            return 0
        G = self.group
        xa = G.conj(a, x)
        ya = G.conj(a, y)
        return (self.dlog[xa][ya][a]
                + self.dlog[a][x][y]
                - self.dlog[xa][a][y]) % self.modulus


def validate(omega: ThreeCocycle) -> None:
    """Raise NotNormalized or NotACocycle unless omega is a normalized 3-cocycle."""
    if omega.dlog is None:
        return
    G = omega.group
    n = G.order
    m = omega.modulus
    d = omega.dlog
    for g in range(n):
        for l in range(n):
            if d[g][0][l] % m:
                raise NotNormalized((g, l))
    mul = G.mult
    for g1 in range(n):
        for g2 in range(n):
            g12 = mul[g1][g2]
            for g3 in range(n):
                g23 = mul[g2][g3]
                for g4 in range(n):
                    lhs = d[g2][g3][g4] + d[g1][g23][g4] + d[g1][g2][g3]
                    rhs = d[g12][g3][g4] + d[g1][g2][mul[g3][g4]]
                    if (lhs - rhs) % m:
                        raise NotACocycle((g1, g2, g3, g4))
    # the cocycle identity plus middle normalization force the outer slots
    for g in range(n):
        for l in range(n):
            if d[0][g][l] % m or d[g][l][0] % m:
                raise NotNormalized((g, l))


def trivial_cocycle(G: FiniteGroup) -> ThreeCocycle:
    return ThreeCocycle(G, 1, None)


def builtin_cyclic(n: int, q: int) -> ThreeCocycle:
    """The standard cocycle on Z/n: omega(a,b,c) = zeta_n^{q a floor((b+c)/n)}."""
    G = cyclic_group(n)
    q %= n
    d = tuple(tuple(tuple((q * a * ((b + c) // n)) % n for c in range(n))
                    for b in range(n)) for a in range(n))
    omega = ThreeCocycle(G, n, d)
    validate(omega)
    return omega


def coboundary(G: FiniteGroup, mu: Sequence[Sequence[int]], m: int) -> ThreeCocycle:
    """The 3-coboundary of a normalized 2-cochain mu (exponents mod m)."""
    n = G.order
    if any(mu[0][g] % m or mu[g][0] % m for g in range(n)):
        raise ValueError("2-cochain must be normalized")
    mul = G.mult
    d = tuple(tuple(tuple((mu[y][z] - mu[mul[x][y]][z] + mu[x][mul[y][z]] - mu[x][y]) % m
                          for z in range(n)) for y in range(n)) for x in range(n))
    return ThreeCocycle(G, m, d)


def product(w1: ThreeCocycle, w2: ThreeCocycle) -> ThreeCocycle:
    """Pointwise product of two cocycles on the same group."""
    if w1.group is not w2.group and w1.group.mult != w2.group.mult:
        raise ValueError("cocycles live on different groups")
    if w1.dlog is None:
        return w2
    if w2.dlog is None:
        return w1
    n = w1.group.order
    M = lcm(w1.modulus, w2.modulus)
    f1, f2 = M // w1.modulus, M // w2.modulus
    d = tuple(tuple(tuple((f1 * w1.dlog[x][y][z] + f2 * w2.dlog[x][y][z]) % M
                          for z in range(n)) for y in range(n)) for x in range(n))
    return ThreeCocycle(w1.group, M, d)


def pullback(omega: ThreeCocycle, hom: Sequence[int], G: FiniteGroup) -> ThreeCocycle:
    """Pull back along a homomorphism G -> omega.group given elementwise."""
    H = omega.group
    n = G.order
    if len(hom) != n:
        raise ValueError("homomorphism must be defined on all of G")
    for a in range(n):
        for b in range(n):
            if hom[G.mul(a, b)] != H.mul(hom[a], hom[b]):
                raise ValueError(f"not a homomorphism at ({a}, {b})")
    if omega.dlog is None:
        return ThreeCocycle(G, omega.modulus, None)
    d = tuple(tuple(tuple(omega.dlog[hom[x]][hom[y]][hom[z]] for z in range(n))
                    for y in range(n)) for x in range(n))
    return ThreeCocycle(G, omega.modulus, d)


def check_identities(omega: ThreeCocycle) -> dict[str, int]:
    """Verify the standard relations between the derived 2-cochains.

    Raises IdentityViolation on the first failure; returns counts of checks
    performed per identity family.
    """
    G = omega.group
    n = G.order
    m = omega.modulus
    counts = {name: 0 for name in
              ("beta_cocycle", "centralizer_agreement", "gamma_product",
               "nu_product", "commuting_nu_swap", "commuting_nu_conj",
               "commuting_beta_sym")}

    beta, eta, gamma, nu = omega.beta, omega.eta, omega.gamma, omega.nu
    inv, conj, mul = G.inverse, G.conj, G.mul

    # beta_a(x,y) beta_a(xy,z) = beta_a(x,yz) beta_{x^{-1}ax}(y,z)
    for a in range(n):
        for x in range(n):
            axi = conj(inv(x), a)
            for y in range(n):
                xy = mul(x, y)
                b1 = beta(a, x, y)
                for z in range(n):
                    lhs = b1 + beta(a, xy, z)
                    rhs = beta(a, x, mul(y, z)) + beta(axi, y, z)
                    if (lhs - rhs) % m:
                        raise IdentityViolation("beta_cocycle", (a, x, y, z))
                    counts["beta_cocycle"] += 1

    # on the centralizer of a, all four 2-cochains agree
    for a in range(n):
        cent = G.centralizer_members(a)
        for x in cent:
            for y in cent:
                vals = {beta(a, x, y), eta(a, x, y), gamma(a, x, y), nu(a, x, y)}
                if len(vals) != 1:
                    raise IdentityViolation("centralizer_agreement", (a, x, y))
                counts["centralizer_agreement"] += 1

    # gamma_{ab}(x,y) / (gamma_b(a^{-1}xa, a^{-1}ya) gamma_a(x,y))
    #   = beta_x(a,b) beta_y(a,b) / beta_{xy}(a,b)
    for a in range(n):
        ai = inv(a)
        for b in range(n):
            ab = mul(a, b)
            for x in range(n):
                xa = conj(ai, x)
                for y in range(n):
                    lhs = gamma(ab, x, y) - gamma(b, xa, conj(ai, y)) - gamma(a, x, y)
                    rhs = beta(x, a, b) + beta(y, a, b) - beta(mul(x, y), a, b)
                    if (lhs - rhs) % m:
                        raise IdentityViolation("gamma_product", (a, b, x, y))
                    counts["gamma_product"] += 1

    # nu_{ab}(x,y) / (nu_a(bxb^{-1}, byb^{-1}) nu_b(x,y))
    #   = eta_x(a,b) eta_y(a,b) / eta_{xy}(a,b)
    for a in range(n):
        for b in range(n):
            ab = mul(a, b)
            for x in range(n):
                xb = conj(b, x)
                for y in range(n):
                    lhs = nu(ab, x, y) - nu(a, xb, conj(b, y)) - nu(b, x, y)
                    rhs = eta(x, a, b) + eta(y, a, b) - eta(mul(x, y), a, b)
                    if (lhs - rhs) % m:
                        raise IdentityViolation("nu_product", (a, b, x, y))
                    counts["nu_product"] += 1

    # relations for commuting pairs hk = kh
    for h in range(n):
        for k in range(n):
            if not G.commute(h, k):
                continue
            for x in range(n):
                xi = inv(x)
                hx = conj(x, h)
                lhs = nu(x, h, k) - nu(x, k, h)
                rhs = beta(hx, x, xi) - beta(hx, x, k) - beta(hx, mul(x, k), xi)
                if (lhs - rhs) % m:
                    raise IdentityViolation("commuting_nu_swap", (h, k, x))
                counts["commuting_nu_swap"] += 1

                hxi, kxi = conj(xi, h), conj(xi, k)
                lhs = nu(x, hxi, kxi) - nu(x, kxi, hxi)
                rhs = nu(xi, k, h) - nu(xi, h, k)
                if (lhs - rhs) % m:
                    raise IdentityViolation("commuting_nu_conj", (h, k, x))
                counts["commuting_nu_conj"] += 1

            for y in range(n):
                # the symmetric beta relation also needs yky^{-1} to commute
                # with h, as in its use on elementwise-commuting normal pairs
                if not G.commute(conj(y, k), h):
                    continue
                yi = inv(y)
                lhs = beta(k, yi, y) - beta(k, yi, h) - beta(k, mul(yi, h), y)
                rhs = beta(h, y, yi) - beta(h, y, k) - beta(h, mul(y, k), yi)
                if (lhs - rhs) % m:
                    raise IdentityViolation("commuting_beta_sym", (h, k, y))
                counts["commuting_beta_sym"] += 1

    return counts

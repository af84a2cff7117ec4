"""Small exact linear algebra kernels.

Two independent pieces: dense linear algebra over a prime field F_p (used by
the character-table engine) and a solver for linear systems over Z/N (used for
degree-one projective characters and pairing enumeration).
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


# -- elementary number theory ---------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def smallest_prime_one_mod(N: int, lower_bound: int) -> int:
    """Smallest prime p with p ≡ 1 (mod N) and p > lower_bound."""
    p = (lower_bound // N) * N + 1
    while p <= lower_bound or not is_prime(p):
        p += N
    return p


def primitive_root(p: int) -> int:
    """Smallest primitive root mod a prime p."""
    if p == 2:
        return 1
    fac = factorize(p - 1)
    for r in range(2, p):
        if all(pow(r, (p - 1) // q, p) != 1 for q in fac):
            return r
    raise ValueError(f"no primitive root found for {p}")


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _pivot_transform(pv: int, rv: int) -> tuple[int, int, int]:
    """Bezout pair for clearing rv against pivot pv, keeping the pivot row fixed
    (coefficients (1, 0)) whenever pv already divides rv; this makes repeated
    row/column clearing terminate."""
    if rv % pv == 0:
        return pv, 1, 0
    return ext_gcd(pv, rv)


# -- dense F_p linear algebra -----------------------------------------------------


def mat_mul_mod(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    rows, inner, cols = len(A), len(B), len(B[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cols):
                    Oi[j] = (Oi[j] + a * Bk[j]) % p
    return out


def rref_mod(A: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (matrix, pivot column list)."""
    M = [list(row) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if M[i][c] % p), None)
        if pivot_row is None:
            continue
        M[r], M[pivot_row] = M[pivot_row], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], pivots


def nullspace_mod(A: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Row basis of the right nullspace {v : A v = 0} over F_p."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    R, pivots = rref_mod(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-R[r][f]) % p
        basis.append(v)
    return basis


def det_mod(A: Sequence[Sequence[int]], p: int) -> int:
    M = [list(row) for row in A]
    n = len(M)
    det = 1
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if M[i][c] % p), None)
        if pivot_row is None:
            return 0
        if pivot_row != c:
            M[c], M[pivot_row] = M[pivot_row], M[c]
            det = (-det) % p
        det = (det * M[c][c]) % p
        inv = pow(M[c][c], p - 2, p)
        for i in range(c + 1, n):
            if M[i][c]:
                f = (M[i][c] * inv) % p
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[c])]
    return det % p


def charpoly_mod(A: Sequence[Sequence[int]], p: int) -> list[int]:
    """Coefficients of det(x*I - A) over F_p, low degree first, by interpolation."""
    n = len(A)
    if n + 1 > p:
        raise ValueError("field too small for interpolation")
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        M = [[(x * (i == j) - A[i][j]) % p for j in range(n)] for i in range(n)]
        ys.append(det_mod(M, p))
    # Lagrange interpolation
    coeffs = [0] * (n + 1)
    for i, xi in enumerate(xs):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            new = [0] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] = (new[k] - c * xj) % p
                new[k + 1] = (new[k + 1] + c) % p
            basis = new
            denom = (denom * (xi - xj)) % p
        scale = (ys[i] * pow(denom, p - 2, p)) % p
        for k, c in enumerate(basis):
            coeffs[k] = (coeffs[k] + scale * c) % p
    return coeffs


def poly_roots_mod(coeffs: Sequence[int], p: int) -> list[int]:
    """All roots in F_p of the polynomial with the given coefficients (low first)."""
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


# -- linear systems over Z/N --------------------------------------------------------


class _Echelon:
    """Incremental echelon form of integer rows modulo N, with right-hand sides."""

    def __init__(self, n_unknowns: int, N: int):
        self.n = n_unknowns
        self.N = N
        self.pivot_rows: dict[int, tuple[list[int], int]] = {}
        self.consistent = True

    def insert(self, row: Sequence[int], rhs: int) -> None:
        N = self.N
        row = [x % N for x in row]
        rhs %= N
        while True:
            col = next((j for j, x in enumerate(row) if x), None)
            if col is None:
                if rhs % N:
                    self.consistent = False
                return
            if col not in self.pivot_rows:
                self.pivot_rows[col] = (row, rhs)
                return
            prow, prhs = self.pivot_rows[col]
            pv, rv = prow[col], row[col]
            g, x, y = _pivot_transform(pv, rv)
            # unimodular 2x2 transform: new pivot has entry gcd, new row has 0
            new_p = [(x * a + y * b) % N for a, b in zip(prow, row)]
            new_pr = (x * prhs + y * rhs) % N
            fp, fr = pv // g, rv // g
            new_r = [(fp * b - fr * a) % N for a, b in zip(prow, row)]
            new_rr = (fp * rhs - fr * prhs) % N
            self.pivot_rows[col] = (new_p, new_pr)
            row, rhs = new_r, new_rr


def solve_mod(equations: Iterable[tuple[Sequence[int], int]], n_unknowns: int,
              N: int) -> list[tuple[int, ...]]:
    """All solutions in (Z/N)^n of the given (coefficients, rhs) equations, sorted.

    Works for arbitrary composite N via gcd row/column reduction.
    """
    if N == 1:
        return [(0,) * n_unknowns]
    ech = _Echelon(n_unknowns, N)
    for row, rhs in equations:
        ech.insert(row, rhs)
        if not ech.consistent:
            return []
    rows = [list(r) for r, _ in ech.pivot_rows.values()]
    rhs = [b for _, b in ech.pivot_rows.values()]
    m = len(rows)
    n = n_unknowns
    # diagonalize with row ops on [rows|rhs] and column ops tracked in V
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    t = 0
    while t < m and t < n:
        pos = next(((i, j) for i in range(t, m) for j in range(t, n) if rows[i][j]), None)
        if pos is None:
            break
        i0, j0 = pos
        rows[t], rows[i0] = rows[i0], rows[t]
        rhs[t], rhs[i0] = rhs[i0], rhs[t]
        if j0 != t:
            for r in rows:
                r[t], r[j0] = r[j0], r[t]
            for r in V:
                r[t], r[j0] = r[j0], r[t]
        while True:
            # clear column t below the pivot
            for i in range(t + 1, m):
                if rows[i][t]:
                    pv, rv = rows[t][t], rows[i][t]
                    g, x, y = _pivot_transform(pv, rv)
                    fp, fr = pv // g, rv // g
                    new_t = [(x * a + y * b) % N for a, b in zip(rows[t], rows[i])]
                    new_i = [(fp * b - fr * a) % N for a, b in zip(rows[t], rows[i])]
                    rhs_t = (x * rhs[t] + y * rhs[i]) % N
                    rhs_i = (fp * rhs[i] - fr * rhs[t]) % N
                    rows[t], rows[i] = new_t, new_i
                    rhs[t], rhs[i] = rhs_t, rhs_i
            # clear row t right of the pivot (column ops, tracked in V)
            for j in range(t + 1, n):
                if rows[t][j]:
                    pv, rv = rows[t][t], rows[t][j]
                    g, x, y = _pivot_transform(pv, rv)
                    fp, fr = pv // g, rv // g
                    for r in rows:
                        a, b = r[t], r[j]
                        r[t] = (x * a + y * b) % N
                        r[j] = (fp * b - fr * a) % N
                    for r in V:
                        a, b = r[t], r[j]
                        r[t] = (x * a + y * b) % N
                        r[j] = (fp * b - fr * a) % N
            if all(rows[i][t] == 0 for i in range(t + 1, m)) and \
               all(rows[t][j] == 0 for j in range(t + 1, n)):
                break
        t += 1
    for i in range(t, m):
        if rhs[i] % N:
            return []
    # solve d_i * y_i = rhs_i for i < t; columns >= t are free over Z/N
    choice_lists: list[list[int]] = []
    for i in range(n):
        if i < t:
            d = rows[i][i] % N
            c = rhs[i] % N
            if d == 0:
                if c:
                    return []
                choice_lists.append(list(range(N)))
                continue
            g = gcd(d, N)
            if c % g:
                return []
            _, x, _ = ext_gcd(d, N)
            y0 = (x * (c // g)) % (N // g)
            choice_lists.append([(y0 + k * (N // g)) % N for k in range(g)])
        else:
            choice_lists.append(list(range(N)))
    solutions: list[tuple[int, ...]] = []

    def rec(i: int, y: list[int]) -> None:
        if i == n:
            x = tuple(sum(V[r][c] * y[c] for c in range(n)) % N for r in range(n))
            solutions.append(x)
            return
        for val in choice_lists[i]:
            y.append(val)
            rec(i + 1, y)
            y.pop()

    rec(0, [])
    solutions = sorted(set(solutions))
    return solutions

"""Integer linear algebra mod p and mod N."""

from itertools import product

from hypothesis import given, settings, strategies as st

from qdouble.linmod import (charpoly_mod, det_mod, ext_gcd, factorize, is_prime,
                            mat_mul_mod, nullspace_mod, poly_roots_mod,
                            primitive_root, rref_mod, smallest_prime_one_mod,
                            solve_mod)


def test_is_prime_and_factorize():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97}
    for n in range(2, 100):
        assert is_prime(n) == (n in primes or
                               all(n % p for p in primes if p * p <= n) and n > 31)
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}


def test_smallest_prime_one_mod():
    # must not skip qualifying primes just above the bound
    assert smallest_prime_one_mod(6, 30) == 31
    assert smallest_prime_one_mod(4, 10) == 13
    for N in (2, 3, 6, 8, 12):
        for lb in (1, 10, 50):
            p = smallest_prime_one_mod(N, lb)
            assert p > lb and p % N == 1 and is_prime(p)


def test_primitive_root():
    for p in (3, 5, 7, 11, 13, 97):
        g = primitive_root(p)
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        assert len(seen) == p - 1


def test_ext_gcd():
    for a in range(-8, 9):
        for b in range(-8, 9):
            g, u, v = ext_gcd(a, b)
            assert u * a + v * b == g
            if a or b:
                assert g > 0 and a % g == 0 and b % g == 0


def test_rref_and_nullspace():
    p = 7
    A = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    R, pivots = rref_mod(A, p)
    assert len(pivots) == 2
    for row in nullspace_mod(A, p):
        prod = mat_mul_mod([row], [[c] for r in A for c in r][:0] or
                           [[A[j][i] for j in range(3)] for i in range(3)], p)
        # A has the vector in its right kernel
        assert all(sum(A[i][j] * row[j] for j in range(3)) % p == 0
                   for i in range(3))
    assert len(nullspace_mod(A, p)) == 1


def test_det_and_charpoly():
    p = 101
    A = [[2, 1], [1, 3]]
    assert det_mod(A, p) == 5
    # charpoly x^2 - 5x + 5
    cp = charpoly_mod(A, p)
    assert cp == [5 % p, (-5) % p, 1]
    roots = poly_roots_mod(cp, p)
    for r in roots:
        assert (r * r - 5 * r + 5) % p == 0


def _brute_solutions(equations, n, N):
    out = []
    for cand in product(range(N), repeat=n):
        if all(sum(c * x for c, x in zip(row, cand)) % N == rhs % N
               for row, rhs in equations):
            out.append(cand)
    return sorted(out)


def test_solve_mod_known_systems():
    # x + y = 1, x - y = 1 mod 4 -> x in {1,3} paired with y in {0,2}
    eqs = [([1, 1], 1), ([1, -1], 1)]
    assert solve_mod(eqs, 2, 4) == _brute_solutions(eqs, 2, 4)
    # inconsistent
    assert solve_mod([([2], 1)], 1, 4) == []
    # pivot divides later coefficient (the transform must terminate)
    eqs = [([4, 0], 2), ([4, 4], 2)]
    assert solve_mod(eqs, 2, 8) == _brute_solutions(eqs, 2, 8)
    # free variables enumerate the whole modulus
    assert solve_mod([], 1, 6) == [(k,) for k in range(6)]


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 8), st.integers(1, 3), st.data())
def test_solve_mod_matches_brute_force(N, n, data):
    rows = data.draw(st.lists(
        st.tuples(st.lists(st.integers(-N, N), min_size=n, max_size=n),
                  st.integers(-N, N)),
        max_size=4))
    eqs = [(list(r), rhs) for r, rhs in rows]
    assert solve_mod(eqs, n, N) == _brute_solutions(eqs, n, N)

"""Independent brute-force oracles shared by the test modules.

Everything here recomputes results from first principles (box scans,
memoized representability, literal double loops) so the library's fast paths
are checked against a second, unrelated route.
"""

from fractions import Fraction
from math import gcd

from toricmonoids import Cone2, box_lattice_points


def dual_rays_by_scan(cone: Cone2, bound: int = 12) -> set[tuple[int, int]]:
    """Primitive edge directions of the dual cone, by scanning a box.

    Collects every lattice point pairing nonnegatively with both rays and
    keeps the directions that have the whole collection on one side.
    """
    r1, r2 = (r.xy for r in cone.rays)
    pts = [
        (x, y)
        for x in range(-bound, bound + 1)
        for y in range(-bound, bound + 1)
        if (x, y) != (0, 0)
        and x * r1[0] + y * r1[1] >= 0
        and x * r2[0] + y * r2[1] >= 0
    ]
    extreme = set()
    for w in pts:
        crosses = [w[0] * s[1] - w[1] * s[0] for s in pts]
        if all(c >= 0 for c in crosses) or all(c <= 0 for c in crosses):
            g = gcd(abs(w[0]), abs(w[1]))
            extreme.add((w[0] // g, w[1] // g))
    return extreme


def can_represent(u, gens, cone, memo=None) -> bool:
    """Is ``u`` a nonnegative integer combination of ``gens`` inside ``cone``?"""
    memo = {} if memo is None else memo
    gens = [tuple(g) for g in gens]

    def rec(v):
        if v == (0, 0):
            return True
        if v in memo:
            return memo[v]
        memo[v] = False
        for g in gens:
            w = (v[0] - g[0], v[1] - g[1])
            if cone.contains(w) and rec(w):
                memo[v] = True
                break
        return memo[v]

    return rec(tuple(u))


def restriction_scan(cone: Cone2, n: int, bound: int) -> bool:
    """Literal check of the restriction condition on all cone points in a box."""
    for (x, y) in box_lattice_points(cone, bound):
        if not (cone.contains((0, y)) and cone.contains((0, y + n * x))):
            return False
    return True


def roots_by_double_loop(sigma: Cone2, ray_index: int, bound: int) -> list[tuple[int, int]]:
    """Demazure-root enumeration re-derived with inline dot products."""
    p = sigma.rays[ray_index].xy
    q = sigma.rays[1 - ray_index].xy
    out = []
    for ex in range(-bound, bound + 1):
        for ey in range(-bound, bound + 1):
            if ex * p[0] + ey * p[1] == -1 and ex * q[0] + ey * q[1] >= 0:
                out.append((ex, ey))
    return sorted(out)


def rand_fraction(rng, lo: int = -9, hi: int = 9, dmax: int = 7) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, dmax))


def rand_nonzero_fraction(rng, lo: int = -9, hi: int = 9, dmax: int = 7) -> Fraction:
    while True:
        q = rand_fraction(rng, lo, hi, dmax)
        if q:
            return q

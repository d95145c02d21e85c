"""Demazure roots of two-dimensional cones.

A Demazure root associated to a ray generator ``p_i`` of a strongly convex
cone ``sigma`` in N is a character ``e`` in M with ``<e, p_i> = -1`` and
``<e, p_j> >= 0`` for the other ray.  Each root indexes a homogeneous locally
nilpotent derivation of the cone's monomial algebra, and ordered pairs of
roots at a common ray index the rank-1 monoid structures on the surface.

Root families are infinite in one direction, so every enumeration here takes
an explicit coordinate bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import DerivationRule
from .lattice import Cone2, LatticeMap, LatticePoint, M, N, as_int, as_xy, pairing


def _root_point(e) -> LatticePoint:
    if isinstance(e, LatticePoint):
        if e.ambient != M:
            raise ValueError("a Demazure root is a character, i.e. a point of M")
        return e
    x, y = as_xy(e)
    return LatticePoint(as_int(x), as_int(y), M)


def _check_sigma(sigma: Cone2) -> Cone2:
    if sigma.ambient != N:
        raise ValueError("Demazure roots are taken for a cone in N")
    return sigma


def is_demazure_root(sigma: Cone2, ray_index: int, e) -> bool:
    """Truth of the two pairing conditions defining a root at ``rays[ray_index]``."""
    _check_sigma(sigma)
    if ray_index not in (0, 1):
        raise ValueError("ray_index must be 0 or 1")
    point = _root_point(e)
    p_i = sigma.rays[ray_index]
    p_j = sigma.rays[1 - ray_index]
    return pairing(point, p_i) == -1 and pairing(point, p_j) >= 0


@dataclass(frozen=True)
class DemazureRoot:
    """A root ``e`` together with the index of its distinguished ray.

    Use :meth:`validated` to have the defining pairing conditions checked
    against a cone at construction.
    """

    e: LatticePoint
    ray_index: int

    def __post_init__(self):
        if self.e.ambient != M:
            raise ValueError("a Demazure root is a character, i.e. a point of M")
        if self.ray_index not in (0, 1):
            raise ValueError("ray_index must be 0 or 1")

    @classmethod
    def validated(cls, sigma: Cone2, ray_index: int, e) -> "DemazureRoot":
        point = _root_point(e)
        if not is_demazure_root(sigma, ray_index, point):
            raise ValueError(f"{point} is not a Demazure root of {sigma} at ray {ray_index}")
        return cls(point, ray_index)

    def to_json(self) -> dict:
        return {"e": self.e.to_json(), "ray_index": self.ray_index}

    @classmethod
    def from_json(cls, data: dict) -> "DemazureRoot":
        return cls(LatticePoint.from_json(data["e"], M), as_int(data["ray_index"]))


@dataclass(frozen=True)
class RootPair:
    """An ordered pair of Demazure roots associated to one common ray."""

    e1: DemazureRoot
    e2: DemazureRoot

    def __post_init__(self):
        if self.e1.ray_index != self.e2.ray_index:
            raise ValueError("both roots of a pair must share the distinguished ray")

    @property
    def ray_index(self) -> int:
        return self.e1.ray_index


def roots_up_to(sigma: Cone2, ray_index: int, bound: int) -> list[DemazureRoot]:
    """All Demazure roots at ``rays[ray_index]`` with |coordinates| <= bound.

    The family is infinite in one direction, so the bound is mandatory; the
    result is sorted in the fixed total order on exponents.
    """
    _check_sigma(sigma)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    found = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if is_demazure_root(sigma, ray_index, (x, y)):
                found.append(DemazureRoot(LatticePoint(x, y, M), ray_index))
    return found


def root_basis(sigma: Cone2, root: DemazureRoot) -> tuple[LatticePoint, LatticePoint]:
    """The lattice basis ``(-e, v)`` attached to a root.

    ``v`` is the primitive ray of the dual cone orthogonal to the root's
    distinguished ray; the pair always has determinant +1 or -1.
    """
    _check_sigma(sigma)
    p = sigma.rays[root.ray_index]
    v = next(w for w in sigma.dual().rays if pairing(w, p) == 0)
    minus_e = -root.e
    det = minus_e.x * v.y - minus_e.y * v.x
    assert det in (1, -1), f"basis ({minus_e}, {v}) has determinant {det}"
    return (minus_e, v)


def derivation_for(sigma: Cone2, root: DemazureRoot, scale=Fraction(1)) -> DerivationRule:
    """The homogeneous locally nilpotent derivation indexed by a root."""
    _check_sigma(sigma)
    return DerivationRule(root=root.e, ray=sigma.rays[root.ray_index], scale=scale)


def dual_ray_swap(sigma: Cone2) -> LatticeMap | None:
    """The linear map exchanging the two rays of the dual cone, if it preserves M.

    Returns the integer matrix when the (unique, rational) swap map has
    integer entries, else None.  The swap is an involution of determinant -1,
    so integrality of the entries already gives an integer inverse.
    """
    w1, w2 = _check_sigma(sigma).dual().rays
    d = w1.x * w2.y - w1.y * w2.x

    def solve(b1: int, b2: int) -> tuple[Fraction, Fraction]:
        # Cramer's rule for [[w1.x, w1.y], [w2.x, w2.y]] . row = (b1, b2)
        return (Fraction(b1 * w2.y - b2 * w1.y, d), Fraction(w1.x * b2 - w2.x * b1, d))

    t11, t12 = solve(w2.x, w1.x)
    t21, t22 = solve(w2.y, w1.y)
    if any(t.denominator != 1 for t in (t11, t12, t21, t22)):
        return None
    return LatticeMap(int(t11), int(t12), int(t21), int(t22))


def pair_equivalence(sigma: Cone2, p: RootPair, q: RootPair) -> bool:
    """Do two root pairs induce isomorphic monoid structures on the surface?

    True when the pairs are equal, or when the ray-swapping map preserves the
    lattice and carries one ordered pair onto the other.  Reflexive and
    symmetric (the swap map is an involution).
    """
    _check_sigma(sigma)
    if p == q:
        return True
    swap = dual_ray_swap(sigma)
    if swap is None:
        return False
    return swap.apply(q.e1.e) == p.e1.e and swap.apply(q.e2.e) == p.e2.e

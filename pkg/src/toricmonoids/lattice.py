"""Exact geometry of rank-2 lattices: points, integer maps, rational strongly
convex cones, duality, and minimal semigroup generators.

Two mutually dual lattices are used throughout the package: ``M`` (character
exponents of the two-torus) and ``N`` (one-parameter subgroups).  Both are
coordinatized over the standard dual bases, so the pairing is the plain dot
product.  Every computation is exact integer or rational arithmetic; floats
are rejected.

Cones here are always full-dimensional and strongly convex, stored by their
two primitive ray generators in a normalized (lexicographic) order so that
structural equality coincides with mathematical equality.  The one degenerate
region the package needs, the half plane ``{u : u_x >= 0}``, is represented by
a dedicated descriptor in :mod:`toricmonoids.monoids`, not by :class:`Cone2`.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

M = "M"
N = "N"
_AMBIENTS = (M, N)

PointLike = Union["LatticePoint", "RationalPoint", Sequence]


class DegenerateConeError(ValueError):
    """Raised when ray data does not span a strongly convex 2D cone."""


def _check_ambient(ambient: str) -> str:
    if ambient not in _AMBIENTS:
        raise ValueError(f"ambient must be {M!r} or {N!r}, got {ambient!r}")
    return ambient


def other_ambient(ambient: str) -> str:
    return N if ambient == M else M


def as_xy(v: PointLike) -> tuple:
    """Coordinate pair of a point-like value (lattice point, rational point, or pair)."""
    if isinstance(v, (LatticePoint, RationalPoint)):
        return (v.x, v.y)
    x, y = v
    return (x, y)


def as_int(v) -> int:
    """Exact integer coercion; anything with a fractional part is refused."""
    try:
        return operator.index(v)
    except TypeError:
        raise ValueError(f"exact integer required, got {v!r}") from None


@dataclass(frozen=True, order=True)
class LatticePoint:
    """An integer point of ``M`` or ``N``.

    Ordering is lexicographic on ``(x, y)``; this is the fixed total order
    used everywhere for normalization.
    """

    x: int
    y: int
    ambient: str = M

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise ValueError(
                f"lattice point coordinates must be integers, got {(self.x, self.y)!r}"
            )
        _check_ambient(self.ambient)

    @property
    def xy(self) -> tuple[int, int]:
        return (self.x, self.y)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.x, -self.y, self.ambient)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        if not isinstance(other, LatticePoint) or other.ambient != self.ambient:
            return NotImplemented
        return LatticePoint(self.x + other.x, self.y + other.y, self.ambient)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        if not isinstance(other, LatticePoint) or other.ambient != self.ambient:
            return NotImplemented
        return LatticePoint(self.x - other.x, self.y - other.y, self.ambient)

    def to_json(self) -> list[int]:
        return [self.x, self.y]

    @classmethod
    def from_json(cls, data, ambient: str = M) -> "LatticePoint":
        x, y = data
        return cls(as_int(x), as_int(y), ambient)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class RationalPoint:
    """An exact rational point of ``M_Q`` or ``N_Q``."""

    x: Fraction
    y: Fraction
    ambient: str = M

    def __post_init__(self):
        object.__setattr__(self, "x", _exact(self.x))
        object.__setattr__(self, "y", _exact(self.y))
        _check_ambient(self.ambient)

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


def _exact(v) -> Fraction:
    """Coerce to Fraction, refusing floats so no rounding can sneak in."""
    if isinstance(v, float):
        raise TypeError(f"exact rational required, got float {v!r}")
    return Fraction(v)


def pairing(u: LatticePoint, p: LatticePoint) -> int:
    """Dual pairing of a character ``u`` in M with ``p`` in N (dot product)."""
    if u.ambient != M or p.ambient != N:
        raise ValueError(
            f"pairing expects an (M, N) argument pair, got ({u.ambient}, {p.ambient})"
        )
    return u.x * p.x + u.y * p.y


def primitive(v: LatticePoint) -> LatticePoint:
    """The primitive lattice point on the ray through ``v``.

    Divides out the gcd of the coordinates; the direction is preserved.
    """
    if v.x == 0 and v.y == 0:
        raise ValueError("the zero vector spans no ray")
    d = gcd(abs(v.x), abs(v.y))
    return LatticePoint(v.x // d, v.y // d, v.ambient)


def _as_lattice_point(v: PointLike, ambient: str) -> LatticePoint:
    if isinstance(v, LatticePoint):
        if v.ambient != ambient:
            raise ValueError(f"expected a point of {ambient}, got one of {v.ambient}")
        return v
    x, y = v
    return LatticePoint(as_int(x), as_int(y), ambient)


@dataclass(frozen=True)
class Cone2:
    """A full-dimensional strongly convex rational cone in a rank-2 lattice.

    Stored by its two primitive ray generators sorted lexicographically, so
    equal cones compare (and hash) equal.  Use :meth:`from_rays` to build one
    from arbitrary ray data.
    """

    rays: tuple[LatticePoint, LatticePoint]
    ambient: str = M

    def __post_init__(self):
        _check_ambient(self.ambient)
        r1, r2 = self.rays
        for r in (r1, r2):
            if not isinstance(r, LatticePoint) or r.ambient != self.ambient:
                raise ValueError("cone rays must be lattice points of the cone's ambient")
            if (r.x, r.y) == (0, 0):
                raise DegenerateConeError("zero vector is not a ray generator")
            if gcd(abs(r.x), abs(r.y)) != 1:
                raise ValueError(f"ray generator {r} is not primitive")
        if self._det == 0:
            raise DegenerateConeError(
                f"rays {r1}, {r2} are linearly dependent; the cone is not full-dimensional"
            )
        if not (r1.x, r1.y) < (r2.x, r2.y):
            raise ValueError("cone rays must be sorted in the canonical order")

    @classmethod
    def from_rays(cls, r1: PointLike, r2: PointLike, ambient: str | None = None) -> "Cone2":
        """Build the cone spanned by two rays, primitivizing and normalizing."""
        if ambient is None:
            tagged = [v.ambient for v in (r1, r2) if isinstance(v, (LatticePoint, RationalPoint))]
            ambient = tagged[0] if tagged else M
        points = []
        for r in (r1, r2):
            p = _as_lattice_point(r, ambient)
            if p.xy == (0, 0):
                raise DegenerateConeError("zero vector is not a ray generator")
            points.append(primitive(p))
        lo, hi = sorted(points)
        return cls((lo, hi), ambient)

    @property
    def _det(self) -> int:
        r1, r2 = self.rays
        return r1.x * r2.y - r1.y * r2.x

    @property
    def is_smooth(self) -> bool:
        """True when the ray generators form a lattice basis."""
        return abs(self._det) == 1

    def ray_index(self, p: PointLike) -> int:
        """Index (0 or 1) of a ray generator of this cone."""
        target = as_xy(p)
        for i, r in enumerate(self.rays):
            if r.xy == target:
                return i
        raise ValueError(f"{target} is not a ray generator of {self}")

    def ray_coefficients(self, q: PointLike) -> tuple[Fraction, Fraction]:
        """Exact coefficients (alpha, beta) with q = alpha*r1 + beta*r2."""
        x, y = as_xy(q)
        r1, r2 = self.rays
        d = self._det
        return (Fraction(x * r2.y - y * r2.x, d), Fraction(r1.x * y - r1.y * x, d))

    def contains(self, q: PointLike) -> bool:
        """Membership test: is ``q`` a nonnegative rational combination of the rays?"""
        if isinstance(q, (LatticePoint, RationalPoint)) and q.ambient != self.ambient:
            raise ValueError(
                f"point of {q.ambient} tested against a cone in {self.ambient}"
            )
        x, y = as_xy(q)
        r1, r2 = self.rays
        d = self._det
        num_alpha = x * r2.y - y * r2.x
        num_beta = r1.x * y - r1.y * x
        if d > 0:
            return num_alpha >= 0 and num_beta >= 0
        return num_alpha <= 0 and num_beta <= 0

    def dual(self) -> "Cone2":
        """The dual cone, with primitive rays, in the other ambient lattice.

        For a full-dimensional strongly convex 2D cone the dual is again
        full-dimensional and strongly convex; duality is an involution.
        """
        r1, r2 = self.rays
        if self._det > 0:
            w1 = (-r1.y, r1.x)
            w2 = (r2.y, -r2.x)
        else:
            w1 = (r1.y, -r1.x)
            w2 = (-r2.y, r2.x)
        return Cone2.from_rays(w1, w2, ambient=other_ambient(self.ambient))

    def to_json(self) -> dict:
        return {"rays": [r.to_json() for r in self.rays], "ambient": self.ambient}

    @classmethod
    def from_json(cls, data: dict) -> "Cone2":
        ambient = _check_ambient(data.get("ambient", M))
        rays = data["rays"]
        if len(rays) != 2:
            raise ValueError("a cone is given by exactly two rays")
        return cls.from_rays(tuple(rays[0]), tuple(rays[1]), ambient)

    def __str__(self) -> str:
        r1, r2 = self.rays
        return f"cone[{r1}, {r2}; {self.ambient}]"


@dataclass(frozen=True)
class LatticeMap:
    """An integer linear map of a rank-2 lattice.

    The matrix ``[[a, b], [c, d]]`` acts on column vectors:
    ``(x, y) |-> (a*x + b*y, c*x + d*y)``.  Invertible over the integers
    exactly when the determinant is +1 or -1.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for entry in (self.a, self.b, self.c, self.d):
            if not isinstance(entry, int):
                raise ValueError(f"lattice map entries must be integers, got {entry!r}")

    @classmethod
    def identity(cls) -> "LatticeMap":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def is_unimodular(self) -> bool:
        return self.det in (1, -1)

    def apply_xy(self, v: Sequence) -> tuple[int, int]:
        x, y = as_xy(v)
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def apply(self, v: LatticePoint) -> LatticePoint:
        x, y = self.apply_xy(v)
        return LatticePoint(x, y, v.ambient)

    def inverse(self) -> "LatticeMap":
        det = self.det
        if det not in (1, -1):
            raise ValueError(f"determinant {det}: no integer inverse")
        return LatticeMap(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def image_cone(self, cone: Cone2) -> Cone2:
        """Image of a cone, re-primitivized and re-normalized."""
        images = [self.apply_xy(r) for r in cone.rays]
        try:
            return Cone2.from_rays(images[0], images[1], cone.ambient)
        except (DegenerateConeError, ValueError) as exc:
            raise DegenerateConeError(f"image cone is degenerate: {exc}") from None

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def box_lattice_points(region, bound: int) -> list[tuple[int, int]]:
    """All integer points of ``region`` with both coordinates in [-bound, bound].

    ``region`` is anything with a ``contains`` method taking a coordinate
    pair (a :class:`Cone2` or the half-plane descriptor).
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    points = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if region.contains((x, y)):
                points.append((x, y))
    return points


def hilbert_basis(cone: Cone2) -> list[LatticePoint]:
    """The unique minimal generating set of the semigroup of lattice points of a cone.

    Every irreducible semigroup element lies in the fundamental parallelogram
    spanned by the two ray generators (anything beyond it has a ray generator
    as a summand), so the candidates are enumerated from a bounding box of the
    parallelogram and points that split as a sum of two nonzero cone points
    are sieved out.  Output is sorted in the fixed total order.
    """
    r1, r2 = (r.xy for r in cone.rays)
    corners = [(0, 0), r1, r2, (r1[0] + r2[0], r1[1] + r2[1])]
    xs = [p[0] for p in corners]
    ys = [p[1] for p in corners]
    candidates = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) == (0, 0):
                continue
            alpha, beta = cone.ray_coefficients((x, y))
            if 0 <= alpha <= 1 and 0 <= beta <= 1:
                candidates.append((x, y))
    generators = []
    for u in candidates:
        decomposable = any(
            v != u and cone.contains((u[0] - v[0], u[1] - v[1])) for v in candidates
        )
        if not decomposable:
            generators.append(u)
    return [LatticePoint(x, y, cone.ambient) for (x, y) in sorted(generators)]

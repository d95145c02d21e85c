"""Sparse Laurent-monomial algebra over exact rationals.

Elements are finite sums of character monomials ``chi^u`` with ``u`` ranging
over the rank-2 exponent lattice; tensor elements are sums of monomial pairs
``chi^u (x) chi^v``.  Exponent keys are plain integer pairs, coefficients are
:class:`fractions.Fraction`, and terms are kept in the fixed lexicographic
order so structural equality is semantic equality.  Homogeneous derivations
of monomial type (shift by a fixed degree, scaled by a pairing) round out the
toolbox.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import LatticePoint, M, N, as_int, as_xy, box_lattice_points


class PoleError(ZeroDivisionError):
    """Evaluation of a Laurent element at a zero of one of its denominators."""


def parse_rational(v) -> Fraction:
    """Exact rational from an int, string, or Fraction; floats are refused."""
    if isinstance(v, float):
        raise TypeError(f"exact rational required, got float {v!r}")
    return Fraction(v)


def format_rational(q: Fraction) -> str:
    return str(q)


def _exponent(u) -> tuple[int, int]:
    x, y = as_xy(u)
    return (as_int(x), as_int(y))


def _merge(pairs) -> dict:
    acc: dict = {}
    for key, coef in pairs:
        c = acc.get(key, 0) + coef
        if c:
            acc[key] = c
        elif key in acc:
            del acc[key]
    return {k: acc[k] for k in sorted(acc)}


class LaurentElement:
    """A sparse exact-rational sum of monomials ``chi^(a,b)``.

    Supports ring arithmetic, exponent substitution, and exact evaluation.
    The coordinate algebra is commutative even when the monoid carried by it
    is not.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        self._terms = _merge((_exponent(e), parse_rational(c)) for e, c in terms)

    @classmethod
    def zero(cls) -> "LaurentElement":
        return cls()

    @classmethod
    def one(cls) -> "LaurentElement":
        return cls.monomial((0, 0))

    @classmethod
    def monomial(cls, exponent, coefficient=1) -> "LaurentElement":
        return cls([(exponent, coefficient)])

    def terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        return list(self._terms.items())

    def support(self) -> list[tuple[int, int]]:
        return list(self._terms)

    def coefficient(self, exponent) -> Fraction:
        return self._terms.get(_exponent(exponent), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        out = LaurentElement.zero()
        out._terms = _merge(list(self._terms.items()) + list(other._terms.items()))
        return out

    def __neg__(self) -> "LaurentElement":
        out = LaurentElement.zero()
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentElement") -> "LaurentElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(parse_rational(other))
        if not isinstance(other, LaurentElement):
            return NotImplemented
        pairs = []
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                pairs.append(((a1 + a2, b1 + b2), c1 * c2))
        out = LaurentElement.zero()
        out._terms = _merge(pairs)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(parse_rational(other))
        return NotImplemented

    def _scaled(self, c: Fraction) -> "LaurentElement":
        out = LaurentElement.zero()
        if c:
            out._terms = {k: c * v for k, v in self._terms.items()}
        return out

    def __pow__(self, k: int) -> "LaurentElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be nonnegative integers")
        result = LaurentElement.one()
        base = self
        while k:  # repeated squaring
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_exponents(self, fn) -> "LaurentElement":
        """Apply an exponent substitution ``(a, b) -> (a', b')`` to every term."""
        return LaurentElement([(fn(k), c) for k, c in self._terms.items()])

    def evaluate(self, point) -> Fraction:
        """Exact value at a rational point ``(x, y)``.

        Raises :class:`PoleError` when a negative exponent meets a zero
        coordinate.
        """
        px, py = (parse_rational(v) for v in as_xy(point))
        total = Fraction(0)
        for (a, b), coef in self._terms.items():
            try:
                total += coef * px**a * py**b
            except ZeroDivisionError:
                raise PoleError(f"monomial x^{a} y^{b} has a pole at ({px}, {py})") from None
        return total

    def to_json(self) -> list[dict]:
        return [
            {"exp": [a, b], "coef": format_rational(c)}
            for (a, b), c in self._terms.items()
        ]

    @classmethod
    def from_json(cls, data) -> "LaurentElement":
        return cls([(tuple(item["exp"]), parse_rational(item["coef"])) for item in data])

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            _fmt_coef(c, _fmt_monomial(a, b)) for (a, b), c in self._terms.items()
        )

    __repr__ = __str__


def _fmt_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts)


def _fmt_coef(c: Fraction, monomial: str) -> str:
    if not monomial:
        return str(c)
    if c == 1:
        return monomial
    if c == -1:
        return f"-{monomial}"
    return f"{c}*{monomial}"


_TensorKey = tuple[tuple[int, int], tuple[int, int]]


class TensorElement:
    """A sparse exact-rational sum of monomial pairs ``chi^u (x) chi^v``.

    Carries the componentwise product ring structure of the tensor square of
    the Laurent algebra; houses comultiplication outputs.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        self._terms = _merge(
            ((_exponent(k[0]), _exponent(k[1])), parse_rational(c)) for k, c in terms
        )

    @classmethod
    def one(cls) -> "TensorElement":
        return cls.monomial((0, 0), (0, 0))

    @classmethod
    def monomial(cls, left, right, coefficient=1) -> "TensorElement":
        return cls([((left, right), coefficient)])

    def terms(self) -> list[tuple[_TensorKey, Fraction]]:
        return list(self._terms.items())

    def support(self) -> list[_TensorKey]:
        return list(self._terms)

    def coefficient(self, left, right) -> Fraction:
        return self._terms.get((_exponent(left), _exponent(right)), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = TensorElement()
        out._terms = _merge(list(self._terms.items()) + list(other._terms.items()))
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = parse_rational(other)
            out = TensorElement()
            if c:
                out._terms = {k: c * v for k, v in self._terms.items()}
            return out
        if not isinstance(other, TensorElement):
            return NotImplemented
        pairs = []
        for ((l1, r1), c1) in self._terms.items():
            for ((l2, r2), c2) in other._terms.items():
                key = ((l1[0] + l2[0], l1[1] + l2[1]), (r1[0] + r2[0], r1[1] + r2[1]))
                pairs.append((key, c1 * c2))
        out = TensorElement()
        out._terms = _merge(pairs)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TensorElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError("tensor powers must be nonnegative integers")
        result = TensorElement.one()
        base = self
        while k:  # repeated squaring
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def flip(self) -> "TensorElement":
        """Swap the two tensor legs."""
        return TensorElement([((r, l), c) for (l, r), c in self._terms.items()])

    def map_exponents(self, fn) -> "TensorElement":
        """Apply an exponent substitution to both legs of every term."""
        return TensorElement([((fn(l), fn(r)), c) for (l, r), c in self._terms.items()])

    def to_json(self) -> list[dict]:
        return [
            {"left": list(l), "right": list(r), "coef": format_rational(c)}
            for (l, r), c in self._terms.items()
        ]

    @classmethod
    def from_json(cls, data) -> "TensorElement":
        return cls(
            [
                ((tuple(item["left"]), tuple(item["right"])), parse_rational(item["coef"]))
                for item in data
            ]
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        def leg(e):
            return _fmt_monomial(*e) or "1"

        return " + ".join(
            _fmt_coef(c, f"{leg(l)} (x) {leg(r)}") for (l, r), c in self._terms.items()
        )

    __repr__ = __str__


@dataclass(frozen=True)
class DerivationRule:
    """A homogeneous derivation ``chi^u -> scale * <u, ray> * chi^(u + root)``.

    ``root`` is the degree of the derivation (a point of M), ``ray`` the
    distinguished one-parameter direction it pairs against (a point of N).
    The scale accounts for the choice of parametrization of the additive
    flow; every exported invariant is independent of it.
    """

    root: LatticePoint
    ray: LatticePoint
    scale: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if self.root.ambient != M:
            raise ValueError("derivation degree must live in M")
        if self.ray.ambient != N:
            raise ValueError("derivation ray must live in N")
        object.__setattr__(self, "scale", parse_rational(self.scale))
        if self.scale == 0:
            raise ValueError("derivation scale must be nonzero")

    def apply(self, f: LaurentElement) -> LaurentElement:
        """Linear extension of the monomial rule; satisfies the Leibniz identity."""
        rx, ry = self.root.xy
        px, py = self.ray.xy
        pairs = []
        for (a, b), coef in f.terms():
            weight = a * px + b * py
            if weight:
                pairs.append(((a + rx, b + ry), coef * self.scale * weight))
        return LaurentElement(pairs)

    def __call__(self, f: LaurentElement) -> LaurentElement:
        return self.apply(f)


def is_locally_nilpotent_on(rule: DerivationRule, region, probe_bound: int) -> bool:
    """Finite local-nilpotency certificate on the monomials of a cone.

    For every lattice point ``u`` of ``region`` with coordinates bounded by
    ``probe_bound``, some iterate of the derivation must kill ``chi^u`` within
    ``<u, ray> + 1`` steps.  The certificate is exact whenever the rule comes
    from a genuine Demazure root of the region's dual cone.
    """
    if probe_bound < 1:
        raise ValueError("probe_bound must be at least 1")
    px, py = rule.ray.xy
    for (x, y) in box_lattice_points(region, probe_bound):
        limit = x * px + y * py + 1
        if limit < 1:
            return False
        f = LaurentElement.monomial((x, y))
        for _ in range(limit):
            f = rule.apply(f)
            if not f:
                break
        if f:
            return False
    return True

"""Fixed-point data and the exact z-domain rigidity check.

A candidate manifold is known here only through its fixed-point data: for
each isolated fixed point a list of nonzero integer rotation weights and a
sign.  The two-parameter genus of such data is rigid exactly when the
signed sum over fixed points of

    prod_j (x z^w + y) / (z^w - 1),    z-exponents w running over weights,

is the constant given by the signed monomial sum over fixed points
(the Atiyah-Hirzebruch expression).  Clearing denominators turns that
into an exact Laurent-polynomial identity, which is what this module
decides.  Negative weights are rewritten with positive denominator
exponents: (x z^-a + y)/(z^-a - 1) = -(x + y z^a)/(z^a - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional

from .algebra import FactoredFraction, LaurentZ, PolyXY, Scalar

_X = PolyXY.x()
_Y = PolyXY.y()


@dataclass(frozen=True)
class FixedPoint:
    """One isolated fixed point: its integer rotation weights and its sign."""

    weights: tuple[int, ...]
    sign: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise ValueError("a fixed point needs at least one weight")
        if any(w == 0 for w in self.weights):
            raise ValueError("weights must be nonzero integers")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def s_plus(self) -> int:
        return sum(1 for w in self.weights if w > 0)

    @property
    def s_minus(self) -> int:
        return sum(1 for w in self.weights if w < 0)


@dataclass(frozen=True)
class FixedPointData:
    """Candidate data: n weights per point (half the real dimension) and a
    nonempty list of fixed points."""

    n: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if not self.points:
            raise ValueError("at least one fixed point is required")
        for p in self.points:
            if len(p.weights) != self.n:
                raise ValueError(
                    f"every point needs exactly {self.n} weights, got {len(p.weights)}"
                )

    @property
    def m(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class GenusReport:
    """Outcome of the exact rigidity check on one candidate.

    rigid holds exactly when the defect is the zero Laurent polynomial, in
    which case ``constant`` is present and equals ``ah_constant``.  The
    weight gcd is reported (not enforced) so callers can filter ineffective
    data, and ``limits_symmetric`` records the z -> 0 / z -> infinity
    necessary condition.
    """

    rigid: bool
    constant: Optional[PolyXY]
    defect: LaurentZ
    ah_constant: PolyXY
    limits_symmetric: bool
    weight_gcd: int


def point_term(point: FixedPoint) -> FactoredFraction:
    """The factored fraction contributed by a single fixed point."""
    numerator = LaurentZ.from_poly(PolyXY.const(point.sign))
    denominator = []
    for w in point.weights:
        if w > 0:
            numerator = numerator * LaurentZ({w: _X, 0: _Y})
            denominator.append(w)
        else:
            a = -w
            numerator = numerator * LaurentZ({0: -_X, a: -_Y})
            denominator.append(a)
    return FactoredFraction(numerator, tuple(denominator))


def rigidity_sum(data: FixedPointData) -> FactoredFraction:
    """The signed sum of point terms over all fixed points."""
    return reduce(
        FactoredFraction.__add__,
        (point_term(p) for p in data.points),
        FactoredFraction.zero(),
    )


def _signed_monomial_sum(data: FixedPointData, swapped: bool) -> PolyXY:
    items = []
    for p in data.points:
        plus, minus = p.s_plus, p.s_minus
        if swapped:
            plus, minus = minus, plus
        coeff = Fraction(p.sign if minus % 2 == 0 else -p.sign)
        items.append(((plus, minus), coeff))
    return PolyXY(items)


def ah_constant(data: FixedPointData) -> PolyXY:
    """The Atiyah-Hirzebruch value: sum of sign * x^{s+} * (-y)^{s-} over
    the fixed points."""
    return _signed_monomial_sum(data, swapped=False)


def limit_symmetry(data: FixedPointData) -> bool:
    """Necessary condition for rigidity from the z -> infinity and z -> 0
    limits of the fixed-point sum: the signed monomial sum must be
    invariant under swapping each point's positive and negative counts."""
    return _signed_monomial_sum(data, False) == _signed_monomial_sum(data, True)


def weight_gcd(data: FixedPointData) -> int:
    """gcd of all weight magnitudes; 1 means the data is effective."""
    return reduce(gcd, (abs(w) for p in data.points for w in p.weights))


def rigidity_defect(data: FixedPointData) -> LaurentZ:
    """Numerator minus constant times expanded denominator; the data is
    rigid exactly when this Laurent polynomial is zero."""
    total = rigidity_sum(data)
    expected = LaurentZ.from_poly(ah_constant(data))
    return total.numerator - expected * total.expanded_denominator()


def is_rigid(data: FixedPointData) -> GenusReport:
    defect = rigidity_defect(data)
    rigid = defect.is_zero()
    constant = ah_constant(data)
    return GenusReport(
        rigid=rigid,
        constant=constant if rigid else None,
        defect=defect,
        ah_constant=constant,
        limits_symmetric=limit_symmetry(data),
        weight_gcd=weight_gcd(data),
    )


def specialize(fraction: FactoredFraction, x0: Scalar, y0: Scalar) -> FactoredFraction:
    """Substitute rational values for x and y; the numerator becomes a
    Laurent polynomial with constant coefficients."""
    return FactoredFraction(fraction.numerator.specialize(x0, y0), fraction.denominator)


def substitute_x_pow(fraction: FactoredFraction, a: int) -> FactoredFraction:
    """Substitute x -> -z^a and y -> 1, producing a univariate fraction.

    This collapses a factor (x z^b + y) to (1 - z^{a+b}) and a factor
    (x + y z^b) to (z^b - z^a), killing any factor with b = a.
    """
    if a < 1:
        raise ValueError("the substitution exponent must be a positive integer")
    acc: dict[int, Fraction] = {}
    for k, p in fraction.numerator.terms.items():
        for (i, j), c in p.terms.items():
            exponent = k + a * i
            value = c if i % 2 == 0 else -c
            prev = acc.get(exponent)
            total = value if prev is None else prev + value
            if total:
                acc[exponent] = total
            elif prev is not None:
                del acc[exponent]
    numerator = LaurentZ({k: PolyXY.const(v) for k, v in acc.items()})
    return FactoredFraction(numerator, fraction.denominator)

"""Exact arithmetic kernel: sparse polynomials in x and y over the
rationals, Laurent polynomials in z, fractions whose denominators are
products of (z^a - 1), and truncated Laurent series.

Conventions shared by the whole package:

* coefficients are ``fractions.Fraction`` values, always reduced;
  no floating point appears anywhere,
* sparse maps never store a zero coefficient, so structural equality
  is semantic equality,
* every value is immutable once constructed and safe to share between
  threads or worker processes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class UnsupportedDivisionError(ArithmeticError):
    """A series division step needed an inverse that does not exist in the
    polynomial coefficient ring."""


def _fraction(value) -> Fraction:
    return value if type(value) is Fraction else Fraction(value)


class PolyXY:
    """Sparse polynomial in the formal variables x and y.

    ``terms`` maps exponent pairs ``(i, j)`` (both nonnegative) to nonzero
    rational coefficients.  The map is the canonical form: two polynomials
    are equal exactly when their term maps are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j}) in PolyXY")
            c = _fraction(c)
            if not c:
                continue
            key = (i, j)
            prev = clean.get(key)
            if prev is None:
                clean[key] = c
            elif prev + c:
                clean[key] = prev + c
            else:
                del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "PolyXY":
        # internal fast path; caller guarantees no zero coefficients
        poly = object.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls) -> "PolyXY":
        return cls._raw({})

    @classmethod
    def one(cls) -> "PolyXY":
        return cls._raw({(0, 0): Fraction(1)})

    @classmethod
    def x(cls) -> "PolyXY":
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "PolyXY":
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def const(cls, c: Scalar) -> "PolyXY":
        c = _fraction(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "PolyXY":
        c = _fraction(c)
        if i < 0 or j < 0:
            raise ValueError("monomial exponents must be nonnegative")
        return cls._raw({(i, j): c} if c else {})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms in the canonical (x-exponent, y-exponent) order."""
        return sorted(self.terms.items())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def single_term(self) -> tuple[tuple[int, int], Fraction]:
        ((key, c),) = self.terms.items()
        return key, c

    def as_constant(self) -> Optional[Fraction]:
        """The value as a plain rational, or None if x or y occurs."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and (0, 0) in self.terms:
            return self.terms[(0, 0)]
        return None

    def total_degree(self) -> int:
        """Largest i + j over the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(i + j == degree for i, j in self.terms)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["PolyXY"]:
        if isinstance(other, PolyXY):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyXY.const(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other) -> "PolyXY":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            prev = out.get(key)
            if prev is None:
                out[key] = c
            elif prev + c:
                out[key] = prev + c
            else:
                del out[key]
        return PolyXY._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyXY":
        return PolyXY._raw({key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "PolyXY":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PolyXY":
        return -(self - other)

    def __mul__(self, other) -> "PolyXY":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                c = c1 * c2
                prev = out.get(key)
                if prev is None:
                    out[key] = c
                elif prev + c:
                    out[key] = prev + c
                else:
                    del out[key]
        return PolyXY._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PolyXY":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PolyXY.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- substitutions ---------------------------------------------------

    def substitute(self, x0: Scalar, y0: Scalar) -> Fraction:
        """Evaluate at rational x0, y0."""
        x0, y0 = _fraction(x0), _fraction(y0)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x0**i * y0**j
        return total

    def swap_xy(self) -> "PolyXY":
        """Exchange the roles of x and y."""
        return PolyXY._raw({(j, i): c for (i, j), c in self.terms.items()})

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            body = []
            if i:
                body.append("x" if i == 1 else f"x^{i}")
            if j:
                body.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(body)
            mag = abs(c)
            if not mono:
                piece = str(mag)
            elif mag == 1:
                piece = mono
            else:
                piece = f"{mag}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + piece)
        text = " ".join(parts)
        return "-" + text[2:] if text.startswith("- ") else text[2:]

    def __repr__(self) -> str:
        return f"PolyXY({self})"


def poly_div_exact(numerator: PolyXY, divisor: PolyXY) -> Optional[PolyXY]:
    """Exact polynomial division; returns None when the quotient is not a
    polynomial.

    A single-term divisor is handled directly; otherwise sparse long
    division in the lexicographic term order is attempted, giving up on
    the first non-dividing step.
    """
    if divisor.is_zero():
        return None
    if numerator.is_zero():
        return PolyXY.zero()
    if divisor.is_monomial():
        (di, dj), dc = divisor.single_term()
        out = {}
        for (i, j), c in numerator.terms.items():
            if i < di or j < dj:
                return None
            out[(i - di, j - dj)] = c / dc
        return PolyXY._raw(out)
    lead = max(divisor.terms)
    lead_c = divisor.terms[lead]
    remainder = dict(numerator.terms)
    quotient: dict[tuple[int, int], Fraction] = {}
    while remainder:
        (i, j) = max(remainder)
        qi, qj = i - lead[0], j - lead[1]
        if qi < 0 or qj < 0:
            return None
        qc = remainder[(i, j)] / lead_c
        quotient[(qi, qj)] = qc
        for (a, b), dc in divisor.terms.items():
            key = (a + qi, b + qj)
            nc = remainder.get(key, Fraction(0)) - qc * dc
            if nc:
                remainder[key] = nc
            else:
                remainder.pop(key, None)
    return PolyXY._raw(quotient)


class LaurentZ:
    """Laurent polynomial in the formal variable z with PolyXY coefficients.

    Negative z-exponents are allowed; no stored coefficient is zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, PolyXY] = {}
        for k, p in items:
            if isinstance(p, (int, Fraction)):
                p = PolyXY.const(p)
            if p.is_zero():
                continue
            k = int(k)
            prev = clean.get(k)
            if prev is None:
                clean[k] = p
            else:
                s = prev + p
                if s.is_zero():
                    del clean[k]
                else:
                    clean[k] = s
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentZ":
        value = object.__new__(cls)
        value.terms = terms
        return value

    @classmethod
    def zero(cls) -> "LaurentZ":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentZ":
        return cls._raw({0: PolyXY.one()})

    @classmethod
    def from_poly(cls, p: PolyXY) -> "LaurentZ":
        return cls._raw({} if p.is_zero() else {0: p})

    @classmethod
    def term(cls, exponent: int, coefficient: PolyXY) -> "LaurentZ":
        return cls._raw({} if coefficient.is_zero() else {exponent: coefficient})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def term_count(self) -> int:
        return len(self.terms)

    def exponents(self) -> list[int]:
        return sorted(self.terms)

    def coeff(self, k: int) -> PolyXY:
        return self.terms.get(k, PolyXY.zero())

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("the zero Laurent polynomial has no exponents")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("the zero Laurent polynomial has no exponents")
        return max(self.terms)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["LaurentZ"]:
        if isinstance(other, LaurentZ):
            return other
        if isinstance(other, (int, Fraction, PolyXY)):
            p = other if isinstance(other, PolyXY) else PolyXY.const(other)
            return LaurentZ.from_poly(p)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other) -> "LaurentZ":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, p in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = p
            else:
                s = prev + p
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return LaurentZ._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentZ":
        return LaurentZ._raw({k: -p for k, p in self.terms.items()})

    def __sub__(self, other) -> "LaurentZ":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentZ":
        return -(self - other)

    def __mul__(self, other) -> "LaurentZ":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, PolyXY] = {}
        for k1, p1 in self.terms.items():
            for k2, p2 in other.terms.items():
                k = k1 + k2
                p = p1 * p2
                prev = out.get(k)
                if prev is None:
                    if not p.is_zero():
                        out[k] = p
                else:
                    s = prev + p
                    if s.is_zero():
                        del out[k]
                    else:
                        out[k] = s
        return LaurentZ._raw(out)

    __rmul__ = __mul__

    def shift(self, delta: int) -> "LaurentZ":
        """Multiply by z**delta."""
        return LaurentZ._raw({k + delta: p for k, p in self.terms.items()})

    # -- substitutions ---------------------------------------------------

    def specialize(self, x0: Scalar, y0: Scalar) -> "LaurentZ":
        """Substitute rational values for x and y; coefficients become
        constants."""
        out = {}
        for k, p in self.terms.items():
            v = p.substitute(x0, y0)
            if v:
                out[k] = PolyXY.const(v)
        return LaurentZ._raw(out)

    def eval_z(self, z0: Scalar) -> PolyXY:
        """Substitute a nonzero rational for z, keeping x and y formal."""
        z0 = _fraction(z0)
        if not z0:
            raise ValueError("z must be nonzero (negative exponents occur)")
        total = PolyXY.zero()
        for k, p in self.terms.items():
            total = total + p * z0**k
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            p = self.terms[k]
            if k == 0:
                parts.append(str(p))
                continue
            zpow = "z" if k == 1 else f"z^{k}"
            if p == PolyXY.one():
                parts.append(zpow)
            elif len(p.terms) == 1:
                parts.append(f"{p}*{zpow}")
            else:
                parts.append(f"({p})*{zpow}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentZ({self})"


def expand_denominator(entries: Iterable[int]) -> LaurentZ:
    """The product of (z^a - 1) over a multiset of positive integers."""
    out = LaurentZ.one()
    minus_one = PolyXY.const(-1)
    for a in entries:
        out = out * LaurentZ._raw({int(a): PolyXY.one(), 0: minus_one})
    return out


@dataclass(frozen=True)
class FactoredFraction:
    """A Laurent numerator over a denominator kept in factored form.

    ``denominator`` is a multiset of positive integers, each entry ``a``
    standing for one factor (z^a - 1); the overall sign lives in the
    numerator.  The value is never reduced to lowest terms: equality and
    constancy questions go through cross-multiplication.
    """

    numerator: LaurentZ
    denominator: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(sorted(int(a) for a in self.denominator))
        if any(a <= 0 for a in entries):
            raise ValueError("denominator entries must be positive integers")
        object.__setattr__(self, "denominator", entries)

    @classmethod
    def zero(cls) -> "FactoredFraction":
        return cls(LaurentZ.zero(), ())

    def __add__(self, other: "FactoredFraction") -> "FactoredFraction":
        if not isinstance(other, FactoredFraction):
            return NotImplemented
        mine, theirs = Counter(self.denominator), Counter(other.denominator)
        shared = mine | theirs  # least common multiset
        left = self.numerator * expand_denominator((shared - mine).elements())
        right = other.numerator * expand_denominator((shared - theirs).elements())
        return FactoredFraction(left + right, tuple(shared.elements()))

    def __neg__(self) -> "FactoredFraction":
        return FactoredFraction(-self.numerator, self.denominator)

    def __sub__(self, other: "FactoredFraction") -> "FactoredFraction":
        return self + (-other)

    def expanded_denominator(self) -> LaurentZ:
        return expand_denominator(self.denominator)

    def value_equals(self, other: "FactoredFraction") -> bool:
        """Equality of represented values, decided by cross-multiplication."""
        mine, theirs = Counter(self.denominator), Counter(other.denominator)
        shared = mine | theirs
        left = self.numerator * expand_denominator((shared - mine).elements())
        right = other.numerator * expand_denominator((shared - theirs).elements())
        return left == right

    def is_constant(self) -> Optional[PolyXY]:
        """The constant C with numerator == C * (expanded denominator), if any.

        The candidate C is read off the top z-coefficients and then verified
        by an exact identity test, so a returned value is always correct and
        None is returned whenever no polynomial constant exists.
        """
        if self.numerator.is_zero():
            return PolyXY.zero()
        expanded = self.expanded_denominator()
        if self.numerator.max_exp() != expanded.max_exp():
            return None
        candidate = poly_div_exact(
            self.numerator.coeff(self.numerator.max_exp()),
            expanded.coeff(expanded.max_exp()),
        )
        if candidate is None:
            return None
        if self.numerator - LaurentZ.from_poly(candidate) * expanded == LaurentZ.zero():
            return candidate
        return None

    def __str__(self) -> str:
        if not self.denominator:
            return f"({self.numerator})"
        den = "*".join(f"(z^{a} - 1)" if a != 1 else "(z - 1)" for a in self.denominator)
        return f"({self.numerator}) / {den}"


def fraction_is_constant(fraction: FactoredFraction) -> Optional[PolyXY]:
    return fraction.is_constant()


_ZERO_POLY = PolyXY.zero()


@dataclass(frozen=True)
class SeriesU:
    """Truncated Laurent series: PolyXY coefficients for the exponents
    ``lowest`` .. ``order - 1``.

    Coefficients below ``lowest`` are exactly zero; coefficients at
    ``order`` and above are unknown.  Arithmetic tracks how far results
    stay exact and truncates accordingly.
    """

    lowest: int
    order: int
    coeffs: tuple[PolyXY, ...]

    def __post_init__(self):
        if self.order < self.lowest:
            raise ValueError("order must be at least lowest")
        if len(self.coeffs) != self.order - self.lowest:
            raise ValueError("coefficient count does not match the exponent range")

    @classmethod
    def zero(cls, lowest: int = 0, order: int = 1) -> "SeriesU":
        return cls(lowest, order, (_ZERO_POLY,) * (order - lowest))

    @classmethod
    def const(cls, value: Union[PolyXY, Scalar], order: int) -> "SeriesU":
        if order < 1:
            raise ValueError("order must be at least 1")
        p = value if isinstance(value, PolyXY) else PolyXY.const(value)
        return cls(0, order, (p,) + (_ZERO_POLY,) * (order - 1))

    def coeff(self, k: int) -> PolyXY:
        if k < self.lowest:
            return _ZERO_POLY
        if k >= self.order:
            raise ValueError(f"exponent {k} is beyond the truncation order {self.order}")
        return self.coeffs[k - self.lowest]

    def valuation(self) -> Optional[int]:
        for k, c in zip(range(self.lowest, self.order), self.coeffs):
            if not c.is_zero():
                return k
        return None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "SeriesU":
        if not isinstance(other, SeriesU):
            return NotImplemented
        lowest = min(self.lowest, other.lowest)
        order = min(self.order, other.order)
        if order < lowest:
            raise ValueError("added series have no common retained range")
        return SeriesU(
            lowest, order,
            tuple(self.coeff(k) + other.coeff(k) for k in range(lowest, order)),
        )

    def __neg__(self) -> "SeriesU":
        return SeriesU(self.lowest, self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "SeriesU":
        if not isinstance(other, SeriesU):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SeriesU":
        if isinstance(other, (int, Fraction, PolyXY)):
            p = other if isinstance(other, PolyXY) else PolyXY.const(other)
            return SeriesU(self.lowest, self.order, tuple(c * p for c in self.coeffs))
        if not isinstance(other, SeriesU):
            return NotImplemented
        lowest = self.lowest + other.lowest
        order = min(self.order + other.lowest, other.order + self.lowest)
        if order < lowest:
            raise ValueError("multiplied series have no common retained range")
        out = [_ZERO_POLY] * (order - lowest)
        for ia, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            for jb, cb in enumerate(other.coeffs):
                target = ia + jb
                if target >= len(out):
                    break
                if cb.is_zero():
                    continue
                out[target] = out[target] + ca * cb
        return SeriesU(lowest, order, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SeriesU":
        """Exact truncated division.

        The divisor's lowest nonzero coefficient must divide exactly at
        every step (it always does when it is a rational constant);
        otherwise UnsupportedDivisionError is raised.
        """
        if not isinstance(other, SeriesU):
            return NotImplemented
        pivot = other.valuation()
        if pivot is None:
            raise ZeroDivisionError("series division by zero")
        lead = other.coeff(pivot)
        known = other.order - pivot
        count = min(self.order - self.lowest, known)
        start = self.lowest - pivot
        shifted = [other.coeff(pivot + t) for t in range(known)]
        quotient: list[PolyXY] = []
        for k in range(count):
            acc = self.coeffs[k]
            for j in range(max(0, k - known + 1), k):
                gj = shifted[k - j]
                if not gj.is_zero() and not quotient[j].is_zero():
                    acc = acc - quotient[j] * gj
            step = poly_div_exact(acc, lead)
            if step is None:
                raise UnsupportedDivisionError(
                    "series division needs a non-polynomial inverse"
                )
            quotient.append(step)
        return SeriesU(start, start + count, tuple(quotient))

    def truncate(self, lowest: Optional[int] = None, order: Optional[int] = None) -> "SeriesU":
        new_lowest = self.lowest if lowest is None else lowest
        new_order = self.order if order is None else order
        if new_order > self.order:
            raise ValueError("cannot extend a truncated series")
        if new_order < new_lowest:
            raise ValueError("order must be at least lowest")
        if new_lowest > self.lowest:
            dropped = self.coeffs[: new_lowest - self.lowest]
            if any(not c.is_zero() for c in dropped):
                raise ValueError("cannot drop nonzero low-order coefficients")
        return SeriesU(
            new_lowest, new_order,
            tuple(self.coeff(k) for k in range(new_lowest, new_order)),
        )

    def __str__(self) -> str:
        rows = []
        for k in range(self.lowest, self.order):
            c = self.coeff(k)
            if not c.is_zero():
                rows.append(f"({c})*u^{k}" if k else f"({c})")
        return " + ".join(rows) if rows else "0"


def series_exp(c: Union[PolyXY, Scalar], order: int) -> SeriesU:
    """The truncated exponential sum_{k<order} c^k / k! * u^k."""
    if order < 1:
        raise ValueError("order must be at least 1")
    p = c if isinstance(c, PolyXY) else PolyXY.const(c)
    coeffs = [PolyXY.one()]
    term = PolyXY.one()
    for k in range(1, order):
        term = term * p * Fraction(1, k)
        coeffs.append(term)
    return SeriesU(0, order, tuple(coeffs))

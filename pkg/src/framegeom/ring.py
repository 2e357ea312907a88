"""Exact scalar arithmetic for frame computations.

Two layers live here:

* rationals -- plain :class:`fractions.Fraction`, re-exported as
  :data:`Rational` together with the strict text form ``"p"`` / ``"p/q"``
  used by manifold documents and reports;

* the warped coefficient ring -- finite Q-linear combinations of monomials
  ``y1^a1 * ... * yd^ad * exp(k*yd)`` where ``yd`` is the last coordinate.
  Exponentials are permitted only in the last coordinate and only there can
  the weight ``k`` be negative; polynomial exponents are never negative.
  This is the smallest ring containing the coordinate functions that is
  closed under the frame derivations of both supported coordinate
  realizations (see :func:`apply_derivation`).

Everything is immutable and float-free: constructing a ring element or a
rational from a ``float`` raises ``TypeError``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import DimensionMismatch, RingError

Rational = Fraction

#: a monomial key: (polynomial exponents per coordinate, exponential weight)
Monomial = tuple[tuple[int, ...], int]

ScalarLike = Union[int, Fraction, "RingElement"]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the strict rational text form ``"p"`` or ``"p/q"`` (q > 0)."""
    if not isinstance(text, str):
        raise RingError(f"rational must be a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RingError(f"not a rational: {text!r} (expected 'p' or 'p/q')")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RingError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical text form: lowest terms, positive denominator, '/' only if needed."""
    return str(Fraction(value))


def exact_fraction(value) -> Fraction:
    """Coerce int/Fraction to Fraction; floats are rejected (exactness policy)."""
    return _as_fraction(value)


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact arithmetic only: got {type(value).__name__}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise TypeError(f"cannot coerce {type(value).__name__} to a rational")


class RingElement:
    """An element of the warped coefficient ring over ``dim`` coordinates.

    Stored as a map from :data:`Monomial` to nonzero rational coefficients;
    the zero element is the empty map.  Instances are immutable and support
    ``+``, ``-``, ``*``, ``**`` and mixed arithmetic with ``int`` and
    ``Fraction``.
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Monomial, Fraction] = ()):
        if not isinstance(dim, int) or dim < 1:
            raise RingError(f"coordinate count must be a positive integer, got {dim!r}")
        clean: dict[Monomial, Fraction] = {}
        for (exps, weight), coeff in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != dim:
                raise RingError(f"monomial has {len(exps)} exponents, expected {dim}")
            if any(not isinstance(e, int) or e < 0 for e in exps):
                raise RingError(f"polynomial exponents must be non-negative integers: {exps}")
            if not isinstance(weight, int):
                raise RingError(f"exponential weight must be an integer: {weight!r}")
            coeff = _as_fraction(coeff)
            if coeff != 0:
                key = (exps, weight)
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if clean[key] == 0:
                    del clean[key]
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "RingElement":
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, value) -> "RingElement":
        value = _as_fraction(value)
        if value == 0:
            return cls(dim)
        return cls(dim, {((0,) * dim, 0): value})

    @classmethod
    def coordinate(cls, dim: int, index: int) -> "RingElement":
        """The coordinate function of the given 0-based coordinate."""
        if not 0 <= index < dim:
            raise RingError(f"coordinate index {index} out of range for dim {dim}")
        exps = tuple(1 if i == index else 0 for i in range(dim))
        return cls(dim, {(exps, 0): Fraction(1)})

    @classmethod
    def exponential(cls, dim: int, weight: int) -> "RingElement":
        """``exp(weight * y_dim)`` in the last coordinate."""
        return cls(dim, {((0,) * dim, weight): Fraction(1)})

    @classmethod
    def term(cls, dim: int, coeff, exponents: Iterable[int], weight: int = 0) -> "RingElement":
        return cls(dim, {(tuple(exponents), weight): _as_fraction(coeff)})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], int, Fraction]]:
        """Deterministically ordered (exponents, weight, coefficient) triples."""
        for (exps, weight) in sorted(self._terms, key=lambda m: (m[1], m[0])):
            yield exps, weight, self._terms[(exps, weight)]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        if not self._terms:
            return True
        if len(self._terms) != 1:
            return False
        (exps, weight), = self._terms
        return weight == 0 and all(e == 0 for e in exps)

    def constant_value(self) -> Fraction:
        """The value of a constant element; raises RingError otherwise."""
        if not self._terms:
            return Fraction(0)
        if not self.is_constant():
            raise RingError(f"not a constant: {self}")
        return next(iter(self._terms.values()))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.dim != self.dim:
                raise DimensionMismatch(
                    f"ring elements over {self.dim} and {other.dim} coordinates"
                )
            return other
        return RingElement.constant(self.dim, other)

    def __add__(self, other) -> "RingElement":
        other = self._coerce(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return RingElement(self.dim, terms)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.dim, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RingElement":
        other = self._coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for (e1, w1), c1 in self._terms.items():
            for (e2, w2), c2 in other._terms.items():
                key = (tuple(a + b for a, b in zip(e1, e2)), w1 + w2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return RingElement(self.dim, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "RingElement":
        if not isinstance(power, int) or power < 0:
            raise RingError("only non-negative integer powers are defined")
        result = RingElement.constant(self.dim, 1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- calculus ----------------------------------------------------------

    def partial(self, index: int) -> "RingElement":
        """Coordinate partial derivative d/dy_{index} (0-based).

        For the last coordinate this includes the chain-rule contribution of
        the exponential factor, so the result stays inside the ring.
        """
        if not 0 <= index < self.dim:
            raise RingError(f"coordinate index {index} out of range for dim {self.dim}")
        terms: dict[Monomial, Fraction] = {}

        def accumulate(key, coeff):
            if coeff != 0:
                terms[key] = terms.get(key, Fraction(0)) + coeff
                if terms[key] == 0:
                    del terms[key]

        for (exps, weight), coeff in self._terms.items():
            if exps[index] > 0:
                lowered = list(exps)
                lowered[index] -= 1
                accumulate((tuple(lowered), weight), coeff * exps[index])
            if index == self.dim - 1 and weight != 0:
                accumulate((exps, weight), coeff * weight)
        return RingElement(self.dim, terms)

    def times_exp(self, weight: int) -> "RingElement":
        """Multiply by ``exp(weight * y_dim)``."""
        if not isinstance(weight, int):
            raise RingError("exponential weight must be an integer")
        return RingElement(
            self.dim, {(exps, w + weight): c for (exps, w), c in self._terms.items()}
        )

    def exact_div(self, divisor: "RingElement"):
        """Exact quotient self / divisor, or None when the division is not exact.

        The ring is an integral domain, so the quotient is unique when it
        exists.  Division proceeds by normalizing away negative exponential
        weights and then reducing leading terms under lexicographic order on
        (weight, exponents).
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("ring division by zero")
        if self.is_zero():
            return RingElement.zero(self.dim)

        w_self = min(w for (_, w) in self._terms)
        w_div = min(w for (_, w) in divisor._terms)
        num = self.times_exp(-w_self)
        den = divisor.times_exp(-w_div)

        def key(mon):
            exps, w = mon
            return (w,) + exps

        lead_den = max(den._terms, key=key)
        lead_den_coeff = den._terms[lead_den]

        quotient: dict[Monomial, Fraction] = {}
        remainder = num
        while not remainder.is_zero():
            lead_rem = max(remainder._terms, key=key)
            (re_exps, re_w), (de_exps, de_w) = lead_rem, lead_den
            if re_w < de_w or any(a < b for a, b in zip(re_exps, de_exps)):
                return None
            q_mon = (tuple(a - b for a, b in zip(re_exps, de_exps)), re_w - de_w)
            q_coeff = remainder._terms[lead_rem] / lead_den_coeff
            quotient[q_mon] = quotient.get(q_mon, Fraction(0)) + q_coeff
            remainder = remainder - RingElement(self.dim, {q_mon: q_coeff}) * den
        return RingElement(self.dim, quotient).times_exp(w_self - w_div)

    # -- formatting --------------------------------------------------------

    def _term_str(self, exps, weight, coeff) -> str:
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(f"y{i + 1}")
            elif e > 1:
                factors.append(f"y{i + 1}^{e}")
        if weight == 1:
            factors.append(f"exp(y{self.dim})")
        elif weight == -1:
            factors.append(f"exp(-y{self.dim})")
        elif weight != 0:
            factors.append(f"exp({weight}*y{self.dim})")
        if not factors:
            return format_rational(coeff)
        if coeff == 1:
            return " * ".join(factors)
        if coeff == -1:
            return "-" + " * ".join(factors)
        return " * ".join([format_rational(coeff)] + factors)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, weight, coeff in self.terms():
            parts.append(self._term_str(exps, weight, coeff))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self) -> str:
        return f"RingElement({self.dim}, {self!s})"


# -- parsing of the textual form ------------------------------------------

_VAR_RE = re.compile(r"^y(\d+)(?:\^(\d+))?$")
_EXP_RE = re.compile(r"^exp\(\s*(-)?\s*(?:(\d+)\s*\*\s*)?y(\d+)\s*\)$")


def _parse_factor(token: str, dim: int) -> RingElement:
    token = token.strip()
    m = _VAR_RE.match(token)
    if m:
        index = int(m.group(1)) - 1
        power = int(m.group(2)) if m.group(2) else 1
        if not 0 <= index < dim:
            raise RingError(f"coordinate y{index + 1} out of range for dim {dim}")
        return RingElement.coordinate(dim, index) ** power
    m = _EXP_RE.match(token)
    if m:
        index = int(m.group(3)) - 1
        if index != dim - 1:
            raise RingError(
                f"exponentials are only supported in the last coordinate y{dim}"
            )
        weight = int(m.group(2)) if m.group(2) else 1
        if m.group(1):
            weight = -weight
        return RingElement.exponential(dim, weight)
    return RingElement.constant(dim, parse_rational(token))


def parse_ring_element(text: str, dim: int) -> RingElement:
    """Parse the canonical textual form, e.g. ``"2/3 * y1^2 * exp(-y5) + 1"``.

    Accepts sums of terms joined by ``+``/``-``; each term is a ``*``-separated
    product of a rational, coordinates ``yN`` (optionally ``^k``) and a single
    ``exp(k*yD)`` factor in the last coordinate.
    """
    if not isinstance(text, str) or not text.strip():
        raise RingError(f"not a ring element: {text!r}")
    total = RingElement.zero(dim)
    term = ""
    sign = 1
    depth = 0
    pending: list[tuple[int, str]] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise RingError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0 and term.strip():
            pending.append((sign, term))
            sign = 1 if ch == "+" else -1
            term = ""
        elif ch in "+-" and depth == 0 and not term.strip():
            sign = sign if ch == "+" else -sign
        else:
            term += ch
    if depth != 0:
        raise RingError(f"unbalanced parentheses in {text!r}")
    if not term.strip():
        raise RingError(f"dangling sign in {text!r}")
    pending.append((sign, term))
    for sgn, chunk in pending:
        value = RingElement.constant(dim, sgn)
        for factor in _split_factors(chunk):
            value = value * _parse_factor(factor, dim)
        total = total + value
    return total


def _split_factors(chunk: str) -> list[str]:
    factors = []
    depth = 0
    current = ""
    for ch in chunk:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            factors.append(current)
            current = ""
        else:
            current += ch
    factors.append(current)
    return factors


# -- frame derivations -----------------------------------------------------

def apply_derivation(index: int, func: RingElement, spec) -> RingElement:
    """Apply the frame vector field e_{index} (0-based) to a ring function.

    The action depends on the coordinate realization of the manifold frame:

    * ``flat`` (abelian bracket table): e_i = d/dy_i;
    * ``warped`` (warped bracket table [e_i, e_d] = e_i): e_i =
      exp(-y_d) * d/dy_i for i < d-1 and e_d = d/dy_d.

    Constants are killed by every derivation, so they are accepted for any
    frame; differentiating a non-constant function on a frame without a
    coordinate realization raises :class:`RingError`.
    """
    dim = spec.dim
    if not 0 <= index < dim:
        raise RingError(f"frame index {index} out of range for dim {dim}")
    if func.dim != dim:
        raise DimensionMismatch(f"function over {func.dim} coordinates on a dim-{dim} frame")
    if func.is_constant():
        return RingElement.zero(dim)
    realization = spec.realization
    if realization == "flat":
        return func.partial(index)
    if realization == "warped":
        if index == dim - 1:
            return func.partial(index)
        return func.partial(index).times_exp(-1)
    raise RingError(
        "frame has no supported coordinate realization; "
        "only constant functions can be differentiated"
    )

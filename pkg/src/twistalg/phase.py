"""Exact coefficients in Q[mu, mu^-1] with the unit-phase involution mu* = mu^-1."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class PhaseCoefficient:
    """Laurent polynomial in the formal phase ``mu`` over the rationals.

    Stored as a sorted tuple of ``(exponent, rational)`` pairs with no zero
    rationals, so equality and hashing are structural.
    """

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for k, q in items:
            acc[k] = acc.get(k, 0) + Fraction(q)
        self._t = tuple(sorted((k, q) for k, q in acc.items() if q != 0))
        self._h = None

    @classmethod
    def _raw(cls, t: tuple) -> "PhaseCoefficient":
        obj = cls.__new__(cls)
        obj._t = t
        obj._h = None
        return obj

    @classmethod
    def mu(cls, k: int = 1, q: Scalar = 1) -> "PhaseCoefficient":
        if q == 0:
            return ZERO
        return cls._raw(((k, Fraction(q)),))

    @classmethod
    def const(cls, q: Scalar) -> "PhaseCoefficient":
        return cls.mu(0, q)

    @classmethod
    def coerce(cls, x) -> "PhaseCoefficient":
        if isinstance(x, PhaseCoefficient):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot use {type(x).__name__} as a phase coefficient")

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._t)

    def items(self):
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def is_unit_monomial(self) -> bool:
        return len(self._t) == 1

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PhaseCoefficient.const(other)
        if not isinstance(other, PhaseCoefficient):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(self._t)
        return self._h

    def __add__(self, other) -> "PhaseCoefficient":
        other = PhaseCoefficient.coerce(other)
        acc = dict(self._t)
        for k, q in other._t:
            acc[k] = acc.get(k, 0) + q
        return PhaseCoefficient._raw(tuple(sorted((k, q) for k, q in acc.items() if q != 0)))

    __radd__ = __add__

    def __neg__(self) -> "PhaseCoefficient":
        return PhaseCoefficient._raw(tuple((k, -q) for k, q in self._t))

    def __sub__(self, other) -> "PhaseCoefficient":
        return self + (-PhaseCoefficient.coerce(other))

    def __rsub__(self, other) -> "PhaseCoefficient":
        return PhaseCoefficient.coerce(other) - self

    def __mul__(self, other) -> "PhaseCoefficient":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return PhaseCoefficient._raw(tuple((k, q * other) for k, q in self._t))
        if not isinstance(other, PhaseCoefficient):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for k1, q1 in self._t:
            for k2, q2 in other._t:
                acc[k1 + k2] = acc.get(k1 + k2, 0) + q1 * q2
        return PhaseCoefficient._raw(tuple(sorted((k, q) for k, q in acc.items() if q != 0)))

    __rmul__ = __mul__

    def shift(self, k: int) -> "PhaseCoefficient":
        """Multiply by mu^k."""
        if k == 0:
            return self
        return PhaseCoefficient._raw(tuple((e + k, q) for e, q in self._t))

    def conj(self) -> "PhaseCoefficient":
        return PhaseCoefficient._raw(tuple((-k, q) for k, q in reversed(self._t)))

    def inverse(self) -> "PhaseCoefficient":
        if len(self._t) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of Q[mu, 1/mu]")
        k, q = self._t[0]
        return PhaseCoefficient._raw(((-k, 1 / q),))

    def __truediv__(self, other) -> "PhaseCoefficient":
        return self * PhaseCoefficient.coerce(other).inverse()

    def at_one(self) -> Fraction:
        """Classical specialisation mu = 1."""
        return sum((q for _, q in self._t), Fraction(0))

    def eval_numeric(self, theta: float) -> complex:
        """Substitute mu = exp(i*pi*theta). For reporting only."""
        return sum(float(q) * cmath.exp(1j * math.pi * theta * k) for k, q in self._t) + 0j

    def __repr__(self) -> str:
        return f"PhaseCoefficient({self})"

    def __str__(self) -> str:
        return format_phase(self)

    @classmethod
    def parse(cls, text: str) -> "PhaseCoefficient":
        """Parse sums of ``q``, ``q*mu^k``, ``mubar``, ``lambda`` terms."""
        s = text.replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if s in ("", "0"):
            return ZERO
        pieces, cur = [], ""
        for i, ch in enumerate(s):
            if ch in "+-" and cur and s[i - 1] != "^":
                pieces.append(cur)
                cur = ""
            cur += ch
        pieces.append(cur)
        total = ZERO
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            term = cls.const(sign)
            for factor in body.split("*"):
                name, _, exp = factor.partition("^")
                base = {"mu": 1, "mubar": -1, "lambda": 2, "lambdabar": -2}.get(name)
                try:
                    if base is None:
                        if exp:
                            raise ValueError
                        term = term * Fraction(name)
                    else:
                        term = term.shift(base * (int(exp) if exp else 1))
                except ValueError:
                    raise ValueError(f"cannot parse phase coefficient {text!r}") from None
            total = total + term
        return total


ZERO = PhaseCoefficient._raw(())
ONE = PhaseCoefficient._raw(((0, Fraction(1)),))
MU = PhaseCoefficient._raw(((1, Fraction(1)),))
MUBAR = PhaseCoefficient._raw(((-1, Fraction(1)),))
LAMBDA = PhaseCoefficient._raw(((2, Fraction(1)),))


def format_power(k: int) -> str:
    if k == 0:
        return "1"
    if k == 1:
        return "mu"
    if k == -1:
        return "mubar"
    return f"mu^{k}"


def _format_single(k: int, q: Fraction) -> str:
    if k == 0:
        return str(q)
    if q == 1:
        return format_power(k)
    if q == -1:
        return "-" + format_power(k)
    return f"{q}*{format_power(k)}"


def format_phase(c: PhaseCoefficient) -> str:
    t = c.items()
    if not t:
        return "0"
    out = ""
    for i, (k, q) in enumerate(sorted(t, key=lambda kq: (kq[0] != 0, kq[0]))):
        piece = _format_single(k, q)
        if i == 0:
            out = piece
        elif piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out

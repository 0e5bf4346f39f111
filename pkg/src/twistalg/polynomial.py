"""Sparse polynomials over one or more presentations (tensor legs)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .phase import ONE, ZERO, PhaseCoefficient
from .presentation import Presentation


class PresentationMismatch(TypeError):
    pass


def _finish(acc: dict) -> dict:
    """Turn ``key -> {exp: Fraction}`` accumulators into ``key -> PhaseCoefficient``."""
    out = {}
    for key, coeffs in acc.items():
        t = tuple(sorted((k, q) for k, q in coeffs.items() if q))
        if t:
            out[key] = PhaseCoefficient._raw(t)
    return out


class Polynomial:
    """Map from per-leg normal-form monomial tuples to nonzero coefficients.

    Arity 1 is an ordinary element of a twisted algebra; arity n >= 2 lives
    in the n-fold tensor product with leg-wise multiplication. Arity 0 is a
    bare scalar and only appears as the output of ``leg_collect``.
    """

    __slots__ = ("legs", "terms")

    def __init__(self, legs: Sequence[Presentation], terms: Optional[Mapping] = None):
        self.legs = tuple(legs)
        self.terms: dict = {}
        if terms:
            for key, c in terms.items():
                c = PhaseCoefficient.coerce(c)
                if c:
                    self.terms[tuple(key)] = c

    @classmethod
    def _raw(cls, legs, terms: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.legs = legs
        obj.terms = terms
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, legs) -> "Polynomial":
        return cls._raw(tuple(legs), {})

    @classmethod
    def const(cls, legs, c=1) -> "Polynomial":
        legs = tuple(legs)
        c = PhaseCoefficient.coerce(c)
        return cls._raw(legs, {tuple(p.one for p in legs): c} if c else {})

    @classmethod
    def one(cls, legs) -> "Polynomial":
        return cls.const(legs, ONE)

    @classmethod
    def letter(cls, pres: Presentation, name: str, c=1) -> "Polynomial":
        a = pres.index(name)
        return cls._raw((pres,), {(pres.monomial_of_letter(a),): PhaseCoefficient.coerce(c)})

    @classmethod
    def word(cls, pres: Presentation, names: Iterable[str]) -> "Polynomial":
        c, m = pres.normal_order([pres.index(n) for n in names])
        return cls._raw((pres,), {(m,): c} if m is not None else {})

    # -- inspection --------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.legs)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, key) -> PhaseCoefficient:
        return self.terms.get(tuple(key), ZERO)

    def constant_term(self) -> PhaseCoefficient:
        return self.terms.get(tuple(p.one for p in self.legs), ZERO)

    def is_constant(self) -> bool:
        one = tuple(p.one for p in self.legs)
        return all(k == one for k in self.terms)

    def _check(self, other: "Polynomial") -> None:
        if len(self.legs) != len(other.legs) or any(a is not b for a, b in zip(self.legs, other.legs)):
            raise PresentationMismatch(
                f"cannot combine polynomials over {[p.name for p in self.legs]} and {[p.name for p in other.legs]}"
            )

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.const(self.legs, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, PhaseCoefficient)):
            return self.terms == Polynomial.const(self.legs, other).terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return len(self.legs) == len(other.legs) and all(
            a is b for a, b in zip(self.legs, other.legs)
        ) and self.terms == other.terms

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        if not other.terms:
            return self
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key)
            if s is None:
                terms[key] = c
            else:
                s = s + c
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return Polynomial._raw(self.legs, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        c = PhaseCoefficient.coerce(c)
        if not c:
            return Polynomial.zero(self.legs)
        terms = {}
        for k, v in self.terms.items():
            p = v * c
            if p:
                terms[k] = p
        return Polynomial._raw(self.legs, terms)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, PhaseCoefficient)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        legs = self.legs
        acc: dict = {}
        n = len(legs)
        other_items = list(other.terms.items())
        for k1, c1 in self.terms.items():
            t1 = c1.items()
            for k2, c2 in other_items:
                shift = 0
                sign = 1
                key = []
                for i in range(n):
                    r = legs[i].mul(k1[i], k2[i])
                    if r is None:
                        break
                    shift += r[0]
                    if r[1] < 0:
                        sign = -sign
                    key.append(r[2])
                else:
                    slot = acc.get(key := tuple(key))
                    if slot is None:
                        slot = acc[key] = {}
                    for e1, q1 in t1:
                        for e2, q2 in c2.items():
                            e = e1 + e2 + shift
                            q = q1 * q2 if sign > 0 else -(q1 * q2)
                            slot[e] = slot.get(e, 0) + q
        return Polynomial._raw(legs, _finish(acc))

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, PhaseCoefficient)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not available")
        out = Polynomial.one(self.legs)
        for _ in range(k):
            out = out * self
        return out

    def commutator(self, other: "Polynomial") -> "Polynomial":
        return self * other - other * self

    def graded_commutator(self, other: "Polynomial") -> "Polynomial":
        """``fg - (-1)^{|f||g|} gf`` for parity-homogeneous f, g."""
        if self.odd_parity() and other.odd_parity():
            return self * other + other * self
        return self * other - other * self

    # -- involution and structure -----------------------------------------

    def star(self) -> "Polynomial":
        """Reverse words, star letters and conjugate coefficients (leg-wise)."""
        acc: dict = {}
        legs = self.legs
        for key, c in self.terms.items():
            shift = 0
            sign = 1
            nk = []
            for p, m in zip(legs, key):
                k, s, mm = p.star_monomial(m)
                shift += k
                sign *= s
                nk.append(mm)
            cc = c.conj().shift(shift) * sign
            nk = tuple(nk)
            prev = acc.get(nk)
            acc[nk] = cc if prev is None else prev + cc
        return Polynomial._raw(legs, {k: v for k, v in acc.items() if v})

    def tensor(self, other: "Polynomial") -> "Polynomial":
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[k1 + k2] = c1 * c2
        return Polynomial._raw(self.legs + other.legs, terms)

    def odd_parity(self) -> int:
        """Parity of a homogeneous polynomial; raises on mixed parity."""
        pars = {sum(p.odd_degree(m) for p, m in zip(self.legs, key)) & 1 for key in self.terms}
        if len(pars) > 1:
            raise ValueError("polynomial is not parity-homogeneous")
        return pars.pop() if pars else 0

    def leg_collect(self, leg: int) -> dict:
        """Group by the monomial on ``leg``; values drop that leg."""
        rest = self.legs[:leg] + self.legs[leg + 1:]
        groups: dict = {}
        for key, c in self.terms.items():
            groups.setdefault(key[leg], {})[key[:leg] + key[leg + 1:]] = c
        return {m: Polynomial._raw(rest, t) for m, t in groups.items()}

    def map_coefficients(self, f) -> "Polynomial":
        terms = {}
        for k, c in self.terms.items():
            v = PhaseCoefficient.coerce(f(c))
            if v:
                terms[k] = v
        return Polynomial._raw(self.legs, terms)

    def at_one(self) -> dict:
        """Classical specialisation: ``key -> Fraction`` with mu = 1."""
        out = {}
        for k, c in self.terms.items():
            v = c.at_one()
            if v:
                out[k] = v
        return out

    def total_degree(self) -> int:
        return max((sum(p.degree(m) for p, m in zip(self.legs, k)) for k in self.terms), default=0)

    # -- text --------------------------------------------------------------

    def sorted_terms(self):
        legs = self.legs
        return sorted(
            self.terms.items(),
            key=lambda kc: tuple(p.order_key(m) for p, m in zip(legs, kc[0])),
            reverse=True,
        )

    def monomial_text(self, key) -> str:
        return " @ ".join(p.format_monomial(m) for p, m in zip(self.legs, key))

    def to_text(self, theta: Optional[float] = None) -> str:
        if not self.terms:
            return "0"
        one = tuple(p.one for p in self.legs)
        out = ""
        for i, (key, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_text(key) if key != one else ""
            piece, neg = _term_text(c, mono, theta)
            if i == 0:
                out = ("-" if neg else "") + piece
            else:
                out += (" - " if neg else " + ") + piece
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial[{','.join(p.name for p in self.legs)}]({self.to_text()})"


def _term_text(c: PhaseCoefficient, mono: str, theta: Optional[float]) -> tuple[str, bool]:
    if theta is not None:
        z = c.eval_numeric(theta)
        ctext = f"({z.real:.6g}{z.imag:+.6g}i)"
        return (f"{ctext} * {mono}" if mono else ctext), False
    items = c.items()
    neg = False
    if len(items) == 1:
        k, q = items[0]
        if q < 0:
            neg = True
            c = -c
        ctext = str(c)
    else:
        ctext = f"({c})"
    if not mono:
        return ctext, neg
    if ctext == "1":
        return mono, neg
    return f"{ctext} * {mono}", neg


def letters(pres: Presentation, *names: str) -> list[Polynomial]:
    return [Polynomial.letter(pres, n) for n in names]


def embed(f: Polynomial, legs: Sequence[Presentation], at: int) -> Polynomial:
    """Place an arity-1 polynomial on leg ``at`` of a tensor, units elsewhere."""
    legs = tuple(legs)
    if f.legs[0] is not legs[at]:
        raise PresentationMismatch("leg presentation mismatch")
    ones = [p.one for p in legs]
    terms = {}
    for (m,), c in f.terms.items():
        key = list(ones)
        key[at] = m
        terms[tuple(key)] = c
    return Polynomial._raw(legs, terms)


"""Expression grammar for ad-hoc input and fixtures.

    sum     := tensor (('+' | '-') tensor)*
    tensor  := product ('@' product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | postfix
    postfix := atom ("'" | '^' INT)*
    atom    := NUMBER | NAME | '(' sum ')'

``@`` binds looser than ``*`` so ``a1*b1 @ z1`` is ``(a1 b1) (x) z1``.
Postfix ``'`` is the star involution.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .phase import PhaseCoefficient
from .polynomial import Polynomial
from .presentation import Presentation

Value = Union[PhaseCoefficient, Polynomial]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")

SCALARS = {
    "mu": PhaseCoefficient.mu(1),
    "mubar": PhaseCoefficient.mu(-1),
    "lambda": PhaseCoefficient.mu(2),
    "lambdabar": PhaseCoefficient.mu(-2),
}


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str):
        super().__init__(f"{msg} at position {pos}: {text[:pos]}<here>{text[pos:]}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, legs: Sequence[Presentation], envs: Sequence[Mapping[str, Polynomial]],
                 full_env: Mapping[str, Polynomial]):
        self.text = text
        self.legs = tuple(legs)
        self.envs = envs
        self.full_env = full_env
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.group(0).strip() == "":
                break
            start = m.start(m.lastindex)
            if m.group(1):
                self.toks.append(("num", m.group(1), start))
            elif m.group(2):
                self.toks.append(("name", m.group(2), start))
            else:
                self.toks.append(("op", m.group(3), start))
            pos = m.end()
        self.i = 0

    # -- token helpers -----------------------------------------------------

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def fail(self, msg: str, tok=None):
        raise ParseError(msg, (tok or self.peek())[2], self.text)

    def expect(self, op: str):
        t = self.take()
        if t[:2] != ("op", op):
            self.fail(f"expected {op!r}", t)

    # -- value helpers -----------------------------------------------------

    def _legs_of(self, leg: Optional[int]):
        return self.legs if leg is None else (self.legs[leg],)

    def as_poly(self, v: Value, leg: Optional[int]) -> Polynomial:
        if isinstance(v, Polynomial):
            return v
        return Polynomial.const(self._legs_of(leg), v)

    def add(self, a: Value, b: Value, leg) -> Value:
        if isinstance(a, PhaseCoefficient) and isinstance(b, PhaseCoefficient):
            return a + b
        return self.as_poly(a, leg) + self.as_poly(b, leg)

    def mul(self, a: Value, b: Value, leg, tok) -> Value:
        if isinstance(a, PhaseCoefficient):
            return b * a if isinstance(b, PhaseCoefficient) else b.scale(a)
        if isinstance(b, PhaseCoefficient):
            return a.scale(b)
        if a.legs != b.legs:
            self.fail("operands live in different tensor legs", tok)
        return a * b

    # -- grammar -----------------------------------------------------------

    def parse(self) -> Polynomial:
        v = self.sum(None)
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return self.as_poly(v, None)

    def sum(self, leg):
        v = self.tensor(leg)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.tensor(leg)
            v = self.add(v, -w if op == "-" else w, leg)
        return v

    def tensor(self, leg):
        tok = self.peek()
        if leg is not None or len(self.legs) == 1:
            v = self.product(0 if leg is None else leg)
            if self.peek()[:2] == ("op", "@"):
                self.fail("'@' is only allowed at the top level of a tensor expression")
            return v
        factors = [self.product_any()]
        while self.peek()[:2] == ("op", "@"):
            self.take()
            factors.append(self.product_any())
        if len(factors) == 1:
            v = factors[0]
            if isinstance(v, Polynomial) and v.legs != self.legs:
                self.fail(f"expected {len(self.legs)} tensor legs", tok)
            return v
        if len(factors) != len(self.legs):
            self.fail(f"expected {len(self.legs)} tensor legs, got {len(factors)}", tok)
        out = None
        for k, f in enumerate(factors):
            p = f if isinstance(f, Polynomial) and f.legs == (self.legs[k],) else None
            if p is None:
                if isinstance(f, Polynomial):
                    self.fail(f"leg {k + 1} factor does not live in {self.legs[k].name}", tok)
                p = Polynomial.const((self.legs[k],), f)
            out = p if out is None else out.tensor(p)
        return out

    def product_any(self):
        """A product at top level: try each leg in turn, first one that parses wins."""
        start = self.i
        errors = []
        for leg in range(len(self.legs)):
            self.i = start
            try:
                return self.product(leg)
            except ParseError as e:
                errors.append(e)
        self.i = start
        try:
            return self.product(None)
        except ParseError:
            raise max(errors, key=lambda e: e.pos) from None

    def product(self, leg):
        v = self.unary(leg)
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            w = self.unary(leg)
            if tok[1] == "/":
                if not isinstance(w, PhaseCoefficient) or not w.is_unit_monomial():
                    self.fail("can only divide by a nonzero rational times a power of mu", tok)
                w = w.inverse()
            v = self.mul(v, w, leg, tok)
        return v

    def unary(self, leg):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary(leg)
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary(leg)
        return self.postfix(leg)

    def postfix(self, leg):
        v = self.atom(leg)
        while True:
            t = self.peek()
            if t[:2] == ("op", "'"):
                self.take()
                v = v.conj() if isinstance(v, PhaseCoefficient) else v.star()
            elif t[:2] == ("op", "^"):
                self.take()
                neg = False
                if self.peek()[:2] == ("op", "-"):
                    self.take()
                    neg = True
                n = self.take()
                if n[0] != "num":
                    self.fail("expected integer exponent", n)
                k = int(n[1])
                if isinstance(v, PhaseCoefficient):
                    if neg:
                        if not v.is_unit_monomial():
                            self.fail("negative power of a non-unit", n)
                        v = v.inverse()
                    out = PhaseCoefficient.const(1)
                    for _ in range(k):
                        out = out * v
                    v = out
                else:
                    if neg:
                        self.fail("negative power of a polynomial", n)
                    v = v ** k
            else:
                return v

    def atom(self, leg):
        t = self.take()
        kind, val, _ = t
        if kind == "num":
            return PhaseCoefficient.const(Fraction(int(val)))
        if kind == "op" and val == "(":
            v = self.sum(leg)
            self.expect(")")
            return v
        if kind == "name":
            return self.resolve(val, leg, t)
        self.fail("unexpected token", t)

    def resolve(self, name: str, leg, tok) -> Value:
        if name in SCALARS:
            return SCALARS[name]
        if leg is None:
            if name in self.full_env:
                return self.full_env[name]
            self.fail(f"unknown name {name!r}", tok)
        pres = self.legs[leg]
        if pres.has(name):
            return Polynomial.letter(pres, name)
        env = self.envs[leg] if leg < len(self.envs) else {}
        if name in env:
            return env[name]
        if len(self.legs) == 1 and name in self.full_env:
            return self.full_env[name]
        self.fail(f"unknown name {name!r} in {pres.name}", tok)


def parse_expression(
    text: str,
    legs: Union[Presentation, Sequence[Presentation]],
    envs: Sequence[Mapping[str, Polynomial]] = (),
    full_env: Optional[Mapping[str, Polynomial]] = None,
) -> Polynomial:
    """Parse ``text`` into a polynomial over ``legs`` (one presentation per tensor leg)."""
    if isinstance(legs, Presentation):
        legs = (legs,)
    return _Parser(text, legs, envs, full_env or {}).parse()

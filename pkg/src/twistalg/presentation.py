"""Presentations of phase-twisted graded *-algebras and normal ordering.

Every pair of letters q-commutes: ``a b = mu^L(a,b) (-1)^(|a||b|) b a``.
Normal-form monomials are therefore exponent vectors aligned with the
letter order, and multiplying two of them only costs a phase.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .phase import ONE, ZERO, PhaseCoefficient

Monomial = tuple  # exponent vector (twisted) or letter-index word (free)


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    name: str
    parity: int
    star: int
    degree: Optional[tuple[int, ...]] = None  # doubled half-integers


class Presentation:
    """Generator alphabet with parity, star pairing and antisymmetric phase table."""

    free = False

    def __init__(self, name: str, letters: Sequence[Letter], lam: Sequence[Sequence[int]]):
        self.name = name
        self.letters = tuple(letters)
        self.n = len(self.letters)
        self.lam = tuple(tuple(int(v) for v in row) for row in lam)
        self._index = {l.name: i for i, l in enumerate(self.letters)}
        self.parity = tuple(l.parity for l in self.letters)
        self.star_of = tuple(l.star for l in self.letters)
        self._check()
        self.one: Monomial = (0,) * self.n
        self._mul_cache: dict = {}
        self._star_cache: dict = {}

    def _check(self) -> None:
        n = self.n
        if len(self.lam) != n or any(len(r) != n for r in self.lam):
            raise PresentationError(f"{self.name}: phase table must be {n}x{n}")
        for a in range(n):
            s = self.star_of[a]
            if not 0 <= s < n or self.star_of[s] != a:
                raise PresentationError(f"{self.name}: star pairing is not an involution at {self.letters[a].name}")
            if self.parity[s] != self.parity[a]:
                raise PresentationError(f"{self.name}: parity not star-invariant at {self.letters[a].name}")
            for b in range(n):
                if self.lam[a][b] != -self.lam[b][a]:
                    raise PresentationError(f"{self.name}: phase table not antisymmetric at ({a},{b})")
                if self.lam[self.star_of[a]][self.star_of[b]] != self.lam[a][b]:
                    raise PresentationError(
                        f"{self.name}: phase table not star-compatible at "
                        f"({self.letters[a].name},{self.letters[b].name})"
                    )

    # -- letters -----------------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PresentationError(f"unknown letter {name!r} in {self.name}") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def names(self) -> list[str]:
        return [l.name for l in self.letters]

    def phase(self, a: int, b: int) -> tuple[int, int]:
        """(mu-exponent, sign) such that ``a b = sign * mu^k * b a``."""
        return self.lam[a][b], (-1 if self.parity[a] and self.parity[b] else 1)

    def swap_coefficient(self, a: int, b: int) -> PhaseCoefficient:
        k, s = self.phase(a, b)
        return PhaseCoefficient.mu(k, s)

    # -- monomials ---------------------------------------------------------

    def monomial_of_letter(self, a: int) -> Monomial:
        e = [0] * self.n
        e[a] = 1
        return tuple(e)

    def word(self, m: Monomial) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable([a] * e for a, e in enumerate(m) if e))

    def degree(self, m: Monomial) -> int:
        return sum(m)

    def odd_degree(self, m: Monomial) -> int:
        return sum(e for a, e in enumerate(m) if self.parity[a])

    def order_key(self, m: Monomial):
        """Total degree, then lexicographic with later letters dominating."""
        return (sum(m), m[::-1])

    def divides(self, lead: Monomial, m: Monomial) -> bool:
        return all(x <= y for x, y in zip(lead, m))

    def quotient(self, m: Monomial, lead: Monomial) -> Monomial:
        return tuple(y - x for x, y in zip(lead, m))

    def mul(self, m1: Monomial, m2: Monomial):
        """Normal-ordered product: ``(k, sign, m)`` or ``None`` when it vanishes."""
        key = (m1, m2)
        hit = self._mul_cache.get(key, False)
        if hit is not False:
            return hit
        nz1 = [(a, e) for a, e in enumerate(m1) if e]
        nz2 = [(b, e) for b, e in enumerate(m2) if e]
        k = 0
        odd = 0
        res = None
        for a, ea in nz1:
            lam_a = self.lam[a]
            pa = self.parity[a]
            for b, eb in nz2:
                if a > b:
                    k += ea * eb * lam_a[b]
                    if pa and self.parity[b]:
                        odd += ea * eb
                elif a == b and pa:
                    break
            else:
                continue
            break
        else:
            res = (k, -1 if odd & 1 else 1, tuple(x + y for x, y in zip(m1, m2)))
        self._mul_cache[key] = res
        return res

    def normal_order(self, word: Sequence[int]) -> tuple[PhaseCoefficient, Optional[Monomial]]:
        """Stable-sort a word into canonical letter order, accumulating the phase."""
        k = 0
        odd = 0
        e = [0] * self.n
        for i, a in enumerate(word):
            if not 0 <= a < self.n:
                raise PresentationError(f"unknown letter index {a}")
            if self.parity[a] and e[a]:
                return ZERO, None
            e[a] += 1
            for b in word[i + 1:]:
                if a > b:
                    k += self.lam[a][b]
                    if self.parity[a] and self.parity[b]:
                        odd += 1
        return PhaseCoefficient.mu(k, -1 if odd & 1 else 1), tuple(e)

    def normal_order_naive(self, word: Sequence[int]) -> tuple[PhaseCoefficient, Optional[Monomial]]:
        """Bubble sort, one adjacent swap relation at a time. Differential-testing oracle."""
        w = list(word)
        coeff = ONE
        changed = True
        while changed:
            changed = False
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if a == b and self.parity[a]:
                    return ZERO, None
                if a > b:
                    coeff = coeff * self.swap_coefficient(a, b)
                    w[i], w[i + 1] = b, a
                    changed = True
        for i in range(len(w) - 1):
            if w[i] == w[i + 1] and self.parity[w[i]]:
                return ZERO, None
        e = [0] * self.n
        for a in w:
            e[a] += 1
        return coeff, tuple(e)

    def star_monomial(self, m: Monomial):
        """Reverse the word and star each letter: ``(k, sign, m')`` with ``m* = sign mu^k m'``."""
        hit = self._star_cache.get(m)
        if hit is not None:
            return hit
        w = [self.star_of[a] for a in reversed(self.word(m))]
        c, mm = self.normal_order(w)
        (k, q), = c.items()
        res = (k, int(q), mm)
        self._star_cache[m] = res
        return res

    def monomial_degree_vector(self, m: Monomial) -> Optional[tuple[int, ...]]:
        if any(self.letters[a].degree is None for a, e in enumerate(m) if e):
            return None
        dim = len(next(l.degree for l in self.letters if l.degree is not None))
        out = [0] * dim
        for a, e in enumerate(m):
            if e:
                for i, d in enumerate(self.letters[a].degree):
                    out[i] += e * d
        return tuple(out)

    # -- text --------------------------------------------------------------

    def letter_text(self, a: int) -> str:
        name = self.letters[a].name
        return name[:-1] + "'" if name.endswith("*") else name

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for a, e in enumerate(m):
            if e:
                t = self.letter_text(a)
                parts.append(t if e == 1 else f"{t}^{e}")
        return "*".join(parts) if parts else "1"

    def to_text(self) -> str:
        """Plain-text table: ``letter parity star degree`` rows plus ``Lambda i j k`` lines."""
        lines = [f"# presentation {self.name}"]
        for l in self.letters:
            deg = " ".join(str(d) for d in l.degree) if l.degree is not None else "-"
            lines.append(f"{l.name} {l.parity} {self.letters[l.star].name} {deg}")
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.lam[a][b]:
                    lines.append(f"Lambda {self.letters[a].name} {self.letters[b].name} {self.lam[a][b]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: Optional[str] = None) -> "Presentation":
        rows, lam_lines = [], []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if name is None and line.startswith("# presentation "):
                    name = line.split(None, 2)[2]
                continue
            parts = line.split()
            if parts[0] == "Lambda":
                lam_lines.append(parts[1:])
            else:
                rows.append(parts)
        idx = {r[0]: i for i, r in enumerate(rows)}
        letters = []
        for r in rows:
            deg = None if r[3:] in ([], ["-"]) else tuple(int(x) for x in r[3:])
            letters.append(Letter(r[0], int(r[1]), idx[r[2]], deg))
        n = len(letters)
        lam = [[0] * n for _ in range(n)]
        for a, b, k in lam_lines:
            lam[idx[a]][idx[b]] = int(k)
            lam[idx[b]][idx[a]] = -int(k)
        return cls(name or "unnamed", letters, lam)

    def __repr__(self) -> str:
        return f"<Presentation {self.name}: {self.n} letters>"


class FreePresentation(Presentation):
    """No relations at all: monomials are words and multiplication concatenates."""

    free = True

    def __init__(self, name: str, letters: Sequence[Letter]):
        n = len(letters)
        super().__init__(name, letters, [[0] * n for _ in range(n)])
        self.one = ()

    def monomial_of_letter(self, a: int) -> Monomial:
        return (a,)

    def word(self, m: Monomial) -> tuple[int, ...]:
        return m

    def degree(self, m: Monomial) -> int:
        return len(m)

    def odd_degree(self, m: Monomial) -> int:
        return sum(1 for a in m if self.parity[a])

    def order_key(self, m: Monomial):
        return (len(m), m)

    def mul(self, m1, m2):
        return (0, 1, m1 + m2)

    def normal_order(self, word):
        return ONE, tuple(word)

    normal_order_naive = normal_order

    def star_monomial(self, m):
        return (0, 1, tuple(self.star_of[a] for a in reversed(m)))

    def divides(self, lead, m):
        raise PresentationError("rewriting is not supported on free presentations")

    def format_monomial(self, m) -> str:
        return "*".join(self.letter_text(a) for a in m) if m else "1"

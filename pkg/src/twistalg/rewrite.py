"""Rewriting modulo relations in a twisted polynomial ring.

Monomials q-commute, so a monomial ``m`` is divisible by a leading
monomial ``L`` exactly when its exponent vector dominates ``L``; the
quotient ``q`` satisfies ``L q = c m`` for a unit phase ``c``.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .phase import PhaseCoefficient
from .polynomial import Polynomial
from .presentation import Presentation


class RewriteError(ValueError):
    pass


class CompletionLimitError(RuntimeError):
    """Completion did not converge within the configured number of new rules."""


DEFAULT_COMPLETION_LIMIT = 200


def set_completion_limit(n: int) -> None:
    """Process-wide bound on rules added during completion (the CLI's --completion-limit)."""
    global DEFAULT_COMPLETION_LIMIT
    if n < 0:
        raise ValueError("completion limit must be non-negative")
    DEFAULT_COMPLETION_LIMIT = n


@dataclass(frozen=True)
class Rule:
    lead: tuple
    remainder: Polynomial
    label: str = ""

    def relation(self) -> Polynomial:
        pres = self.remainder.legs[0]
        return Polynomial._raw((pres,), {(self.lead,): PhaseCoefficient.const(1)}) - self.remainder


def _heap_key(pres: Presentation, m) -> tuple:
    deg, rev = pres.order_key(m)
    return (-deg, tuple(-x for x in rev))


def orient(pres: Presentation, rel: Polynomial, label: str = "") -> Optional[Rule]:
    """Normalise ``rel = 0`` to ``lead -> remainder`` with a monic leading monomial."""
    if rel.legs != (pres,) and rel.legs[0] is not pres:
        raise RewriteError("relation lives over a different presentation")
    if not rel.terms:
        return None
    (lead,), c = max(rel.terms.items(), key=lambda kc: pres.order_key(kc[0][0]))
    if not c.is_unit_monomial():
        raise RewriteError(f"leading coefficient {c} of {label or rel} is not a unit")
    monic = rel.scale(c.inverse())
    rem = -(monic - Polynomial._raw((pres,), {(lead,): PhaseCoefficient.const(1)}))
    return Rule(lead, rem, label)


class RewriteSystem:
    """Oriented relations over one presentation with deterministic reduction."""

    def __init__(
        self,
        pres: Presentation,
        rules: Sequence[Rule] = (),
        require_central: bool = True,
        completion_limit: Optional[int] = None,
        name: str = "",
    ):
        if pres.free:
            raise RewriteError("rewriting needs a twisted (q-commuting) presentation")
        self.pres = pres
        self.rules = tuple(rules)
        self.completion_limit = DEFAULT_COMPLETION_LIMIT if completion_limit is None else completion_limit
        self.name = name
        self._expand: dict = {}
        for r in self.rules:
            for (m,) in r.remainder.terms:
                if pres.order_key(m) >= pres.order_key(r.lead):
                    raise RewriteError(f"rule {r.label or r.lead}: remainder not below leading monomial")
        self.central = all(self.is_central(r) for r in self.rules)
        if require_central and not self.central:
            bad = next(r for r in self.rules if not self.is_central(r))
            raise RewriteError(f"relation {bad.label or bad.relation()} is not central")

    @classmethod
    def from_relations(
        cls,
        pres: Presentation,
        relations: Iterable,
        require_central: bool = True,
        completion_limit: Optional[int] = None,
        name: str = "",
    ) -> "RewriteSystem":
        rules = []
        for item in relations:
            label, rel = item if isinstance(item, tuple) else ("", item)
            r = orient(pres, rel, label)
            if r is not None:
                rules.append(r)
        return cls(pres, rules, require_central, completion_limit, name)

    def is_central(self, rule: Rule) -> bool:
        rel = rule.relation()
        for a in range(self.pres.n):
            ell = Polynomial._raw((self.pres,), {(self.pres.monomial_of_letter(a),): PhaseCoefficient.const(1)})
            if rel.graded_commutator(ell):
                return False
        return True

    # -- reduction ---------------------------------------------------------

    def _find(self, m):
        for i, r in enumerate(self.rules):
            if all(x <= y for x, y in zip(r.lead, m)):
                return i
        return None

    def _step(self, i: int, m) -> dict:
        """Replacement of monomial ``m`` via rule ``i``: ``{monomial: coefficient}``."""
        key = (i, m)
        hit = self._expand.get(key)
        if hit is not None:
            return hit
        pres = self.pres
        r = self.rules[i]
        q = pres.quotient(m, r.lead)
        k, s, mm = pres.mul(r.lead, q)
        assert mm == m
        qpoly = Polynomial._raw((pres,), {(q,): PhaseCoefficient.mu(-k, s)})
        out = {km[0]: c for km, c in (r.remainder * qpoly).terms.items()}
        self._expand[key] = out
        return out

    def reduce(self, f: Polynomial, leg: int = 0) -> Polynomial:
        """Fully reduce the designated leg; the fixpoint is returned."""
        if not self.rules or not f.terms:
            return f
        if f.legs[leg] is not self.pres:
            raise RewriteError(f"leg {leg} is {f.legs[leg].name}, rules are over {self.pres.name}")
        pres = self.pres
        scalar = f.arity == 1
        if scalar:
            work = {k[0]: c for k, c in f.terms.items()}
        else:
            work = f.leg_collect(leg)
        heap = [(_heap_key(pres, m), m) for m in work]
        heapq.heapify(heap)
        done = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, None)
            if c is None or not c:
                continue
            i = self._find(m)
            if i is None:
                done[m] = c
                continue
            for m2, c2 in self._step(i, m).items():
                add = c * c2
                prev = work.get(m2)
                if prev is None:
                    work[m2] = add
                    heapq.heappush(heap, (_heap_key(pres, m2), m2))
                else:
                    work[m2] = prev + add
        if scalar:
            return Polynomial._raw(f.legs, {(m,): c for m, c in done.items() if c})
        terms = {}
        for m, rest in done.items():
            for rk, c in rest.terms.items():
                terms[rk[:leg] + (m,) + rk[leg:]] = c
        return Polynomial._raw(f.legs, terms)

    __call__ = reduce

    def one_step_reductions(self, f: Polynomial):
        """All results of rewriting a single term with a single applicable rule."""
        for (m,), c in f.terms.items():
            for i, r in enumerate(self.rules):
                if all(x <= y for x, y in zip(r.lead, m)):
                    rest = {k: v for k, v in f.terms.items() if k != (m,)}
                    g = Polynomial._raw(f.legs, rest)
                    g = g + Polynomial._raw(f.legs, {(mm,): cc * c for mm, cc in self._step(i, m).items() if cc * c})
                    yield g

    # -- completion --------------------------------------------------------

    def _consequences(self, r1: Rule, r2: Rule):
        pres = self.pres
        lcm = tuple(max(x, y) for x, y in zip(r1.lead, r2.lead))
        if pres.mul(lcm, pres.one) is None or any(e > 1 and pres.parity[a] for a, e in enumerate(lcm)):
            return
        q1, q2 = pres.quotient(lcm, r1.lead), pres.quotient(lcm, r2.lead)
        k1, s1, _ = pres.mul(r1.lead, q1)
        k2, s2, _ = pres.mul(r2.lead, q2)
        a = r1.remainder * Polynomial._raw((pres,), {(q1,): PhaseCoefficient.mu(-k1, s1)})
        b = r2.remainder * Polynomial._raw((pres,), {(q2,): PhaseCoefficient.mu(-k2, s2)})
        yield a - b

    def _letter_consequences(self, r: Rule):
        """``l*rel - phase*rel*l`` with the leading terms cancelling (non-central rules)."""
        pres = self.pres
        rel = r.relation()
        for a in range(pres.n):
            ell = Polynomial._raw((pres,), {(pres.monomial_of_letter(a),): PhaseCoefficient.const(1)})
            ml = pres.mul(pres.monomial_of_letter(a), r.lead)
            mr = pres.mul(r.lead, pres.monomial_of_letter(a))
            if ml is None or mr is None:
                # the leading terms vanish: both products are already consequences
                for side in (ell * rel, rel * ell):
                    if side:
                        yield side
                continue
            left = ell * rel
            right = rel * ell
            cl = left.coefficient((ml[2],))
            cr = right.coefficient((mr[2],))
            if cl and cr:
                yield left - right.scale(cl / cr)

    def complete(self) -> "RewriteSystem":
        """Add overlap consequences until every critical pair resolves."""
        if len(self.rules) <= 1 and self.central:
            return self
        rules = list(self.rules)
        added = 0
        pending = list(itertools.combinations(range(len(rules)), 2)) + [(i, i) for i in range(len(rules))]
        current = RewriteSystem(self.pres, rules, require_central=False, completion_limit=self.completion_limit)
        while pending:
            i, j = pending.pop(0)
            cands = self._letter_consequences(rules[i]) if i == j else current._consequences(rules[i], rules[j])
            for s in cands:
                red = current.reduce(s)
                if not red:
                    continue
                new = orient(self.pres, red, f"overlap{added}")
                added += 1
                if added > self.completion_limit:
                    raise CompletionLimitError(f"completion exceeded {self.completion_limit} new rules")
                rules.append(new)
                n = len(rules) - 1
                pending.extend((k, n) for k in range(n))
                pending.append((n, n))
                current = RewriteSystem(self.pres, rules, require_central=False, completion_limit=self.completion_limit)
        return self._interreduce(rules)

    def _interreduce(self, rules: list) -> "RewriteSystem":
        """Drop rules whose leading monomial is divisible by another's; tail-reduce the rest."""
        keep = []
        for i, r in enumerate(rules):
            redundant = any(
                j != i and all(x <= y for x, y in zip(o.lead, r.lead)) and (o.lead != r.lead or j < i)
                for j, o in enumerate(rules)
            )
            if not redundant:
                keep.append(r)
        out = []
        for i, r in enumerate(keep):
            others = RewriteSystem(self.pres, keep[:i] + keep[i + 1:], require_central=False)
            out.append(Rule(r.lead, others.reduce(r.remainder), r.label))
        out.sort(key=lambda r: self.pres.order_key(r.lead))
        return RewriteSystem(self.pres, out, require_central=False, completion_limit=self.completion_limit, name=self.name)

    def __repr__(self) -> str:
        return f"<RewriteSystem {self.name or self.pres.name}: {len(self.rules)} rules>"

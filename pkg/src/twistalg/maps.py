"""Homomorphisms, graded derivations and leg-wise linear maps."""

from __future__ import annotations

from typing import Callable, Mapping, Optional, Sequence

from .phase import PhaseCoefficient
from .polynomial import Polynomial, PresentationMismatch, _finish
from .presentation import Presentation


class HomomorphismError(ValueError):
    """Raised when proposed images violate a source relation."""

    def __init__(self, relation: str, witness: Polynomial):
        super().__init__(f"images violate {relation}: residual {witness}")
        self.relation = relation
        self.witness = witness


def leg_map(
    f: Polynomial,
    leg: int,
    image: Callable[[tuple], Polynomial],
    target_legs: Sequence[Presentation],
    antilinear: bool = False,
) -> Polynomial:
    """Apply a linear map monomial-wise on one leg, splicing its output legs in place."""
    target_legs = tuple(target_legs)
    legs = f.legs[:leg] + target_legs + f.legs[leg + 1:]
    cache: dict = {}
    acc: dict = {}
    for key, c in f.terms.items():
        m = key[leg]
        img = cache.get(m)
        if img is None:
            img = cache[m] = image(m)
            if img.legs != target_legs and not all(a is b for a, b in zip(img.legs, target_legs)):
                raise PresentationMismatch("leg map produced the wrong target legs")
        if antilinear:
            c = c.conj()
        pre, post = key[:leg], key[leg + 1:]
        for ik, ic in img.terms.items():
            nk = pre + ik + post
            slot = acc.get(nk)
            if slot is None:
                slot = acc[nk] = {}
            for e1, q1 in c.items():
                for e2, q2 in ic.items():
                    slot[e1 + e2] = slot.get(e1 + e2, 0) + q1 * q2
    return Polynomial._raw(legs, _finish(acc))


class Hom:
    """Letter-image assignment extended (anti)multiplicatively and (anti)linearly."""

    def __init__(
        self,
        source: Presentation,
        images: Mapping[str, Polynomial],
        anti: bool = False,
        antilinear: bool = False,
        name: str = "hom",
    ):
        self.source = source
        self.anti = anti
        self.antilinear = antilinear
        self.name = name
        imgs = {}
        legs = None
        for letter, img in images.items():
            imgs[source.index(letter)] = img
            if legs is None:
                legs = img.legs
            elif len(legs) != len(img.legs) or any(a is not b for a, b in zip(legs, img.legs)):
                raise PresentationMismatch(f"{name}: images live over different legs")
        self.images = imgs
        self.target_legs = legs
        self._mono: dict = {}

    def image_of_letter(self, a: int) -> Polynomial:
        try:
            return self.images[a]
        except KeyError:
            raise KeyError(f"{self.name}: no image for letter {self.source.letters[a].name}") from None

    def image_of_word(self, word: Sequence[int]) -> Polynomial:
        out = Polynomial.one(self.target_legs)
        seq = reversed(word) if self.anti else word
        for a in seq:
            out = out * self.image_of_letter(a)
        return out

    def image_of_monomial(self, m) -> Polynomial:
        img = self._mono.get(m)
        if img is None:
            img = self._mono[m] = self.image_of_word(self.source.word(m))
        return img

    def __call__(self, f: Polynomial, leg: int = 0) -> Polynomial:
        if f.legs[leg] is not self.source:
            raise PresentationMismatch(f"{self.name}: source is {self.source.name}, got {f.legs[leg].name}")
        return leg_map(f, leg, self.image_of_monomial, self.target_legs, self.antilinear)

    # -- validation --------------------------------------------------------

    def violations(
        self,
        extra: Sequence[tuple[str, Polynomial]] = (),
        reduce: Optional[Callable[[Polynomial], Polynomial]] = None,
        check_star: bool = True,
    ):
        """Yield ``(relation text, residual)`` for every violated source relation.

        Checked: each pairwise q-commutation, odd squares, star compatibility
        and any extra source relations (e.g. quotient rules). ``reduce``
        normalises residuals in the target (e.g. modulo a target ideal).
        """
        src = self.source
        red = reduce or (lambda p: p)
        letters = sorted(self.images)
        for i, a in enumerate(letters):
            for b in letters[i:]:
                if a == b:
                    if src.parity[a]:
                        r = red(self.image_of_word((a, a)))
                        if r:
                            yield f"{src.letters[a].name}^2 = 0", r
                    continue
                c, _ = src.normal_order((b, a))
                lhs = self.image_of_word((b, a))
                rhs = self.image_of_word((a, b))
                if self.antilinear:
                    c = c.conj()
                r = red(lhs - rhs * c)
                if r:
                    yield f"{src.letters[b].name} {src.letters[a].name} = ({c}) {src.letters[a].name} {src.letters[b].name}", r
        if check_star:
            for a in letters:
                s = src.star_of[a]
                if s in self.images:
                    r = red(self.images[s] - self.images[a].star())
                    if r:
                        yield f"image({src.letters[s].name}) = image({src.letters[a].name})*", r
        for text, rel in extra:
            r = red(self(rel))
            if r:
                yield text, r

    def first_violation(self, **kw):
        return next(self.violations(**kw), None)

    def validate(self, **kw) -> "Hom":
        v = self.first_violation(**kw)
        if v is not None:
            raise HomomorphismError(*v)
        return self


def apply_hom(f: Polynomial, images: Mapping[str, Polynomial], leg: int = 0, validate: bool = False, **kw) -> Polynomial:
    hom = Hom(f.legs[leg], images, **kw)
    if validate:
        hom.validate()
    return hom(f, leg)


def differential(f: Polynomial, dmap: Mapping[int, int], leg: int = 0) -> Polynomial:
    """Graded derivation with ``d(letter) = dmap[letter]``; letters outside dmap go to 0."""
    pres = f.legs[leg]
    cache: dict = {}

    def image(m):
        word = pres.word(m)
        out = Polynomial.zero((pres,))
        odd = 0
        for i, a in enumerate(word):
            da = dmap.get(a)
            if da is not None:
                c, mm = pres.normal_order(word[:i] + (da,) + word[i + 1:])
                if mm is not None:
                    out = out + Polynomial._raw((pres,), {(mm,): c * (-1 if odd & 1 else 1)})
            odd += pres.parity[a]
        return out

    def cached(m):
        r = cache.get(m)
        if r is None:
            r = cache[m] = image(m)
        return r

    return leg_map(f, leg, cached, (pres,))


def partner_dmap(pres: Presentation, pairs: Mapping[str, str]) -> dict[int, int]:
    return {pres.index(a): pres.index(b) for a, b in pairs.items()}


def substitute_scalars(f: Polynomial, leg: int, values: Mapping[int, PhaseCoefficient]) -> Polynomial:
    """Evaluate one leg to scalars letter-wise (a character), dropping that leg."""

    def image(m):
        c = PhaseCoefficient.const(1)
        for a, e in enumerate(m):
            if e:
                v = values.get(a)
                if v is None:
                    return Polynomial.zero(())
                for _ in range(e):
                    c = c * v
        return Polynomial.const((), c)

    return leg_map(f, leg, image, ())

"""Quantum determinant, algebraic complements and the Hopf structure on the quaternionic matrix algebra."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Optional

from . import catalog as cat
from .maps import Hom
from .matrix import AlgebraMatrix
from .parse import parse_expression
from .phase import ONE, PhaseCoefficient
from .polynomial import Polynomial
from .rewrite import RewriteSystem

PERMS = tuple(itertools.permutations((1, 2, 3, 4)))

# the listed words and their cyclic shifts
EPS_MU = frozenset({(1, 3, 2, 4), (3, 2, 4, 1), (2, 4, 1, 3), (4, 1, 3, 2)})
EPS_MUBAR = frozenset({(1, 4, 2, 3), (4, 2, 3, 1), (2, 3, 1, 4), (3, 1, 4, 2)})


def perm_sign(p) -> int:
    s = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            s = -s
    return s


def epsilon(p) -> PhaseCoefficient:
    p = tuple(p)
    if p in EPS_MU:
        return PhaseCoefficient.mu(1)
    if p in EPS_MUBAR:
        return PhaseCoefficient.mu(-1)
    return ONE


def epsilon_bar(p) -> PhaseCoefficient:
    return epsilon(p).conj()


def eta1(i: int, j: int) -> PhaseCoefficient:
    """eta with 1-based indices."""
    return cat.eta(i - 1, j - 1)


def _swap(p, a: int, b: int):
    q = list(p)
    q[a], q[b] = q[b], q[a]
    return tuple(q)


def epsilon_relations(bar: bool = False):
    """Yield ``(label, residual)`` for the three swap relations at every permutation.

    eps^{ijkl} = eta_ji eps^{jikl} = eta_lk eps^{ijlk} = eta_kj eps^{ikjl};
    the barred tensor uses eta_ij, eta_kl, eta_jk in the same slots.
    """
    e = epsilon_bar if bar else epsilon
    name = "epsbar" if bar else "eps"
    for p in PERMS:
        i, j, k, l = p
        pairs = ((0, 1, (i, j)), (2, 3, (k, l)), (1, 2, (j, k)))
        for a, b, (x, y) in pairs:
            ph = eta1(x, y) if bar else eta1(y, x)
            yield f"{name}{''.join(map(str, p))}.swap{a + 1}{b + 1}", e(p) - ph * e(_swap(p, a, b))


# -- determinant -------------------------------------------------------------


@lru_cache(maxsize=None)
def A() -> AlgebraMatrix:
    return cat.A_matrix()


def _entry(i: int, j: int) -> Polynomial:
    """A_ij with 1-based indices."""
    return A()[i - 1, j - 1]


def _product(entries) -> Polynomial:
    out = None
    for e in entries:
        out = e if out is None else out * e
    return out


@lru_cache(maxsize=None)
def determinant() -> Polynomial:
    """Row-ordered form: sum of sgn eps^s A_{1 s1} A_{2 s2} A_{3 s3} A_{4 s4}."""
    acc = Polynomial.zero((cat.sl2h(),))
    for p in PERMS:
        term = _product(_entry(r + 1, p[r]) for r in range(4))
        acc = acc + term.scale(epsilon(p) * perm_sign(p))
    return acc


@lru_cache(maxsize=None)
def determinant_alt() -> Polynomial:
    """Column-ordered form with the conjugate tensor."""
    acc = Polynomial.zero((cat.sl2h(),))
    for p in PERMS:
        term = _product(_entry(p[c], c + 1) for c in range(4))
        acc = acc + term.scale(epsilon_bar(p) * perm_sign(p))
    return acc


def _check_index(*ix: int) -> None:
    for v in ix:
        if not 1 <= v <= 4:
            raise ValueError(f"matrix index {v} outside 1..4")


@lru_cache(maxsize=None)
def algebraic_complement(i: int, l: int) -> Polynomial:
    """Deformed (unsigned) minor complementary to A_il.

    Sum over bijections s from the rows other than i onto the columns other
    than l; the full permutation puts l in slot i. The coefficient is
    sgn(s) eps^{full} times eta^{s_r l} for each row r above i.
    """
    _check_index(i, l)
    rows = [r for r in range(1, 5) if r != i]
    cols = [c for c in range(1, 5) if c != l]
    acc = Polynomial.zero((cat.sl2h(),))
    for img in itertools.permutations(cols):
        full = list(img)
        full.insert(i - 1, l)
        coeff = epsilon(full) * (perm_sign(full) * (-1) ** (i + l))
        for r, c in zip(rows, img):
            if r < i:
                coeff = coeff * eta1(c, l)
        term = _product(_entry(r, c) for r, c in zip(rows, img))
        acc = acc + term.scale(coeff)
    return acc


def determinant_laplace(axis: str, index: int) -> Polynomial:
    """Expansion along a row (sum_l (-1)^{i+l} A_il Ahat_il) or a column."""
    _check_index(index)
    acc = Polynomial.zero((cat.sl2h(),))
    for l in range(1, 5):
        if axis == "row":
            i, j = index, l
        elif axis == "column":
            i, j = l, index
        else:
            raise ValueError(f"axis must be 'row' or 'column', got {axis!r}")
        acc = acc + (_entry(i, j) * algebraic_complement(i, j)).scale((-1) ** (index + l))
    return acc


def determinant_display() -> Polynomial:
    """The long hand-expanded determinant, read from the bundled fixture."""
    text = " ".join(
        ln.strip() for ln in cat.read_fixture("det.txt").splitlines() if ln.strip() and not ln.startswith("#")
    )
    return parse_expression(text, cat.sl2h())


def classical_determinant() -> dict:
    """Signed permutation sum at mu = 1 with commuting letters, as ``{sorted names: Fraction}``."""
    out: dict = {}
    for p in PERMS:
        c = perm_sign(p)
        names = []
        for r in range(4):
            name, s = cat.A_LAYOUT[r][p[r] - 1]
            c *= s
            names.append(name)
        key = tuple(sorted(names))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def commutative_view(f: Polynomial) -> dict:
    """Specialise mu = 1 and forget letter order: ``{sorted letter names: Fraction}``."""
    pres = f.legs[0]
    out: dict = {}
    for (m,), c in f.terms.items():
        names = []
        for a, e in enumerate(m):
            names.extend([pres.letters[a].name] * e)
        key = tuple(sorted(names))
        out[key] = out.get(key, 0) + c.at_one()
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def det1_system() -> RewriteSystem:
    return RewriteSystem.from_relations(cat.sl2h(), [("det = 1", determinant() - 1)], name="sl2h-det1")


def sl_letters():
    pres = cat.sl2h()
    return [Polynomial.letter(pres, n) for n in cat.SL_NAMES]


# -- Hopf structure maps ------------------------------------------------------


def _positions():
    """letter name -> (row, column, sign), 1-based."""
    out = {}
    for i, row in enumerate(cat.A_LAYOUT):
        for j, (name, s) in enumerate(row):
            out[name] = (i + 1, j + 1, s)
    return out


@lru_cache(maxsize=None)
def coproduct() -> Hom:
    pres = cat.sl2h()
    images = {}
    for name, (i, j, s) in _positions().items():
        acc = Polynomial.zero((pres, pres))
        for k in range(1, 5):
            acc = acc + _entry(i, k).tensor(_entry(k, j))
        images[name] = acc.scale(s)
    return Hom(pres, images, name="coproduct")


COUNIT_ONES = ("a1", "a1*", "d1", "d1*")


@lru_cache(maxsize=None)
def counit() -> Hom:
    images = {n: Polynomial.const((), 1 if n in COUNIT_ONES else 0) for n in cat.SL_NAMES}
    return Hom(cat.sl2h(), images, name="counit")


@lru_cache(maxsize=None)
def antipode() -> Hom:
    """S(A_ij) = (-1)^{i+j} Ahat_ji, assigned letter by letter (each letter occupies one slot of A)."""
    images = {}
    for name, (i, j, s) in _positions().items():
        images[name] = algebraic_complement(j, i).scale(s * (-1) ** (i + j))
    return Hom(cat.sl2h(), images, anti=True, name="antipode")


def antipode_matrix() -> AlgebraMatrix:
    S = antipode()
    return A().map(S)


def star_antipode_defects():
    """Letters where S(l*) differs from S(l)* (the two candidate definitions)."""
    pres = cat.sl2h()
    S = antipode()
    out = {}
    for name in cat.SL_NAMES:
        diff = S(Polynomial.letter(pres, cat.star_name(name))) - S(Polynomial.letter(pres, name)).star()
        if diff:
            out[name] = diff
    return out


def coassociativity_defect(i: int, j: int) -> Polynomial:
    D = coproduct()
    t = D(_entry(i, j))
    return D(t, 0) - D(t, 1)


def counit_defects(i: int, j: int) -> tuple[Polynomial, Polynomial]:
    D, eps = coproduct(), counit()
    t = D(_entry(i, j))
    a = _entry(i, j)
    return eps(t, 0) - a, eps(t, 1) - a


def antipode_products() -> tuple[AlgebraMatrix, AlgebraMatrix]:
    """A S(A) and S(A) A as free matrices."""
    SA = antipode_matrix()
    return A() @ SA, SA @ A()


def delta_det_matrix(c=None) -> AlgebraMatrix:
    pres = cat.sl2h()
    det = determinant() if c is None else Polynomial.const((pres,), c)
    z = Polynomial.zero((pres,))
    return AlgebraMatrix([[det if i == j else z for j in range(4)] for i in range(4)])


# -- the symplectic ideal -------------------------------------------------------


def gram() -> AlgebraMatrix:
    """A*A, i.e. (A*A)_ij = sum_k (A_ki)* A_kj."""
    return A().adjoint() @ A()


def sp_generator(i: int, j: int) -> Polynomial:
    g = gram()[i - 1, j - 1]
    return g - 1 if i == j else g


def sp_coproduct_defect(i: int, j: int) -> Polynomial:
    """Delta(g_ij) - [sum_mn g_mn (x) A*_mi A_nj + 1 (x) g_ij]."""
    pres = cat.sl2h()
    D = coproduct()
    lhs = D(sp_generator(i, j))
    rhs = Polynomial.one((pres,)).tensor(sp_generator(i, j))
    for m in range(1, 5):
        for n in range(1, 5):
            rhs = rhs + sp_generator(m, n).tensor(_entry(m, i).star() * _entry(n, j))
    return lhs - rhs


def block(M: AlgebraMatrix, r: int, c: int) -> AlgebraMatrix:
    return AlgebraMatrix([[M[2 * r + i, 2 * c + j] for j in range(2)] for i in range(2)])


def unitarity_substitution(factors: dict) -> Polynomial:
    """Apply m_ij -> delta_ij to a verified factorisation ``sum m_ij (x) Q_ij``.

    ``factors`` maps 1-based ``(i, j)`` to the second-leg factor ``Q_ij``;
    the result is ``1 (x) sum_i Q_ii`` with the first leg restored.
    """
    pres = cat.sl2h()
    acc = None
    for (i, j), q in factors.items():
        if i == j:
            acc = q if acc is None else acc + q
    return Polynomial.one((pres,)).tensor(acc)


# -- quotients ----------------------------------------------------------------


@lru_cache(maxsize=None)
def pi_J_system() -> RewriteSystem:
    """Target of the block-diagonal projection: unit quaternions a and d."""
    pres = cat.sl2h()
    g = lambda n: Polynomial.letter(pres, n)
    rels = [
        ("a1 a1* + a2 a2* = 1", g("a1") * g("a1*") + g("a2") * g("a2*") - 1),
        ("d1 d1* + d2 d2* = 1", g("d1") * g("d1*") + g("d2") * g("d2*") - 1),
    ]
    return RewriteSystem.from_relations(pres, rels, name="sp1xsp1").complete()


@lru_cache(maxsize=None)
def pi_I_system() -> RewriteSystem:
    pres = cat.sl2h()
    g = lambda n: Polynomial.letter(pres, n)
    return RewriteSystem.from_relations(
        pres, [("d1 d1* + d2 d2* = 1", g("d1") * g("d1*") + g("d2") * g("d2*") - 1)], name="sp1"
    )


def _substitution(keep, ones=()) -> Hom:
    pres = cat.sl2h()
    images = {}
    for n in cat.SL_NAMES:
        if n in ones:
            images[n] = Polynomial.one((pres,))
        elif n in keep:
            images[n] = Polynomial.letter(pres, n)
        else:
            images[n] = Polynomial.zero((pres,))
    return Hom(pres, images)


@lru_cache(maxsize=None)
def pi_J() -> Hom:
    keep = {n for n in cat.SL_NAMES if n[0] in "ad"}
    h = _substitution(keep)
    h.name = "pi_J"
    return h


@lru_cache(maxsize=None)
def pi_I() -> Hom:
    keep = {n for n in cat.SL_NAMES if n[0] == "d"}
    h = _substitution(keep, ones=("a1", "a1*"))
    h.name = "pi_I"
    return h


def sp_relations():
    """Source-side relations every Sp quotient must kill: det - 1 and the 16 g_ij."""
    out = [("det = 1", determinant() - 1)]
    for i in range(1, 5):
        for j in range(1, 5):
            out.append((f"(A*A)_{i}{j} = delta", sp_generator(i, j)))
    return out


def quotient_violation(which: str):
    """First violated source relation of a quotient map, or None."""
    h, rs = {"pi_J": (pi_J(), pi_J_system()), "pi_I": (pi_I(), pi_I_system())}[which]
    return h.first_violation(extra=sp_relations(), reduce=rs.reduce)


CORRIS = {"a1": "z1", "a2": "z2", "c1": "z3", "c2": "z4"}


@lru_cache(maxsize=None)
def corris() -> Hom:
    """First-column letters onto the 7-sphere generators."""
    pres, z = cat.sl2h(), cat.c4()
    images = {}
    for a, b in CORRIS.items():
        images[a] = Polynomial.letter(z, b)
        images[a + "*"] = Polynomial.letter(z, b + "*")
    return Hom(pres, images, name="corris")


def corris_phase_mismatches():
    pres, z = cat.sl2h(), cat.c4()
    names = list(CORRIS) + [n + "*" for n in CORRIS]
    img = {**CORRIS, **{n + "*": CORRIS[n] + "*" for n in CORRIS}}
    bad = []
    for x, y in itertools.combinations(names, 2):
        p = pres.phase(pres.index(x), pres.index(y))
        q = z.phase(z.index(img[x]), z.index(img[y]))
        if p != q:
            bad.append((x, y, p, q))
    return bad


def coinvariance_defect(f: Polynomial, which: str) -> Polynomial:
    """(id (x) pi)Delta(f) - f (x) 1, second leg reduced in the quotient's target."""
    h, rs = {"pi_J": (pi_J(), pi_J_system()), "pi_I": (pi_I(), pi_I_system())}[which]
    t = h(coproduct()(f), 1)
    t = rs.reduce(t, 1)
    return t - f.tensor(Polynomial.one((cat.sl2h(),)))


def coinvariant_elements() -> dict[str, Polynomial]:
    pres = cat.sl2h()
    g = lambda n: Polynomial.letter(pres, n)
    return {
        "(aa*)11": g("a1") * g("a1*") + g("a2") * g("a2*"),
        "(ca*)11": g("c1") * g("a1*") + g("c2") * g("a2*"),
        "(ca*)12": -g("c1") * g("a2") + g("c2") * g("a1"),
    }


def s2_defect(name: str) -> Polynomial:
    """S(S(l)) - l modulo det - 1."""
    pres = cat.sl2h()
    S = antipode()
    ell = Polynomial.letter(pres, name)
    return det1_system().reduce(S(S(ell)) - ell)


def det_display_from_forms() -> Optional[Polynomial]:
    """Coefficient of dz1 dz2* dz3 dz4* in the coaction of that top form; None if absent."""
    from .coaction import delta_L_forms

    f = cat.forms()
    g = lambda n: Polynomial.letter(f, n)
    top = g("dz1") * g("dz2*") * g("dz3") * g("dz4*")
    t = delta_L_forms(top)
    (key,) = top.terms
    out = {}
    for k, c in t.terms.items():
        if k[1] == key[0]:
            out[(k[0],)] = c * top.terms[key].inverse()
    return Polynomial((cat.sl2h(),), out)


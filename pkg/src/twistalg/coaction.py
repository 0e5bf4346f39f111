"""The left coaction on C^4, inflated spheres, and the SO(5,1) layer (X, g, h, minors, C)."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import catalog as cat
from . import hopf
from .maps import Hom
from .matrix import AlgebraMatrix
from .parse import parse_expression
from .phase import ONE, ZERO, PhaseCoefficient
from .polynomial import Polynomial
from .presentation import FreePresentation, Presentation

HALF = Fraction(1, 2)

# mu-exponent k in  f g = mu^k g f  for the 4-sphere generators
S4_NAMES = ("x", "alpha", "alpha*", "beta", "beta*")
S4_PHASES = {
    ("alpha", "beta"): 2,
    ("alpha*", "beta*"): 2,
    ("alpha", "beta*"): -2,
    ("alpha*", "beta"): -2,
}


def s4_phase(f: str, g: str) -> int:
    if (f, g) in S4_PHASES:
        return S4_PHASES[(f, g)]
    if (g, f) in S4_PHASES:
        return -S4_PHASES[(g, f)]
    return 0


# -- the coaction ---------------------------------------------------------------


def _u_positions():
    out = {}
    for i, row in enumerate(cat.U_LAYOUT):
        for a, (name, s) in enumerate(row):
            out[name] = (i, a, s)
    return out


def _coaction_images(first: Presentation, second: Presentation, A: AlgebraMatrix) -> dict:
    u = cat.u_matrix(second)
    images = {}
    for name, (i, a, s) in _u_positions().items():
        acc = Polynomial.zero((first, second))
        for j in range(4):
            acc = acc + A[i, j].tensor(u[j, a])
        images[name] = acc.scale(s)
    return images


@lru_cache(maxsize=None)
def delta_L(target: str = "c4") -> Hom:
    """u -> A (x). u on the letters of ``target`` (c4, s7 or forms)."""
    if target in ("c4", "s7"):
        pres = cat.c4()
        return Hom(pres, _coaction_images(cat.sl2h(), pres, cat.A_matrix()), name="delta_L")
    if target == "forms":
        pres = cat.forms()
        images = _coaction_images(cat.sl2h(), pres, cat.A_matrix())
        for name in cat.C4_NAMES:
            images["d" + name] = cat.d(images[name], 1)
        return Hom(pres, images, name="delta_L")
    raise ValueError(f"unknown coaction target {target!r}")


def delta_L_forms(f: Polynomial) -> Polynomial:
    return delta_L("forms")(f)


def w(k: int, star: bool = False) -> Polynomial:
    name = f"z{k}*" if star else f"z{k}"
    return delta_L()(Polynomial.letter(cat.c4(), name))


def j_defects() -> dict[str, Polynomial]:
    """(id (x) j) Delta_L(z) - Delta_L(j z) on the four z letters."""
    j = cat.j_map()
    D = delta_L()
    pres = cat.c4()
    out = {}
    for k in range(1, 5):
        z = Polynomial.letter(pres, f"z{k}")
        out[f"z{k}"] = j(D(z), 1) - D(j(z))
    return out


def forms_commute_defects() -> dict[str, Polynomial]:
    """Delta_L(dz) - (id (x) d) Delta_L(z) on the forms presentation."""
    D = delta_L("forms")
    f = cat.forms()
    out = {}
    for n in cat.C4_NAMES:
        out[n] = D(Polynomial.letter(f, "d" + n)) - cat.d(D(Polynomial.letter(f, n)), 1)
    return out


# -- inflated generators ----------------------------------------------------------


@lru_cache(maxsize=None)
def inflated() -> dict[str, Polynomial]:
    """x~, alpha~, beta~ (and stars) and rho^2 as images of the 4-sphere generators."""
    D = delta_L()
    s4 = cat.s4_generators()
    out = {
        "x": D(s4["x"]),
        "alpha": D(s4["alpha"]),
        "beta": D(s4["beta"]),
        "rho2": D(cat.sphere_element()),
    }
    out["alpha*"] = out["alpha"].star()
    out["beta*"] = out["beta"].star()
    return out


def inflated_radius_defect() -> Polynomial:
    t = inflated()
    lhs = t["alpha*"] * t["alpha"] + t["beta*"] * t["beta"] + t["x"] * t["x"]
    return lhs - t["rho2"] * t["rho2"]


def w_radius_defect() -> Polynomial:
    acc = Polynomial.zero((cat.sl2h(), cat.c4()))
    for k in range(1, 5):
        acc = acc + w(k, True) * w(k)
    return acc - inflated()["rho2"]


def phase_defects(gens: dict[str, Polynomial]):
    """Yield ``(pair, residual)`` for f g - mu^k g f against the 4-sphere table."""
    for f, g in itertools.combinations(S4_NAMES, 2):
        k = s4_phase(f, g)
        yield f"{f},{g}", gens[f] * gens[g] - (gens[g] * gens[f]).scale(PhaseCoefficient.mu(k))


def rho_commutators() -> dict[str, Polynomial]:
    r = inflated()["rho2"]
    out = {}
    for k in range(1, 5):
        for star in (False, True):
            ww = w(k, star)
            out[f"w{k}{'*' if star else ''}"] = r * ww - ww * r
    return out


def rho_leg2_commutators() -> dict[str, Polynomial]:
    """[rho^2, 1 (x) z] freely and modulo the sphere on leg 2 (recorded, not asserted)."""
    r = inflated()["rho2"]
    pres = cat.c4()
    one = Polynomial.one((cat.sl2h(),))
    out = {}
    for n in cat.C4_NAMES:
        z = one.tensor(Polynomial.letter(pres, n))
        out[n] = r * z - z * r
    return out


def sphere_image_defect() -> Polynomial:
    """Delta_L(sum z* z) - 1 (x) 1, leg 2 reduced modulo the sphere."""
    r = inflated()["rho2"]
    return cat.sphere_system().reduce(r, 1) - Polynomial.one(r.legs)


def u_star_u_factors(a: int, b: int) -> dict:
    """(l, j) -> (u*)_al u_jb, the second-leg factors of Delta_L((u*u)_ab), 1-based keys."""
    u = cat.u_matrix()
    us = u.adjoint()
    return {(l + 1, j + 1): us[a, l] * u[j, b] for l in range(4) for j in range(4)}


def u_star_u_factorisation_defect(a: int, b: int) -> Polynomial:
    """Delta_L((u*u)_ab) - sum_lj m_lj (x) (u*)_al u_jb with m = A*A."""
    u = cat.u_matrix()
    lhs = delta_L()((u.adjoint() @ u)[a, b])
    m = hopf.gram()
    rhs = Polynomial.zero(lhs.legs)
    for (l, j), q in u_star_u_factors(a, b).items():
        rhs = rhs + m[l - 1, j - 1].tensor(q)
    return lhs - rhs


def unitarity_sp_defect(a: int, b: int) -> Polynomial:
    """After m -> delta the image of (u*u)_ab is 1 (x) (u*u)_ab."""
    u = cat.u_matrix()
    got = hopf.unitarity_substitution(u_star_u_factors(a, b))
    return got - Polynomial.one((cat.sl2h(),)).tensor((u.adjoint() @ u)[a, b])


def rho_sp_defect() -> Polynomial:
    """rho^2 = 1/2 sum_a Delta_L((u*u)_aa); after m -> delta and the sphere: 1 (x) 1."""
    acc = None
    for a in range(2):
        t = hopf.unitarity_substitution(u_star_u_factors(a, a))
        acc = t if acc is None else acc + t
    acc = cat.sphere_system().reduce(acc.scale(HALF), 1)
    return acc - Polynomial.one(acc.legs)


# -- displayed expansions ---------------------------------------------------------


def s4_basis(pres: Optional[Presentation] = None, one: str = "r") -> dict[str, Polynomial]:
    """Second-leg generators named as in the fixtures; ``one`` picks r or the unit."""
    pres = pres or cat.c4()
    g = cat.s4_generators(pres)
    return {
        "1": g["r"] if one == "r" else Polynomial.one((pres,)),
        "x": g["x"],
        "alpha": g["alpha"],
        "alpha'": g["alpha"].star(),
        "beta": g["beta"],
        "beta'": g["beta"].star(),
    }


X_NAMES = ("1", "x", "alpha", "alpha'", "beta", "beta'")


@lru_cache(maxsize=None)
def display_fixture() -> dict[str, dict[str, Polynomial]]:
    pres = cat.sl2h()
    out: dict = {}
    for line in cat.read_fixture("coaction_displays.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        elem, gen, expr = line.split(None, 2)
        out.setdefault(elem, {})[gen] = parse_expression(expr, pres)
    return out


def display_value(elem: str, one: str) -> Polynomial:
    basis = s4_basis(one=one)
    acc = Polynomial.zero((cat.sl2h(), cat.c4()))
    for gen, coeff in display_fixture()[elem].items():
        acc = acc + coeff.tensor(basis[gen])
    return acc


def computed_display(elem: str) -> Polynomial:
    t = inflated()
    return {
        "2x": t["x"].scale(2),
        "alpha": t["alpha"],
        "beta": t["beta"],
        "2rho2": t["rho2"].scale(2),
    }[elem]


def display_defect(elem: str, free: bool = False) -> Polynomial:
    """Computed expansion minus the display; modulo the sphere unless ``free`` (then 1 reads r)."""
    diff = computed_display(elem) - display_value(elem, "r" if free else "1")
    return diff if free else cat.sphere_system().reduce(diff, 1)


# -- the SO(5,1) layer ------------------------------------------------------------


def X_vector(pres: Optional[Presentation] = None) -> list[Polynomial]:
    b = s4_basis(pres, "r")
    return [b[n] for n in X_NAMES]


G_METRIC = (
    (-1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, HALF, 0, 0),
    (0, 0, HALF, 0, 0, 0),
    (0, 0, 0, 0, 0, HALF),
    (0, 0, 0, 0, HALF, 0),
)


def g_matrix() -> list[list[PhaseCoefficient]]:
    return [[PhaseCoefficient.const(v) for v in row] for row in G_METRIC]


def h_matrix(half: bool = True) -> list[list[PhaseCoefficient]]:
    """The Y-basis metric; ``half=False`` gives the upper-index form h^{IJ}."""
    s = HALF if half else 1
    h = [[ZERO] * 6 for _ in range(6)]
    for (i, j), c in (((0, 1), ONE), ((2, 3), PhaseCoefficient.mu(1)), ((4, 5), -PhaseCoefficient.mu(-1))):
        h[i][j] = h[j][i] = c * s
    return h


T_MATRIX_ENTRIES = {  # X_i = sum_j T_ij Y_j, as (j, coefficient) lists
    0: ((0, ONE), (1, ONE)),
    1: ((0, ONE), (1, -ONE)),
    2: ((2, PhaseCoefficient.const(2)),),
    3: ((3, PhaseCoefficient.mu(1, -2)),),
    4: ((4, PhaseCoefficient.const(-2)),),
    5: ((5, PhaseCoefficient.mu(-1, -2)),),
}


def T_matrix() -> list[list[PhaseCoefficient]]:
    T = [[ZERO] * 6 for _ in range(6)]
    for i, row in T_MATRIX_ENTRIES.items():
        for j, c in row:
            T[i][j] = c
    return T


def scalar_matmul(P, Q):
    n, k, m = len(P), len(Q), len(Q[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ZERO
            for t in range(k):
                acc = acc + P[i][t] * Q[t][j]
            row.append(acc)
        out.append(row)
    return out


def scalar_transpose(P):
    return [list(r) for r in zip(*P)]


def tgt() -> list[list[PhaseCoefficient]]:
    T = T_matrix()
    return scalar_matmul(scalar_matmul(scalar_transpose(T), g_matrix()), T)


def scalar_matrix_defect(P, Q) -> list[tuple[int, int, PhaseCoefficient]]:
    return [(i + 1, j + 1, P[i][j] - Q[i][j]) for i in range(6) for j in range(6) if P[i][j] != Q[i][j]]


def quadratic_form(M, v: list[Polynomial]) -> Polynomial:
    acc = Polynomial.zero(v[0].legs)
    for i in range(len(v)):
        for j in range(len(v)):
            if M[i][j]:
                acc = acc + (v[i] * v[j]).scale(M[i][j])
    return acc


PAIRS = ((1, 2), (3, 4), (1, 4), (2, 3), (1, 3), (2, 4))


def pi_minor(i: int, j: int, pres: Optional[Presentation] = None) -> Polynomial:
    u = cat.u_matrix(pres)
    return u[i - 1, 0] * u[j - 1, 1] - u[i - 1, 1] * u[j - 1, 0]


def Y_vector(pres: Optional[Presentation] = None) -> list[Polynomial]:
    return [pi_minor(i, j, pres) for i, j in PAIRS]


def change_of_basis_defects() -> list[Polynomial]:
    X, Y, T = X_vector(), Y_vector(), T_matrix()
    out = []
    for i in range(6):
        acc = X[i]
        for j in range(6):
            if T[i][j]:
                acc = acc - Y[j].scale(T[i][j])
        out.append(acc)
    return out


def plucker() -> Polynomial:
    p = {ij: pi_minor(*ij) for ij in PAIRS}
    return (
        p[(1, 2)] * p[(3, 4)]
        + (p[(1, 4)] * p[(2, 3)]).scale(PhaseCoefficient.mu(1))
        - (p[(1, 3)] * p[(2, 4)]).scale(PhaseCoefficient.mu(-1))
    )


def minor(i: int, j: int, l: int, s: int) -> Polynomial:
    """m_ij^{ls} = A_il A_js - eta_ls A_is A_jl (1-based)."""
    A = cat.A_matrix()
    return A[i - 1, l - 1] * A[j - 1, s - 1] - (A[i - 1, s - 1] * A[j - 1, l - 1]).scale(cat.eta(l - 1, s - 1))


def minor_antisymmetry_defect(i: int, j: int, k: int, l: int) -> Polynomial:
    return minor(i, j, k, l) + minor(i, j, l, k).scale(cat.eta(k - 1, l - 1))


def pi_coaction_defect(i: int, j: int) -> Polynomial:
    """Delta_L(pi_ij) - sum_{l<s} m_ij^{ls} (x) pi_ls."""
    lhs = delta_L()(pi_minor(i, j))
    for l, s in itertools.combinations(range(1, 5), 2):
        lhs = lhs - minor(i, j, l, s).tensor(pi_minor(l, s))
    return lhs


@lru_cache(maxsize=None)
def _minor_table():
    return {(I, K): minor(*I, *K) for I in PAIRS for K in PAIRS}


def metric_identity_defect(K: int, L: int) -> Polynomial:
    """sum_IJ h^{IJ} m_I^K m_J^L - h^{KL} det (0-based K, L into PAIRS)."""
    h = h_matrix(half=False)
    mt = _minor_table()
    acc = Polynomial.zero((cat.sl2h(),))
    for I in range(6):
        for J in range(6):
            if h[I][J]:
                acc = acc + (mt[(PAIRS[I], PAIRS[K])] * mt[(PAIRS[J], PAIRS[L])]).scale(h[I][J])
    if h[K][L]:
        acc = acc - hopf.determinant().scale(h[K][L])
    return acc


# -- the matrix C --------------------------------------------------------------------

_PIVOTS = (("z1", "z1*"), ("z3", "z3*"), ("z1", "z3*"), ("z3", "z1*"), ("z1", "z4"), ("z1*", "z4*"))


def _monomial(pres: Presentation, names) -> tuple:
    return Polynomial.word(pres, names).terms  # {(m,): c}


@lru_cache(maxsize=None)
def C_matrix() -> AlgebraMatrix:
    """Read C off Delta_L(X_i) = sum_j C_ij (x) X_j using one pivot monomial per generator."""
    pres = cat.c4()
    X = X_vector()
    D = delta_L()
    piv = []
    for names in _PIVOTS:
        ((m,), c), = _monomial(pres, names).items()
        piv.append(m)

    def coeff(f: Polynomial, m) -> PhaseCoefficient:
        return f.coefficient((m,))

    rows = []
    for i in range(6):
        groups = D(X[i]).leg_collect(1)
        zero = Polynomial.zero((cat.sl2h(),))
        Q = [groups.get(m, zero) for m in piv]
        # r and x share pivots: r = ... + z1 z1* + z3 z3*, x = ... + z1 z1* - z3 z3*
        k1, k2 = coeff(X[0], piv[0]), coeff(X[0], piv[1])
        s, t = Q[0].scale(k1.inverse()), Q[1].scale(k2.inverse())
        row = [(s + t).scale(HALF), (s - t).scale(HALF)]
        for j in range(2, 6):
            row.append(Q[j].scale(coeff(X[j], piv[j]).inverse()))
        rows.append(row)
    return AlgebraMatrix(rows)


def C_extraction_defects() -> list[Polynomial]:
    C, X = C_matrix(), X_vector()
    D = delta_L()
    out = []
    for i in range(6):
        acc = D(X[i])
        for j in range(6):
            acc = acc - C[i, j].tensor(X[j])
        out.append(acc)
    return out


FIXTURE_ROWS = {0: ("2rho2", HALF), 1: ("2x", HALF), 2: ("alpha", ONE), 4: ("beta", ONE)}


def C_fixture_defects() -> list[tuple[int, int, Polynomial]]:
    """C entries against the transcribed displays; starred rows by conjugation."""
    C = C_matrix()
    fx = display_fixture()
    out = []
    star_slot = {0: 0, 1: 1, 2: 3, 3: 2, 4: 5, 5: 4}
    for i, (elem, s) in FIXTURE_ROWS.items():
        for j, name in enumerate(X_NAMES):
            expect = fx[elem][name].scale(s)
            d = C[i, j] - expect
            if d:
                out.append((i + 1, j + 1, d))
            if i in (2, 4):
                d2 = C[i + 1, star_slot[j]] - expect.star()
                if d2:
                    out.append((i + 2, star_slot[j] + 1, d2))
    return out


NU_LAMBDA = ((3, 5), (4, 6), (5, 4), (6, 3))
NU_LAMBDABAR = ((3, 6), (4, 5), (5, 3), (6, 4))


def nu(i: int, j: int) -> PhaseCoefficient:
    if (i, j) in NU_LAMBDA:
        return PhaseCoefficient.mu(2)
    if (i, j) in NU_LAMBDABAR:
        return PhaseCoefficient.mu(-2)
    return ONE


def nu_defects():
    """Yield ``((i, l, j, m), residual)`` of C_il C_jm - nu_ij nu_ml C_jm C_il over nonzero products."""
    C = C_matrix()
    for i, l, j, m in itertools.product(range(1, 7), repeat=4):
        a, b = C[i - 1, l - 1], C[j - 1, m - 1]
        ab = a * b
        if not ab:
            continue
        r = ab - (b * a).scale(nu(i, j) * nu(m, l))
        if r:
            yield (i, l, j, m), r


def cgc_matrix() -> AlgebraMatrix:
    """C^t g C."""
    C = C_matrix()
    g = g_matrix()
    rows = []
    for k in range(6):
        row = []
        for l in range(6):
            acc = Polynomial.zero((cat.sl2h(),))
            for i in range(6):
                for j in range(6):
                    if g[i][j]:
                        acc = acc + (C[i, k] * C[j, l]).scale(g[i][j])
            row.append(acc)
        rows.append(row)
    return AlgebraMatrix(rows)


def cgc_defect(reduced: bool = False) -> AlgebraMatrix:
    M = cgc_matrix()
    g = g_matrix()
    det = hopf.determinant()
    if reduced:
        rs = hopf.det1_system()
        return AlgebraMatrix([[rs.reduce(M[k, l]) - g[k][l] for l in range(6)] for k in range(6)])
    return AlgebraMatrix([[M[k, l] - det.scale(g[k][l]) for l in range(6)] for k in range(6)])


# -- relations forced by the coaction ---------------------------------------------------


@lru_cache(maxsize=None)
def free_sl() -> FreePresentation:
    base = cat.sl2h()
    return FreePresentation("sl2h-free", base.letters)


def _free_A() -> AlgebraMatrix:
    f = free_sl()
    return AlgebraMatrix([[cat.signed(f, e) for e in row] for row in cat.A_LAYOUT])


@lru_cache(maxsize=None)
def forced_relations() -> tuple[Polynomial, ...]:
    """First-leg coefficients of Delta_L(z_j z_k - lambda_jk z_k z_j) with a free first leg."""
    pres = cat.c4()
    images = _coaction_images(free_sl(), pres, _free_A())
    D = Hom(pres, images, name="delta_L_free")
    out = []
    for a, b in itertools.combinations(range(pres.n), 2):
        za = Polynomial.letter(pres, pres.letters[a].name)
        zb = Polynomial.letter(pres, pres.letters[b].name)
        k, s = pres.phase(a, b)
        ia, ib = D(za), D(zb)
        t = ia * ib - (ib * ia).scale(PhaseCoefficient.mu(k, s))
        for q in t.leg_collect(1).values():
            if q:
                out.append(q)
    return tuple(out)


def algA_relations() -> list[tuple[str, Polynomial]]:
    """A_ij A_kl - eta_ki eta_jl A_kl A_ij in the free algebra, one per ordered position pair."""
    A = _free_A()
    out = []
    for (i, j), (k, l) in itertools.combinations(itertools.product(range(4), repeat=2), 2):
        c = cat.eta(k, i) * cat.eta(j, l)
        out.append((f"A{i + 1}{j + 1} A{k + 1}{l + 1}", A[i, j] * A[k, l] - (A[k, l] * A[i, j]).scale(c)))
    return out


def to_twisted(f: Polynomial) -> Polynomial:
    """Push a free-algebra polynomial into the twisted algebra."""
    pres = cat.sl2h()
    acc = Polynomial.zero((pres,))
    for (word,), c in f.terms.items():
        cc, m = pres.normal_order(word)
        if m is not None:
            acc = acc + Polynomial._raw((pres,), {(m,): cc * c})
    return acc


def _pivot_reduce(basis: dict, f: Polynomial) -> Polynomial:
    while f:
        lead = max(f.terms, key=lambda k: k[0])
        row = basis.get(lead)
        if row is None:
            return f
        f = f - row.scale(f.terms[lead])
    return f


def span_basis(rels) -> tuple[dict, list]:
    """Echelon form with unit pivots; returns ``(basis, stuck)``."""
    basis: dict = {}
    stuck = []
    for r in rels:
        r = _pivot_reduce(basis, r)
        if not r:
            continue
        lead = max(r.terms, key=lambda k: k[0])
        c = r.terms[lead]
        if not c.is_unit_monomial():
            stuck.append(r)
            continue
        r = r.scale(c.inverse())
        for k in list(basis):
            if lead in basis[k].terms:
                basis[k] = basis[k] - r.scale(basis[k].terms[lead])
        basis[lead] = r
    return basis, stuck


def bialgebra_comparison() -> dict:
    """Span comparison of the forced relations against the matrix relations."""
    forced = forced_relations()
    alg = [r for _, r in algA_relations()]
    fb, fstuck = span_basis(forced)
    ab, astuck = span_basis(alg)
    forced_out = [r for r in forced if _pivot_reduce(ab, r)]
    alg_out = [(name, r) for name, r in algA_relations() if _pivot_reduce(fb, r)]
    return {
        "forced": len(forced),
        "rank_forced": len(fb),
        "rank_alg": len(ab),
        "stuck": len(fstuck) + len(astuck),
        "forced_not_in_alg": forced_out,
        "alg_not_in_forced": alg_out,
    }

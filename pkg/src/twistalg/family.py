"""Basic instanton, the coacted family of projections and connections, and the quotient space M."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

from . import catalog as cat
from . import coaction as co
from . import hopf
from . import rewrite
from .matrix import AlgebraMatrix, identity
from .parse import parse_expression
from .phase import PhaseCoefficient
from .polynomial import Polynomial
from .presentation import Presentation
from .rewrite import RewriteSystem

HALF = Fraction(1, 2)


def _matrix_fixture(name: str, legs, env: Mapping[str, Polynomial]) -> AlgebraMatrix:
    rows = [[None] * 4 for _ in range(4)]
    for line in cat.read_fixture(name).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        i, j, expr = line.split(None, 2)
        rows[int(i) - 1][int(j) - 1] = parse_expression(expr, legs, full_env=env)
    return AlgebraMatrix(rows)


# -- the basic instanton ----------------------------------------------------------


def p_display(one: str = "1") -> AlgebraMatrix:
    """The displayed projector; ``one`` is the unit or r (for the free comparison)."""
    pres = cat.c4()
    b = co.s4_basis(pres, "r" if one == "r" else "1")
    env = {"one": b["1"], "x": b["x"], "alpha": b["alpha"], "beta": b["beta"]}
    return _matrix_fixture("projector.txt", (pres,), env).scale(HALF)


def reduce_matrix(M: AlgebraMatrix, rs: RewriteSystem, leg: int = 0) -> AlgebraMatrix:
    return M.map(lambda e: rs.reduce(e, leg))


def u_star_u_defect() -> AlgebraMatrix:
    u = cat.u_matrix()
    return reduce_matrix(u.adjoint() @ u - identity((cat.c4(),), 2), cat.sphere_system())


def p_selfadjoint_defect() -> AlgebraMatrix:
    p = cat.p_matrix()
    return p - p.adjoint()


def p_idempotent_defect() -> AlgebraMatrix:
    p = cat.p_matrix()
    return reduce_matrix(p @ p - p, cat.sphere_system())


def p_display_defect(free: bool = False) -> AlgebraMatrix:
    diff = cat.p_matrix() - p_display("r" if free else "1")
    return diff if free else reduce_matrix(diff, cat.sphere_system())


def omega(pres: Optional[Presentation] = None) -> AlgebraMatrix:
    """omega_ab = 1/2 sum_k ((u*)_ak d u_kb - d(u*)_ak u_kb) over the forms presentation."""
    pres = pres or cat.forms()
    u = cat.u_matrix(pres)
    us = u.adjoint()
    du = u.map(cat.d)
    dus = us.map(cat.d)
    return (us @ du - dus @ u).scale(HALF)


def skew_defect(w: AlgebraMatrix) -> AlgebraMatrix:
    """omega_ab + (omega_ba)*."""
    return w + w.adjoint()


@lru_cache(maxsize=None)
def _forms_sphere_completed(limit: int) -> RewriteSystem:
    base = cat.forms_sphere_system()
    return RewriteSystem(base.pres, base.rules, require_central=False, completion_limit=limit).complete()


def forms_sphere_completed() -> RewriteSystem:
    return _forms_sphere_completed(rewrite.DEFAULT_COMPLETION_LIMIT)


def trace_reduced(t: Polynomial, leg: int = 0) -> tuple[Polynomial, int]:
    """Normal form modulo the sphere and its differential, with the number of completed rules."""
    rs = forms_sphere_completed()
    return rs.reduce(t, leg), len(rs.rules)


def omega_trace() -> Polynomial:
    return omega().trace()


# -- the family of projections ------------------------------------------------------


def legs2():
    return (cat.sl2h(), cat.c4())


@lru_cache(maxsize=None)
def u_tilde() -> AlgebraMatrix:
    return cat.A_matrix().tensor_dot(cat.u_matrix())


def rho2() -> Polynomial:
    return co.inflated()["rho2"]


def utnorm_defect() -> AlgebraMatrix:
    ut = u_tilde()
    return ut.adjoint() @ ut - identity(legs2(), 2).map(lambda e: e * rho2())


def rho_u_commutators() -> AlgebraMatrix:
    r = rho2()
    return u_tilde().map(lambda e: r * e - e * r)


@lru_cache(maxsize=None)
def P_prime() -> AlgebraMatrix:
    """Denominator-cleared projector u~ u~*."""
    ut = u_tilde()
    return ut @ ut.adjoint()


def P_idempotent_defect() -> AlgebraMatrix:
    P = P_prime()
    return P @ P - P.left_scale(rho2())


def P_selfadjoint_defect() -> AlgebraMatrix:
    P = P_prime()
    return P - P.adjoint()


def P_display() -> AlgebraMatrix:
    t = co.inflated()
    env = {"one": t["rho2"], "x": t["x"], "alpha": t["alpha"], "beta": t["beta"]}
    return _matrix_fixture("projector.txt", legs2(), env).scale(HALF)


def P_display_defect() -> AlgebraMatrix:
    return P_prime() - P_display()


def P_trace_defect() -> Polynomial:
    return P_prime().trace() - rho2().scale(2)


# -- Murray-von Neumann --------------------------------------------------------------


@lru_cache(maxsize=None)
def V_prime() -> AlgebraMatrix:
    """V'_ik = sum_j A_ij (x) p_jk."""
    return cat.A_matrix().tensor_dot(cat.p_matrix())


def one_tensor(M: AlgebraMatrix) -> AlgebraMatrix:
    one = Polynomial.one((cat.sl2h(),))
    return M.map(lambda e: one.tensor(e))


def V_entry_defect() -> AlgebraMatrix:
    """V' = u~ (1 (x) u*), the second form of the partial isometry."""
    return V_prime() - u_tilde() @ one_tensor(cat.u_matrix().adjoint())


def mvn_left() -> tuple[AlgebraMatrix, AlgebraMatrix]:
    """V'* V' - rho^2 (1 (x) p): free and modulo the sphere on leg 2.

    This naive clearing moves rho^2 past 1 (x) u, which it does not commute with.
    """
    V = V_prime()
    diff = V.adjoint() @ V - one_tensor(cat.p_matrix()).left_scale(rho2())
    return diff, reduce_matrix(diff, cat.sphere_system(), 1)


def mvn_left_factors() -> dict[str, AlgebraMatrix]:
    """V* V = V'* rho^-2 V' = (1 (x) u) rho^-2 u~* u~ (1 (x) u*) = 1 (x) p, factor by factor."""
    return {
        "V'=u~(1(x)u*)": V_entry_defect(),
        "[rho^2,u~]": rho_u_commutators(),
        "u~*u~=rho^2": utnorm_defect(),
        "(1(x)u)(1(x)u*)=1(x)p": one_tensor(cat.u_matrix()) @ one_tensor(cat.u_matrix().adjoint()) - one_tensor(cat.p_matrix()),
    }


def mvn_right() -> tuple[AlgebraMatrix, AlgebraMatrix]:
    """V' V'* - P': free and modulo the sphere on leg 2."""
    V = V_prime()
    diff = V @ V.adjoint() - P_prime()
    return diff, reduce_matrix(diff, cat.sphere_system(), 1)


# -- the family of connections --------------------------------------------------------


@lru_cache(maxsize=None)
def omega_tilde() -> AlgebraMatrix:
    D = co.delta_L("forms")
    return omega().map(D)


def omega_factors(a: int, b: int) -> dict:
    """(i, j) -> 1/2 ((u*)_ai du_jb - d(u*)_ai u_jb), 1-based keys."""
    u = cat.u_matrix(cat.forms())
    us = u.adjoint()
    out = {}
    for i in range(4):
        for j in range(4):
            f = us[a, i] * cat.d(u[j, b]) - cat.d(us[a, i]) * u[j, b]
            out[(i + 1, j + 1)] = f.scale(HALF)
    return out


def omega_factorisation_defect(a: int, b: int) -> Polynomial:
    m = hopf.gram()
    rhs = None
    for (i, j), q in omega_factors(a, b).items():
        t = m[i - 1, j - 1].tensor(q)
        rhs = t if rhs is None else rhs + t
    return omega_tilde()[a, b] - rhs


def omega_sp_defect(a: int, b: int) -> Polynomial:
    got = hopf.unitarity_substitution(omega_factors(a, b))
    return got - Polynomial.one((cat.sl2h(),)).tensor(omega()[a, b])


# -- the quotient space M --------------------------------------------------------------


@lru_cache(maxsize=None)
def m_generator_fixture() -> dict[str, Polynomial]:
    pres = cat.sl2h()
    out = {}
    for line in cat.read_fixture("m_generators.txt").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            name, expr = line.split(None, 1)
            out[name] = parse_expression(expr, pres)
    return out


def M_matrix() -> AlgebraMatrix:
    return hopf.gram()


def M_display() -> AlgebraMatrix:
    return _matrix_fixture("m_matrix.txt", (cat.sl2h(),), m_generator_fixture())


def m_generators() -> dict[str, Polynomial]:
    g = m_generator_fixture()
    return {"m": g["m"], "n": g["n"], "g1": g["g1"], "g2": g["g2"], "g1*": g["g1"].star(), "g2*": g["g2"].star()}


def m_coinvariance_defect(k: int, l: int) -> Polynomial:
    """Delta(m_kl) = sum_mn m_mn (x) (A_mk)* A_nl, then m -> delta leaves 1 (x) m_kl."""
    A = cat.A_matrix()
    M = M_matrix()
    lhs = hopf.coproduct()(M[k, l])
    factors = {}
    for m in range(4):
        for n in range(4):
            q = A[m, k].star() * A[n, l]
            factors[(m + 1, n + 1)] = q
            lhs = lhs - M[m, n].tensor(q)
    if lhs:
        return lhs
    return hopf.unitarity_substitution(factors) - Polynomial.one((cat.sl2h(),)).tensor(M[k, l])


M_PHASES = {  # mu-exponents k in f g = mu^k g f among the M generators
    ("g1", "g2"): 2,
    ("g1", "g2*"): -2,
    ("g1*", "g2*"): 2,
    ("g1*", "g2"): -2,
}


def m_phase_defects():
    gens = m_generators()
    names = list(gens)
    for i, f in enumerate(names):
        for g in names[i + 1:]:
            k = M_PHASES.get((f, g), -M_PHASES.get((g, f), 0))
            yield f"{f},{g}", gens[f] * gens[g] - (gens[g] * gens[f]).scale(PhaseCoefficient.mu(k))


def hyperboloid_element() -> Polynomial:
    g = m_generators()
    return g["m"] * g["n"] - (g["g1*"] * g["g1"] + g["g2*"] * g["g2"])


def radial_commutators() -> dict[str, Polynomial]:
    """[g1* g1 + g2* g2, x] over the generators."""
    g = m_generators()
    s = g["g1*"] * g["g1"] + g["g2*"] * g["g2"]
    return {k: s * v - v * s for k, v in g.items()}


def rho_pairing_defect() -> Polynomial:
    """rho^2 - 1/2 sum_ij eta_ij m_ij (x) p_ji."""
    M = M_matrix()
    p = cat.p_matrix()
    acc = rho2()
    for i in range(4):
        for j in range(4):
            acc = acc - M[i, j].tensor(p[j, i]).scale(cat.eta(i, j) * HALF)
    return acc


def rho_generator_defect() -> Polynomial:
    """rho^2 against 1/2 [(m+n) (x) r + (m-n) (x) x + mu g1* (x) alpha + ...], freely."""
    g = m_generators()
    b = co.s4_basis(one="r")
    mu, mubar = PhaseCoefficient.mu(1), PhaseCoefficient.mu(-1)
    rhs = (
        (g["m"] + g["n"]).tensor(b["1"])
        + (g["m"] - g["n"]).tensor(b["x"])
        + g["g1*"].tensor(b["alpha"]).scale(mu)
        + g["g2"].tensor(b["beta"]).scale(mubar)
        + g["g1"].tensor(b["alpha'"]).scale(mubar)
        + g["g2*"].tensor(b["beta'"]).scale(mu)
    )
    return rho2() - rhs.scale(HALF)


# -- the boundary ---------------------------------------------------------------------


def boundary_generators() -> dict[str, Polynomial]:
    g = m_generators()
    return {"w": (g["m"] + g["n"]).scale(HALF), "y": (g["m"] - g["n"]).scale(HALF)}


def relbis_element() -> Polynomial:
    g = m_generators()
    b = boundary_generators()
    return b["w"] * b["w"] - (b["y"] * b["y"] + g["g1*"] * g["g1"] + g["g2*"] * g["g2"])


def boundary_phase_defects():
    """(y, g1, g1*, g2, g2*) against the 4-sphere table of (x, alpha, alpha*, beta, beta*)."""
    g = m_generators()
    gens = {"x": boundary_generators()["y"], "alpha": g["g1"], "alpha*": g["g1*"], "beta": g["g2"], "beta*": g["g2*"]}
    return co.phase_defects(gens)


def boundary_sphere_defect() -> Polynomial:
    """y^2 + g1* g1 + g2* g2 - (w^2 - 1) modulo det - 1: the sphere relation up to the symbol w^-2."""
    g = m_generators()
    b = boundary_generators()
    lhs = b["y"] * b["y"] + g["g1*"] * g["g1"] + g["g2*"] * g["g2"]
    return hopf.det1_system().reduce(lhs - (b["w"] * b["w"] - 1))

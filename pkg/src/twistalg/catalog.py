"""Concrete algebras: C^4, S^7, S^4 generators, forms, and the quaternionic SL(2,H) matrix."""

from __future__ import annotations

import itertools
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional, Sequence

from .maps import Hom, differential
from .matrix import AlgebraMatrix
from .phase import PhaseCoefficient
from .polynomial import Polynomial
from .presentation import Letter, Presentation, PresentationError
from .rewrite import RewriteSystem

# mu-exponents of the deformation matrix, 0-based: eta_ij = mu^E[i][j]
E = (
    (0, 0, -1, 1),
    (0, 0, 1, -1),
    (1, -1, 0, 0),
    (-1, 1, 0, 0),
)


def eta(i: int, j: int) -> PhaseCoefficient:
    return PhaseCoefficient.mu(E[i][j])


C4_NAMES = ("z1", "z2", "z3", "z4", "z1*", "z2*", "z3*", "z4*")
SL_BASE = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")
SL_NAMES = SL_BASE + tuple(n + "*" for n in SL_BASE)

# signed letters making up u (4x2) and A (4x4)
U_LAYOUT = (
    (("z1", 1), ("z2", 1)),
    (("z2*", -1), ("z1*", 1)),
    (("z3", 1), ("z4", 1)),
    (("z4*", -1), ("z3*", 1)),
)
A_LAYOUT = (
    (("a1", 1), ("a2", 1), ("b1", 1), ("b2", 1)),
    (("a2*", -1), ("a1*", 1), ("b2*", -1), ("b1*", 1)),
    (("c1", 1), ("c2", 1), ("d1", 1), ("d2", 1)),
    (("c2*", -1), ("c1*", 1), ("d2*", -1), ("d1*", 1)),
)


class WitnessConflict(PresentationError):
    pass


def star_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def induced_phase_table(names: Sequence[str], layout, rule: Callable) -> list[list[int]]:
    """Phase table forced by a matrix commutation rule on signed-letter entries.

    ``rule(p, q)`` gives the mu-exponent of ``entry(p) entry(q) = mu^k entry(q) entry(p)``.
    Every pair of positions is a witness; conflicting witnesses raise.
    """
    idx = {n: i for i, n in enumerate(names)}
    pos = [(idx[name], (i, j)) for i, row in enumerate(layout) for j, (name, _) in enumerate(row)]
    n = len(names)
    lam: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for a in range(n):
        lam[a][a] = 0
    for (x, p), (y, q) in itertools.product(pos, pos):
        if p == q:
            continue
        k = rule(p, q)
        if lam[x][y] is None:
            lam[x][y] = k
        elif lam[x][y] != k:
            raise WitnessConflict(f"positions {p},{q} force {names[x]},{names[y]} phase {k}, earlier {lam[x][y]}")
    missing = [(names[a], names[b]) for a in range(n) for b in range(n) if lam[a][b] is None]
    if missing:
        raise WitnessConflict(f"no witness for pairs {missing[:4]}")
    return lam  # type: ignore[return-value]


def c4_rule(p, q) -> int:
    # u_ia u_jb = eta_ji u_jb u_ia
    return E[q[0]][p[0]]


def sl_rule(p, q) -> int:
    # A_ij A_kl = eta_ki eta_jl A_kl A_ij
    (i, j), (k, l) = p, q
    return E[k][i] + E[j][l]


def _letters(names, parity=0, degrees=None) -> list[Letter]:
    idx = {n: i for i, n in enumerate(names)}
    return [
        Letter(n, parity if isinstance(parity, int) else parity[i], idx[star_name(n)],
               None if degrees is None else degrees[n])
        for i, n in enumerate(names)
    ]


# -- torus degrees -----------------------------------------------------------


def pairing(r: Sequence[int], s: Sequence[int]) -> int:
    """Antisymmetric torus pairing on doubled vectors, returned x4 (so always integral)."""
    if len(r) != len(s) or len(r) % 2:
        raise ValueError(f"degree arity mismatch: {len(r)} vs {len(s)}")
    return sum(r[k] * s[k + 1] - r[k + 1] * s[k] for k in range(0, len(r), 2))


def star_product_phase(r: Sequence[int], s: Sequence[int]) -> PhaseCoefficient:
    """Twist factor ``mu^<r,s>`` of ``f_r x g_s`` for doubled half-integer degrees."""
    p = pairing(r, s)
    if p % 4:
        raise ValueError(f"pairing {p}/4 is not integral; use commutation_phase")
    return PhaseCoefficient.mu(p // 4)


def commutation_phase(r: Sequence[int], s: Sequence[int]) -> PhaseCoefficient:
    """``lambda^<r,s>``: the phase in ``f_r g_s = lambda^<r,s> g_s f_r``."""
    p = pairing(r, s)
    if p % 2:
        raise ValueError("degrees do not give a power of mu")
    return PhaseCoefficient.mu(p // 2)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def solve_z_degrees(pres: Presentation, radius: int = 4) -> dict[str, tuple[int, int]]:
    """Doubled bidegrees of z1..z4 reproducing the phase table, anchored by alpha and beta.

    alpha = 2(z1 z3* + z2 z4*) must have degree (1,0) and beta = 2(-z1 z4 + z2 z3)
    degree (0,1). With deg(z1) on a grid the anchors propagate to the other
    letters; a candidate survives if it reproduces every entry of the table.
    """
    alpha, beta = (2, 0), (0, 2)
    solutions = []
    for d1 in itertools.product(range(-radius, radius + 1), repeat=2):
        d3 = _sub(d1, alpha)          # z1 z3*
        d4 = _sub(beta, d1)           # z1 z4
        d2 = _sub(beta, d3)           # z2 z3
        if _sub(d2, d4) != alpha:     # z2 z4*
            continue
        deg = {"z1": d1, "z2": d2, "z3": d3, "z4": d4}
        for k in list(deg):
            deg[k + "*"] = _neg(deg[k])
        ok = True
        for a, b in itertools.combinations(range(pres.n), 2):
            pa, pb = deg[pres.letters[a].name], deg[pres.letters[b].name]
            if pairing(pa, pb) != 2 * pres.lam[a][b]:
                ok = False
                break
        if ok:
            solutions.append(deg)
    if len(solutions) != 1:
        raise PresentationError(f"expected a unique z-degree solution, found {len(solutions)}")
    return solutions[0]


def sl_degrees(z_deg: dict) -> dict[str, tuple[int, ...]]:
    """deg(A_ij) = D_i + reflected D_j, with D_i the degree of u_i1."""
    D = [z_deg[name] for (name, _), _ in U_LAYOUT]
    out = {}
    for i, row in enumerate(A_LAYOUT):
        for j, (name, _) in enumerate(row):
            d = D[i] + (D[j][1], D[j][0])
            out[name] = d
    return out


# -- presentations -------------------------------------------------------------


@lru_cache(maxsize=None)
def c4_bare() -> Presentation:
    lam = induced_phase_table(C4_NAMES, U_LAYOUT, c4_rule)
    return Presentation("c4", _letters(C4_NAMES), lam)


@lru_cache(maxsize=None)
def z_degrees() -> dict:
    return solve_z_degrees(c4_bare())


@lru_cache(maxsize=None)
def c4() -> Presentation:
    bare = c4_bare()
    return Presentation("c4", _letters(C4_NAMES, degrees=z_degrees()), [list(r) for r in bare.lam])


@lru_cache(maxsize=None)
def sl2h() -> Presentation:
    lam = induced_phase_table(SL_NAMES, A_LAYOUT, sl_rule)
    return Presentation("sl2h", _letters(SL_NAMES, degrees=sl_degrees(z_degrees())), lam)


FORMS_NAMES = C4_NAMES + tuple("d" + n for n in C4_NAMES)


@lru_cache(maxsize=None)
def forms() -> Presentation:
    """z letters plus odd dz letters; dz inherits the phases of z."""
    base = c4()
    n = base.n
    lam = [[base.lam[a % n][b % n] for b in range(2 * n)] for a in range(2 * n)]
    degs = dict(z_degrees())
    degs.update({"d" + k: v for k, v in z_degrees().items()})
    idx = {nm: i for i, nm in enumerate(FORMS_NAMES)}
    letters = []
    for i, nm in enumerate(FORMS_NAMES):
        st = ("d" + star_name(nm[1:])) if nm.startswith("d") else star_name(nm)
        letters.append(Letter(nm, 1 if nm.startswith("d") else 0, idx[st], degs[nm]))
    return Presentation("forms", letters, lam)


def d_map() -> dict[int, int]:
    f = forms()
    return {f.index(n): f.index("d" + n) for n in C4_NAMES}


def d(f: Polynomial, leg: int = 0) -> Polynomial:
    return differential(f, d_map(), leg)


# -- elements ----------------------------------------------------------------


def gen(pres: Presentation, name: str) -> Polynomial:
    return Polynomial.letter(pres, name)


def signed(pres: Presentation, entry) -> Polynomial:
    name, sign = entry
    return Polynomial.letter(pres, name, sign)


def u_matrix(pres: Optional[Presentation] = None) -> AlgebraMatrix:
    pres = pres or c4()
    return AlgebraMatrix([[signed(pres, e) for e in row] for row in U_LAYOUT])


def A_matrix() -> AlgebraMatrix:
    pres = sl2h()
    return AlgebraMatrix([[signed(pres, e) for e in row] for row in A_LAYOUT])


def s4_generators(pres: Optional[Presentation] = None) -> dict[str, Polynomial]:
    pres = pres or c4()
    z = {n: gen(pres, n) for n in C4_NAMES}
    alpha = (z["z1"] * z["z3*"] + z["z2"] * z["z4*"]).scale(2)
    beta = (-z["z1"] * z["z4"] + z["z2"] * z["z3"]).scale(2)
    x = z["z1"] * z["z1*"] + z["z2"] * z["z2*"] - z["z3"] * z["z3*"] - z["z4"] * z["z4*"]
    r = z["z1"] * z["z1*"] + z["z2"] * z["z2*"] + z["z3"] * z["z3*"] + z["z4"] * z["z4*"]
    return {"x": x, "alpha": alpha, "beta": beta, "r": r}


def sphere_element(pres: Optional[Presentation] = None) -> Polynomial:
    pres = pres or c4()
    out = Polynomial.zero((pres,))
    for k in range(1, 5):
        out = out + gen(pres, f"z{k}*") * gen(pres, f"z{k}")
    return out


def p_matrix(pres: Optional[Presentation] = None) -> AlgebraMatrix:
    u = u_matrix(pres)
    return u @ u.adjoint()


@lru_cache(maxsize=None)
def sphere_system() -> RewriteSystem:
    pres = c4()
    return RewriteSystem.from_relations(pres, [("sum z*z = 1", sphere_element(pres) - 1)], name="s7")


@lru_cache(maxsize=None)
def forms_sphere_system() -> RewriteSystem:
    """Sphere relation and its differential over the forms presentation."""
    pres = forms()
    s = sphere_element(pres)
    return RewriteSystem.from_relations(
        pres, [("sum z*z = 1", s - 1), ("d(sum z*z) = 0", d(s))], name="s7-forms"
    )


# -- relation tables ---------------------------------------------------------


def relation_table(pres: Presentation) -> list[tuple[str, str, PhaseCoefficient]]:
    """``x y = coeff y x`` for every unordered letter pair, in letter order."""
    rows = []
    for a, b in itertools.combinations(range(pres.n), 2):
        k, s = pres.phase(a, b)
        rows.append((pres.letters[a].name, pres.letters[b].name, PhaseCoefficient.mu(k, s)))
    return rows


def format_relation_table(pres: Presentation, fmt: str = "tsv") -> str:
    rows = relation_table(pres)
    if fmt == "tsv":
        return "".join(f"{x}\t{y}\t{c}\n" for x, y, c in rows)
    w = max(len(x) for x, _, _ in rows)
    return "".join(f"{x:<{w}}  {y:<{w}}  {c}\n" for x, y, c in rows)


def read_fixture(name: str) -> str:
    return resources.files("twistalg.data").joinpath(name).read_text()


def relation_fixture() -> list[tuple[str, str, PhaseCoefficient]]:
    out = []
    for line in read_fixture("sl_relations.txt").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            x, y, c = line.split()
            out.append((x, y, PhaseCoefficient.parse(c)))
    return out


# -- quaternionic structure --------------------------------------------------

J_IMAGES = {"z1": ("z2", 1), "z2": ("z1", -1), "z3": ("z4", 1), "z4": ("z3", -1)}


def j_map(pres: Optional[Presentation] = None) -> Hom:
    """Antilinear, order-reversing *-map with j(z1,z2,z3,z4) = (z2,-z1,z4,-z3)."""
    pres = pres or c4()
    images = {}
    for src, (dst, sign) in J_IMAGES.items():
        img = Polynomial.letter(pres, dst, sign)
        images[src] = img
        images[src + "*"] = img.star()
    return Hom(pres, images, anti=True, antilinear=True, name="j")

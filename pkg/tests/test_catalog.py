import pytest

from twistalg import catalog as cat
from twistalg import hopf
from twistalg.phase import PhaseCoefficient


def swap(pres, x, y):
    return pres.swap_coefficient(pres.index(x), pres.index(y))


def test_eta_matrix():
    assert cat.eta(0, 2) == PhaseCoefficient.mu(-1)
    assert cat.eta(2, 0) == PhaseCoefficient.mu(1)
    assert cat.eta(0, 1) == PhaseCoefficient.const(1)


@pytest.mark.parametrize("x,y,c", [("z3", "z1", "mubar"), ("z1", "z1*", "1"), ("z2", "z1", "1")])
def test_z_phases(x, y, c):
    assert swap(cat.c4(), x, y) == PhaseCoefficient.parse(c)


def test_relation_samples():
    sl = cat.sl2h()
    # x y = c y x reads off as the swap coefficient of (x, y)
    assert swap(sl, "c1", "d1") == PhaseCoefficient.mu(-1)
    assert swap(sl, "a1", "b1") == PhaseCoefficient.mu(-1)


def test_fixture_has_48_rows():
    assert len(cat.relation_fixture()) == 48


def test_table_is_deterministic():
    assert cat.format_relation_table(cat.sl2h()) == cat.format_relation_table(cat.sl2h())
    assert "c1\td1\tmubar\n" in cat.format_relation_table(cat.sl2h())


def test_z_degrees_are_unique_and_reproduce_the_table():
    deg = cat.z_degrees()
    pres = cat.c4()
    for a in pres.names():
        for b in pres.names():
            if a != b:
                assert cat.commutation_phase(deg[a], deg[b]) == swap(pres, a, b)


def test_forms_share_the_z_table():
    f = cat.forms()
    assert swap(f, "dz3", "dz1") == -swap(f, "z3", "z1")
    assert swap(f, "dz3", "z1") == swap(f, "z3", "z1")


def test_half_integer_pairings_are_refused():
    with pytest.raises(ValueError):
        cat.star_product_phase((1, 0), (0, 1))


def test_determinant_has_24_terms_and_is_central():
    det = hopf.determinant()
    assert len(det) == 24
    for name in cat.SL_NAMES:
        ell = hopf.Polynomial.letter(cat.sl2h(), name)
        assert det.commutator(ell) == 0


def test_epsilon_values():
    assert hopf.epsilon((1, 3, 2, 4)) == PhaseCoefficient.mu(1)
    assert hopf.epsilon((1, 4, 2, 3)) == PhaseCoefficient.mu(-1)
    assert hopf.epsilon((1, 2, 3, 4)) == PhaseCoefficient.const(1)

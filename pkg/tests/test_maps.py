import pytest

from twistalg import catalog as cat
from twistalg import coaction as co
from twistalg import hopf
from twistalg.maps import Hom, HomomorphismError
from twistalg.polynomial import Polynomial
from twistalg.suites import catalog_maps, mutated_coproduct


@pytest.mark.parametrize("name", [n for n, _, _ in catalog_maps()])
def test_catalog_maps_validate(name):
    _, h, kw = next(m for m in catalog_maps() if m[0] == name)
    assert h.first_violation(**kw) is None


def test_mutated_image_set_is_rejected():
    with pytest.raises(HomomorphismError):
        mutated_coproduct().validate()


def test_pi_I_is_not_well_defined():
    label, residual = hopf.quotient_violation("pi_I")
    assert label.startswith("d2 a1")
    assert residual.to_text() == "(1 - mu^-2) * d2"


def test_star_check_catches_inconsistent_images():
    z = cat.c4()
    images = {n: Polynomial.letter(z, n) for n in cat.C4_NAMES}
    images["z1*"] = Polynomial.letter(z, "z2*")
    assert Hom(z, images).first_violation() is not None


def test_coproduct_of_a_letter():
    D = hopf.coproduct()
    a1 = Polynomial.letter(cat.sl2h(), "a1")
    img = D(a1)
    assert len(img) == 4
    assert hopf.counit()(a1) == 1


def test_antipode_on_stars_agrees_with_conjugation():
    assert hopf.star_antipode_defects() == {}


def test_j_is_antilinear_and_order_reversing():
    j = cat.j_map()
    z = cat.c4()
    z1, z3 = Polynomial.letter(z, "z1"), Polynomial.letter(z, "z3")
    assert j(z1) == Polynomial.letter(z, "z2")
    assert j(z1 * z3) == j(z3) * j(z1)


def test_coaction_is_compatible_with_j():
    assert all(not r for r in co.j_defects().values())


def test_coaction_commutes_with_d():
    assert all(not r for r in co.forms_commute_defects().values())

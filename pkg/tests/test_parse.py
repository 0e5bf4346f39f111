import pytest

from twistalg import catalog as cat
from twistalg.parse import ParseError, parse_expression
from twistalg.polynomial import Polynomial


def test_star_is_postfix_prime():
    z = cat.c4()
    assert parse_expression("z1'", z) == Polynomial.letter(z, "z1*")
    assert parse_expression("(z1*z3)'", z) == parse_expression("z3'*z1'", z)


def test_tensor_binds_looser_than_product():
    legs = (cat.sl2h(), cat.c4())
    a = parse_expression("a1*b1 @ z1", legs)
    b = Polynomial.word(cat.sl2h(), ["a1", "b1"]).tensor(Polynomial.letter(cat.c4(), "z1"))
    assert a == b


def test_tensor_binds_tighter_than_sum():
    legs = (cat.sl2h(), cat.c4())
    f = parse_expression("a1 @ z1 + b1 @ z2", legs)
    assert len(f) == 2


def test_coefficients_and_powers():
    z = cat.c4()
    assert parse_expression("z1^2 / 2", z).to_text() == "1/2 * z1^2"
    assert parse_expression("lambda*z1 - mu^2*z1", z) == 0


def test_canonical_text_roundtrip(rng):
    from conftest import random_poly

    for pres in (cat.c4(), cat.sl2h(), cat.forms()):
        for _ in range(10):
            f = random_poly(pres, rng)
            assert parse_expression(f.to_text(), pres) == f


@pytest.mark.parametrize("text,pos", [("z1 + + ", 7), ("z9", 0), ("(z1", 3)])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as e:
        parse_expression(text, cat.c4())
    assert e.value.pos == pos

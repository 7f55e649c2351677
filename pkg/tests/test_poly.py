import pytest

from kbs4.poly import ParseError, Polynomial, format_polynomial, parse

V = ("v", "phi")


def test_implicit_multiplication_and_powers():
    p = parse("4phi + phi^2 - 3v*phi", V)
    assert p.terms == {(0, 1): 4, (0, 2): 1, (1, 1): -3}
    assert parse("2v**3", V) == parse("2 v^3", V)
    assert parse("(v + 1)^2", V) == parse("v^2 + 2v + 1", V)


def test_unicode_alias():
    assert parse("φ^2 + 2φ", V) == parse("phi^2 + 2phi", V)


def test_unary_signs():
    assert parse("-v - -v", V).is_zero()
    assert parse("+3", V).constant_term() == 3


@pytest.mark.parametrize("bad", ["", "v +", "2 ^ v", "y", "(v", "v)", "v^-1", "3 $"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad, V)


def test_arithmetic():
    v, phi = Polynomial.var(V, "v"), Polynomial.var(V, "phi")
    assert (v + phi) * (v - phi) == v ** 2 - phi ** 2
    assert (v + 1) ** 0 == Polynomial.constant(V, 1)
    assert (3 - v) + v == Polynomial.constant(V, 3)
    assert (v * phi ** 2).degree((2, 4)) == 10


def test_format_roundtrip():
    p = parse("phi^3 - 2v*phi + 7", V)
    assert parse(format_polynomial(p), V) == p


def test_substitute_into_integers():
    p = parse("v^2 + 3phi - 1", V)
    assert p.substitute({"v": 2, "phi": -1}, 1) == 0

import json
from pathlib import Path

import pytest

from kbs4.cohomology import even_cohomology, format_summands, isomorphism_type, survival_compare

GOLDEN = json.loads((Path(__file__).parent / "data" / "cohomology_golden.json").read_text())["rows"]


@pytest.mark.parametrize("j", range(13))
def test_table_matches_golden(j):
    assert [str(s) for s in even_cohomology(j)] == GOLDEN[str(j)]


def test_format():
    assert format_summands(even_cohomology(2)) == "Z2(a2^2) + Z4(a4) + Z3(b4)"


def test_negative_degree():
    with pytest.raises(ValueError):
        even_cohomology(-1)


@pytest.mark.parametrize("j", range(31))
def test_degrees_and_primary_separation(j):
    for s in even_cohomology(j):
        assert s.degree == 2 * j
        a2, a3, a4, b4 = s.exponents
        if b4:
            assert s.order == 3 and not (a2 or a3 or a4)
        if a3:
            assert a3 % 2 == 0 and s.order == 2


def test_summand_counts_are_periodic():
    # k -> k + 1 adds three a2/a4 monomials and one a3 monomial
    for j in range(6, 25):
        assert len(even_cohomology(j + 6)) - len(even_cohomology(j)) == 4


def test_torsion_orders():
    for j in range(1, 31):
        orders = [s.order for s in even_cohomology(j)]
        assert set(orders) <= {2, 3, 4}
        assert orders.count(4) == orders.count(3) == (1 if j % 2 == 0 else 0)


def test_isomorphism_type():
    assert isomorphism_type((2, 12)) == isomorphism_type((4, 3, 2)) == (2, 12)
    assert isomorphism_type((2, 2, 2)) == (2, 2, 2)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_survival_low_degrees(j):
    r = survival_compare(j)
    assert r.einf_match
    assert all(s.involves_a3() for s in r.dying)
    assert not any(s.involves_a3() for s in r.surviving)


def test_survival_requires_depth():
    with pytest.raises(ValueError):
        survival_compare(3, 4)

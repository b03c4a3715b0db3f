import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primlat.core import classify
from primlat.valuation import (
    ValuationError,
    check_valuation,
    closed_ball,
    height_valuation,
    metric_from_valuation,
    open_ball,
)

from conftest import benzene, chain, powerset


def test_height_is_isotone_valuation_on_powerset():
    lat = powerset(3)
    chk = check_valuation(lat, height_valuation(lat))
    assert chk.is_valuation and chk.is_isotone


def test_height_fails_on_benzene_with_atom_witness():
    lat, _ = benzene()
    chk = check_valuation(lat, height_valuation(lat))
    assert not chk.is_valuation
    assert set(chk.witness) == {"p", "q"}
    # the two sides of the defining identity at the witness: 3 versus 2
    h = height_valuation(lat)
    assert h[lat.join("p", "q")] + h[lat.meet("p", "q")] == 3
    assert h["p"] + h["q"] == 2


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@given(st.lists(rationals, min_size=1, max_size=7))
def test_any_function_on_a_chain_is_a_valuation(values):
    # on a linear order one of x, y always realizes both join and meet
    lat = chain(len(values))
    mapping = dict(zip(lat.labels, values))
    assert check_valuation(lat, mapping).is_valuation


def test_seeded_chain_valuations():
    rng = random.Random(5)
    for k in (1, 2, 4, 6):
        lat = chain(k)
        values = {lab: Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for lab in lat.labels}
        assert check_valuation(lat, values).is_valuation


def test_metric_distances_on_powerset():
    lat = powerset(3)
    metric = metric_from_valuation(lat, height_valuation(lat))
    atom = 0b001
    assert metric.d(atom, 0b110) == 3  # an atom and its set complement
    assert metric.d(atom, atom) == 0
    assert metric.d(0, 7) == 3  # bottom to top equals the height


def test_closed_ball_examples():
    lat = powerset(3)
    metric = metric_from_valuation(lat, height_valuation(lat))
    atom = 0b001
    ball = set(closed_ball(metric, atom, 1))
    assert ball == {atom, 0, 0b011, 0b101}  # itself, bottom, both covers
    assert len(ball) == 4
    assert closed_ball(metric, atom, 0) == (atom,)
    assert set(closed_ball(metric, atom, 3)) == set(lat.labels)
    assert atom not in open_ball(metric, atom, Fraction(0))


def test_ball_radius_must_be_nonnegative():
    lat = powerset(2)
    metric = metric_from_valuation(lat, height_valuation(lat))
    with pytest.raises(ValuationError):
        closed_ball(metric, 0, -1)


def test_metric_requires_isotone_valuation():
    lat, _ = benzene()
    with pytest.raises(ValuationError, match="not a valuation"):
        metric_from_valuation(lat, height_valuation(lat))
    lat2 = chain(2)
    with pytest.raises(ValuationError, match="isotone"):
        metric_from_valuation(lat2, {"c0": 1, "c1": 0})


def test_height_valuation_characterizes_modularity(small_lattices):
    # height is a valuation exactly on the modular members; on those it is
    # isotone, and the induced metric's axioms are asserted on construction
    for lat in small_lattices:
        chk = check_valuation(lat, height_valuation(lat))
        modular = classify(lat).is_modular
        assert chk.is_valuation == modular
        if modular:
            assert chk.is_isotone
            metric_from_valuation(lat, height_valuation(lat))

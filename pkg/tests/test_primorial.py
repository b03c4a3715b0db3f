import itertools
import math

import pytest

from primlat.core import FiniteLattice, LatticeError, classify, is_isomorphic
from primlat.ortho import attach_ortho, find_orthocomplement
from primlat.primorial import (
    Level,
    boolean_carrier,
    chain_dposet_members,
    difference,
    dposet_check,
    generate_primorial,
    is_boolean_level_oracle,
    is_primorial,
    reduce_boolean,
    reduce_structural,
)
from primlat.primorial import _complement_pairs

from conftest import benzene, diamond


def test_reduce_counts():
    assert len(reduce_boolean(boolean_carrier(2))) == 1
    assert len(reduce_boolean(boolean_carrier(3))) == 3
    assert len(reduce_boolean(boolean_carrier(4))) == 10


def test_reduce_of_two_atom_carrier_is_bounds_only():
    (only,) = reduce_boolean(boolean_carrier(2))
    assert only.carrier == (0, 3)


def test_reduce_three_atom_carriers_keep_one_pair_each():
    carriers = [lvl.carrier for lvl in reduce_boolean(boolean_carrier(3))]
    assert carriers == [(0, 1, 6, 7), (0, 2, 5, 7), (0, 3, 4, 7)]


def test_reduce_candidate_census_n4():
    # 35 ways to choose the three pairs; only 10 induce a Boolean order
    top = boolean_carrier(4)
    pairs = _complement_pairs(top)
    assert math.comb(len(pairs), 3) == 35
    assert len(reduce_boolean(top)) == 10


def test_reduce_structural_split_n4():
    # of the 10: six are join/meet-closed partition levels, four keep three
    # singleton/co-singleton pairs
    closed = singleton_type = 0
    for lvl in reduce_boolean(boolean_carrier(4)):
        cs = lvl.carrier_set
        if all((a | b) in cs and (a & b) in cs for a in cs for b in cs):
            closed += 1
        else:
            atoms = [x for x in lvl.carrier if bin(x).count("1") == 1]
            assert len(atoms) == 3
            singleton_type += 1
    assert closed == 6 and singleton_type == 4


def test_reduce_agrees_with_structural_search():
    for n in (2, 3, 4, 5):
        brute = [lvl.carrier for lvl in reduce_boolean(boolean_carrier(n))]
        structural = [lvl.carrier for lvl in reduce_structural(boolean_carrier(n))]
        assert brute == structural


def test_reduce_members_verify_and_rejects_fail():
    top = boolean_carrier(4)
    accepted = {lvl.carrier for lvl in reduce_boolean(top)}
    pairs = _complement_pairs(top)
    for chosen in itertools.combinations(pairs, 3):
        carrier = tuple(sorted({0, 15} | {x for pair in chosen for x in pair}))
        verdict = is_boolean_level_oracle(carrier, 4)
        assert verdict == (carrier in accepted)
        if verdict:
            lvl = Level(None, 4, carrier, "boolean")
            rep = classify(lvl.lattice)
            assert rep.is_boolean
            attach_ortho(lvl.lattice, {x: 15 ^ x for x in carrier})


def test_rejected_selection_can_still_be_orthocomplemented():
    # singletons a, b plus a two-two pair that is not their join: the
    # selection stays complemented and involutive but the induced order is
    # not Boolean (it is not even distributive)
    w = 0b0101
    carrier = tuple(sorted({0, 15, 1, 14, 2, 13, w, 15 ^ w}))
    assert not is_boolean_level_oracle(carrier, 4)
    lvl = Level(None, 4, carrier, "difference")
    attach_ortho(lvl.lattice, {x: 15 ^ x for x in carrier})
    rep = classify(lvl.lattice)
    assert not rep.is_distributive and rep.is_complemented


def test_boolean_tests_agree_on_random_carriers():
    # the fast subset-bijection test and the generic induced-order oracle
    # must agree on arbitrary complement-closed carriers, accepted or not
    import random

    rng = random.Random(99)
    checked = 0
    while checked < 400:
        n = rng.choice([3, 4, 5])
        full = (1 << n) - 1
        pairs = [(x, full ^ x) for x in range(1, full) if x < full ^ x]
        chosen = rng.sample(pairs, rng.randint(0, len(pairs)))
        carrier = sorted({0, full} | {x for pair in chosen for x in pair})
        exp = len(carrier).bit_length() - 1
        if len(carrier) != 1 << exp:
            continue
        checked += 1
        from primlat.primorial import _induced_boolean

        assert _induced_boolean(carrier, exp) == is_boolean_level_oracle(carrier, n)


def test_reduce_needs_flag_above_exact_bound():
    with pytest.raises(LatticeError, match="best_effort"):
        reduce_boolean(boolean_carrier(6))


def test_reduce_best_effort_six_atoms():
    levels = reduce_boolean(boolean_carrier(6), best_effort=True)
    assert len(levels) == len({lvl.carrier for lvl in levels})
    for lvl in levels[::20]:
        assert is_boolean_level_oracle(lvl.carrier, 6)
    # 15 full five-block partitions of the six atoms, plus six choices of
    # unused atom times the 76 pairwise-intersecting edge families of K5
    assert len(levels) == 471
    with pytest.raises(LatticeError, match="unsupported"):
        reduce_boolean(boolean_carrier(7), best_effort=True)


def test_difference_of_powerset_levels_is_benzene():
    pl = generate_primorial(3)
    d3 = pl.diffs[3]
    lat, _ = benzene()
    assert is_isomorphic(d3.lattice, lat) is not None
    attach_ortho(d3.lattice, {x: d3.complement(x) for x in d3.carrier})


def test_difference_degenerate_cases():
    top2 = boolean_carrier(2)
    assert difference(top2, top2).carrier == (0, 3)
    l21 = Level(None, 2, (0, 3), "boolean")
    assert difference(top2, l21).carrier == (0, 1, 2, 3)


def test_difference_requires_shared_bounds():
    top2 = boolean_carrier(2)
    with pytest.raises(LatticeError, match="different top"):
        difference(top2, boolean_carrier(3))
    stray = Level(None, 2, (1, 3), "difference")
    with pytest.raises(LatticeError, match="sharing"):
        difference(top2, stray)


def test_generate_family_members():
    pl = generate_primorial(4)
    assert list(pl.members) == ["L2^1", "L2^2", "L2^3", "L2^4", "D3", "D4"]
    assert pl.diffs[2].carrier == pl.level("L2^2").carrier
    pl5 = generate_primorial(5)
    assert len(pl5.members) == 8


def test_generate_is_deterministic():
    a = generate_primorial(4)
    b = generate_primorial(4)
    assert [a.level(n).carrier for n in a.members] == [
        b.level(n).carrier for n in b.members
    ]


def test_generate_respects_choices_and_rejects_bad_ones():
    level8 = (0, 1, 8, 9, 6, 7, 14, 15)
    level4 = (0, 6, 9, 15)
    pl = generate_primorial(4, choices=[level8, level4])
    assert pl.level("L2^2").carrier == tuple(sorted(level4))
    with pytest.raises(LatticeError, match="invalid reduction choice"):
        generate_primorial(4, choices=[(0, 1, 2, 3, 4, 5, 6, 15), level4])
    with pytest.raises(LatticeError, match="not enough"):
        generate_primorial(4, choices=[level8])


def test_family_contains_pentagon_for_four_atoms():
    pl = generate_primorial(4)
    rep = classify(pl.family)
    assert not rep.is_modular
    witness = set(rep.n5_witness)
    assert {"L2^1", "L2^4"} <= witness


def test_family_flags_for_four_and_five_atoms():
    for n in (4, 5):
        fam = generate_primorial(n).family
        rep = classify(fam)
        assert not rep.is_modular
        assert not rep.is_distributive
        assert rep.complementation_class == "multiply"
        assert not rep.is_boolean
        assert find_orthocomplement(fam) is None


def test_degenerate_families_are_distributive():
    for n in (2, 3):
        rep = classify(generate_primorial(n).family)
        assert rep.is_distributive


def test_is_primorial_on_generated_families():
    for n in (2, 3, 4, 5):
        roles = is_primorial(generate_primorial(n).family)
        assert roles is not None
        assert roles.bottom == "L2^1"
        assert roles.y_chain[-1] == f"L2^{n}"
        if n == 2:
            assert roles.x_atoms == ()  # degenerate two-member chain


def test_is_primorial_rejects_diamond_and_chain():
    assert is_primorial(diamond()) is None
    three = FiniteLattice.from_covers(["0", "m", "1"], [("0", "m"), ("m", "1")])
    assert is_primorial(three) is None


def test_is_primorial_divisibility_example():
    labs = [1, 2, 3, 5, 7, 6, 30, 210]
    P = FiniteLattice.from_leq(labs, [(a, b) for a in labs for b in labs if b % a == 0])
    roles = is_primorial(P)
    assert roles is not None
    assert roles.bottom == 1
    assert roles.y_chain[-1] == 210


def test_dposet_chain_and_powerset():
    for n in (2, 3, 4, 5):
        members, diff, leq = chain_dposet_members(generate_primorial(n))
        assert dposet_check(members, diff, leq).ok
    univ = frozenset({1, 2, 3})
    ps = [frozenset(s) for r in range(4) for s in itertools.combinations(sorted(univ), r)]
    assert dposet_check(ps, lambda y, x: y - x, lambda a, b: a <= b).ok


def test_dposet_detects_broken_difference():
    members, _, leq = chain_dposet_members(generate_primorial(4))
    report = dposet_check(members, lambda y, x: y, leq)
    assert not report.ok
    assert "axiom-2" in report.failures


def test_every_difference_level_is_orthocomplemented(family5):
    for m, lvl in family5.diffs.items():
        attach_ortho(lvl.lattice, {x: lvl.complement(x) for x in lvl.carrier})

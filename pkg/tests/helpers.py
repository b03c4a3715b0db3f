"""Law predicates shared by the unit tests and the acceptance suite.

Each helper returns None when the law holds everywhere, or a witness tuple
naming the first failure; the callers assert on None so failures show the
counterexample.
"""

import itertools

from primlat.core import FiniteLattice, classify


def _idx(lat):
    return range(lat.n)


def lattice_laws(lat: FiniteLattice):
    """Idempotent, commutative, associative, absorptive, both operations."""
    for x in _idx(lat):
        if lat.join_i(x, x) != x or lat.meet_i(x, x) != x:
            return ("idempotent", lat.labels[x])
        for y in _idx(lat):
            if lat.join_i(x, y) != lat.join_i(y, x):
                return ("commutative-join", lat.labels[x], lat.labels[y])
            if lat.meet_i(x, y) != lat.meet_i(y, x):
                return ("commutative-meet", lat.labels[x], lat.labels[y])
            if lat.join_i(x, lat.meet_i(x, y)) != x:
                return ("absorptive-join", lat.labels[x], lat.labels[y])
            if lat.meet_i(x, lat.join_i(x, y)) != x:
                return ("absorptive-meet", lat.labels[x], lat.labels[y])
            for z in _idx(lat):
                if lat.join_i(lat.join_i(x, y), z) != lat.join_i(x, lat.join_i(y, z)):
                    return ("associative-join", lat.labels[x], lat.labels[y], lat.labels[z])
                if lat.meet_i(lat.meet_i(x, y), z) != lat.meet_i(x, lat.meet_i(y, z)):
                    return ("associative-meet", lat.labels[x], lat.labels[y], lat.labels[z])
    return None


def modular_two_identity(lat: FiniteLattice) -> bool:
    """The two-identity axiomatization of modular lattices.

    On something already known to be a lattice the second identity is
    automatic; together they hold iff the lattice is modular.
    """
    for x in _idx(lat):
        for y in _idx(lat):
            for z in _idx(lat):
                lhs = lat.join_i(lat.meet_i(x, y), lat.meet_i(x, z))
                rhs = lat.meet_i(lat.join_i(lat.meet_i(z, x), y), x)
                if lhs != rhs:
                    return False
                if lat.meet_i(lat.join_i(x, lat.join_i(y, z)), z) != z:
                    return False
    return True


def monotony(lat: FiniteLattice):
    for a in _idx(lat):
        for b in _idx(lat):
            if not lat.leq_i(a, b):
                continue
            for x in _idx(lat):
                for y in _idx(lat):
                    if not lat.leq_i(x, y):
                        continue
                    if not lat.leq_i(lat.meet_i(a, x), lat.meet_i(b, y)):
                        return ("meet", a, b, x, y)
                    if not lat.leq_i(lat.join_i(a, x), lat.join_i(b, y)):
                        return ("join", a, b, x, y)
    return None


def minimax(lat: FiniteLattice, rows, cols, samples):
    """maxmini <= minimax over element grids of the given shape."""
    for grid in samples:
        maxmini = lat.join_all_i(
            [lat.meet_all_i([grid[i][j] for j in range(cols)]) for i in range(rows)]
        )
        minimax_ = lat.meet_all_i(
            [lat.join_all_i([grid[i][j] for i in range(rows)]) for j in range(cols)]
        )
        if not lat.leq_i(maxmini, minimax_):
            return grid
    return None


def distributive_inequalities(lat: FiniteLattice):
    for x in _idx(lat):
        for y in _idx(lat):
            for z in _idx(lat):
                if not lat.leq_i(
                    lat.join_i(lat.meet_i(x, y), lat.meet_i(x, z)),
                    lat.meet_i(x, lat.join_i(y, z)),
                ):
                    return ("join-super", x, y, z)
                if not lat.leq_i(
                    lat.join_i(x, lat.meet_i(y, z)),
                    lat.meet_i(lat.join_i(x, y), lat.join_i(x, z)),
                ):
                    return ("meet-sub", x, y, z)
                lhs = lat.join_all_i(
                    [lat.meet_i(x, y), lat.meet_i(x, z), lat.meet_i(y, z)]
                )
                rhs = lat.meet_all_i(
                    [lat.join_i(x, y), lat.join_i(x, z), lat.join_i(y, z)]
                )
                if not lat.leq_i(lhs, rhs):
                    return ("median", x, y, z)
    return None


def modular_inequality(lat: FiniteLattice):
    for x in _idx(lat):
        for y in _idx(lat):
            if not lat.leq_i(x, y):
                continue
            for z in _idx(lat):
                if not lat.leq_i(
                    lat.join_i(x, lat.meet_i(y, z)), lat.meet_i(y, lat.join_i(x, z))
                ):
                    return (x, y, z)
    return None


def distributivity_equivalents(lat: FiniteLattice):
    """(disjunctive, conjunctive, median) forms each hold on all triples."""
    disjunctive = conjunctive = median = True
    for x in _idx(lat):
        for y in _idx(lat):
            for z in _idx(lat):
                if lat.meet_i(x, lat.join_i(y, z)) != lat.join_i(
                    lat.meet_i(x, y), lat.meet_i(x, z)
                ):
                    disjunctive = False
                if lat.join_i(x, lat.meet_i(y, z)) != lat.meet_i(
                    lat.join_i(x, y), lat.join_i(x, z)
                ):
                    conjunctive = False
                if lat.meet_all_i(
                    [lat.join_i(x, y), lat.join_i(x, z), lat.join_i(y, z)]
                ) != lat.join_all_i(
                    [lat.meet_i(x, y), lat.meet_i(x, z), lat.meet_i(y, z)]
                ):
                    median = False
    return disjunctive, conjunctive, median


def bound_identities(lat: FiniteLattice):
    t, b = lat.top_i, lat.bottom_i
    for x in _idx(lat):
        if lat.join_i(x, t) != t or lat.meet_i(x, b) != b:
            return ("bounds", lat.labels[x])
        if lat.join_i(x, b) != x or lat.meet_i(x, t) != x:
            return ("identity", lat.labels[x])
    return None


def distributive_cancellation(lat: FiniteLattice):
    """x∨a == x∨b and x∧a == x∧b force a == b on distributive lattices."""
    for x in _idx(lat):
        for a in _idx(lat):
            for b in _idx(lat):
                if (
                    lat.join_i(x, a) == lat.join_i(x, b)
                    and lat.meet_i(x, a) == lat.meet_i(x, b)
                    and a != b
                ):
                    return (x, a, b)
    return None


def complement_selections(lat: FiniteLattice, report=None):
    """Every total complement-choice function, as index tuples."""
    rep = report or classify(lat)
    per_element = []
    for lab in lat.labels:
        comps = [lat.index(c) for c in rep.complements_of[lab]]
        if not comps:
            return
        per_element.append(comps)
    yield from itertools.product(*per_element)


def classic_ten_hold(lat: FiniteLattice, comp) -> bool:
    """The ten Boolean identity pairs under a fixed complement selection."""
    t, b = lat.top_i, lat.bottom_i
    if lattice_laws(lat) is not None or bound_identities(lat) is not None:
        return False
    for x in _idx(lat):
        if lat.join_i(x, comp[x]) != t or lat.meet_i(x, comp[x]) != b:
            return False
        if comp[comp[x]] != x:
            return False
        for y in _idx(lat):
            if comp[lat.join_i(x, y)] != lat.meet_i(comp[x], comp[y]):
                return False
            if comp[lat.meet_i(x, y)] != lat.join_i(comp[x], comp[y]):
                return False
            for z in _idx(lat):
                if lat.join_i(x, lat.meet_i(y, z)) != lat.meet_i(
                    lat.join_i(x, y), lat.join_i(x, z)
                ):
                    return False
                if lat.meet_i(x, lat.join_i(y, z)) != lat.join_i(
                    lat.meet_i(x, y), lat.meet_i(x, z)
                ):
                    return False
    return True


def huntington_fourth_holds(lat: FiniteLattice, comp) -> bool:
    """Idempotent/commutative/associative joins plus Huntington's identity."""
    for x in _idx(lat):
        if lat.join_i(x, x) != x:
            return False
        for y in _idx(lat):
            if lat.join_i(x, y) != lat.join_i(y, x):
                return False
            lhs = lat.join_i(
                comp[lat.join_i(comp[x], comp[y])], comp[lat.join_i(comp[x], y)]
            )
            if lhs != x:
                return False
            for z in _idx(lat):
                if lat.join_i(lat.join_i(x, y), z) != lat.join_i(x, lat.join_i(y, z)):
                    return False
    return True


def commutes_pairs(lat: FiniteLattice, perm):
    out = set()
    for i in _idx(lat):
        for j in _idx(lat):
            if lat.join_i(lat.meet_i(i, j), lat.meet_i(i, perm[j])) == i:
                out.add((i, j))
    return out


def orthomodular_forms(lat: FiniteLattice, perm):
    """The equivalent characterizations: symmetry of commutes, the
    orthomodular identity, the Sasaki fixed-point form, and the two
    unconditional identities."""
    comm = commutes_pairs(lat, perm)
    symmetric = all((j, i) in comm for i, j in comm)
    om_identity = all(
        lat.join_i(i, lat.meet_i(perm[i], j)) == j
        for i in _idx(lat)
        for j in _idx(lat)
        if lat.leq_i(i, j)
    )
    sasaki_form = all(
        lat.meet_i(j, lat.join_i(i, perm[j])) == i
        for i in _idx(lat)
        for j in _idx(lat)
        if lat.leq_i(i, j)
    )
    form4 = all(
        lat.join_i(lat.meet_i(i, j), lat.meet_i(j, perm[lat.meet_i(i, j)])) == j
        for i in _idx(lat)
        for j in _idx(lat)
    )
    form5 = all(
        lat.meet_i(lat.join_i(i, j), lat.join_i(i, perm[lat.join_i(i, j)])) == i
        for i in _idx(lat)
        for j in _idx(lat)
    )
    return symmetric, om_identity, sasaki_form, form4, form5


def elkan_law(lat: FiniteLattice, perm) -> bool:
    return all(
        perm[lat.meet_i(x, perm[y])] == lat.join_i(y, lat.meet_i(perm[x], perm[y]))
        for x in _idx(lat)
        for y in _idx(lat)
    )

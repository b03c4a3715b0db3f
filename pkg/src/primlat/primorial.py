"""Boolean-lattice reduction, bounded-lattice difference, and the family
lattice the two generate.

Every level lives inside one top Boolean carrier: elements are subsets of
{1..N} encoded as machine-word bitmasks, the order is always mask inclusion
restricted to the level's carrier, and complement pairs are always top-level
set complements (reduction preserves this at every depth, since a Boolean
level's unique complementation must consist of parent pairs).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .core import FiniteLattice, LatticeError
from .ortho import attach_ortho

EXACT_REDUCE_BOUND = 5  # brute force over pair subsets up to 2^5-element levels
BEST_EFFORT_REDUCE_BOUND = 6


class Level:
    """One member lattice of a family, embedded in a top Boolean carrier."""

    def __init__(self, name, top_n, carrier, kind):
        self.name = name
        self.top_n = top_n
        self.full = (1 << top_n) - 1
        self.carrier = tuple(sorted(carrier))
        self.carrier_set = frozenset(self.carrier)
        self.kind = kind  # "boolean" | "difference"

    @property
    def is_boolean(self):
        return self.kind == "boolean"

    @cached_property
    def lattice(self) -> FiniteLattice:
        rows = []
        for x in self.carrier:
            row = 0
            for j, y in enumerate(self.carrier):
                if x & ~y == 0:
                    row |= 1 << j
            rows.append(row)
        return FiniteLattice(self.carrier, rows)

    def complement(self, mask):
        return self.full ^ mask

    def renamed(self, name):
        lvl = Level(name, self.top_n, self.carrier, self.kind)
        lvl.__dict__["lattice"] = self.lattice  # share the induced tables
        return lvl

    def __repr__(self):
        return f"Level({self.name!r}, n={self.top_n}, size={len(self.carrier)})"

    def __eq__(self, other):
        return (
            isinstance(other, Level)
            and self.top_n == other.top_n
            and self.carrier == other.carrier
        )

    def __hash__(self):
        return hash((self.top_n, self.carrier))


def boolean_carrier(n: int) -> Level:
    """The full 2^n-element Boolean level on atoms {1..n}."""
    if n < 0:
        raise LatticeError("atom count must be non-negative")
    return Level(f"L2^{n}", n, range(1 << n), "boolean")


# ---------------------------------------------------------------------------
# reduction


def _atoms_of_carrier(carrier):
    """Minimal nonzero masks; carrier must be ascending and start with 0."""
    nonzero = carrier[1:]
    atoms = []
    for i, x in enumerate(nonzero):
        minimal = True
        for y in nonzero[:i]:  # subsets are numerically smaller
            if y & x == y:
                minimal = False
                break
        if minimal:
            atoms.append(x)
    return atoms


def _induced_boolean(carrier, size_exp):
    """Whether the carrier's induced inclusion order is Boolean of 2^size_exp.

    Implements the subset-of-atoms bijection test: the level must have
    exactly size_exp atoms, every atom set must have a least carrier
    superset, atoms must lie below a join exactly when selected, and the
    join map must be injective.  These conditions are equivalent to the
    induced order being a Boolean lattice of the right size.
    """
    atoms = _atoms_of_carrier(carrier)
    if len(atoms) != size_exp:
        return False
    seen = set()
    unions = [0] * (1 << size_exp)
    for s in range(1 << size_exp):
        u = 0
        if s:
            low = s & -s
            u = unions[s ^ low] | atoms[low.bit_length() - 1]
        unions[s] = u
        best = None
        for c in carrier:
            if u & ~c == 0:
                if best is None or bin(c).count("1") < bin(best).count("1"):
                    best = c
        if best is None:
            return False
        for c in carrier:
            if u & ~c == 0 and best & ~c != 0:
                return False  # upper bounds have no least element
        for k, a in enumerate(atoms):
            if (a & ~best == 0) != bool(s >> k & 1):
                return False
        if best in seen:
            return False
        seen.add(best)
    return True


def _check_reducible(level: Level):
    size = len(level.carrier)
    m = size.bit_length() - 1
    if size != 1 << m or not level.is_boolean or m < 2:
        raise LatticeError("reduction needs a Boolean level with at least 4 elements")
    return m


def _complement_pairs(level: Level):
    pairs = []
    for x in level.carrier:
        y = level.complement(x)
        if x < y and x != 0:
            pairs.append((x, y))
    return pairs


def reduce_boolean(level: Level, best_effort: bool = False):
    """All half-size Boolean sub-levels preserving bounds and complement pairs.

    Candidates are the unions of {0, 1} with 2^(m-2) - 1 complement pairs
    (complement closure is forced by unique complementation); each candidate
    is kept iff its induced order is Boolean.  Exact brute force runs up to
    2^5-element levels; 2^6 uses the structural search behind the
    best-effort flag.
    """
    m = _check_reducible(level)
    if m > EXACT_REDUCE_BOUND:
        if not best_effort:
            raise LatticeError(
                f"reduction of a 2^{m} level needs best_effort=True (exact bound is 2^{EXACT_REDUCE_BOUND})"
            )
        if m > BEST_EFFORT_REDUCE_BOUND:
            raise LatticeError(f"reduction beyond 2^{BEST_EFFORT_REDUCE_BOUND} unsupported")
        return reduce_structural(level)
    pairs = _complement_pairs(level)
    want = (1 << (m - 2)) - 1
    accepted = []
    for chosen in itertools.combinations(pairs, want):
        carrier = [0, level.full]
        for x, y in chosen:
            carrier.append(x)
            carrier.append(y)
        carrier.sort()
        if _induced_boolean(carrier, m - 1):
            accepted.append(tuple(carrier))
    accepted.sort()
    return tuple(Level(None, level.top_n, c, "boolean") for c in accepted)


def reduce_structural(level: Level):
    """Reduction via the structure of accepted levels.

    Any accepted level has pairwise-disjoint atoms (a consequence of
    complement closure), and is the image of its subset-of-atoms join map;
    joins of complementary atom sets are top-level complements.  The search
    picks the atom family, then assigns the join of each atom subset from
    the viable carrier elements, orbit by orbit, checking monotonicity.
    Results are re-verified with the induced-order test before acceptance.
    """
    m = _check_reducible(level)
    if m == 2:  # the half-size level is {0, 1}; its only atom is the top
        return (Level(None, level.top_n, (0, level.full), "boolean"),)
    k = m - 1
    carrier = level.carrier
    elements = [x for x in carrier if x != 0 and x != level.full]

    accepted = []

    def pick_atoms(start, acc, used_mask):
        if len(acc) == k:
            assign_joins(tuple(acc))
            return
        for i in range(start, len(elements)):
            x = elements[i]
            if x & used_mask == 0:
                acc.append(x)
                pick_atoms(i + 1, acc, used_mask | x)
                acc.pop()

    def assign_joins(atoms):
        subsets = list(range(1 << k))
        union = [0] * (1 << k)
        for s in subsets:
            if s:
                low = s & -s
                union[s] = union[s ^ low] | atoms[low.bit_length() - 1]
        fullset = (1 << k) - 1
        j = {0: 0, fullset: level.full}
        for i in range(k):
            j[1 << i] = atoms[i]
            j[fullset ^ (1 << i)] = level.complement(atoms[i])
            if j[fullset ^ (1 << i)] not in level.carrier_set:
                return
        reps = [
            s
            for s in subsets
            if 2 <= bin(s).count("1") <= k - 2 and (bin(s).count("1") * 2 < k or (bin(s).count("1") * 2 == k and s & 1))
        ]
        reps.sort(key=lambda s: bin(s).count("1"))

        def viable(s):
            out = []
            blocked = union[fullset ^ s]
            for c in carrier:
                if union[s] & ~c == 0 and c & blocked == 0 and c != 0 and c != level.full:
                    out.append(c)
            return out

        def monotone_ok(s, value):
            for t, v in j.items():
                if t == s:
                    continue
                if t & s == t and v & ~value != 0:
                    return False
                if t & s == s and value & ~v != 0:
                    return False
            return True

        def rec(idx):
            if idx == len(reps):
                values = set(j.values())
                if len(values) != 1 << k:
                    return
                cand = tuple(sorted(values))
                if _induced_boolean(cand, k):
                    accepted.append(cand)
                return
            s = reps[idx]
            mirror = fullset ^ s
            for c in viable(s):
                cm = level.complement(c)
                if cm not in level.carrier_set:
                    continue
                if not monotone_ok(s, c) or not monotone_ok(mirror, cm):
                    continue
                j[s] = c
                j[mirror] = cm
                rec(idx + 1)
                del j[s], j[mirror]

        rec(0)

    pick_atoms(0, [], 0)
    uniq = sorted(set(accepted))
    return tuple(Level(None, level.top_n, c, "boolean") for c in uniq)


def is_boolean_level_oracle(carrier, top_n) -> bool:
    """Generic induced-order oracle: tables plus bounded/complemented/distributive.

    Independent of the subset-bijection test in `_induced_boolean`; used to
    cross-check reduction results the long way.
    """
    from .core import FinitePoset

    masks = tuple(sorted(carrier))
    n = len(masks)
    rows = []
    for x in masks:
        row = 0
        for jj, y in enumerate(masks):
            if x & ~y == 0:
                row |= 1 << jj
        rows.append(row)
    p = FinitePoset(masks, rows)
    join, meet, witness = p.lattice_tables()
    if witness is not None:
        return False
    bot = masks.index(min(masks))
    top = masks.index(max(masks))
    if rows[bot] != (1 << n) - 1 or p.geq_rows[top] != (1 << n) - 1:
        return False
    for i in range(n):
        if not any(meet[i][jj] == bot and join[i][jj] == top for jj in range(n)):
            return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return False
    return True


# ---------------------------------------------------------------------------
# bounded lattice difference


def difference(lx: Level, ly: Level) -> Level:
    """Carrier set difference with the shared bounds restored.

    When both inputs are Boolean chain levels with ly inside lx, the result
    is verified to be orthocomplemented under the inherited complement
    pairs.
    """
    if lx.top_n != ly.top_n:
        raise LatticeError("levels live in different top carriers")
    for lvl in (lx, ly):
        if 0 not in lvl.carrier_set or lvl.full not in lvl.carrier_set:
            raise LatticeError("difference requires carriers sharing 0 and 1")
    carrier = (lx.carrier_set - ly.carrier_set) | {0, lx.full}
    out = Level(None, lx.top_n, carrier, "difference")
    if lx.is_boolean and ly.is_boolean and ly.carrier_set <= lx.carrier_set:
        lat = out.lattice
        attach_ortho(lat, {x: out.complement(x) for x in out.carrier})
    return out


# ---------------------------------------------------------------------------
# family assembly


@dataclass(frozen=True)
class PrimorialLattice:
    """Chain of Boolean levels plus their difference levels, ordered by
    carrier inclusion."""

    top_n: int
    chain: tuple  # Level, ascending L2^1 .. L2^N
    diffs: dict  # n -> Level for n = 2..N
    members: dict  # distinct member name -> Level
    family: FiniteLattice  # labels are member names

    def level(self, name) -> Level:
        if name in self.members:
            return self.members[name]
        if name == "D2":  # same carrier as L2^2
            return self.diffs[2]
        raise LatticeError(f"unknown family member {name!r}")

    def member_names(self):
        return tuple(self.members)


def _family_lattice(named_levels):
    names = [name for name, _ in named_levels]
    rows = []
    for _, lvl in named_levels:
        row = 0
        for j, (_, other) in enumerate(named_levels):
            if lvl.carrier_set <= other.carrier_set:
                row |= 1 << j
        rows.append(row)
    return FiniteLattice(tuple(names), rows)


def generate_primorial(n: int, choices=None, best_effort: bool = False) -> PrimorialLattice:
    """Build the family generated by the 2^n Boolean carrier.

    ``choices`` optionally fixes the reduction taken at each step, as a
    sequence of carriers (mask collections) for the levels below the top:
    first the 2^(n-1) level, then 2^(n-2), and so on down to 2^2.  The
    default picks the lexicographically least carrier at every step.
    Both family invariants are asserted: every difference level is
    orthocomplemented under inherited pairs, and the family order has the
    generated-chain shape.
    """
    if n < 2:
        raise LatticeError("generation needs at least 2 atoms")
    top = boolean_carrier(n)
    chain = [top.renamed(f"L2^{n}")]
    wanted = list(choices) if choices is not None else None
    step = 0
    for m in range(n, 1, -1):
        options = reduce_boolean(chain[-1], best_effort=best_effort)
        if m > 2 and wanted is not None:
            if step >= len(wanted):
                raise LatticeError("not enough reduction choices supplied")
            pick = tuple(sorted(wanted[step]))
            step += 1
            match = [lvl for lvl in options if lvl.carrier == pick]
            if not match:
                raise LatticeError(f"invalid reduction choice {pick!r}")
            nxt = match[0]
        else:
            nxt = options[0]
        chain.append(nxt.renamed(f"L2^{m - 1}"))
    if wanted is not None and step != len(wanted):
        raise LatticeError("too many reduction choices supplied")
    chain.reverse()  # ascending L2^1 .. L2^n

    diffs = {}
    for m in range(2, n + 1):
        diffs[m] = difference(chain[m - 1], chain[m - 2]).renamed(f"D{m}")

    members = {lvl.name: lvl for lvl in chain}
    for m in range(3, n + 1):
        members[diffs[m].name] = diffs[m]
    if n == 2:
        assert diffs[2].carrier == chain[1].carrier
    family = _family_lattice(list(members.items()))

    pl = PrimorialLattice(n, tuple(chain), diffs, members, family)
    _assert_family_shape(pl)
    return pl


def _assert_family_shape(pl: PrimorialLattice):
    fam = pl.family
    assert fam.bottom == "L2^1"
    atoms = set(fam.labels[i] for i in fam.atoms_i)
    expected = {"L2^2"} | {f"D{m}" for m in range(3, pl.top_n + 1)}
    if pl.top_n == 2:
        expected = {"L2^2"}
    assert atoms == expected, f"family atoms {atoms} != {expected}"
    for m in range(2, pl.top_n):
        assert fam.join(f"L2^{m}", f"D{m + 1}") == f"L2^{m + 1}"
    roles = is_primorial(fam)
    assert roles is not None, "generated family must have the chain shape"


# ---------------------------------------------------------------------------
# recognition


@dataclass(frozen=True)
class PrimorialRoles:
    bottom: object
    y_chain: tuple  # y0 <= y1 <= ... (strictly increasing joins)
    x_atoms: tuple  # x0, x1, ... joined in order


def is_primorial(lat: FiniteLattice):
    """Role assignment making the lattice a generated chain, or None.

    Roles must be pairwise distinct: bottom, the atom y0, the remaining
    atoms x0..xK in some order, and the join chain y_{i+1} = y_i ∨ x_i,
    together covering the carrier exactly.
    """
    if lat.n == 0:
        return None
    atoms = list(lat.atoms_i)
    if not atoms:
        return None
    if len(atoms) == 1:
        if lat.n == 2:
            return PrimorialRoles(lat.bottom, (lat.labels[atoms[0]],), ())
        return None
    if lat.n != 2 * len(atoms):
        return None
    for y0 in atoms:
        rest = [a for a in atoms if a != y0]
        for xs in itertools.permutations(rest):
            seen = {lat.bottom_i, y0, *xs}
            chain = [y0]
            ok = True
            for x in xs:
                nxt = lat.join_i(chain[-1], x)
                if nxt in seen:
                    ok = False
                    break
                seen.add(nxt)
                chain.append(nxt)
            if ok and len(seen) == lat.n:
                return PrimorialRoles(
                    lat.bottom,
                    tuple(lat.labels[i] for i in chain),
                    tuple(lat.labels[i] for i in xs),
                )
    return None


# ---------------------------------------------------------------------------
# D-poset verification


@dataclass(frozen=True)
class DPosetReport:
    ok: bool
    failures: dict  # law name -> first witness tuple

    def __bool__(self):
        return self.ok


def dposet_check(members, diff, leq) -> DPosetReport:
    """Verify the difference axioms and their derived laws on a family.

    ``diff(y, x)`` must be defined whenever ``leq(x, y)``; the report names
    the first witness per failing law.
    """
    ms = list(members)
    failures = {}

    def record(law, witness):
        failures.setdefault(law, witness)

    for x in ms:
        for y in ms:
            if not leq(x, y):
                continue
            d = diff(y, x)
            if not leq(d, y):
                record("axiom-1", (x, y))
            if not leq(d, y) or diff(y, d) != x:
                record("axiom-2", (x, y))
    for x in ms:
        for y in ms:
            if not leq(x, y):
                continue
            for z in ms:
                if not leq(y, z):
                    continue
                zy, zx, yx = diff(z, y), diff(z, x), diff(y, x)
                if not leq(zy, zx):
                    record("axiom-3", (x, y, z))
                    continue
                if diff(zx, zy) != yx:
                    record("axiom-4", (x, y, z))
                if not leq(yx, zx):
                    record("derived-1", (x, y, z))
                if not (leq(yx, z) and leq(x, diff(z, yx))):
                    record("derived-2", (x, y, z))
                if leq(yx, zx):
                    if diff(zx, yx) != zy:
                        record("derived-3", (x, y, z))
                else:
                    record("derived-3", (x, y, z))
                if leq(yx, z) and leq(x, diff(z, yx)):
                    if diff(diff(z, yx), x) != zy:
                        record("derived-4", (x, y, z))
                else:
                    record("derived-4", (x, y, z))
    return DPosetReport(not failures, failures)


def chain_dposet_members(pl: PrimorialLattice):
    """The Boolean chain as carrier sets, with the difference operation."""
    members = [frozenset(lvl.carrier) for lvl in pl.chain]
    full = pl.chain[-1].full

    def diff(y, x):
        return frozenset((y - x) | {0, full})

    def leq(x, y):
        return x <= y

    return members, diff, leq

"""Symbolic sequence analysis over a family of levels.

Symbols map bijectively onto the atoms of the top Boolean carrier; a
sequence is then projected pointwise onto every lower-resolution level and
every difference level, giving a pyramid of coarser views.  Synthesis is
the pointwise join back in the top lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LatticeError
from .primorial import PrimorialLattice, generate_primorial
from .projection import METHODS, project_sequence
from .textio import format_mask


class SequenceError(LatticeError):
    pass


@dataclass(frozen=True)
class SymbolAlphabet:
    """Ordered symbols encoded as the atoms of a 2^N carrier."""

    symbols: tuple

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise SequenceError("alphabet symbols must be distinct")

    @property
    def top_n(self):
        return len(self.symbols)

    def atom(self, symbol) -> int:
        try:
            return 1 << self.symbols.index(symbol)
        except ValueError:
            raise SequenceError(f"symbol {symbol!r} not in alphabet") from None

    def render(self, mask: int) -> str:
        """Element as a brace set of symbol names, e.g. {A,T}."""
        names = [s for i, s in enumerate(self.symbols) if mask >> i & 1]
        return "{" + ",".join(names) + "}"


@dataclass(frozen=True)
class SymbolSequence:
    items: tuple  # top-carrier masks
    name: str | None = None

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@dataclass(frozen=True)
class AnalysisPyramid:
    method: str
    source: SymbolSequence
    levels: dict  # member name -> SymbolSequence

    def __post_init__(self):
        for seq in self.levels.values():
            assert len(seq) == len(self.source), "projection must preserve length"


def encode(alphabet: SymbolAlphabet, tokens, name=None) -> SymbolSequence:
    return SymbolSequence(tuple(alphabet.atom(t) for t in tokens), name)


def load_fasta(stream, alphabet: SymbolAlphabet):
    """Parse FASTA records into (name, token tuple) pairs.

    Sequence lines are folded together per record; whitespace is ignored
    and case does not matter.  A character outside the alphabet raises with
    its record and 1-based position.
    """
    folded = {s.upper(): s for s in alphabet.symbols}
    if len(folded) != len(alphabet.symbols):
        raise SequenceError("alphabet symbols collide under case folding")
    records = []
    current = None
    for raw in stream:
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith(">"):
            current = [line[1:].strip(), []]
            records.append(current)
            continue
        if current is None:
            raise SequenceError("sequence data before the first FASTA header")
        for ch in line:
            if ch.isspace():
                continue
            sym = folded.get(ch.upper())
            if sym is None:
                pos = len(current[1]) + 1
                raise SequenceError(
                    f"record {current[0]!r} position {pos}: symbol {ch!r} outside alphabet"
                )
            current[1].append(sym)
    if not records:
        raise SequenceError("empty input: no FASTA records found")
    return [(name, tuple(tokens)) for name, tokens in records]


def analyze(
    pl: PrimorialLattice, alphabet: SymbolAlphabet, tokens, method: str
) -> AnalysisPyramid:
    """Encode and project onto every resolution and frequency level."""
    if method not in METHODS:
        raise SequenceError(f"unknown method {method!r}")
    if alphabet.top_n != pl.top_n:
        raise SequenceError(
            f"alphabet has {alphabet.top_n} symbols but the family was generated from {pl.top_n}"
        )
    source = encode(alphabet, tokens)
    levels = {}
    for name in [lvl.name for lvl in pl.chain] + [f"D{m}" for m in range(2, pl.top_n + 1)]:
        levels[name] = SymbolSequence(
            project_sequence(pl, name, source.items, method), name
        )
    return AnalysisPyramid(method, source, levels)


def synthesize(*seqs: SymbolSequence) -> SymbolSequence:
    """Pointwise join in the top lattice (bitwise union of atom sets)."""
    if not seqs:
        raise SequenceError("nothing to synthesize")
    length = len(seqs[0])
    for s in seqs:
        if len(s) != length:
            raise SequenceError("length mismatch in synthesis")
    items = tuple(
        _or_all(s.items[k] for s in seqs) for k in range(length)
    )
    return SymbolSequence(items)


def _or_all(masks):
    acc = 0
    for m in masks:
        acc |= m
    return acc


def pyramid_rows(pyramid: AnalysisPyramid, alphabet: SymbolAlphabet | None = None):
    """TSV-ready rows: position, input element, one column per level."""
    render = alphabet.render if alphabet else format_mask
    names = list(pyramid.levels)
    yield ["position", "input"] + names
    for k, x in enumerate(pyramid.source.items):
        yield [str(k), render(x)] + [render(pyramid.levels[n].items[k]) for n in names]


def summarize(
    pyramid: AnalysisPyramid,
    alphabet: SymbolAlphabet,
    coarse_atoms=(),
    window: int | None = None,
):
    """Per-level histograms plus content fractions of the coarse atoms.

    ``coarse_atoms`` are masks tracked at the 4-element level (the preset's
    A∨T / C∨G pair); ``window`` additionally emits per-window fractions.
    """
    lines = [f"length: {len(pyramid.source)}", f"method: {pyramid.method}"]
    for name, seq in pyramid.levels.items():
        counts = {}
        for x in seq.items:
            counts[x] = counts.get(x, 0) + 1
        shown = " ".join(
            f"{alphabet.render(x)}={c}" for x, c in sorted(counts.items())
        )
        lines.append(f"level {name}: {shown}")
    if coarse_atoms and "L2^2" in pyramid.levels:
        seq = pyramid.levels["L2^2"].items
        total = len(seq) or 1
        for mask in coarse_atoms:
            frac = sum(1 for x in seq if x == mask) / total
            lines.append(f"{alphabet.render(mask)} fraction: {frac:.4f}")
        if window:
            for start in range(0, len(seq), window):
                chunk = seq[start : start + window]
                parts = []
                for mask in coarse_atoms:
                    frac = sum(1 for x in chunk if x == mask) / (len(chunk) or 1)
                    parts.append(f"{alphabet.render(mask)}={frac:.4f}")
                lines.append(f"window [{start},{start + len(chunk)}): " + " ".join(parts))
    return lines


# gsp presets -----------------------------------------------------------------


@dataclass(frozen=True)
class GspPreset:
    alphabet: SymbolAlphabet
    primorial: PrimorialLattice
    coarse_atoms: tuple  # masks of the 2^2-level middle pair

    def describe(self):
        """The fixed reduction chain, one audit line per member."""
        lines = [f"alphabet: {' '.join(self.alphabet.symbols)}"]
        for name in self.primorial.member_names():
            carrier = self.primorial.level(name).carrier
            rendered = " ".join(self.alphabet.render(m) for m in carrier)
            lines.append(f"member {name}: {rendered}")
        return lines


PRESETS = ("acgt-atcg", "acgt-plus-x")


def gsp_preset(kind: str) -> GspPreset:
    """Fixed alphabets and reduction chains for nucleobase work.

    ``acgt-atcg``: four symbols with the 4-element level carrying A∨T and
    C∨G, so weak/strong base pairing is one projection away.
    ``acgt-plus-x``: a fifth symbol X that the first reduction removes; the
    16-element level keeps the four nucleobase atoms and lower levels fold
    X into the C∨G branch.
    """
    if kind == "acgt-atcg":
        alphabet = SymbolAlphabet(("A", "C", "G", "T"))
        a, c, g, t = (alphabet.atom(s) for s in "ACGT")
        at, cg = a | t, c | g
        full = 15
        level8 = (0, a, t, cg, at, a | cg, t | cg, full)
        level4 = (0, at, cg, full)
        pl = generate_primorial(4, choices=[level8, level4])
        return GspPreset(alphabet, pl, (at, cg))
    if kind == "acgt-plus-x":
        alphabet = SymbolAlphabet(("A", "C", "G", "T", "X"))
        a, c, g, t, x = (alphabet.atom(s) for s in "ACGTX")
        full = 31
        level16 = tuple(
            sorted(
                {0, full}
                | {a, c, g, t}
                | {full ^ a, full ^ c, full ^ g, full ^ t}
                | {a | c, a | g, a | t}
                | {full ^ (a | c), full ^ (a | g), full ^ (a | t)}
            )
        )
        at, cgx = a | t, c | g | x
        level8 = (0, a, t, cgx, at, a | cgx, t | cgx, full)
        level4 = (0, at, cgx, full)
        pl = generate_primorial(5, choices=[level16, level8, level4])
        return GspPreset(alphabet, pl, (at, cgx))
    raise SequenceError(f"unknown preset {kind!r}")

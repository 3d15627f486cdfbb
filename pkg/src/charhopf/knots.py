"""Braid words, oriented crossings, cups and caps, and the knot invariant.

Strand positions are numbered 1..m left to right and diagrams are read top
to bottom.  The letter ``i`` (sign +1) is the crossing c^π on positions
(i, i+1); ``-i`` is its inverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Dict, List, Tuple

from .partitions import Partition, partitions_upto
from .pideform import PiContext, q_power, r_kernel, r_kernel_inverse
from .schur import skew
from .symfunc import SymFunc, outer_product
from .tensor import DUAL, PRIMAL, OrientationError, TensorSF

Letter = Tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for i, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"bad sign {sign}")
            if not 1 <= i < self.strands:
                raise ValueError(f"generator {i} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Whitespace-separated signed generators, e.g. ``"1 -2 1"``."""
        letters = []
        for tok in text.replace(",", " ").split():
            try:
                v = int(tok)
            except ValueError:
                raise ValueError(f"not a braid generator: {tok!r}") from None
            if v == 0:
                raise ValueError("generator 0 does not exist")
            letters.append((abs(v), 1 if v > 0 else -1))
        need = max((i for i, _ in letters), default=0) + 1
        if strands is None:
            strands = need
        elif strands < need:
            raise ValueError(f"{strands} strands is too few for generator {need - 1}")
        return cls(strands, tuple(letters))

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def writhe(self) -> int:
        return sum(sign for _, sign in self.letters)

    def __str__(self) -> str:
        return " ".join(str(i * s) for i, s in self.letters)


@dataclass(frozen=True)
class LinkStats:
    permutation: Tuple[int, ...]  # kappa[i-1] = starting strand ending at position i
    components: Tuple[Tuple[int, ...], ...]
    component_writhes: Tuple[int, ...]
    linking_matrix: Tuple[Tuple[int, ...], ...]

    @property
    def writhe(self) -> int:
        k = len(self.components)
        return sum(self.component_writhes) + 2 * sum(
            self.linking_matrix[i][j] for i in range(k) for j in range(i + 1, k)
        )

    def cycle_notation(self) -> str:
        """Cycles of kappa (as a map i -> kappa_i), fixed points omitted."""
        m = len(self.permutation)
        seen = set()
        out = []
        for start in range(1, m + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.permutation[i - 1]
            if len(cyc) > 1:
                out.append("(" + "".join(map(str, cyc)) + ")")
        return "".join(out) or "()"


def link_stats(b: BraidWord) -> LinkStats:
    m = b.strands
    at = list(range(1, m + 1))  # at[pos] = strand currently at pos
    for i, _ in b.letters:
        at[i - 1], at[i] = at[i], at[i - 1]
    kappa = tuple(at)
    end_of = {strand: pos + 1 for pos, strand in enumerate(at)}
    comp_of: Dict[int, int] = {}
    cycles: List[Tuple[int, ...]] = []
    for start in range(1, m + 1):
        if start in comp_of:
            continue
        cyc = []
        j = start
        while j not in comp_of:
            comp_of[j] = len(cycles)
            cyc.append(j)
            j = end_of[j]
        cycles.append(tuple(sorted(cyc)))
    k = len(cycles)
    self_w = [0] * k
    inter = [[0] * k for _ in range(k)]
    at = list(range(1, m + 1))
    for i, sign in b.letters:
        ca, cb = comp_of[at[i - 1]], comp_of[at[i]]
        if ca == cb:
            self_w[ca] += sign
        else:
            inter[ca][cb] += sign
            inter[cb][ca] += sign
        at[i - 1], at[i] = at[i], at[i - 1]
    for x in range(k):
        for y in range(k):
            if inter[x][y] % 2:
                raise AssertionError("inter-component crossing count must be even")
    linking = tuple(tuple(inter[x][y] // 2 for y in range(k)) for x in range(k))
    return LinkStats(kappa, tuple(cycles), tuple(self_w), linking)


# -- crossings ---------------------------------------------------------------

@dataclass(frozen=True)
class CrossingKind:
    over: bool
    orientation: Tuple[str, str]

    @property
    def name(self) -> str:
        sym = {PRIMAL: "Λ", DUAL: "Λ*"}
        return ("c" if self.over else "c̄") + "_" + sym[self.orientation[0]] + sym[self.orientation[1]]


ALL_CROSSINGS = tuple(
    CrossingKind(over, (o1, o2)) for o1 in (PRIMAL, DUAL) for o2 in (PRIMAL, DUAL) for over in (True, False)
)


def _act(lam: Partition, leg: SymFunc, orientation: str, degree: int) -> SymFunc:
    if orientation == PRIMAL:
        return outer_product(SymFunc.schur(lam), leg, degree)
    return skew(SymFunc.schur(lam), leg)


def _legs(ctx: PiContext, over: bool, degree: int) -> Tuple[Tuple[SymFunc, SymFunc], ...]:
    def build():
        k = r_kernel(ctx, degree) if over else r_kernel_inverse(ctx, degree)
        groups: Dict[Partition, Dict[Partition, int]] = {}
        for (a, b), c in k.items():
            groups.setdefault(a, {})[b] = c
        return tuple((SymFunc.schur(a), SymFunc(bs)) for a, bs in groups.items())

    return ctx._memo(ctx._crossings, ("legs", over, degree), build)


def _crossing_basis(ctx: PiContext, kind: CrossingKind, lam: Partition, mu: Partition, degree: int):
    def build():
        o1, o2 = kind.orientation
        out: Dict[tuple, int] = {}
        for a, bs in _legs(ctx, kind.over, degree):
            right = _act(lam, a, o1, degree)
            if not right:
                continue
            left = _act(mu, bs, o2, degree)
            for x, u in left.items():
                for y, v in right.items():
                    out[(x, y)] = out.get((x, y), 0) + u * v
        return tuple((k, v) for k, v in out.items() if v)

    return ctx._memo(ctx._crossings, (kind, lam, mu, degree), build)


def crossing_action(ctx: PiContext, kind: CrossingKind, t: TensorSF, degree: int) -> TensorSF:
    """λ⊗μ ↦ Σ (μ acted on by α_(2)) ⊗ (λ acted on by α_(1)).

    Primal slots are multiplied by the kernel leg and dual slots skewed by
    it.  Over crossings use r_π, under crossings r_π^-1.
    """
    if t.rank != 2 or t.orientation != kind.orientation:
        raise OrientationError(f"{kind.name} needs orientation {kind.orientation}, got {t.orientation}")
    out: Dict[tuple, int] = {}
    for (lam, mu), c in t.items():
        for key, d in _crossing_basis(ctx, kind, lam, mu, degree):
            out[key] = out.get(key, 0) + c * d
    return TensorSF(2, out, (kind.orientation[1], kind.orientation[0]))


# -- cups, caps, twist -------------------------------------------------------------

def cap_b(degree: int) -> TensorSF:
    """b: 1 ↦ Σ_σ σ ⊗ σ*."""
    return TensorSF(2, {(lam, lam): 1 for lam in partitions_upto(degree)}, (PRIMAL, DUAL))


def cup_d(t: TensorSF) -> int:
    """d: λ* ⊗ μ ↦ ⟨λ|μ⟩."""
    if t.orientation != (DUAL, PRIMAL):
        raise OrientationError("d needs orientation (dual, primal)")
    return sum(c for (a, b), c in t.items() if a == b)


def twist(ctx: PiContext, f: SymFunc, power: int, degree: int) -> SymFunc:
    """θ_π^power: multiplication by Q_π^power, truncated at ``degree``."""
    if f.degree() > degree:
        raise ValueError("argument exceeds the truncation degree")
    if power == 0:
        return f
    return outer_product(f, q_power(ctx, power, degree), degree)


def cap_bbar(ctx: PiContext, degree: int) -> TensorSF:
    """b̄_π = (Id⊗θ^-1)∘c_{ΛΛ*}∘b, which reduces to Σ ρ* ⊗ ρ."""
    crossed = crossing_action(ctx, CrossingKind(True, (PRIMAL, DUAL)), cap_b(degree), degree)
    return crossed.map_slot(1, lambda lam: twist(ctx, SymFunc.schur(lam), -1, degree))


def cup_dbar(ctx: PiContext, t: TensorSF) -> int:
    """d̄_π = d∘c_{ΛΛ*}∘(θ^-1⊗Id): λ ⊗ μ* ↦ ⟨μ|λ⟩."""
    if t.orientation != (PRIMAL, DUAL):
        raise OrientationError("d̄ needs orientation (primal, dual)")
    degree = max((sum(map(sum, k)) for k, _ in t.items()), default=0)
    twisted = t.map_slot(0, lambda lam: twist(ctx, SymFunc.schur(lam), -1, degree))
    return cup_d(crossing_action(ctx, CrossingKind(True, (PRIMAL, DUAL)), twisted, degree))


# -- invariants ---------------------------------------------------------------

def _power_tensor(ctx: PiContext, n: int, degree: int) -> TensorSF:
    base = r_kernel(ctx, degree) if n >= 0 else r_kernel_inverse(ctx, degree)
    out = TensorSF.unit(2)
    for _ in range(abs(n)):
        out = out.multiply(base, degree)
    return out


def invariant_closed_form(ctx: PiContext, b: BraidWord, degree: int) -> TensorSF:
    """Π_i Q_π^{w_i} (one slot per component) times Π_{i<j} (r_π^{w_ij})^{ij}.

    Components are ordered by their smallest strand.
    """
    stats = link_stats(b)
    k = len(stats.components)
    out = TensorSF.tensor(*(q_power(ctx, w, degree) for w in stats.component_writhes))
    for i in range(k):
        for j in range(i + 1, k):
            w = stats.linking_matrix[i][j]
            if w:
                out = out.multiply(_power_tensor(ctx, w, degree).embed((i, j), k), degree)
    return out


def invariant_direct(ctx: PiContext, b: BraidWord, seed: SymFunc, degree: int) -> SymFunc:
    """Evaluate the closed braid as a 1-1 tangle with the open strand at position 1.

    Positions 2..m are fed Σ_σ σ from caps; after the braid each output
    position i ≥ 2 is paired with the matching cap label by a cup.  Every
    grade ≤ ``degree`` of the result is exact: weights only grow along a
    strand, and the closure routes every strand back into position 1.
    """
    stats = link_stats(b)
    if len(stats.components) != 1:
        raise ValueError("direct evaluation handles knots only; use invariant_closed_form for links")
    if seed.degree() > degree:
        raise ValueError("seed exceeds the truncation degree")
    m = b.strands
    labels = partitions_upto(degree)
    state: Dict[tuple, int] = {}
    for lam, c in seed.items():
        for sig in cartesian(labels, repeat=m - 1):
            state[((lam,) + sig, sig)] = c
    for i, sign in b.letters:
        kind = CrossingKind(sign > 0, (PRIMAL, PRIMAL))
        nxt: Dict[tuple, int] = {}
        for (pos, sig), c in state.items():
            budget = degree + sum(map(sum, sig))
            for (x, y), d in _crossing_basis(ctx, kind, pos[i - 1], pos[i], degree):
                npos = pos[: i - 1] + (x, y) + pos[i + 1:]
                if sum(map(sum, npos)) > budget:
                    continue
                key = (npos, sig)
                nxt[key] = nxt.get(key, 0) + c * d
        state = {k: v for k, v in nxt.items() if v}
    out: Dict[Partition, int] = {}
    for (pos, sig), c in state.items():
        if pos[1:] == sig:
            out[pos[0]] = out.get(pos[0], 0) + c
    return SymFunc(out)


# 8_1 as a positive 5-strand braid, reconstructed from the strand bookkeeping
# alone (the diagram itself was not available); its closure permutation is
# the 5-cycle (42531) and it has ten positive crossings.
KNOT_8_1 = BraidWord.parse("4 4 3 4 3 2 3 1 2 1", strands=5)

FIXTURES: Dict[str, BraidWord] = {
    "unknot": BraidWord(1, ()),
    "trefoil": BraidWord.parse("1 1 1"),
    "hopf": BraidWord.parse("1 1"),
    "figure-eight": BraidWord.parse("1 -2 1 -2"),
    "8_1": KNOT_8_1,
}


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """A signed-letter word or a fixture name; ``strands`` may widen a fixture."""
    name = text.strip()
    if name in FIXTURES:
        b = FIXTURES[name]
        if strands is None or strands == b.strands:
            return b
        return BraidWord.parse(str(b), strands)
    return BraidWord.parse(text, strands)


def random_braid(rng: random.Random, max_strands: int, max_length: int) -> BraidWord:
    m = rng.randint(2, max_strands)
    n = rng.randint(0, max_length)
    letters = tuple((rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(n))
    return BraidWord(m, letters)


__all__ = [
    "BraidWord",
    "LinkStats",
    "CrossingKind",
    "ALL_CROSSINGS",
    "link_stats",
    "crossing_action",
    "cap_b",
    "cup_d",
    "cap_bbar",
    "cup_dbar",
    "twist",
    "invariant_closed_form",
    "invariant_direct",
    "KNOT_8_1",
    "FIXTURES",
    "parse_braid",
    "random_braid",
]

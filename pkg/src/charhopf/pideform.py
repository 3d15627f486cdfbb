"""The π-deformed structure on Λ.

For a symmetry type π the cut coproduct Δ'(s_π) = Σ_k ρ1_k ⊗ ρ2_k (p pairs,
with repetition) determines the kernel

    r_π = Σ_α Π_k α_k[ρ1_k] ⊗ Π_k α_k[ρ2_k],

summed over p-tuples of partitions α.  Everything else here (the Cauchy
scalar Q_π, the product ⊙, R_π and the braid c^π) is built from it.

Truncation: kernels at degree D keep a term iff every slot degree is at most
D.  The kernel legs only ever add weight, so each retained grade is exact.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Dict, Iterator, List, Tuple

from .partitions import Partition, conjugate, partition, partitions_of
from .plethysm import plethysm
from .schur import coproduct, cut_pairs, skew
from .symfunc import SymFunc, graded_inverse, outer_product
from .tensor import PRIMAL, TensorSF

Pair = Tuple[Partition, Partition]


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass
class PiContext:
    pi: Partition
    pairs: Tuple[Pair, ...]
    p: int
    _kernels: Dict[tuple, TensorSF] = field(default_factory=dict, repr=False)
    _scalars: Dict[tuple, SymFunc] = field(default_factory=dict, repr=False)
    _crossings: Dict[tuple, tuple] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def of(cls, pi) -> "PiContext":
        pi = partition(pi)
        if not pi:
            raise ValueError("π must be a non-empty partition")
        pairs = cut_pairs(pi)
        return cls(pi, pairs, len(pairs))

    @property
    def weight(self) -> int:
        return sum(self.pi)

    def _memo(self, store: dict, key: tuple, build: Callable[[], object]):
        hit = store.get(key)
        if hit is not None:
            return hit
        value = build()
        with self._lock:
            return store.setdefault(key, value)


_CONTEXTS: Dict[Partition, PiContext] = {}


def context(pi) -> PiContext:
    """Shared PiContext for π, so caches are reused across calls."""
    pi = partition(pi)
    ctx = _CONTEXTS.get(pi)
    if ctx is None:
        ctx = _CONTEXTS.setdefault(pi, PiContext.of(pi))
    return ctx


# -- α-tuples -----------------------------------------------------------------

def _weight_vectors(ctx: PiContext, d1: int, d2: int) -> Iterator[Tuple[int, ...]]:
    w1 = [sum(a) for a, _ in ctx.pairs]
    w2 = [sum(b) for _, b in ctx.pairs]
    vec = [0] * ctx.p

    def rec(k: int, s1: int, s2: int):
        if k == ctx.p:
            yield tuple(vec)
            return
        n = 0
        while s1 + n * w1[k] <= d1 and s2 + n * w2[k] <= d2:
            vec[k] = n
            yield from rec(k + 1, s1 + n * w1[k], s2 + n * w2[k])
            n += 1
        vec[k] = 0

    yield from rec(0, 0, 0)


def alpha_tuples(ctx: PiContext, d1: int, d2: int) -> Iterator[Tuple[Partition, ...]]:
    """p-tuples α whose legs have degrees at most (d1, d2).

    Ordered lexicographically by (|α_1|, ..., |α_p|), then reverse-lex in
    each entry.
    """
    if d1 < 0 or d2 < 0:
        return
    for weights in _weight_vectors(ctx, d1, d2):
        yield from cartesian(*(partitions_of(w) for w in weights))


def _leg(alphas: Tuple[Partition, ...], rhos: Tuple[Partition, ...]) -> SymFunc:
    out = SymFunc.one()
    for a, rho in zip(alphas, rhos):
        if a:
            out = outer_product(out, plethysm(SymFunc.schur(a), SymFunc.schur(rho)))
    return out


def _build_kernel(ctx: PiContext, d1: int, d2: int, inverse: bool) -> TensorSF:
    rho1 = tuple(a for a, _ in ctx.pairs)
    rho2 = tuple(b for _, b in ctx.pairs)
    acc: Dict[tuple, int] = {}
    for alphas in alpha_tuples(ctx, d1, d2):
        right = _leg(alphas, rho2)
        if inverse:
            sign = -1 if sum(map(sum, alphas)) % 2 else 1
            left = _leg(tuple(conjugate(a) for a in alphas), rho1) * sign
        else:
            left = _leg(alphas, rho1)
        for lam, a in left.items():
            for mu, b in right.items():
                acc[(lam, mu)] = acc.get((lam, mu), 0) + a * b
    return TensorSF(2, acc)


def kernel(ctx: PiContext, d1: int, d2: int, inverse: bool = False) -> TensorSF:
    """r_π (or its inverse) with slot degrees bounded by (d1, d2)."""
    return ctx._memo(ctx._kernels, (d1, d2, inverse), lambda: _build_kernel(ctx, d1, d2, inverse))


def r_kernel(ctx: PiContext, degree: int) -> TensorSF:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return kernel(ctx, degree, degree)


def r_kernel_inverse(ctx: PiContext, degree: int) -> TensorSF:
    """Convolutive inverse of r_π: Σ_α Π S(α_k)[ρ1_k] ⊗ Π α_k[ρ2_k].

    The antipode acts on the summation variables α_k.  When every cut leg
    is primitive (|π| = 2) this equals S applied to the first slot of r_π.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return kernel(ctx, degree, degree, inverse=True)


def _collapse(t: TensorSF, degree: int) -> SymFunc:
    out: Dict[Partition, int] = {}
    for (a, b), c in t.items():
        if sum(a) + sum(b) > degree:
            continue
        for nu, d in outer_product(SymFunc.schur(a), SymFunc.schur(b))._terms.items():
            out[nu] = out.get(nu, 0) + c * d
    return SymFunc(out)


def q_scalar(ctx: PiContext, degree: int) -> SymFunc:
    """Q_π = m(r_π) through grade ``degree``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return ctx._memo(ctx._scalars, ("Q", degree), lambda: _collapse(kernel(ctx, degree, degree), degree))


def _q_inverse(ctx: PiContext, degree: int) -> SymFunc:
    via_kernel = _collapse(kernel(ctx, degree, degree, inverse=True), degree)
    via_series = graded_inverse(q_scalar(ctx, degree), degree)
    if via_kernel != via_series:
        raise InconsistencyError(
            f"Q_π^-1 routes disagree for π={list(ctx.pi)} at degree {degree}: "
            f"{via_kernel} vs {via_series}"
        )
    return via_kernel


def q_scalar_inverse(ctx: PiContext, degree: int) -> SymFunc:
    """Q_π^-1, computed as m(r_π^-1) and by graded inversion of Q_π.

    Raises InconsistencyError if the two disagree.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return ctx._memo(ctx._scalars, ("Qinv", degree), lambda: _q_inverse(ctx, degree))


def q_power(ctx: PiContext, n: int, degree: int) -> SymFunc:
    base = q_scalar(ctx, degree) if n >= 0 else q_scalar_inverse(ctx, degree)
    out = SymFunc.one()
    for _ in range(abs(n)):
        out = outer_product(out, base, degree)
    return out


# -- products and R-matrices ------------------------------------------------------

def _by_first(t: TensorSF) -> List[Tuple[Partition, SymFunc]]:
    groups: Dict[Partition, Dict[Partition, int]] = {}
    for (a, b), c in t.items():
        groups.setdefault(a, {})[b] = c
    return [(a, SymFunc(legs)) for a, legs in groups.items()]


def pi_product(ctx: PiContext, f: SymFunc, g: SymFunc) -> SymFunc:
    """f ⊙ g = Σ_α (f / Π α_k[ρ1_k]) · (g / Π α_k[ρ2_k]).

    Exact: skews vanish once a leg outweighs its argument.
    """
    if not f or not g:
        return SymFunc.zero()
    out = SymFunc.zero()
    for a, legs in _by_first(kernel(ctx, f.degree(), g.degree())):
        fa = skew(f, SymFunc.schur(a))
        if fa:
            out = out + outer_product(fa, skew(g, legs))
    return out


def r_matrix(ctx: PiContext, t: TensorSF, degree: int) -> TensorSF:
    """R_π(f⊗g) = Σ_α f·α_(1) ⊗ g·α_(2), each slot truncated at ``degree``."""
    if t.rank != 2:
        raise ValueError("R_π acts on rank-2 tensors")
    return t.multiply(r_kernel(ctx, degree).with_orientation(t.orientation), degree)


def deformed_coproduct(ctx: PiContext, f: SymFunc, degree: int) -> TensorSF:
    """Δ_π(f) = R_π(Δ f), each slot truncated at ``degree``."""
    if f.degree() > degree:
        raise ValueError("argument exceeds the truncation degree")
    return r_matrix(ctx, coproduct(f), degree)


def braid(ctx: PiContext, t: TensorSF, inverse: bool, degree: int) -> TensorSF:
    """c^π = sw∘R_π on Λ⊗Λ; the inverse uses the r_π^-1 legs."""
    if t.rank != 2 or t.orientation != (PRIMAL, PRIMAL):
        raise ValueError("braid acts on primal rank-2 tensors")
    k = r_kernel_inverse(ctx, degree) if inverse else r_kernel(ctx, degree)
    return t.multiply(k, degree).swap()


def apply_adjacent(
    t: TensorSF, i: int, fn: Callable[[Partition, Partition], TensorSF]
) -> TensorSF:
    """Apply a map on slots (i, i+1) given on basis pairs; other slots ride along."""
    out: Dict[tuple, int] = {}
    cache: Dict[Pair, TensorSF] = {}
    orient = None
    for key, c in t.items():
        pair = (key[i], key[i + 1])
        if pair not in cache:
            cache[pair] = fn(*pair)
        img = cache[pair]
        orient = img.orientation
        for (x, y), d in img.items():
            nk = key[:i] + (x, y) + key[i + 2:]
            out[nk] = out.get(nk, 0) + c * d
    if orient is None:
        orient = t.orientation
    new_orient = t.orientation[:i] + tuple(orient) + t.orientation[i + 2:]
    return TensorSF(t.rank, out, new_orient)


# -- checks --------------------------------------------------------------------

@dataclass
class Report:
    """Outcome of an exhaustive identity check."""

    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < 5:
                self.failures.append(detail())

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failure_count += other.failure_count
        self.failures.extend(other.failures[: max(0, 5 - len(self.failures))])
        return self

    def summary(self) -> str:
        if self.passed:
            return f"OK ({self.checked} identities verified)"
        return f"FAILED {self.failure_count} of {self.checked} identities ({self.name})"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "counterexamples": list(self.failures),
        }


def _triples(max_total: int):
    from .partitions import partitions_upto

    parts = partitions_upto(max_total)
    for a in parts:
        for b in parts:
            for c in parts:
                if sum(a) + sum(b) + sum(c) <= max_total:
                    yield a, b, c


def check_yang_baxter(ctx: PiContext, degree: int) -> Report:
    """Braid relation c12 c23 c12 = c23 c12 c23 on basis triples of total weight ≤ D."""
    report = Report("braid relation")
    for inverse in (False, True):
        memo: Dict[Pair, TensorSF] = {}

        def c(x: Partition, y: Partition) -> TensorSF:
            if (x, y) not in memo:
                memo[(x, y)] = braid(ctx, TensorSF.basis(x, y), inverse, degree)
            return memo[(x, y)]

        for triple in _triples(degree):
            t = TensorSF.basis(*triple)
            lhs = apply_adjacent(apply_adjacent(apply_adjacent(t, 0, c), 1, c), 0, c)
            rhs = apply_adjacent(apply_adjacent(apply_adjacent(t, 1, c), 0, c), 1, c)
            label = "c^-1" if inverse else "c"
            report.record(
                lhs == rhs,
                lambda: f"{label} on s{list(triple[0])}⊗s{list(triple[1])}⊗s{list(triple[2])}: "
                f"{lhs - rhs} ≠ 0",
            )
    return report


def cochain(ctx: PiContext, f: Partition, g: Partition) -> int:
    """r(f, g) = ⟨f⊗g | r_π⟩ on basis elements."""
    return kernel(ctx, sum(f), sum(g)).coeff(f, g)


def cochain_product(ctx: PiContext, f: SymFunc, g: SymFunc) -> SymFunc:
    """Σ r(f_(1), g_(1)) f_(2) g_(2): the ⊙ product built from the cochain."""
    out: Dict[Partition, int] = {}
    df, dg = coproduct(f), coproduct(g)
    for (f1, f2), a in df.items():
        for (g1, g2), b in dg.items():
            c = cochain(ctx, f1, g1)
            if c:
                for nu, d in outer_product(SymFunc.schur(f2), SymFunc.schur(g2))._terms.items():
                    out[nu] = out.get(nu, 0) + a * b * c * d
    return SymFunc(out)


def _cocycle_sides(ctx: PiContext, f: Partition, g: Partition, h: Partition) -> Tuple[int, int]:
    lhs = 0
    for (g1, g2), a in coproduct(SymFunc.schur(g)).items():
        for (h1, h2), b in coproduct(SymFunc.schur(h)).items():
            c = cochain(ctx, g1, h1)
            if c:
                for nu, d in outer_product(SymFunc.schur(g2), SymFunc.schur(h2))._terms.items():
                    lhs += a * b * c * d * cochain(ctx, f, nu)
    rhs = 0
    for (f1, f2), a in coproduct(SymFunc.schur(f)).items():
        for (g1, g2), b in coproduct(SymFunc.schur(g)).items():
            c = cochain(ctx, f1, g1)
            if c:
                for nu, d in outer_product(SymFunc.schur(f2), SymFunc.schur(g2))._terms.items():
                    rhs += a * b * c * d * cochain(ctx, nu, h)
    return lhs, rhs


def check_cocycle(ctx: PiContext, max_weight: int) -> Report:
    """Scalar 2-cocycle identity and associativity of ⊙ on basis triples."""
    from .partitions import partitions_upto

    report = Report("2-cocycle")
    parts = partitions_upto(max_weight)
    prod: Dict[Pair, SymFunc] = {}

    def odot(f: SymFunc, g: SymFunc) -> SymFunc:
        return pi_product(ctx, f, g)

    for f in parts:
        for g in parts:
            prod[(f, g)] = odot(SymFunc.schur(f), SymFunc.schur(g))
    for f in parts:
        for g in parts:
            for h in parts:
                lhs, rhs = _cocycle_sides(ctx, f, g, h)
                report.record(lhs == rhs, lambda: f"cocycle at ({list(f)},{list(g)},{list(h)}): {lhs} vs {rhs}")
                left = odot(prod[(f, g)], SymFunc.schur(h))
                right = odot(SymFunc.schur(f), prod[(g, h)])
                report.record(
                    left == right,
                    lambda: f"(s{list(f)}⊙s{list(g)})⊙s{list(h)} - s{list(f)}⊙(s{list(g)}⊙s{list(h)}) = {left - right}",
                )
    return report

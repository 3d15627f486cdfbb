"""The outer Hopf algebra of symmetric functions in the Schur basis.

Product, coproduct, skew, antipode, unit/counit, the Schur-Hall pairing and
the two Cauchy kernels.  Products and coproducts share one LR engine
(:mod:`charhopf.lr`); the monomial oracle in :mod:`charhopf.monomial` is the
independent cross-check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Tuple

from .lr import lr_skew
from .partitions import Partition, conjugate, contains, partitions_of, partitions_upto, sort_key
from .symfunc import SymFunc, outer_product, product_all, s
from .tensor import TensorSF

__all__ = [
    "SymFunc",
    "TensorSF",
    "s",
    "outer_product",
    "product_all",
    "coproduct",
    "cut_coproduct",
    "cut_pairs",
    "skew",
    "antipode",
    "counit",
    "schur_hall",
    "tensor_pairing",
    "cauchy_kernel",
    "cauchy_binet_kernel",
    "slot_antipode",
    "multiply_slots",
]


@lru_cache(maxsize=None)
def _coproduct_basis(nu: Partition) -> Tuple[Tuple[Partition, Partition, int], ...]:
    out = []
    for k in range(sum(nu) + 1):
        for lam in partitions_of(k):
            if contains(nu, lam):
                for mu, c in lr_skew(nu, lam):
                    out.append((lam, mu, c))
    return tuple(out)


def coproduct(f: SymFunc) -> TensorSF:
    """Δ(s_ν) = Σ c^ν_{λμ} s_λ ⊗ s_μ, extended linearly."""
    out: Dict[tuple, int] = {}
    for nu, a in f.items():
        for lam, mu, c in _coproduct_basis(nu):
            out[(lam, mu)] = out.get((lam, mu), 0) + a * c
    return TensorSF(2, out)


def cut_coproduct(f: SymFunc) -> TensorSF:
    """Coproduct minus its two extreme terms f⊗1 and 1⊗f."""
    t = coproduct(f)
    extremes = TensorSF.tensor(f, SymFunc.one()) + TensorSF.tensor(SymFunc.one(), f)
    return t - extremes


@lru_cache(maxsize=None)
def cut_pairs(pi: Partition) -> Tuple[Tuple[Partition, Partition], ...]:
    """The cut coproduct of s_π as a list of pairs, repeated by multiplicity.

    Ordered by the first leg in (weight, reverse-lex) order.  ``len`` of the
    result is the number p of deformation variables.
    """
    pairs: List[Tuple[Partition, Partition]] = []
    for (lam, mu), c in cut_coproduct(SymFunc.schur(pi)).items():
        if c < 0:
            raise AssertionError("cut coproduct of a Schur function is Schur-positive")
        pairs.extend([(lam, mu)] * c)
    pairs.sort(key=lambda pr: (sort_key(pr[0]), sort_key(pr[1])))
    return tuple(pairs)


def skew(f: SymFunc, g: SymFunc) -> SymFunc:
    """f / g: the adjoint of multiplication by g under the Schur-Hall pairing."""
    out: Dict[Partition, int] = {}
    for nu, a in f.items():
        wn = sum(nu)
        for lam, b in g.items():
            if sum(lam) > wn:
                continue
            for mu, c in lr_skew(nu, lam):
                out[mu] = out.get(mu, 0) + a * b * c
    return SymFunc(out)


def antipode(f: SymFunc) -> SymFunc:
    """S(s_λ) = (-1)^{|λ|} s_{λ'}."""
    return SymFunc({conjugate(lam): (-1) ** (sum(lam) % 2) * c for lam, c in f.items()})


def counit(f: SymFunc) -> int:
    return f.coeff(())


def schur_hall(f: SymFunc, g: SymFunc) -> int:
    """Bilinear pairing making the Schur functions orthonormal."""
    if len(f) > len(g):
        f, g = g, f
    return sum(c * g.coeff(lam) for lam, c in f.items())


def tensor_pairing(t: TensorSF, u: TensorSF) -> int:
    """Slot-by-slot Schur-Hall pairing of two tensors of equal rank."""
    if t.rank != u.rank:
        raise ValueError("rank mismatch")
    if len(t) > len(u):
        t, u = u, t
    return sum(c * u.coeff(*key) for key, c in t.items())


def cauchy_kernel(degree: int) -> TensorSF:
    """Σ_{|λ| ≤ degree} s_λ ⊗ s_λ."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return TensorSF(2, {(lam, lam): 1 for lam in partitions_upto(degree)})


def cauchy_binet_kernel(degree: int) -> TensorSF:
    """(Id ⊗ S) applied to the Cauchy kernel: Σ (-1)^{|λ|} s_λ ⊗ s_{λ'}."""
    return slot_antipode(cauchy_kernel(degree), 1)


def _antipode_basis(lam: Partition) -> SymFunc:
    return SymFunc._raw({conjugate(lam): -1 if sum(lam) % 2 else 1})


def slot_antipode(t: TensorSF, slot: int) -> TensorSF:
    """Apply S to a single tensor slot."""
    return t.map_slot(slot, _antipode_basis)


def multiply_slots(t: TensorSF, degree: int | None = None) -> SymFunc:
    """m: collapse a rank-2 tensor to the product of its legs."""
    if t.rank != 2:
        raise ValueError("multiply_slots expects a rank-2 tensor")
    groups: Dict[Partition, Dict[Partition, int]] = {}
    for (a, b), c in t.items():
        groups.setdefault(a, {})[b] = c
    out = SymFunc.zero()
    for a, legs in groups.items():
        out = out + outer_product(SymFunc.schur(a), SymFunc(legs), degree)
    return out

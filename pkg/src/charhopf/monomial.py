"""Monomial expansion of Schur functions by semistandard-tableau enumeration.

Nothing here touches the LR engine, so these polynomials serve as an
independent oracle for products and plethysms.  A polynomial is a dict from
exponent tuples (one entry per variable) to ints.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .partitions import Partition
from .symfunc import SymFunc

Exponent = Tuple[int, ...]
Poly = Dict[Exponent, int]


def _rows(length: int, above: Tuple[int, ...] | None, nvars: int) -> Iterator[Tuple[int, ...]]:
    row = [0] * length

    def rec(j: int, lo: int):
        if j == length:
            yield tuple(row)
            return
        start = lo if above is None else max(lo, above[j] + 1)
        for v in range(start, nvars + 1):
            row[j] = v
            yield from rec(j + 1, v)

    yield from rec(0, 1)


@lru_cache(maxsize=None)
def _schur_poly(lam: Partition, nvars: int) -> Tuple[Tuple[Exponent, int], ...]:
    if len(lam) > nvars:
        return ()
    # states: last row filled -> {exponent: number of tableaux}
    states: Dict[Tuple[int, ...] | None, Poly] = {None: {(0,) * nvars: 1}}
    for r, width in enumerate(lam):
        nxt: Dict[Tuple[int, ...], Poly] = {}
        for prev, polys in states.items():
            above = None if prev is None else prev[:width]
            for row in _rows(width, above, nvars):
                bump = [0] * nvars
                for v in row:
                    bump[v - 1] += 1
                bucket = nxt.setdefault(row, {})
                for e, c in polys.items():
                    ne = tuple(a + b for a, b in zip(e, bump))
                    bucket[ne] = bucket.get(ne, 0) + c
        states = nxt
    out: Poly = {}
    for polys in states.values():
        for e, c in polys.items():
            out[e] = out.get(e, 0) + c
    return tuple(sorted(out.items()))


def schur_polynomial(lam: Partition, nvars: int) -> Poly:
    """s_λ(x_1..x_n) = Σ_T x^T over semistandard tableaux T of shape λ."""
    return dict(_schur_poly(tuple(lam), nvars))


def monomial_oracle(f: SymFunc, nvars: int) -> Poly:
    """Specialise f to ``nvars`` variables via tableau enumeration."""
    if nvars < 1:
        raise ValueError("nvars must be positive")
    out: Poly = {}
    for lam, c in f.items():
        for e, k in _schur_poly(lam, nvars):
            out[e] = out.get(e, 0) + c * k
    return {e: c for e, c in out.items() if c}


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def substitution_plethysm(f: SymFunc, g: SymFunc, nvars: int) -> Poly:
    """f[g] in ``nvars`` variables by literal alphabet substitution.

    The monomials of g(x_1..x_n), repeated by multiplicity, form a new
    alphabet Y; the result is f(Y) rewritten in the x variables.  Only
    defined for g with non-negative monomial coefficients.
    """
    alphabet: List[Exponent] = []
    for e, c in sorted(monomial_oracle(g, nvars).items()):
        if c < 0:
            raise ValueError("substitution needs a monomial-positive inner function")
        alphabet.extend([e] * c)
    if not alphabet:
        return {(0,) * nvars: f.coeff(())} if f.coeff(()) else {}
    fy = monomial_oracle(f, len(alphabet))
    out: Poly = {}
    for ey, c in fy.items():
        ex = [0] * nvars
        for k, y in zip(ey, alphabet):
            if k:
                for i in range(nvars):
                    ex[i] += k * y[i]
        key = tuple(ex)
        out[key] = out.get(key, 0) + c
    return {e: c for e, c in out.items() if c}
